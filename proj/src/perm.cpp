#include "hooksph/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "hooksph/errors.hpp"

namespace hooksph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

unsigned long long factorial_ull(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) throw ParseError("empty integer list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 0..N-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::span<const int> one_based) {
  std::vector<int> images(one_based.begin(), one_based.end());
  for (int& v : images) --v;
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, std::span<const int> positions) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const int from = positions[k];
    if (from < 0 || from >= n || used[static_cast<std::size_t>(from)])
      throw std::invalid_argument("cycle entries must be distinct positions in 0..N-1");
    used[static_cast<std::size_t>(from)] = true;
    images[static_cast<std::size_t>(from)] = positions[(k + 1) % positions.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
  const int pts[] = {i, j};
  return cycle(n, pts);
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  text = trim(text);
  Permutation result = identity(n);
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: '" + std::string(text) + "'");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in cycle notation");
    std::string body(text.substr(pos + 1, close - pos - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::vector<int> points;
    std::size_t p = 0;
    while (p < body.size()) {
      while (p < body.size() && std::isspace(static_cast<unsigned char>(body[p]))) ++p;
      if (p >= body.size()) break;
      std::size_t q = p;
      while (q < body.size() && !std::isspace(static_cast<unsigned char>(body[q]))) ++q;
      const int v = parse_int(std::string_view(body).substr(p, q - p));
      if (v < 1 || v > n) throw ParseError("cycle point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      points.push_back(v - 1);
      p = q;
    }
    if (!points.empty()) {
      try {
        result = compose(result, cycle(n, points));
      } catch (const std::invalid_argument&) {
        throw ParseError("repeated point inside a cycle");
      }
    }
    any = true;
    pos = close + 1;
  }
  if (!any) throw ParseError("empty cycle notation; use () for the identity");
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == static_cast<int>(s)) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(images_[x]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: permutation sizes differ");
  std::vector<int> images(static_cast<std::size_t>(u.size()));
  for (int i = 0; i < u.size(); ++i) images[static_cast<std::size_t>(i)] = u(v(i));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------- CycleType

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_)
    if (v < 1) throw std::invalid_argument("cycle type parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::parse(std::string_view text) {
  auto parts = parse_int_list(text);
  for (int v : parts)
    if (v < 1) throw ParseError("cycle type parts must be positive");
  return CycleType(std::move(parts));
}

int CycleType::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string CycleType::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

unsigned long long CycleType::class_size() const {
  // N! / prod_k (k^{m_k} m_k!)
  unsigned long long denom = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int r = 0; r < mult; ++r) denom *= static_cast<unsigned long long>(parts_[i]);
    denom *= factorial_ull(mult);
    i = j;
  }
  return factorial_ull(total()) / denom;
}

CycleType cycle_type(const Permutation& w) {
  std::vector<int> parts;
  std::vector<bool> seen(static_cast<std::size_t>(w.size()), false);
  for (int s = 0; s < w.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = w(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

std::vector<CycleType> partitions_of(int n) {
  std::vector<CycleType> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

// ---------------------------------------------------------------- BlockStructure

BlockStructure::BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("block structure needs at least one block");
  offsets_.reserve(sizes_.size());
  for (int n : sizes_) {
    if (n < 1) throw std::invalid_argument("block sizes must be >= 1");
    offsets_.push_back(total_);
    total_ += n;
  }
}

BlockStructure BlockStructure::parse(std::string_view text) {
  auto sizes = parse_int_list(text);
  for (int n : sizes)
    if (n < 1) throw ParseError("block sizes must be >= 1");
  return BlockStructure(std::move(sizes));
}

BlockStructure::Interval BlockStructure::interval(int j) const {
  if (j < 0 || j >= block_count()) throw std::out_of_range("block index " + std::to_string(j) + " out of range");
  const auto k = static_cast<std::size_t>(j);
  return {offsets_[k], offsets_[k] + sizes_[k] - 1};
}

int BlockStructure::block_of(int s) const {
  if (s < 0 || s >= total_) throw std::out_of_range("position out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), s);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

unsigned long long BlockStructure::subgroup_order() const {
  unsigned long long order = 1;
  for (int n : sizes_) order *= factorial_ull(n);
  return order;
}

std::string BlockStructure::str() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- SupportSet

SupportSet::SupportSet(std::vector<int> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("support set must be nonempty");
  std::sort(members_.begin(), members_.end());
  if (members_.front() < 0) throw std::invalid_argument("support members must be nonnegative");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("support members must be distinct");
}

SupportSet SupportSet::parse(std::string_view text) {
  auto members = parse_int_list(text);
  for (int& a : members) {
    if (a < 1) throw ParseError("support members are 1-based block labels");
    --a;
  }
  try {
    return SupportSet(std::move(members));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool SupportSet::contains(int j) const { return std::binary_search(members_.begin(), members_.end(), j); }

std::string SupportSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i] + 1);
  }
  return out;
}

Permutation support_cycle(const BlockStructure& blocks, const SupportSet& support) {
  std::vector<int> points;
  for (int a : support.members()) {
    if (a >= blocks.block_count())
      throw std::out_of_range("support member " + std::to_string(a + 1) + " exceeds p = " +
                              std::to_string(blocks.block_count()));
    points.push_back(blocks.first(a));
  }
  return Permutation::cycle(blocks.total(), points);
}

// ---------------------------------------------------------------- YoungSubgroup

YoungSubgroup::iterator::iterator(const BlockStructure* blocks, bool done) : blocks_(blocks), done_(done) {
  if (done_) return;
  images_.resize(static_cast<std::size_t>(blocks_->total()));
  std::iota(images_.begin(), images_.end(), 0);
  current_ = Permutation(images_);
}

YoungSubgroup::iterator& YoungSubgroup::iterator::operator++() {
  for (int j = blocks_->block_count() - 1; j >= 0; --j) {
    const auto iv = blocks_->interval(j);
    auto first = images_.begin() + iv.first;
    auto last = images_.begin() + iv.last + 1;
    if (std::next_permutation(first, last)) {
      current_ = Permutation(images_);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

bool YoungSubgroup::contains(const BlockStructure& blocks, const Permutation& h) {
  if (h.size() != blocks.total()) return false;
  for (int s = 0; s < h.size(); ++s)
    if (blocks.block_of(h(s)) != blocks.block_of(s)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_cycle_string(); }
std::ostream& operator<<(std::ostream& os, const CycleType& ct) { return os << "(" << ct.str() << ")"; }
std::ostream& operator<<(std::ostream& os, const BlockStructure& blocks) { return os << "(" << blocks.str() << ")"; }

}  // namespace hooksph

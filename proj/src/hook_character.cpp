#include "hooksph/hook_character.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hooksph/symfunc.hpp"

namespace hooksph {

namespace {

// Beta-set form of Murnaghan-Nakayama: removing a border strip of length r
// moves one bead from beta to beta - r; the sign is (-1)^(beads jumped).
long mn_beta(std::vector<int> beta, const std::vector<int>& parts, std::size_t next) {
  if (next == parts.size()) return 1;
  const int r = parts[next];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int jumped = 0;
    for (int x : beta)
      if (x > to && x < from) ++jumped;
    beta[i] = to;
    const long sub = mn_beta(beta, parts, next + 1);
    beta[i] = from;
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

HookShape::HookShape(int n_, int b_) : n(n_), b(b_) {
  if (n < 1 || b < 0 || b > n - 1)
    throw std::invalid_argument("hook shape needs N >= 1 and 0 <= b <= N-1 (got N=" + std::to_string(n) +
                                ", b=" + std::to_string(b) + ")");
}

std::vector<int> HookShape::partition() const {
  std::vector<int> shape{n - b};
  shape.insert(shape.end(), static_cast<std::size_t>(b), 1);
  return shape;
}

long mn_character(const std::vector<int>& shape, const CycleType& ct) {
  int size = 0;
  for (int v : shape) size += v;
  if (size != ct.total()) throw std::invalid_argument("cycle type is not a partition of N");
  const int len = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + len - 1 - i;
  return mn_beta(std::move(beta), ct.parts(), 0);
}

Rational hook_character(const HookShape& shape, const CycleType& ct) {
  if (ct.total() != shape.n)
    throw std::invalid_argument("cycle type (" + ct.str() + ") is not a partition of N = " + std::to_string(shape.n));
  return Rational(mn_character(shape.partition(), ct));
}

Rational hook_dimension(const HookShape& shape) { return binomial(shape.n - 1, shape.b); }

HookCharacterTable::HookCharacterTable(const HookShape& shape) : shape_(shape) {
  const auto part = shape_.partition();
  for (const auto& ct : partitions_of(shape_.n)) values_.emplace(ct.parts(), mn_character(part, ct));
}

long HookCharacterTable::operator()(const CycleType& ct) const {
  const auto it = values_.find(ct.parts());
  if (it == values_.end()) throw std::invalid_argument("cycle type is not a partition of N");
  return it->second;
}

Rational spherical_bruteforce(const HookShape& shape, const BlockStructure& blocks, const Permutation& g) {
  if (blocks.total() != shape.n || g.size() != shape.n)
    throw std::invalid_argument("spherical_bruteforce: N mismatch between shape, blocks and g");
  const HookCharacterTable table(shape);
  const YoungSubgroup group(blocks);
  long sum = 0;
  for (const auto& h : group) sum += table.at(compose(g, h));
  return Rational(mpz_class(sum), mpz_class(static_cast<unsigned long>(group.order())));
}

}  // namespace hooksph

#include "hooksph/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "hooksph/errors.hpp"
#include "hooksph/hook_character.hpp"
#include "hooksph/spherical.hpp"
#include "hooksph/symfunc.hpp"

namespace hooksph {

DegreeProfile::DegreeProfile(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("degree profile needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].degree < 0) throw std::invalid_argument("degrees must be nonnegative");
    if (parts_[i].multiplicity < 1) throw std::invalid_argument("multiplicities must be >= 1");
    if (i > 0 && parts_[i].degree >= parts_[i - 1].degree)
      throw std::invalid_argument("degrees must be strictly decreasing");
  }
}

DegreeProfile DegreeProfile::parse(std::string_view text) {
  std::vector<Part> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("profile entries are 'degree:multiplicity', got '" + std::string(item) + "'");
    const auto d = parse_int_list(item.substr(0, colon));
    const auto n = parse_int_list(item.substr(colon + 1));
    if (d.size() != 1 || n.size() != 1) throw ParseError("malformed profile entry '" + std::string(item) + "'");
    parts.push_back({d[0], n[0]});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return DegreeProfile(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

int DegreeProfile::n() const {
  int n = 0;
  for (const auto& p : parts_) n += p.multiplicity;
  return n;
}

int DegreeProfile::total_degree() const {
  int t = 0;
  for (const auto& p : parts_) t += p.degree * p.multiplicity;
  return t;
}

BlockStructure DegreeProfile::blocks() const {
  std::vector<int> sizes;
  for (const auto& p : parts_) sizes.push_back(p.multiplicity);
  return BlockStructure(std::move(sizes));
}

std::vector<int> DegreeProfile::expanded() const {
  std::vector<int> lambda;
  for (const auto& p : parts_) lambda.insert(lambda.end(), static_cast<std::size_t>(p.multiplicity), p.degree);
  return lambda;
}

std::string DegreeProfile::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i].degree) + ":" + std::to_string(parts_[i].multiplicity);
  }
  return out;
}

std::vector<KappaPoly> shifted_degrees(const DegreeProfile& profile) {
  const auto& parts = profile.parts();
  std::vector<KappaPoly> out(parts.size());
  int tail = 0;
  for (std::size_t i = parts.size(); i-- > 0;) {
    out[i] = KappaPoly{Rational(parts[i].degree), Rational(tail)};
    tail += parts[i].multiplicity;
  }
  return out;
}

std::string to_string(Normalization n) { return n == Normalization::kAsPrinted ? "as-printed" : "plain"; }

Normalization parse_normalization(std::string_view text) {
  if (text == "as-printed") return Normalization::kAsPrinted;
  if (text == "plain" || text == "plain-product") return Normalization::kPlainProduct;
  throw ParseError("normalization must be 'plain' or 'as-printed'");
}

SpectrumResult eigenvalue_sum(const DegreeProfile& profile, int b, int k, Normalization normalization) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (b < 0) throw std::invalid_argument("b must be nonnegative");
  const int p = profile.block_count();
  if (p - b - 1 < 0) throw NoInvariantsError(b, p);

  const BlockStructure blocks = profile.blocks();
  const auto shifted = shifted_degrees(profile);
  const HookShape shape(profile.n(), b);

  KappaPoly total;
  KappaPoly sign_power(1);  // (-kappa)^{l-1}
  for (int ell = 1; ell <= std::min(k + 1, p); ++ell) {
    KappaPoly inner;
    std::vector<bool> pick(static_cast<std::size_t>(p), false);
    std::fill(pick.begin(), pick.begin() + ell, true);
    do {
      std::vector<int> members;
      std::vector<KappaPoly> args;
      Rational weight(1);
      for (int j = 0; j < p; ++j) {
        if (!pick[static_cast<std::size_t>(j)]) continue;
        members.push_back(j);
        args.push_back(shifted[static_cast<std::size_t>(j)]);
        const int nj = profile.parts()[static_cast<std::size_t>(j)].multiplicity;
        weight *= normalization == Normalization::kAsPrinted ? factorial(static_cast<unsigned>(nj)) : Rational(nj);
      }
      const SphericalQuery q{b, blocks, SupportSet(std::move(members))};
      const Rational chi = spherical_big2(normalize_support(q));
      inner += scale(complete_sym<KappaPoly>(static_cast<std::size_t>(k + 1 - ell), args), chi * weight);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    total += sign_power * inner;
    sign_power *= KappaPoly{Rational(0), Rational(-1)};
  }

  const Rational dim = hook_dimension(shape);
  total *= dim;
  return SpectrumResult{std::move(total), normalization, b, k, profile, dim, invariant_multiplicity(b, p)};
}

}  // namespace hooksph

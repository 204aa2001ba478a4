#include "hooksph/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooksph {

MultivariatePoly MultivariatePoly::constant(int nvars, const Rational& c) {
  MultivariatePoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultivariatePoly MultivariatePoly::variable(int nvars, int i) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(e);
}

MultivariatePoly MultivariatePoly::monomial(const Exponents& exps, const Rational& c) {
  MultivariatePoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

int MultivariatePoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto v : e) d += v;
    best = std::max(best, d);
  }
  return best;
}

Rational MultivariatePoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultivariatePoly::add_term(const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("exponent vector length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultivariatePoly MultivariatePoly::operator-() const {
  MultivariatePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials over different variable counts");
  MultivariatePoly out(a.nvars_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  return out;
}

MultivariatePoly MultivariatePoly::permuted(const Permutation& w) const {
  if (w.size() != nvars_) throw std::invalid_argument("permutation size differs from variable count");
  MultivariatePoly out(nvars_);
  Exponents moved(static_cast<std::size_t>(nvars_));
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) moved[static_cast<std::size_t>(w(i))] = e[static_cast<std::size_t>(i)];
    out.terms_.emplace(moved, c);
  }
  return out;
}

Rational MultivariatePoly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= pow(point[i], e[i]);
    total += term;
  }
  return total;
}

std::string MultivariatePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational mag = c.sign() < 0 ? -c : c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += mag.str();
    else if (mag == Rational(1)) out += mono;
    else out += mag.str() + "*" + mono;
  }
  return out;
}

Rational inner_product(const MultivariatePoly& f, const MultivariatePoly& g, const MonomialWeight& weight) {
  const auto& small = f.term_count() <= g.term_count() ? f.terms() : g.terms();
  const auto& large = f.term_count() <= g.term_count() ? g.terms() : f.terms();
  Rational total(0);
  for (const auto& [e, c] : small) {
    const auto it = large.find(e);
    if (it == large.end()) continue;
    Rational term = c * it->second;
    if (weight) term *= weight(e);
    total += term;
  }
  return total;
}

}  // namespace hooksph

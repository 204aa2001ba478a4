#include "hooksph/dunkl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hooksph/errors.hpp"
#include "hooksph/symfunc.hpp"

namespace hooksph {

namespace {

void compositions(int remaining, int slot, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slot + 1 == static_cast<int>(cur.size())) {
    cur[static_cast<std::size_t>(slot)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[static_cast<std::size_t>(slot)] = v;
    compositions(remaining - v, slot + 1, cur, out);
  }
}

// gamma with gamma_{w(i)} = beta_i, i.e. the exponent of w x^beta.
std::vector<int> act(const Permutation& w, const std::vector<int>& beta) {
  std::vector<int> gamma(beta.size());
  for (int i = 0; i < w.size(); ++i) gamma[static_cast<std::size_t>(w(i))] = beta[static_cast<std::size_t>(i)];
  return gamma;
}

std::vector<std::vector<int>> distinct_permutations(std::vector<int> lambda) {
  std::sort(lambda.begin(), lambda.end());
  std::vector<std::vector<int>> out;
  do out.push_back(lambda);
  while (std::next_permutation(lambda.begin(), lambda.end()));
  return out;
}

void require_invariants(const DegreeProfile& profile, int b) {
  if (b < 0) throw std::invalid_argument("b must be nonnegative");
  if (profile.block_count() - b - 1 < 0) throw NoInvariantsError(b, profile.block_count());
}

}  // namespace

MonomialSpace::MonomialSpace(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("monomial space needs N >= 1 and degree >= 0");
  std::vector<int> cur(static_cast<std::size_t>(nvars));
  compositions(degree, 0, cur, basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t MonomialSpace::index_of(const std::vector<int>& exps) const {
  const auto it = index_.find(exps);
  if (it == index_.end()) throw std::out_of_range("exponent vector outside the monomial space");
  return it->second;
}

OperatorMatrix xdx_matrix(const MonomialSpace& space, int i, const Rational& kappa0) {
  const int n = space.variable_count();
  if (i < 0 || i >= n) throw std::out_of_range("variable index out of range");
  const auto iu = static_cast<std::size_t>(i);
  OperatorMatrix out(space.dimension(), space.dimension());
  std::vector<int> e;
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    const auto& beta = space.exponents(col);
    out(col, col) += Rational(beta[iu]);
    for (int j = 0; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      if (j == i || beta[iu] == beta[ju]) continue;
      // x_i (x_i^a x_j^c - x_i^c x_j^a) / (x_i - x_j) with a = beta_i, c = beta_j
      //   = sign * x_i * (x_i x_j)^lo * sum_{t=0}^{hi-lo-1} x_i^t x_j^{hi-lo-1-t}
      const int lo = std::min(beta[iu], beta[ju]);
      const int hi = std::max(beta[iu], beta[ju]);
      const Rational coef = beta[iu] > beta[ju] ? kappa0 : -kappa0;
      for (int t = 0; t < hi - lo; ++t) {
        e = beta;
        e[iu] = lo + t + 1;
        e[ju] = hi - 1 - t;
        out(space.index_of(e), col) += coef;
      }
    }
  }
  return out;
}

OperatorMatrix pk_matrix(const MonomialSpace& space, int k, const Rational& kappa0) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  OperatorMatrix total(space.dimension(), space.dimension());
  for (int i = 0; i < space.variable_count(); ++i) {
    const OperatorMatrix x = xdx_matrix(space, i, kappa0);
    OperatorMatrix power = x;
    for (int r = 1; r < k; ++r) power = power * x;
    total += power;
  }
  return total;
}

OperatorMatrix permutation_matrix(const MonomialSpace& space, const Permutation& w) {
  if (w.size() != space.variable_count()) throw std::invalid_argument("permutation size differs from N");
  OperatorMatrix out(space.dimension(), space.dimension());
  for (std::size_t col = 0; col < space.dimension(); ++col) out(space.index_of(act(w, space.exponents(col))), col) = Rational(1);
  return out;
}

OperatorMatrix isotype_projector(const MonomialSpace& space, const HookShape& shape) {
  if (shape.n != space.variable_count()) throw std::invalid_argument("shape size differs from N");
  const HookCharacterTable chi(shape);
  OperatorMatrix out(space.dimension(), space.dimension());
  Permutation w = Permutation::identity(shape.n);
  std::vector<int> images = w.images();
  do {
    w = Permutation(images);
    const long c = chi.at(w);
    if (c == 0) continue;
    for (std::size_t col = 0; col < space.dimension(); ++col)
      out(space.index_of(act(w, space.exponents(col))), col) += Rational(c);
  } while (std::next_permutation(images.begin(), images.end()));
  out *= hook_dimension(shape) / factorial(static_cast<unsigned>(shape.n));
  return out;
}

OperatorMatrix orbit_projector(const MonomialSpace& space, const std::vector<int>& lambda) {
  std::vector<int> key = lambda;
  std::sort(key.begin(), key.end());
  OperatorMatrix out(space.dimension(), space.dimension());
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    auto sorted = space.exponents(i);
    std::sort(sorted.begin(), sorted.end());
    if (sorted == key) out(i, i) = Rational(1);
  }
  return out;
}

Rational isotype_trace(const DegreeProfile& profile, int b, int k, const Rational& kappa0) {
  require_invariants(profile, b);
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = profile.n();
  const HookShape shape(n, b);
  const MonomialSpace space(n, profile.total_degree());
  std::vector<OperatorMatrix> xdx;
  for (int i = 0; i < n; ++i) xdx.push_back(xdx_matrix(space, i, kappa0));

  // Columns P_k e_beta for beta in the orbit.
  const auto orbit = distinct_permutations(profile.expanded());
  std::map<std::vector<int>, std::vector<Rational>> columns;
  for (const auto& beta : orbit) {
    std::vector<Rational> unit(space.dimension());
    unit[space.index_of(beta)] = Rational(1);
    std::vector<Rational> acc(space.dimension());
    for (const auto& x : xdx) {
      std::vector<Rational> v = unit;
      for (int r = 0; r < k; ++r) v = x.apply(v);
      for (std::size_t t = 0; t < v.size(); ++t) acc[t] += v[t];
    }
    columns.emplace(beta, std::move(acc));
  }

  // sum_beta (R(w) P_k e_beta)_beta = sum_beta (P_k e_beta)_{w^-1 . beta}
  const HookCharacterTable chi(shape);
  Rational total(0);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    const Permutation w(images);
    const long c = chi.at(w);
    if (c == 0) continue;
    const Permutation winv = w.inverse();
    Rational diag(0);
    for (const auto& [beta, col] : columns) diag += col[space.index_of(act(winv, beta))];
    total += Rational(c) * diag;
  } while (std::next_permutation(images.begin(), images.end()));
  return total * hook_dimension(shape) / factorial(static_cast<unsigned>(n));
}

Rational isotype_trace_dense(const DegreeProfile& profile, int b, int k, const Rational& kappa0) {
  require_invariants(profile, b);
  const int n = profile.n();
  const MonomialSpace space(n, profile.total_degree());
  const OperatorMatrix q = orbit_projector(space, profile.expanded());
  return (q * isotype_projector(space, HookShape(n, b)) * pk_matrix(space, k, kappa0) * q).trace();
}

}  // namespace hooksph

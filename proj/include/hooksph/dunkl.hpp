#ifndef HOOKSPH_DUNKL_HPP
#define HOOKSPH_DUNKL_HPP

#include <map>
#include <vector>

#include "hooksph/hook_character.hpp"
#include "hooksph/matrix.hpp"
#include "hooksph/perm.hpp"
#include "hooksph/rational.hpp"
#include "hooksph/spectrum.hpp"

namespace hooksph {

// All exponent vectors of N variables with a fixed total degree, in reverse
// lexicographic order (x_1^d first).
class MonomialSpace {
 public:
  MonomialSpace(int nvars, int degree);

  int variable_count() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<std::vector<int>>& basis() const noexcept { return basis_; }
  const std::vector<int>& exponents(std::size_t index) const { return basis_[index]; }
  // Throws std::out_of_range for an exponent vector outside the space.
  std::size_t index_of(const std::vector<int>& exps) const;

 private:
  int nvars_;
  int degree_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, std::size_t> index_;
};

// Operators are dense matrices in the monomial basis acting on coefficient
// columns, at a fixed rational value of kappa.
using OperatorMatrix = Matrix;

// Matrix of f -> x_i D_i f, with
// D_i f = df/dx_i + kappa sum_{j != i} (f - f(x (i j))) / (x_i - x_j).
OperatorMatrix xdx_matrix(const MonomialSpace& space, int i, const Rational& kappa0);

// P_k = sum_i (x_i D_i)^k.
OperatorMatrix pk_matrix(const MonomialSpace& space, int k, const Rational& kappa0);

// Matrix of f -> w f, (w f)(x) = f(x w).
OperatorMatrix permutation_matrix(const MonomialSpace& space, const Permutation& w);

// Pi_tau = (dim tau / N!) sum_w chi(w) R(w).
OperatorMatrix isotype_projector(const MonomialSpace& space, const HookShape& shape);

// Coordinate projection Q_lambda onto the monomials in the S_N-orbit of lambda.
OperatorMatrix orbit_projector(const MonomialSpace& space, const std::vector<int>& lambda);

// tr(Q_lambda Pi_tau P_k Q_lambda): the sum of the P_k eigenvalues on the
// tau-isotypic part of V_lambda (P_k is triangular modulo lower orbits).
// Applies P_k only to the orbit columns. Throws NoInvariantsError when m < 0.
Rational isotype_trace(const DegreeProfile& profile, int b, int k, const Rational& kappa0);

// Same quantity from fully assembled dense matrices; for cross-checks only.
Rational isotype_trace_dense(const DegreeProfile& profile, int b, int k, const Rational& kappa0);

}  // namespace hooksph

#endif

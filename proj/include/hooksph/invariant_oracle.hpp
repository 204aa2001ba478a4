#ifndef HOOKSPH_INVARIANT_ORACLE_HPP
#define HOOKSPH_INVARIANT_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "hooksph/hook_character.hpp"
#include "hooksph/matrix.hpp"
#include "hooksph/mpoly.hpp"
#include "hooksph/perm.hpp"
#include "hooksph/rational.hpp"

namespace hooksph {

// Constructive model of the hook isotype inside the alternating polynomials,
// used to compute spherical values as traces on the G_n-invariant subspace.

// Vandermonde product prod_{j<k} (x_{i_j} - x_{i_k}) over `positions` (0-based)
// in N variables. A single position gives the constant 1.
// Throws std::invalid_argument on repeated or out-of-range positions.
MultivariatePoly delta(int nvars, std::span<const int> positions);

// Label of a basis invariant: the m block indices (0-based, inside [0, p-2])
// omitted from the label vector of its Vandermonde terms.
struct InvariantLabel {
  std::vector<int> omitted;

  friend bool operator==(const InvariantLabel&, const InvariantLabel&) = default;
};

struct InvariantElement {
  InvariantLabel label;
  MultivariatePoly poly;
};

// xi_S = sum of Delta(x) over all choices of one variable from each block in
// ([0, p-2] \ S) plus the last block, in increasing block order. Returns
// binom(b+m, b) elements ordered by lexicographic S.
// Throws NoInvariantsError when m < 0; std::invalid_argument on N mismatch.
std::vector<InvariantElement> xi_basis(const HookShape& shape, const BlockStructure& blocks);

// rho f = (1/#G_n) sum_{h in G_n} h f.
MultivariatePoly symmetrize(const MultivariatePoly& f, const BlockStructure& blocks);

// Gram data for one group element g over the xi basis.
struct GramTrace {
  Matrix gram;              // M_ij = <xi_i, xi_j>
  Matrix transfer;          // T_ij = <g xi_j, xi_i>
  Matrix expansion;         // B: rho g xi_i = sum_j B_ji xi_j
  Rational trace_t_minv;    // tr(T M^-1)
  Rational trace_b;         // tr(B)
};

// Computes both trace routes. B is obtained by solving M^T B = T' with
// T'_ij = <rho g xi_j, xi_i>, then checked against the polynomial identity
// rho g xi_i = sum_j B_ji xi_j; a residual throws std::logic_error.
// Throws SingularMatrixError for a singular Gram matrix, NoInvariantsError for m < 0.
GramTrace gram_trace(const HookShape& shape, const BlockStructure& blocks, const Permutation& g,
                     const MonomialWeight& weight = {});

// tr(T(g) M^-1) with the monomial-orthonormal inner product (or `weight`).
Rational spherical_via_gram(const HookShape& shape, const BlockStructure& blocks, const Permutation& g,
                            const MonomialWeight& weight = {});

// Character of the hook isotype at w, as the trace of w on the span of the
// alternating polynomials Delta over (b+1)-subsets (the all-singleton case).
Rational character_via_alternating(const HookShape& shape, const Permutation& w);

// sum_{j=1}^{b+2} (-1)^j Delta(x_1..^x_j..x_{b+2}) evaluated at `point`
// (b+2 distinct values); true iff exactly zero.
bool check_alternating_sum(int b, std::span<const Rational> point);

// The same alternating sum as a polynomial in b+2 variables (identically zero).
MultivariatePoly alternating_sum_polynomial(int b);

// Eigenvalues c(i, T_0) of the Jucys-Murphy elements on f = Delta(x_1..x_{b+1}):
// 1-i for i <= b+1 and i-b-1 beyond (1-based i).
std::vector<Rational> jucys_murphy_expected(int n, int b);

// omega_j f for each j, where omega_j = sum_{i<j} (i j). Entry j holds the
// scalar c with omega_j f = c f, or nullopt when f is not an eigenvector.
std::vector<std::optional<Rational>> jucys_murphy_eigenvalues(int n, int b);

// True iff omega_i f = c(i, T_0) f holds as a polynomial identity for all i.
bool check_jucys_murphy(int n, int b);

// (prod_r 1/n_{j_r}) * sum { Delta(y) : y has the same block labels as x },
// where the label of position s is the block containing s.
MultivariatePoly label_orbit_sum(const BlockStructure& blocks, std::span<const int> positions);

}  // namespace hooksph

#endif

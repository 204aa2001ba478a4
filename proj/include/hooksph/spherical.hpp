#ifndef HOOKSPH_SPHERICAL_HPP
#define HOOKSPH_SPHERICAL_HPP

#include "hooksph/perm.hpp"
#include "hooksph/rational.hpp"

namespace hooksph {

// A spherical function value request: hook isotype [N-b, 1^b], Young subgroup
// given by `blocks`, evaluated at a support cycle g_A.
struct SphericalQuery {
  int b = 0;
  BlockStructure blocks;
  SupportSet support;

  int p() const noexcept { return blocks.block_count(); }
  int ell() const noexcept { return support.size(); }
  // p - b - 1; the invariant space is empty when negative.
  int m() const noexcept { return p() - b - 1; }
  int n() const noexcept { return blocks.total(); }

  // Throws std::invalid_argument for b < 0 or a support member >= p.
  // (b > N-1 forces m < 0, which the evaluators report as NoInvariantsError.)
  void validate() const;
};

// Moves the blocks indexed by A to the front (in A's order) and relabels A as
// {0..l-1}. The value is unchanged since characters are class functions.
SphericalQuery normalize_support(const SphericalQuery& q);

// binom(b+m,b) + sum_{i=1}^{min(b,l-1)} (-1)^i binom(b+m-i,b-i) e_i(1/n_a : a in A).
// l = 1 gives binom(b+m,b), the dimension of the invariant space.
// Throws NoInvariantsError when m < 0.
Rational spherical_big2(const SphericalQuery& q);

struct Big1Options {
  // The product-form sum is stated for 2 <= l <= p; l = 1 is rejected unless set.
  bool allow_single_block = false;
};

// (1/pi_l) { sum_{k=0}^{min(m,l)} (b+1)_{m-k}/(m-k)! e_{l-k}(n_a - 1) + (-1)^{l+1} (b-l+1)_m/m! },
// pi_l = prod_{a in A} n_a. Throws NoInvariantsError when m < 0 and
// std::invalid_argument when l = 1 without allow_single_block.
Rational spherical_big1(const SphericalQuery& q, Big1Options options = {});

// The default production path (big2).
inline Rational spherical_value(const SphericalQuery& q) { return spherical_big2(q); }

// Dimension of the G_n-invariant subspace of the hook module, binom(b+m, b).
Rational invariant_multiplicity(int b, int p);

}  // namespace hooksph

#endif

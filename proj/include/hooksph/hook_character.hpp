#ifndef HOOKSPH_HOOK_CHARACTER_HPP
#define HOOKSPH_HOOK_CHARACTER_HPP

#include <map>
#include <vector>

#include "hooksph/perm.hpp"
#include "hooksph/rational.hpp"

namespace hooksph {

// The hook partition [N-b, 1^b].
struct HookShape {
  int n = 1;
  int b = 0;

  // Throws std::invalid_argument unless N >= 1 and 0 <= b <= N-1.
  HookShape(int n_, int b_);

  std::vector<int> partition() const;
};

// Character of the irreducible S_N-module of an arbitrary partition `shape`
// at cycle type `ct`, by the Murnaghan-Nakayama border-strip recursion.
long mn_character(const std::vector<int>& shape, const CycleType& ct);

// Throws std::invalid_argument when ct is not a partition of N.
Rational hook_character(const HookShape& shape, const CycleType& ct);

// binom(N-1, b).
Rational hook_dimension(const HookShape& shape);

// All class values of one hook character, computed once.
class HookCharacterTable {
 public:
  explicit HookCharacterTable(const HookShape& shape);

  const HookShape& shape() const noexcept { return shape_; }
  long operator()(const CycleType& ct) const;
  long at(const Permutation& w) const { return (*this)(cycle_type(w)); }

 private:
  HookShape shape_;
  std::map<std::vector<int>, long> values_;
};

// (1/#G_n) sum_{h in G_n} chi(g h), by exhaustive enumeration of G_n.
// Throws std::invalid_argument when N differs between shape, blocks and g.
Rational spherical_bruteforce(const HookShape& shape, const BlockStructure& blocks, const Permutation& g);

}  // namespace hooksph

#endif

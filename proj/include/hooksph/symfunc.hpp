#ifndef HOOKSPH_SYMFUNC_HPP
#define HOOKSPH_SYMFUNC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hooksph/rational.hpp"

namespace hooksph {

// Elementary symmetric polynomial e_k(c_1..c_r): coefficient of t^k in
// prod (1 + c_i t). Generic over any commutative ring R constructible from 0
// and 1 (Rational, KappaPoly).
template <class R>
R elem_sym(std::size_t k, std::span<const R> vals) {
  if (k > vals.size()) return R(0);
  // row[j] = e_j of the prefix processed so far, truncated at degree k
  std::vector<R> row(k + 1, R(0));
  row[0] = R(1);
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = std::min(k, i + 1); j >= 1; --j) row[j] += vals[i] * row[j - 1];
  return row[k];
}

template <class R>
R elem_sym(std::size_t k, const std::vector<R>& vals) {
  return elem_sym<R>(k, std::span<const R>(vals));
}

// Complete homogeneous symmetric polynomial h_k(c_1..c_r): sum of all degree-k
// monomials with repetition. Uses h_k(c_1..c_i) = h_k(c_1..c_{i-1}) + c_i h_{k-1}(c_1..c_i).
template <class R>
R complete_sym(std::size_t k, std::span<const R> vals) {
  std::vector<R> row(k + 1, R(0));
  row[0] = R(1);
  for (const R& c : vals)
    for (std::size_t j = 1; j <= k; ++j) row[j] += c * row[j - 1];
  return row[k];
}

template <class R>
R complete_sym(std::size_t k, const std::vector<R>& vals) {
  return complete_sym<R>(k, std::span<const R>(vals));
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

Rational factorial(unsigned n);

// n(n-1)...(n-k+1)/k!, valid for any integer n (negative included). Zero for k < 0.
Rational binomial(long n, long k);

}  // namespace hooksph

#endif

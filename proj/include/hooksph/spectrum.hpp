#ifndef HOOKSPH_SPECTRUM_HPP
#define HOOKSPH_SPECTRUM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hooksph/kappa_poly.hpp"
#include "hooksph/perm.hpp"
#include "hooksph/rational.hpp"

namespace hooksph {

// lambda = (d_1^{n_1}, ..., d_p^{n_p}) with d_1 > ... > d_p >= 0.
class DegreeProfile {
 public:
  struct Part {
    int degree;
    int multiplicity;
    friend bool operator==(const Part&, const Part&) = default;
  };

  DegreeProfile() = default;
  // Throws std::invalid_argument unless degrees strictly decrease, are >= 0,
  // and multiplicities are >= 1.
  explicit DegreeProfile(std::vector<Part> parts);

  // "d1:n1,d2:n2,..." e.g. "5:2,3:1,0:3". Throws ParseError.
  static DegreeProfile parse(std::string_view text);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  int block_count() const noexcept { return static_cast<int>(parts_.size()); }
  int n() const;
  // |lambda| = sum d_j n_j
  int total_degree() const;
  BlockStructure blocks() const;
  // The partition lambda as an N-vector (weakly decreasing).
  std::vector<int> expanded() const;
  std::string str() const;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

 private:
  std::vector<Part> parts_;
};

// d~_i = d_i + kappa (n_{i+1} + ... + n_p).
std::vector<KappaPoly> shifted_degrees(const DegreeProfile& profile);

// Weight attached to each support set A in the eigenvalue sum.
enum class Normalization {
  kAsPrinted,     // prod_{i in A} n_i!
  kPlainProduct,  // prod_{i in A} n_i
};

std::string to_string(Normalization n);
// "as-printed" / "plain" (also "plain-product"); throws ParseError.
Normalization parse_normalization(std::string_view text);

struct SpectrumResult {
  KappaPoly value;
  Normalization normalization;
  int b;
  int k;
  DegreeProfile profile;
  Rational dim_tau;
  Rational multiplicity;
};

// dim tau * sum_{l=1}^{min(k+1,p)} (-kappa)^{l-1} sum_{#A=l} chi[A;n] h_{k+1-l}(d~_a : a in A) W(A).
// chi[A;n] is the closed-form spherical value (the multiplicity when l = 1).
// Throws NoInvariantsError when m = p - b - 1 < 0.
SpectrumResult eigenvalue_sum(const DegreeProfile& profile, int b, int k, Normalization normalization);

}  // namespace hooksph

#endif

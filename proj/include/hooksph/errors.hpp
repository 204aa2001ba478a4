#ifndef HOOKSPH_ERRORS_HPP
#define HOOKSPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hooksph {

// Raised when a Young subgroup has no nonzero invariants in the hook isotype,
// i.e. m = p - b - 1 < 0. Distinct from a spherical value that happens to be 0.
class NoInvariantsError : public std::domain_error {
 public:
  NoInvariantsError(int b, int p)
      : std::domain_error("no G_n-invariants in the hook isotype: m = p - b - 1 = " +
                          std::to_string(p - b - 1) + " < 0 (b=" + std::to_string(b) +
                          ", p=" + std::to_string(p) + ")"),
        b_(b),
        p_(p) {}

  int b() const noexcept { return b_; }
  int p() const noexcept { return p_; }

 private:
  int b_;
  int p_;
};

class DivisionByZeroError : public std::domain_error {
 public:
  DivisionByZeroError() : std::domain_error("rational division by zero") {}
};

// Malformed text input (rationals, cycles, profiles, comma lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hooksph

#endif

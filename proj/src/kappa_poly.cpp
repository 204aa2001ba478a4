#include "hooksph/kappa_poly.hpp"

#include <algorithm>
#include <ostream>

#include "hooksph/errors.hpp"

namespace hooksph {

KappaPoly::KappaPoly(const Rational& constant) : coeffs_{constant} { trim(); }

KappaPoly::KappaPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

KappaPoly::KappaPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

KappaPoly KappaPoly::kappa() { return KappaPoly{Rational(0), Rational(1)}; }

void KappaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational KappaPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational KappaPoly::eval(const Rational& kappa0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= kappa0;
    acc += *it;
  }
  return acc;
}

KappaPoly KappaPoly::operator-() const {
  KappaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

KappaPoly& KappaPoly::operator+=(const KappaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

KappaPoly& KappaPoly::operator-=(const KappaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

KappaPoly& KappaPoly::operator*=(const KappaPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

KappaPoly& KappaPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

KappaPoly scale(const KappaPoly& p, const Rational& s) {
  KappaPoly r = p;
  return r *= s;
}

nlohmann::json KappaPoly::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.str());
  return arr;
}

KappaPoly KappaPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("kappa polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("kappa polynomial coefficients must be strings");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return KappaPoly(std::move(coeffs));
}

std::string KappaPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string mag = (c.sign() < 0 ? -c : c).str();
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (i == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += "k";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const KappaPoly& p) { return os << p.str(); }

}  // namespace hooksph

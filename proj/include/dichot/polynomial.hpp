#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace dichot {

using Rational = mpq_class;
using Integer = mpz_class;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  /// a * x^k
  static Polynomial monomial(const Rational& a, std::size_t k) {
    std::vector<Rational> c(k + 1, 0);
    c[k] = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return a.get_den() == 1; });
  }
  bool is_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return sgn(a) >= 0; });
  }
  /// Coefficients read as x^k <-> x^d-k agree (d = the given degree bound).
  bool is_palindromic(std::size_t d) const {
    for (std::size_t k = 0; k <= d; ++k)
      if (coeff(k) != coeff(d - k)) return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& a) {
    for (auto& x : c_) x *= a;
    trim();
    return *this;
  }
  /// this += a * o, without a temporary.
  void add_scaled(const Rational& a, const Polynomial& o) {
    if (sgn(a) == 0) return;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += a * o.c_[k];
    trim();
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (sgn(a.c_[i]) != 0)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// "x^3 + 2*x + 1"-style rendering, highest degree first.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& a = c_[k];
      if (sgn(a) == 0) continue;
      Rational mag = abs(a);
      if (out.empty()) {
        if (sgn(a) < 0) out += "-";
      } else {
        out += sgn(a) < 0 ? " - " : " + ";
      }
      const bool unit = mag == 1;
      if (!unit || k == 0) out += mag.get_str();
      if (k > 0) {
        if (!unit) out += "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// 1 + x^d
inline Polynomial one_plus_x_pow(std::size_t d) {
  auto p = Polynomial::monomial(1, d);
  return p += Polynomial::constant(1);
}

inline Polynomial pow(Polynomial base, std::size_t e) {
  Polynomial acc = Polynomial::constant(1);
  while (e) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return acc;
}

}  // namespace dichot

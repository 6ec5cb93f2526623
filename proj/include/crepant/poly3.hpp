#pragma once

#include <array>
#include <map>
#include <string>

#include "crepant/rational.hpp"

namespace crepant {

enum class Chart { U1, U2, U12 };

// Exact polynomial in three variables with integer (possibly negative) exponents.
// On U1 and U12 the variables are (a, v2, v1); on U2 they are (b, w2, w1).
// A ChartPoly is a Poly3 with nonnegative exponents; an OverlapPoly may have
// negative exponents in the first variable.
class Poly3 {
 public:
  using Exponents = std::array<int, 3>;
  using Terms = std::map<Exponents, Rational>;

  Poly3() = default;
  Poly3(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly3(int c) : Poly3(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly3 monomial(int e0, int e1, int e2, const Rational& c = 1);
  static Poly3 var(int index, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_polynomial() const;  // all exponents >= 0
  Rational coeff(int e0, int e1, int e2) const;
  int min_exponent(int index) const;  // 0 for the zero polynomial
  int max_exponent(int index) const;

  void add_term(const Exponents& e, const Rational& c);
  Poly3 shifted(int d0, int d1, int d2) const;  // multiply by a monomial
  Poly3 pow(int n) const;                       // n >= 0, or n < 0 for monomials
  Poly3 set_zero(int index) const;              // evaluate one variable at 0
  Poly3 coefficient_of(int index, int power) const;  // part with given exponent, exponent removed

  // images[i] replaces variable i; negative exponents need monomial images.
  Poly3 substitute(const std::array<Poly3, 3>& images) const;

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& c);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const Rational& c) { return a *= c; }
  friend Poly3 operator*(const Rational& c, Poly3 a) { return a *= c; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  Poly3 operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }

  std::string to_text(Chart chart) const;

 private:
  Terms terms_;
};

const char* variable_name(Chart chart, int index);

}  // namespace crepant

#pragma once

#include <map>
#include <string>
#include <utility>

#include "crepant/rational.hpp"
#include "json.hpp"

namespace crepant {

// A word over {x, y}; the empty string is the unit.
using Word = std::string;

// Shorter words first, then lexicographic with x < y.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

bool is_word(const std::string& s);

class FreePoly {
 public:
  using Terms = std::map<Word, Rational, WordOrder>;

  FreePoly() = default;
  static FreePoly monomial(const Word& w, const Rational& c = 1);
  static FreePoly one() { return monomial(""); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Word& w) const;
  int degree() const;      // -1 for zero
  int low_degree() const;  // -1 for zero

  void add_term(const Word& w, const Rational& c);
  FreePoly truncated(int max_len) const;

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const Rational& c);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(FreePoly a, const Rational& c) { return a *= c; }
  friend FreePoly operator*(const Rational& c, FreePoly a) { return a *= c; }
  FreePoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// Exponent pair (deg_x, deg_y), ordered by total degree then by descending x exponent,
// which matches the word order on x^i y^j.
struct MonoOrder {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first > b.first;
  }
};

class CommPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational, MonoOrder>;

  CommPoly() = default;
  static CommPoly monomial(int i, int j, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const;
  int degree() const;
  int low_degree() const;
  void add_term(int i, int j, const Rational& c);

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Rational& c);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(CommPoly a, const Rational& c) { return a *= c; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }

  CommPoly partial_x() const;
  CommPoly partial_y() const;

 private:
  Terms terms_;
};

FreePoly add(const FreePoly& p, const FreePoly& q);
FreePoly mul(const FreePoly& p, const FreePoly& q);
FreePoly strike_left(char letter, const FreePoly& p);
FreePoly cyclic_derivative(char letter, const FreePoly& p);
Word minimal_rotation(const Word& w);
FreePoly cyclic_normal_form(const FreePoly& p);
CommPoly abelianize(const FreePoly& p);

// "x^4*y^2 + x^3*y*x*y + 1/2*x^2*y*x^2*y"
std::string to_text(const FreePoly& p);
std::string to_text(const CommPoly& p);
nlohmann::json to_json(const FreePoly& p);
nlohmann::json to_json(const CommPoly& p);
FreePoly free_poly_from_json(const nlohmann::json& j);

}  // namespace crepant

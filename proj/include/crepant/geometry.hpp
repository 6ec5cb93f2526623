#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crepant/lambda_table.hpp"
#include "crepant/poly3.hpp"

namespace crepant {

struct Violation {
  enum class Kind { LinearTerm, QuadraticTerm, Degenerate };
  Kind kind;
  int j = 0, k = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class SetupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ValidationReport validate(const LambdaTable& lambdas, bool require_minus3_1);

enum class NormalBundle { Minus3Plus1, Minus2Zero, Minus1Minus1 };
std::string to_string(NormalBundle nb);
NormalBundle classify_normal_bundle(const LambdaTable& lambdas);

struct GeometryInvariants {
  int t = 0, r = 0, s = 0;
  int max_degree = 0;           // largest j+k with lambda nonzero
  Poly3 A;                      // in (a, v2) on U1
  Poly3 B;                      // in (b, w2) on U2
  std::map<int, Poly3> A_i;     // univariate in a, keys t..max_degree (zero entries kept)
  std::map<int, Poly3> B_i;     // univariate in b

  Poly3 Ai(int i) const;
  Poly3 Bi(int i) const;
  // sum_{j >= i} v2^{j-t} A_j; a polynomial for every i >= 3.
  Poly3 A_geq(int i) const;
  Poly3 B_geq(int i) const;
  // v2^{t-i} A_{>=i}, always a polynomial.
  Poly3 A_geq_scaled(int i) const;
  Poly3 B_geq_scaled(int i) const;
};

GeometryInvariants invariants(const LambdaTable& lambdas);

// Coordinate changes between the charts, expanded on the overlap.
class Glue {
 public:
  explicit Glue(const LambdaTable& lambdas);
  // U2 polynomial in (b, w2, w1) -> U12 polynomial in (a^{+-1}, v2, v1).
  Poly3 to_overlap(const Poly3& u2) const;
  // U1/U12 polynomial in (a, v2, v1) -> Laurent polynomial in (b^{+-1}, w2, w1).
  Poly3 to_chart2(const Poly3& u1) const;
  const Poly3& w1_image() const { return images_[2]; }
  const Poly3& v1_inverse_image() const { return inverse_images_[2]; }

 private:
  std::array<Poly3, 3> images_;
  std::array<Poly3, 3> inverse_images_;
};

Poly3 substitute_glue(const Poly3& u2, const LambdaTable& lambdas);

struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<IdentityCheck> check_overlap_identities(const LambdaTable& lambdas);

}  // namespace crepant

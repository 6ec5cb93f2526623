#include "crepant/geometry.hpp"

#include <algorithm>
#include <limits>

namespace crepant {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

ValidationReport validate(const LambdaTable& lambdas, bool require_minus3_1) {
  ValidationReport rep;
  for (const auto& [key, v] : lambdas.entries()) {
    auto [j, k] = key;
    std::string name = "lambda_" + std::to_string(j) + std::to_string(k);
    if (j + k <= 1) {
      rep.violations.push_back({Violation::Kind::LinearTerm, j, k, name + " != 0 (no closed curve)"});
    } else if (j + k == 2 && require_minus3_1) {
      rep.violations.push_back({Violation::Kind::QuadraticTerm, j, k, name + " != 0 (normal bundle is not (-3,1))"});
    }
  }
  if (lambdas.empty()) {
    rep.violations.push_back({Violation::Kind::Degenerate, 0, 0, "degenerate all-zero table"});
  }
  return rep;
}

std::string to_string(NormalBundle nb) {
  switch (nb) {
    case NormalBundle::Minus3Plus1: return "(-3,1)";
    case NormalBundle::Minus2Zero: return "(-2,0)";
    case NormalBundle::Minus1Minus1: return "(-1,-1)";
  }
  return "?";
}

NormalBundle classify_normal_bundle(const LambdaTable& lambdas) {
  for (const auto& v : validate(lambdas, false).violations) {
    if (v.kind == Violation::Kind::LinearTerm) throw SetupError(v.message);
  }
  Rational l20 = lambdas.get(2, 0), l11 = lambdas.get(1, 1), l02 = lambdas.get(0, 2);
  if (l20 == 0 && l11 == 0 && l02 == 0) return NormalBundle::Minus3Plus1;
  Rational delta = l11 * l11 - l20 * l02;
  return delta == 0 ? NormalBundle::Minus2Zero : NormalBundle::Minus1Minus1;
}

Poly3 GeometryInvariants::Ai(int i) const {
  auto it = A_i.find(i);
  return it == A_i.end() ? Poly3() : it->second;
}

Poly3 GeometryInvariants::Bi(int i) const {
  auto it = B_i.find(i);
  return it == B_i.end() ? Poly3() : it->second;
}

Poly3 GeometryInvariants::A_geq(int i) const {
  Poly3 out;
  for (const auto& [j, Aj] : A_i) {
    if (j >= i) out += Aj.shifted(0, j - t, 0);
  }
  return out;
}

Poly3 GeometryInvariants::B_geq(int i) const {
  Poly3 out;
  for (const auto& [j, Bj] : B_i) {
    if (j >= i) out += Bj.shifted(0, j - t, 0);
  }
  return out;
}

Poly3 GeometryInvariants::A_geq_scaled(int i) const {
  Poly3 out;
  for (const auto& [j, Aj] : A_i) {
    if (j >= i) out += Aj.shifted(0, j - i, 0);
  }
  return out;
}

Poly3 GeometryInvariants::B_geq_scaled(int i) const {
  Poly3 out;
  for (const auto& [j, Bj] : B_i) {
    if (j >= i) out += Bj.shifted(0, j - i, 0);
  }
  return out;
}

GeometryInvariants invariants(const LambdaTable& lambdas) {
  ValidationReport rep = validate(lambdas, true);
  if (!rep.ok()) throw SetupError(rep.summary());

  Poly3 s1, s2;
  int t = std::numeric_limits<int>::max(), r = 0, s = 0;
  for (const auto& [key, v] : lambdas.entries()) {
    auto [j, k] = key;
    s1.add_term({2 - k, j + k - 1, 0}, v);
    s2.add_term({2 - j, j + k - 1, 0}, v);
    t = std::min(t, j + k);
    r = std::max(r, k);
    s = std::max(s, j);
  }

  GeometryInvariants inv;
  inv.r = 2 - s1.min_exponent(0);
  inv.s = 2 - s2.min_exponent(0);
  inv.t = s1.min_exponent(1) + 1;
  inv.max_degree = lambdas.max_degree();
  if (inv.r != r || inv.s != s || inv.t != t) throw std::logic_error("factorization disagrees with table extremes");
  inv.A = s1.shifted(inv.r - 2, 1 - inv.t, 0);
  inv.B = s2.shifted(inv.s - 2, 1 - inv.t, 0);
  if (inv.A.min_exponent(0) != 0 || inv.A.min_exponent(1) != 0 || inv.B.min_exponent(0) != 0 ||
      inv.B.min_exponent(1) != 0 || !inv.A.is_polynomial() || !inv.B.is_polynomial()) {
    throw std::logic_error("factorization left a or v2 dividing A, or b or w2 dividing B");
  }
  for (int i = inv.t; i <= inv.max_degree; ++i) {
    inv.A_i[i] = inv.A.coefficient_of(1, i - inv.t);
    inv.B_i[i] = inv.B.coefficient_of(1, i - inv.t);
  }
  Poly3 reassembled;
  for (const auto& [i, Ai] : inv.A_i) reassembled += Ai.shifted(0, i - inv.t, 0);
  if (!(reassembled == inv.A)) throw std::logic_error("A is not the sum of its graded pieces");
  return inv;
}

Glue::Glue(const LambdaTable& lambdas) {
  images_ = {Poly3::monomial(-1, 0, 0), Poly3::monomial(-1, 1, 0), Poly3::monomial(3, 0, 1)};
  inverse_images_ = {Poly3::monomial(-1, 0, 0), Poly3::monomial(-1, 1, 0), Poly3::monomial(3, 0, 1)};
  for (const auto& [key, v] : lambdas.entries()) {
    auto [j, k] = key;
    images_[2].add_term({2 - k, j + k - 1, 0}, v);
    inverse_images_[2].add_term({2 - j, j + k - 1, 0}, -v);
  }
}

Poly3 Glue::to_overlap(const Poly3& u2) const { return u2.substitute(images_); }

Poly3 Glue::to_chart2(const Poly3& u1) const { return u1.substitute(inverse_images_); }

Poly3 substitute_glue(const Poly3& u2, const LambdaTable& lambdas) { return Glue(lambdas).to_overlap(u2); }

namespace {

IdentityCheck compare(std::string name, const Poly3& lhs, const Poly3& rhs, Chart chart = Chart::U12) {
  bool ok = lhs == rhs;
  std::string detail = ok ? "" : "difference " + (lhs - rhs).to_text(chart);
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace

std::vector<IdentityCheck> check_overlap_identities(const LambdaTable& lambdas) {
  GeometryInvariants inv = invariants(lambdas);
  Glue glue(lambdas);
  const int t = inv.t, r = inv.r, s = inv.s;
  std::vector<IdentityCheck> out;

  out.push_back(compare("B = b^(r+s-t) A", glue.to_overlap(inv.B).shifted(r + s - t, 0, 0), inv.A));

  for (int i = 3; i <= inv.max_degree; ++i) {
    out.push_back(compare("A_" + std::to_string(i) + " = a^(r+s-i) B_" + std::to_string(i), inv.Ai(i),
                          glue.to_overlap(inv.Bi(i)).shifted(r + s - i, 0, 0)));
  }
  for (int i = 3; i <= inv.max_degree + 1; ++i) {
    std::string is = std::to_string(i);
    out.push_back(compare("A_>=" + is + " = a^(r+s-t) B_>=" + is, inv.A_geq(i),
                          glue.to_overlap(inv.B_geq(i)).shifted(r + s - t, 0, 0)));
    out.push_back(compare("a^(2-r-s) v2^(t-i) A_>=" + is + " = b^(i-2) w2^(t-i) B_>=" + is,
                          inv.A_geq(i).shifted(2 - r - s, t - i, 0),
                          glue.to_overlap(inv.B_geq(i).shifted(i - 2, t - i, 0))));
    out.push_back(compare("split v2^(t-i) A_>=" + is, inv.A_geq(i).shifted(0, t - i, 0),
                          inv.Ai(i) + inv.A_geq(i + 1).shifted(0, t - i, 0), Chart::U1));
    out.push_back(compare("split w2^(t-i) B_>=" + is, inv.B_geq(i).shifted(0, t - i, 0),
                          inv.Bi(i) + inv.B_geq(i + 1).shifted(0, t - i, 0), Chart::U2));
    out.push_back(compare("v2^(t-i) A_>=" + is + " is polynomial", inv.A_geq_scaled(i),
                          inv.A_geq(i).shifted(0, t - i, 0), Chart::U1));
  }

  // b^{2-r} w1 = a^{r+1} v1 + v2^{t-1} A and a^{2-s} v1 = b^{s+1} w1 - w2^{t-1} B.
  out.push_back(compare("b^(2-r) w1 = a^(r+1) v1 + v2^(t-1) A", glue.to_overlap(Poly3::monomial(2 - r, 0, 1)),
                        Poly3::monomial(r + 1, 0, 1) + inv.A.shifted(0, t - 1, 0)));
  out.push_back(compare("a^(2-s) v1 = b^(s+1) w1 - w2^(t-1) B", Poly3::monomial(2 - s, 0, 1),
                        glue.to_overlap(Poly3::monomial(s + 1, 0, 1) - inv.B.shifted(0, t - 1, 0))));

  const char* names[] = {"a", "v2", "v1"};
  for (int i = 0; i < 3; ++i) {
    Poly3 v = Poly3::var(i);
    out.push_back(compare(std::string("inverse glue then glue fixes ") + names[i], glue.to_overlap(glue.to_chart2(v)), v));
    out.push_back(compare(std::string("glue then inverse glue fixes ") + variable_name(Chart::U2, i),
                          glue.to_chart2(glue.to_overlap(v)), v, Chart::U2));
  }
  out.push_back({"2-r is the lowest a-exponent of the image of w1", glue.w1_image().min_exponent(0) == 2 - r, ""});
  out.push_back({"2-s is the lowest b-exponent of the inverse image of v1",
                 glue.v1_inverse_image().min_exponent(0) == 2 - s, ""});
  return out;
}

}  // namespace crepant

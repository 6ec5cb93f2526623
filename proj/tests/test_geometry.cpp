#include "crepant/geometry.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace crepant;

namespace {

// Direct reading of the table: t = min j+k, r = max k, s = max j.
struct Extremes {
  int t = 1000, r = 0, s = 0;
};

Extremes extremes(const LambdaTable& l) {
  Extremes e;
  for (const auto& [key, v] : l.entries()) {
    e.t = std::min(e.t, key.first + key.second);
    e.r = std::max(e.r, key.second);
    e.s = std::max(e.s, key.first);
  }
  return e;
}

// A = sum lambda a^{r-k} v2^{j+k-t}, built term by term.
Poly3 A_oracle(const LambdaTable& l) {
  Extremes e = extremes(l);
  Poly3 out;
  for (const auto& [key, v] : l.entries()) out.add_term({e.r - key.second, key.first + key.second - e.t, 0}, v);
  return out;
}

Poly3 B_oracle(const LambdaTable& l) {
  Extremes e = extremes(l);
  Poly3 out;
  for (const auto& [key, v] : l.entries()) out.add_term({e.s - key.first, key.first + key.second - e.t, 0}, v);
  return out;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(LambdaTable{{{3, 0}, 3}}, true).ok());
  auto rep = validate(LambdaTable{{{1, 1}, 1}}, true);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == Violation::Kind::QuadraticTerm);
  auto deg = validate(LambdaTable{}, true);
  REQUIRE(deg.violations.size() == 1);
  CHECK(deg.violations[0].kind == Violation::Kind::Degenerate);
  auto lin = validate(LambdaTable{{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 3}}, false);
  CHECK(lin.violations.size() == 3);
  CHECK(validate(LambdaTable{{{2, 0}, 1}}, false).ok());
}

TEST_CASE("normal bundle classification") {
  CHECK(classify_normal_bundle(LambdaTable{{{3, 0}, 3}}) == NormalBundle::Minus3Plus1);
  CHECK(classify_normal_bundle(LambdaTable{{{1, 1}, 1}}) == NormalBundle::Minus1Minus1);
  CHECK(classify_normal_bundle(LambdaTable{{{2, 0}, 1}}) == NormalBundle::Minus2Zero);
  CHECK_THROWS_AS(classify_normal_bundle(LambdaTable{{{1, 0}, 1}}), SetupError);
}

TEST_CASE("invariants examples") {
  auto a = invariants(LambdaTable{{{3, 0}, 3}});
  CHECK(a.t == 3);
  CHECK(a.r == 0);
  CHECK(a.s == 3);
  CHECK(a.A == Poly3(3));
  CHECK(a.B == Poly3(3));
  auto b = invariants(LambdaTable{{{0, 3}, 1}});
  CHECK((b.t == 3 && b.r == 3 && b.s == 0));
  CHECK((b.A == Poly3(1) && b.B == Poly3(1)));
  auto c = invariants(LambdaTable{{{2, 2}, 1}});
  CHECK((c.t == 4 && c.r == 2 && c.s == 2));
  CHECK((c.A == Poly3(1) && c.B == Poly3(1)));
  CHECK_THROWS_AS(invariants(LambdaTable{}), SetupError);
  CHECK_THROWS_AS(invariants(LambdaTable{{{2, 0}, 1}}), SetupError);
}

TEST_CASE("invariants agree with direct reading on random tables") {
  for (int trial = 0; trial < 100; ++trial) {
    LambdaTable l = gen::lambda_table(8, 4);
    auto inv = invariants(l);
    Extremes e = extremes(l);
    CHECK(inv.t == e.t);
    CHECK(inv.r == e.r);
    CHECK(inv.s == e.s);
    CHECK(inv.A == A_oracle(l));
    CHECK(inv.B == B_oracle(l));
    for (int i = 3; i < inv.t; ++i) {
      CHECK(inv.Ai(i).is_zero());
      CHECK(inv.Bi(i).is_zero());
    }
    for (int i = 3; i <= inv.max_degree + 2; ++i) {
      CHECK(inv.A_geq_scaled(i).is_polynomial());
      CHECK(inv.A_geq(i).is_polynomial());
    }
    for (const auto& c : check_overlap_identities(l)) {
      INFO(l.to_text(), " ", c.name, " ", c.detail);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("overlap identity examples") {
  for (const LambdaTable& l : {LambdaTable{{{3, 0}, 3}}, LambdaTable{{{3, 0}, 1}, {{0, 3}, 1}},
                               LambdaTable{{{2, 2}, 1}, {{5, 0}, 2}}}) {
    for (const auto& c : check_overlap_identities(l)) {
      INFO(c.name, " ", c.detail);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("glue substitution") {
  LambdaTable l{{{3, 0}, 3}};
  // w1 -> a^3 v1 + 3 a^2 v2^2
  CHECK(substitute_glue(Poly3::var(2), l) == Poly3::monomial(3, 0, 1) + Poly3::monomial(2, 2, 0, 3));
  CHECK(substitute_glue(Poly3::monomial(2, 1, 0), l) == Poly3::monomial(-3, 1, 0));
}

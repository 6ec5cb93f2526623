#include <set>

#include "crepant/necklace.hpp"
#include "doctest.h"

using namespace crepant;

namespace {

FreePoly W(const std::string& w, Rational c = 1) { return FreePoly::monomial(w, c); }

std::multiset<int> sizes(const OrbitDecomposition& d) {
  std::multiset<int> out;
  for (const auto& o : d.orbits) out.insert(o.size);
  return out;
}

// Orbit of a word under rotation, computed as a set.
std::set<std::string> rotations(const std::string& w) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.insert(w.substr(i) + w.substr(0, i));
  return out;
}

}  // namespace

TEST_CASE("orbit enumeration examples") {
  CHECK(sizes(enumerate_orbits(4, 2)) == std::multiset<int>{3, 6, 6});
  CHECK(sizes(enumerate_orbits(3, 0)) == std::multiset<int>{1});
  CHECK(sizes(enumerate_orbits(2, 2)) == std::multiset<int>{2, 4});
  CHECK_THROWS_AS(enumerate_orbits(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(necklace_poly(0, 0), std::invalid_argument);
}

TEST_CASE("orbit counting consistency") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      OrbitDecomposition d = enumerate_orbits(n - k, k);
      int total = 0;
      for (const auto& o : d.orbits) {
        total += o.size;
        CHECK(n % o.size == 0);
        CHECK(static_cast<int>(rotations(o.representative).size()) == o.size);
        CHECK(*rotations(o.representative).begin() == o.representative);
      }
      CHECK(Rational(total) == binomial(n, k));
    }
  }
}

TEST_CASE("necklace polynomial examples") {
  CHECK(necklace_poly(4, 2) == W("xxxxyy") + W("xxxyxy") + W("xxyxxy", frac(1, 2)));
  CHECK(necklace_poly(3, 0) == W("xxx", frac(1, 3)));
  CHECK(necklace_poly(1, 0) == W("x"));
}

TEST_CASE("mono_sum examples") {
  CHECK(mono_sum(2, 2) == W("xxyy") + W("xyyx") + W("yyxx") + W("yxxy") + W("xyxy") + W("yxyx"));
  CHECK(mono_sum(0, 0) == FreePoly::one());
  CHECK(mono_sum(1, 1) == W("xy") + W("yx"));
  CHECK(abelianize(mono_sum(2, 2)) == CommPoly::monomial(2, 2, 6));
}

TEST_CASE("potentials") {
  CHECK(potential(LambdaTable{{{3, 0}, 3}}) == W("xxx"));
  CHECK(potential(LambdaTable{}).is_zero());
  CHECK(potential(LambdaTable{{{4, 2}, 1}}) == necklace_poly(4, 2));
  CHECK(commutative_potential(LambdaTable{{{4, 2}, 1}}) == CommPoly::monomial(4, 2, frac(5, 2)));
  CHECK(commutative_potential(LambdaTable{{{3, 0}, 3}}) == CommPoly::monomial(3, 0, 1));
  CHECK(commutative_potential(LambdaTable{}).is_zero());
  CHECK_THROWS(potential(LambdaTable{{{1, 0}, 1}}));
  LambdaTable mixed{{{3, 0}, frac(1, 2)}, {{2, 2}, -3}, {{1, 5}, 7}};
  CHECK(commutative_potential(mixed) == abelianize(potential(mixed)));
}

TEST_CASE("trace expansion examples") {
  CHECK(trace_expansion(4, 2) == W("xxxxyy", 6) + W("xxxyxy", 6) + W("xxyxxy", 3));
  CHECK(trace_expansion(3, 0) == W("xxx"));
  CHECK(trace_expansion(1, 1) == W("xy", 2));
}

TEST_CASE("differentiation, abelianization and trace identities up to degree 10") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      int j = n - k;
      CHECK(trace_expansion(j, k) == cyclic_normal_form(necklace_poly(j, k) * Rational(n)));
      CHECK(abelianize(necklace_poly(j, k)) == CommPoly::monomial(j, k, binomial(n, k) / n));
    }
  }
  for (int j = 0; j <= 10; ++j) {
    for (int k = 0; j + k <= 10; ++k) {
      CHECK(cyclic_derivative('x', necklace_poly(j + 1, k)) == mono_sum(j, k));
      CHECK(cyclic_derivative('y', necklace_poly(j, k + 1)) == mono_sum(j, k));
    }
  }
}

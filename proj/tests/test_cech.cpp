#include "crepant/cech.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace crepant;

namespace {

const Shape kShapes[] = {Shape::g, Shape::h, Shape::z, Shape::Z, Shape::G, Shape::H, Shape::s};

Poly3 random_chart_poly(int var_a) {
  Poly3 p;
  int n = gen::uniform(0, 2);
  for (int i = 0; i < n; ++i) {
    std::array<int, 3> e{0, 0, 0};
    e[var_a] = gen::uniform(0, 3);
    e[1] = gen::uniform(0, 2);
    p.add_term(e, gen::small_rational());
  }
  return p;
}

// Random element of the given degree built from shapes with random monomial factors,
// overlap-only shapes and a scalar combination of the named generators.
CechElement random_element(const CechAlgebra& alg, int degree) {
  CechElement out(degree);
  for (Shape sh : kShapes) {
    if (gen::uniform(0, 1) == 0) continue;
    CechElement c = alg.shape(sh, random_chart_poly(0), random_chart_poly(0));
    if (c.degree() == degree) out += c;
    CechElement o = alg.overlap_shape(sh, Poly3::monomial(gen::uniform(-2, 2), gen::uniform(0, 2), 0, gen::small_rational()));
    if (o.degree() == degree) out += o;
  }
  const char* letters = degree == 1 ? "xy" : degree == 2 ? "XY" : degree == 3 ? "s" : "1";
  for (const char* p = letters; *p; ++p) out += alg.basis_element(*p) * gen::small_rational();
  return out;
}

const LambdaTable kSamples[] = {
    LambdaTable{{{3, 0}, 3}},
    LambdaTable{{{0, 3}, 1}},
    LambdaTable{{{2, 2}, 1}},
    LambdaTable{{{2, 1}, frac(1, 2)}, {{1, 3}, -2}},
    LambdaTable{{{3, 0}, 1}, {{2, 2}, 1}, {{0, 4}, frac(-3, 5)}},
};

}  // namespace

TEST_CASE("basis elements are closed with the expected degrees") {
  for (const auto& l : kSamples) {
    CechAlgebra alg(l);
    for (char c : std::string("1xyXYs")) {
      INFO(l.to_text(), " ", c);
      CHECK(alg.basis_element(c).degree() == CechAlgebra::basis_degree(c));
      CHECK(alg.differential(alg.basis_element(c)).is_zero());
    }
  }
}

TEST_CASE("unit is a two-sided identity") {
  CechAlgebra alg(kSamples[3]);
  for (int d = 0; d <= 3; ++d) {
    CechElement a = random_element(alg, d);
    CHECK(alg.star(alg.unit(), a) == a);
    CHECK(alg.star(a, alg.unit()) == a);
  }
}

TEST_CASE("degree-1 coordinates") {
  for (const auto& l : kSamples) {
    CechAlgebra alg(l);
    CohomologyClass cx = alg.decompose_degree1(alg.x());
    CohomologyClass cy = alg.decompose_degree1(alg.y());
    CHECK(cx.coords == std::vector<Rational>{1, 0});
    CHECK(cy.coords == std::vector<Rational>{0, 1});
    CechElement mix = alg.x() * frac(2, 3) - alg.y() * 5;
    CHECK(alg.decompose_degree1(mix).coords == std::vector<Rational>{frac(2, 3), -5});
  }
}

TEST_CASE("x*x decomposes to the glue coefficients") {
  // x*x has class lambda_{2+1,0} X + lambda_{2,1} Y.
  CechAlgebra alg(LambdaTable{{{3, 0}, 3}, {{2, 1}, frac(1, 2)}});
  Decomposition d = alg.decompose_degree2(alg.star(alg.x(), alg.x()));
  CHECK(d.cls.coords == std::vector<Rational>{3, frac(1, 2)});
  CHECK(alg.star(alg.x(), alg.x()) ==
        alg.X() * d.cls.coords[0] + alg.Y() * d.cls.coords[1] + alg.differential(d.boundary.element));
}

TEST_CASE("property: D^2 = 0, Leibniz and associativity on random elements") {
  for (const auto& l : kSamples) {
    CechAlgebra alg(l);
    for (int trial = 0; trial < 6; ++trial) {
      int da = gen::uniform(0, 2), db = gen::uniform(0, 3 - da);
      CechElement a = random_element(alg, da), b = random_element(alg, db);
      INFO(l.to_text(), " degrees ", da, " ", db);
      CHECK(alg.differential(alg.differential(a)).is_zero());
      CechElement lhs = alg.differential(alg.star(a, b));
      CechElement rhs = alg.star(alg.differential(a), b) + alg.star(a, alg.differential(b)) * sign_of(da);
      CHECK(lhs == rhs);
      int dc = gen::uniform(0, std::max(0, 3 - da - db));
      CechElement c = random_element(alg, dc);
      CHECK(alg.star(alg.star(a, b), c) == alg.star(a, alg.star(b, c)));
    }
  }
}

TEST_CASE("property: decompositions recover planted classes") {
  for (const auto& l : kSamples) {
    CechAlgebra alg(l);
    for (int trial = 0; trial < 5; ++trial) {
      Rational p = gen::small_rational(), q = gen::small_rational(), w = gen::small_rational();
      CechElement e2 = alg.X() * p + alg.Y() * q + alg.differential(random_element(alg, 1));
      Decomposition d2 = alg.decompose_degree2(e2);
      INFO(l.to_text(), " ", e2.to_text());
      CHECK(d2.cls.coords == std::vector<Rational>{p, q});
      CHECK(e2 == alg.X() * p + alg.Y() * q + alg.differential(d2.boundary.element));

      CechElement e3 = alg.xi() * w + alg.differential(random_element(alg, 2));
      Decomposition d3 = alg.decompose_degree3(e3);
      CHECK(d3.cls.coords == std::vector<Rational>{w});
      CHECK(e3 == alg.xi() * w + alg.differential(d3.boundary.element));
    }
  }
}

TEST_CASE("decomposition rejects non-closed elements") {
  CechAlgebra alg(kSamples[0]);
  CechElement notclosed = alg.shape(Shape::Z, Poly3::var(0), 0);
  if (!alg.differential(notclosed).is_zero()) CHECK_THROWS_AS(alg.decompose_degree2(notclosed), DecompositionError);
  CHECK_THROWS_AS(alg.decompose_degree2(alg.x()), DecompositionError);
}

TEST_CASE("homotopy index ranges") {
  CechAlgebra alg(LambdaTable{{{2, 2}, 1}});  // t = 4, r = 2, s = 2
  CHECK(alg.k_defined(0));
  CHECK_FALSE(alg.k_defined(alg.r() - 1));
  CHECK_FALSE(alg.k_defined(alg.r()));
  CHECK(alg.k_defined(alg.r() + 1));
  CHECK_FALSE(alg.k_defined(alg.r() + alg.s()));
  CHECK(alg.K_defined(alg.r() + alg.s()));
  CHECK_THROWS_AS(alg.k(alg.r()), IndexError);
  CHECK_THROWS_AS(alg.K(-1), IndexError);
}

TEST_CASE("identity suite passes on sample tables and random tables") {
  std::vector<LambdaTable> tables(std::begin(kSamples), std::end(kSamples));
  for (int i = 0; i < 4; ++i) tables.push_back(gen::lambda_table(7, 3));
  for (const auto& l : tables) {
    CechAlgebra alg(l);
    for (const auto& r : verify_generators(alg, 6)) {
      INFO(l.to_text(), " ", r.name, " ", r.first_failure);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("injected faults are detected") {
  using F = CechAlgebra::Fault;
  for (F f : {F::StarChart2Sign, F::StarOverlapSign, F::DifferentialOverlapSign}) {
    CechAlgebra alg(LambdaTable{{{2, 2}, 1}, {{3, 0}, 1}});
    alg.inject_fault(f);
    long failures = 0;
    for (const auto& r : verify_generators(alg, 5)) failures += r.failures;
    CHECK(failures > 0);
  }
}

#include <functional>
#include <random>

#include "crepant/cech.hpp"

namespace crepant {

namespace {

struct Named {
  std::string name;
  CechElement el;
};

class Checker {
 public:
  IdentityResult& get(const std::string& name) {
    for (auto& r : results_)
      if (r.name == name) return r;
    results_.push_back(IdentityResult{name, 0, 0, {}});
    return results_.back();
  }
  void expect(const std::string& name, bool ok, const std::string& instance) {
    IdentityResult& r = get(name);
    ++r.instances;
    if (!ok) {
      if (r.failures == 0) r.first_failure = instance;
      ++r.failures;
    }
  }
  std::vector<IdentityResult> take() { return std::move(results_); }

 private:
  std::vector<IdentityResult> results_;
};

std::string idx(int i) { return std::to_string(i); }

}  // namespace

std::vector<IdentityResult> verify_generators(const CechAlgebra& alg, int max_i) {
  Checker ck;
  const int r = alg.r(), s = alg.s(), t = alg.t();
  const auto& inv = alg.model().inv();
  const auto& lam = alg.model().lambdas();
  const Poly3 a = Poly3::var(0);
  auto D = [&](const CechElement& e) { return alg.differential(e); };
  auto st = [&](const CechElement& p, const CechElement& q) { return alg.star(p, q); };
  auto to12 = [&](const Poly3& g) { return alg.model().to_overlap(g); };
  const CechElement x = alg.x(), y = alg.y();

  // Differentials of shapes with arbitrary coefficients (monomials in all three variables).
  std::vector<Poly3> f1s, f2s;
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 1; ++q)
      for (int m = 0; m <= 1; ++m) {
        f1s.push_back(Poly3::monomial(p, q, m));
        f2s.push_back(Poly3::monomial(p, q, m, frac(p + 2, q + 1)));
      }
  for (const auto& f : f1s)
    for (const auto& g : f2s) {
      const std::string inst = "f=" + f.to_text(Chart::U1) + ", g=" + g.to_text(Chart::U2);
      ck.expect("D(f*g1, g*g2, 0)",
                D(alg.shape(Shape::g, f, g)) == alg.shape(Shape::Z, f, g.shifted(s + 1, 0, 0)) +
                                                    alg.overlap_shape(Shape::g, f - to12(g).shifted(r - 2, 0, 0)),
                inst);
      ck.expect("D(f*h1, g*h2, 0)",
                D(alg.shape(Shape::h, f, g)) == alg.shape(Shape::Z, f.shifted(r + 1, 0, 0), g) +
                                                    alg.overlap_shape(Shape::h, f - to12(g).shifted(s - 2, 0, 0)),
                inst);
      ck.expect("D(f*z1, g*z2, 0)",
                D(alg.shape(Shape::z, f, g)) ==
                    alg.shape(Shape::Z, f.shifted(0, 1, 0), g.shifted(0, 1, 0)) +
                        alg.overlap_shape(Shape::z, f - to12(g).shifted(r + s - 2, 0, 0)),
                inst);
      ck.expect("D(f*G1, g*G2, 0)",
                D(alg.shape(Shape::G, f, g)) == alg.shape(Shape::s, f, g.shifted(s + 1, 0, 0)) +
                                                    alg.overlap_shape(Shape::G, f - to12(g).shifted(r - 1, 0, 0)),
                inst);
      ck.expect("D(f*H1, g*H2, 0)",
                D(alg.shape(Shape::H, f, g)) == alg.shape(Shape::s, f.shifted(r + 1, 0, 0), g) +
                                                    alg.overlap_shape(Shape::H, f - to12(g).shifted(s - 1, 0, 0)),
                inst);
    }

  ck.expect("D x = 0", D(x).is_zero(), "x");
  ck.expect("D y = 0", D(y).is_zero(), "y");
  ck.expect("D X = 0", D(alg.X()).is_zero(), "X");
  ck.expect("D Y = 0", D(alg.Y()).is_zero(), "Y");
  ck.expect("D xi = 0", D(alg.xi()).is_zero(), "xi");

  for (int i = 0; i <= std::min(max_i, r + s); ++i) {
    if (alg.k_defined(i)) {
      const CechElement k = alg.k(i);
      ck.expect("D(k_i) = (a^i Z1, b^(r+s-1-i) Z2, 0)", D(k) == alg.shape(Shape::Z, a.pow(i), a.pow(r + s - 1 - i)),
                "i=" + idx(i));
      ck.expect("x*k_i = K_i = -k_i*x", st(x, k) == alg.K(i) && st(k, x) == -alg.K(i), "i=" + idx(i));
      ck.expect("y*k_i = K_(i+1) = -k_i*y", st(y, k) == alg.K(i + 1) && st(k, y) == -alg.K(i + 1), "i=" + idx(i));
    }
    if (alg.K_defined(i))
      ck.expect("D(K_i) = (a^i s1, b^(r+s-i) s2, 0)", D(alg.K(i)) == alg.shape(Shape::s, a.pow(i), a.pow(r + s - i)),
                "i=" + idx(i));
  }
  if (alg.K_defined(r + s)) {
    ck.expect("D(K_i) = (a^i s1, b^(r+s-i) s2, 0)",
              D(alg.K(r + s)) == alg.shape(Shape::s, a.pow(r + s), Poly3(1)), "i=" + idx(r + s));
  }

  for (int i = 3; i <= max_i; ++i)
    for (int k = 0; k <= i - 1; ++k) {
      const std::string inst = "i=" + idx(i) + ", k=" + idx(k);
      const CechElement e = alg.e(i, k);
      const Poly3 P = inv.A_geq_scaled(i + 1), Q = inv.B_geq_scaled(i + 1);
      ck.expect("D(e_ik) = (a^k v2^(t-i) A_>=(i+1) Z1, b^(i-k-1) w2^(t-i) B_>=(i+1) Z2, 0)",
                D(e) == alg.shape(Shape::Z, P.shifted(k, 1, 0), Q.shifted(i - k - 1, 1, 0)), inst);
      ck.expect("x*e_ik + e_ik*x = -(a^k v2^(t-i-1) A_>=(i+1) Z1, b^(i-k) w2^(t-i-1) B_>=(i+1) Z2, 0)",
                st(x, e) + st(e, x) == -alg.shape(Shape::Z, P.shifted(k, 0, 0), Q.shifted(i - k, 0, 0)), inst);
      if (k >= 1) {
        const CechElement e_prev = alg.e(i, k - 1);
        ck.expect("e_ik*x = e_i(k-1)*y", st(e, x) == st(e_prev, y), inst);
        ck.expect("x*e_ik = y*e_i(k-1)", st(x, e) == st(y, e_prev), inst);
      }
    }

  // Products of degree-one generators.
  const Poly3 PA = inv.A_geq_scaled(3), PB = inv.B_geq_scaled(3);
  ck.expect("x*x = (v2^(t-3) A Z1, b^2 w2^(t-3) B Z2, 0)", st(x, x) == alg.shape(Shape::Z, PA, PB.shifted(2, 0, 0)),
            "t=" + idx(t));
  ck.expect("x*y = y*x = (a v2^(t-3) A Z1, b w2^(t-3) B Z2, 0)",
            st(x, y) == alg.shape(Shape::Z, PA.shifted(1, 0, 0), PB.shifted(1, 0, 0)) && st(y, x) == st(x, y), "");
  ck.expect("y*y = (a^2 v2^(t-3) A Z1, w2^(t-3) B Z2, 0)", st(y, y) == alg.shape(Shape::Z, PA.shifted(2, 0, 0), PB),
            "");

  // Decompositions of the degree-one products in the cohomology basis.
  {
    auto kk = [&](const Rational& c, int i, std::string& missing) -> CechElement {
      if (c == 0) return CechElement(1);
      if (!alg.k_defined(i)) {
        missing += " k_" + idx(i);
        return CechElement(1);
      }
      return alg.k(i) * c;
    };
    struct Case {
      std::string name;
      CechElement lhs;
      Rational cx, cy;
      std::vector<std::pair<Rational, int>> ks;
      int ek;
    };
    const std::vector<Case> cases = {
        {"x*x = l30 X + l21 Y + D(l12 k_(r-2) + l03 k_(r-3) + e_30)", st(x, x), lam.get(3, 0), lam.get(2, 1),
         {{lam.get(1, 2), r - 2}, {lam.get(0, 3), r - 3}}, 0},
        {"x*y = l21 X + l12 Y + D(l30 k_(r+1) + l03 k_(r-2) + e_31)", st(x, y), lam.get(2, 1), lam.get(1, 2),
         {{lam.get(3, 0), r + 1}, {lam.get(0, 3), r - 2}}, 1},
        {"y*y = l12 X + l03 Y + D(l30 k_(r+2) + l21 k_(r+1) + e_32)", st(y, y), lam.get(1, 2), lam.get(0, 3),
         {{lam.get(3, 0), r + 2}, {lam.get(2, 1), r + 1}}, 2},
    };
    for (const auto& c : cases) {
      std::string missing;
      CechElement h = alg.e(3, c.ek);
      for (const auto& [coeff, i] : c.ks) h += kk(coeff, i, missing);
      const CechElement rhs = alg.X() * c.cx + alg.Y() * c.cy + D(h);
      ck.expect(c.name, missing.empty() && c.lhs == rhs, missing.empty() ? "" : "undefined" + missing);
    }
  }

  // Compositions of shapes with x and y on each chart.
  {
    const CechElement one1 = alg.shape(Shape::g, 1, 0), one2 = alg.shape(Shape::g, 0, 1);
    const CechElement h1 = alg.shape(Shape::h, 1, 0), h2 = alg.shape(Shape::h, 0, 1);
    const Poly3 b = a;
    auto G = [&](const Poly3& f1, const Poly3& f2) { return alg.shape(Shape::G, f1, f2); };
    auto H = [&](const Poly3& f1, const Poly3& f2) { return alg.shape(Shape::H, f1, f2); };
    const std::string name = "-g*x = G = x*g table (both charts, x and y)";
    ck.expect(name, -st(one1, x) == G(1, 0) && st(x, one1) == G(1, 0), "g1,x1");
    ck.expect(name, -st(one1, y) == G(a, 0) && st(y, one1) == G(a, 0), "g1,y1");
    ck.expect(name, -st(one2, x) == G(0, b) && st(x, one2) == G(0, b), "g2,x2");
    ck.expect(name, -st(one2, y) == G(0, 1) && st(y, one2) == G(0, 1), "g2,y2");
    ck.expect(name, -st(h1, x) == H(1, 0) && st(x, h1) == H(1, 0), "h1,x1");
    ck.expect(name, -st(h1, y) == H(a, 0) && st(y, h1) == H(a, 0), "h1,y1");
    ck.expect(name, -st(h2, x) == H(0, b) && st(x, h2) == H(0, b), "h2,x2");
    ck.expect(name, -st(h2, y) == H(0, 1) && st(y, h2) == H(0, 1), "h2,y2");
  }

  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      const CechElement Zij = alg.shape(Shape::Z, a.pow(i), a.pow(j));
      const std::string inst = "i=" + idx(i) + ", j=" + idx(j);
      ck.expect("x*(a^i Z1, b^j Z2, 0) = -(a^i s1, b^(j+1) s2, 0) = (..)*x",
                st(x, Zij) == -alg.shape(Shape::s, a.pow(i), a.pow(j + 1)) && st(Zij, x) == st(x, Zij), inst);
      ck.expect("y*(a^i Z1, b^j Z2, 0) = -(a^(i+1) s1, b^j s2, 0) = (..)*y",
                st(y, Zij) == -alg.shape(Shape::s, a.pow(i + 1), a.pow(j)) && st(Zij, y) == st(y, Zij), inst);
    }

  const CechElement X = alg.X(), Y = alg.Y(), xi = alg.xi();
  if (s >= 1) {
    ck.expect("x*X = -xi = X*x", st(x, X) == -xi && st(X, x) == -xi, "");
  } else {
    const CechElement h = D(alg.shape(Shape::H, 0, 1)), h1 = D(alg.shape(Shape::H, 1, 0));
    ck.expect("s=0: x*X = -xi + D(0, H2, 0) = X*x", st(x, X) == -xi + h && st(X, x) == -xi + h, "");
    ck.expect("s=0: y*X = -D(H1, 0, 0) = X*y", st(y, X) == -h1 && st(X, y) == -h1, "");
  }
  if (r >= 1) {
    ck.expect("y*Y = -xi = Y*y", st(y, Y) == -xi && st(Y, y) == -xi, "");
  } else {
    const CechElement g = D(alg.shape(Shape::G, 1, 0)), g2 = D(alg.shape(Shape::G, 0, 1));
    ck.expect("r=0: y*Y = -xi + D(G1, 0, 0) = Y*y", st(y, Y) == -xi + g && st(Y, y) == -xi + g, "");
    ck.expect("r=0: x*Y = -D(0, G2, 0) = Y*x", st(x, Y) == -g2 && st(Y, x) == -g2, "");
  }
  if (alg.K_defined(r - 1))
    ck.expect("x*Y = -D(K_(r-1)) = Y*x", st(x, Y) == -D(alg.K(r - 1)) && st(Y, x) == -D(alg.K(r - 1)), "");
  if (alg.K_defined(r + 1))
    ck.expect("y*X = -D(K_(r+1)) = X*y", st(y, X) == -D(alg.K(r + 1)) && st(X, y) == -D(alg.K(r + 1)), "");

  // Vanishing table.
  std::vector<Named> ks, Ks, es;
  for (int i = 0; i <= std::min(max_i, r + s); ++i) {
    if (alg.k_defined(i)) ks.push_back({"k_" + idx(i), alg.k(i)});
    if (alg.K_defined(i)) Ks.push_back({"K_" + idx(i), alg.K(i)});
  }
  if (alg.K_defined(r + s) && r + s > max_i) Ks.push_back({"K_" + idx(r + s), alg.K(r + s)});
  for (int i = 3; i <= max_i; ++i)
    for (int k = 0; k <= i - 1; ++k) es.push_back({"e_" + idx(i) + "," + idx(k), alg.e(i, k)});
  const std::vector<Named> XY = {{"X", X}, {"Y", Y}}, xy = {{"x", x}, {"y", y}};
  auto vanish = [&](const std::vector<Named>& L, const std::vector<Named>& R, const std::string& label) {
    for (const auto& p : L)
      for (const auto& q : R)
        ck.expect("vanishing: " + label, st(p.el, q.el).is_zero(), p.name + "*" + q.name);
  };
  vanish(ks, es, "k*e");
  vanish(es, ks, "e*k");
  vanish(ks, ks, "k*k");
  vanish(es, es, "e*e");
  vanish(ks, XY, "k*X, k*Y");
  vanish(XY, ks, "X*k, Y*k");
  vanish(es, XY, "e*X, e*Y");
  vanish(XY, es, "X*e, Y*e");
  vanish(Ks, ks, "K*k");
  vanish(ks, Ks, "k*K");
  vanish(Ks, es, "K*e");
  vanish(es, Ks, "e*K");
  vanish(Ks, xy, "K*x, K*y");
  vanish(xy, Ks, "x*K, y*K");

  // DG axioms on a library that also exercises overlap components.
  std::vector<Named> lib = {{"1", alg.unit()}, {"x", x}, {"y", y}, {"X", X}, {"Y", Y}, {"xi", xi}};
  lib.push_back({"(a 1, 0, 0)", [&] {
                   CechElement u(0);
                   for (int n = 0; n < 4; ++n) u.add_u1(n, PolyMatrix::identity(kRank[n]).scaled(a));
                   return u;
                 }()});
  lib.push_back({"(0, 0, a^-1 1)", [&] {
                   CechElement u(1);
                   for (int n = 0; n < 4; ++n)
                     u.add_o12(n, PolyMatrix::identity(kRank[n]).scaled(Poly3::monomial(-1, 0, 0)));
                   return u;
                 }()});
  for (Shape sh : {Shape::g, Shape::h, Shape::z, Shape::Z, Shape::G, Shape::H, Shape::s}) {
    lib.push_back({"(a v2 " + shape_name(sh) + "1, 0, 0)", alg.shape(sh, Poly3::monomial(1, 1, 0), 0)});
    lib.push_back({"(0, b " + shape_name(sh) + "2, 0)", alg.shape(sh, 0, a)});
    if (sh != Shape::s) lib.push_back({"(0, 0, a^-1 " + shape_name(sh) + "1)", alg.overlap_shape(sh, Poly3::monomial(-1, 0, 0))});
  }
  for (const auto& n : ks) lib.push_back(n);
  for (const auto& n : Ks) lib.push_back(n);
  for (const auto& n : es)
    if (!n.el.is_zero()) lib.push_back(n);

  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(lib.size()) - 1), coef(-3, 3);
  std::vector<Named> combos;
  for (int q = 0; q < 24; ++q) {
    const Named& first = lib[static_cast<std::size_t>(pick(rng))];
    CechElement acc = first.el * frac(coef(rng) == 0 ? 1 : coef(rng), 1 + (q % 3));
    std::string name = "combo(" + first.name;
    for (int tries = 0; tries < 6; ++tries) {
      const Named& nx = lib[static_cast<std::size_t>(pick(rng))];
      if (nx.el.degree() != first.el.degree()) continue;
      acc += nx.el * frac(coef(rng), 2);
      name += "," + nx.name;
    }
    combos.push_back({name + ")", acc});
  }

  for (const auto* L : {&lib, &combos})
    for (const auto& n : *L) ck.expect("D^2 = 0", D(D(n.el)).is_zero(), n.name);

  std::vector<CechElement> Dlib;
  for (const auto& n : lib) Dlib.push_back(D(n.el));
  for (std::size_t i = 0; i < lib.size(); ++i)
    for (std::size_t j = 0; j < lib.size(); ++j) {
      const auto& p = lib[i].el;
      const auto& q = lib[j].el;
      if (p.degree() + q.degree() > 4) continue;
      const CechElement lhs = D(st(p, q));
      const CechElement rhs = st(Dlib[i], q) + st(p, Dlib[j]) * Rational(p.degree() % 2 == 0 ? 1 : -1);
      ck.expect("graded Leibniz", lhs == rhs, lib[i].name + " , " + lib[j].name);
    }

  // Associativity on triples of total degree <= 3; e_ik enters with its extreme k only.
  std::vector<Named> assoc;
  for (const auto& n : lib) {
    if (n.name.rfind("e_", 0) == 0) {
      const auto comma = n.name.find(',');
      const int i = std::stoi(n.name.substr(2, comma - 2));
      const int k = std::stoi(n.name.substr(comma + 1));
      if (k != 0 && k != i - 1) continue;
    }
    assoc.push_back(n);
  }
  for (const auto& p : assoc)
    for (const auto& q : assoc) {
      if (p.el.degree() + q.el.degree() > 3) continue;
      const CechElement pq = st(p.el, q.el);
      for (const auto& w : assoc) {
        if (p.el.degree() + q.el.degree() + w.el.degree() > 3) continue;
        ck.expect("associativity", st(pq, w.el) == st(p.el, st(q.el, w.el)), p.name + "," + q.name + "," + w.name);
      }
    }

  // Degree-one independence: boundaries of degree-0 chains have no x, y coordinates.
  ck.expect("degree-1 decomposition of x, y", alg.decompose_degree1(x).coords == std::vector<Rational>{1, 0} &&
                                                  alg.decompose_degree1(y).coords == std::vector<Rational>{0, 1},
            "");
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 1; ++q)
      for (int part = 0; part < 3; ++part) {
        CechElement c(0);
        const Poly3 mono = Poly3::monomial(p, q, part == 2 ? 1 : 0);
        for (int n = 0; n < 4; ++n) {
          PolyMatrix m(kRank[n], kRank[n]);
          for (int d = 0; d < kRank[n]; ++d) m.at(d, d) = mono * Rational(d + 1);
          if (n == 1 || n == 2) m.at(0, kRank[n] - 1) = mono;
          if (part == 1) c.add_u2(n, m);
          else c.add_u1(n, m);
        }
        const CechElement Dc = D(c);
        bool ok = false;
        try {
          ok = alg.decompose_degree1(Dc).is_zero();
        } catch (const DecompositionError&) {
          ok = false;
        }
        ck.expect("D(C_0) has zero x, y coordinates", ok, "p=" + idx(p) + ", q=" + idx(q) + ", part=" + idx(part));
      }
  return ck.take();
}

}  // namespace crepant

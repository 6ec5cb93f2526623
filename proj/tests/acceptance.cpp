// One PASS/FAIL line per acceptance criterion, with wall time against its budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "corpus.hpp"
#include "crepant/cech.hpp"
#include "crepant/geometry.hpp"
#include "crepant/jacobi.hpp"
#include "crepant/kadeishvili.hpp"
#include "crepant/necklace.hpp"
#include "crepant/resolution.hpp"
#include "jacobi_oracle.hpp"

using namespace crepant;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int run_criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > budget_s) o.fail("over time budget");
  std::printf("%s  [%2d] %-38s %10.4f s (budget %g s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, budget_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  return o.ok ? 0 : 1;
}

FreePoly brute_mono(int j, int k) {
  FreePoly out;
  for (const auto& w : oracle::all_words(j + k))
    if (oracle::count(w, 'x') == j) out.add_term(w, 1);
  return out;
}

std::string brute_min_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

oracle::Lambdas to_oracle(const LambdaTable& l) {
  oracle::Lambdas out;
  for (const auto& [key, v] : l.entries()) out[key] = v;
  return out;
}

CohomologyClass XY(const Rational& p, const Rational& q) { return CohomologyClass{2, {p, q}}; }

}  // namespace

int main() {
  const auto tables = corpus::tables();
  int failures = 0;

  failures += run_criterion(1, "necklace golden value N(4,2)", 0.001, [] {
    Outcome o;
    FreePoly n = necklace_poly(4, 2);
    if (to_text(n) != "x^4*y^2 + x^3*y*x*y + 1/2*x^2*y*x^2*y") o.fail(to_text(n));
    if (abelianize(n) != CommPoly::monomial(4, 2, frac(5, 2))) o.fail(to_text(abelianize(n)));
    return o;
  });

  failures += run_criterion(2, "cyclic derivative of N equals Mono", 5.0, [] {
    Outcome o;
    int count = 0;
    for (int j = 0; j <= 10; ++j)
      for (int k = 0; j + k <= 10; ++k) {
        FreePoly mono = brute_mono(j, k);
        if (cyclic_derivative('x', necklace_poly(j + 1, k)) != mono) o.fail("x at " + std::to_string(j) + "," + std::to_string(k));
        if (cyclic_derivative('y', necklace_poly(j, k + 1)) != mono) o.fail("y at " + std::to_string(j) + "," + std::to_string(k));
        ++count;
      }
    o.detail = o.ok ? std::to_string(count) + " pairs" : o.detail;
    return o;
  });

  failures += run_criterion(3, "normal bundle classifier", 1.0, [] {
    Outcome o;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c) {
          LambdaTable l;
          if (a) l.set(2, 0, a);
          if (b) l.set(1, 1, b);
          if (c) l.set(0, 2, c);
          int delta = b * b - a * c;
          NormalBundle expect = (a == 0 && b == 0 && c == 0) ? NormalBundle::Minus3Plus1
                                : delta == 0                  ? NormalBundle::Minus2Zero
                                                              : NormalBundle::Minus1Minus1;
          if (classify_normal_bundle(l) != expect) o.fail(l.to_text());
        }
    o.detail = o.ok ? "125 patterns" : o.detail;
    return o;
  });

  failures += run_criterion(4, "overlap identities on the corpus", 10.0, [&] {
    Outcome o;
    long n = 0;
    for (const auto& l : tables) {
      int t = 100, r = 0, s = 0;
      for (const auto& [key, v] : l.entries()) {
        t = std::min(t, key.first + key.second);
        r = std::max(r, key.second);
        s = std::max(s, key.first);
      }
      GeometryInvariants inv = invariants(l);
      if (inv.t != t || inv.r != r || inv.s != s) o.fail("invariants of " + l.to_text());
      for (const auto& c : check_overlap_identities(l)) {
        ++n;
        if (!c.ok) o.fail(l.to_text() + " " + c.name);
      }
    }
    o.detail = o.ok ? std::to_string(tables.size()) + " tables, " + std::to_string(n) + " identities" : o.detail;
    return o;
  });

  failures += run_criterion(5, "resolution complex, gluing, mutations", 10.0, [&] {
    Outcome o;
    long muts = 0;
    for (const auto& l : tables) {
      Model m(l);
      ResolutionComplex res = build_resolution(m);
      for (const auto& c : check_resolution(m, res))
        if (!c.ok) o.fail(l.to_text() + " " + c.name);
      for (const auto& mu : run_mutation_corpus(m, res)) {
        ++muts;
        if (!mu.detected()) o.fail(l.to_text() + " undetected " + mu.description);
      }
    }
    o.detail = o.ok ? std::to_string(muts) + " mutations detected" : o.detail;
    return o;
  });

  failures += run_criterion(6, "DG axioms and named identities", 60.0, [&] {
    Outcome o;
    long inst = 0;
    for (const auto& l : tables) {
      CechAlgebra alg(l);
      for (const auto& r : verify_generators(alg, 10)) {
        inst += r.instances;
        if (!r.ok()) o.fail(l.to_text() + " " + r.name);
      }
    }
    o.detail = o.ok ? std::to_string(inst) + " instances" : o.detail;
    return o;
  });

  std::vector<AInfinityTable> models;
  failures += run_criterion(7, "transfer agrees with closed formulas", 120.0, [&] {
    Outcome o;
    long words = 0;
    for (const auto& l : tables) {
      CechAlgebra alg(l);
      models.push_back(minimal_model(alg, 8));
      const AInfinityTable& t = models.back();
      for (int n = 2; n <= 8; ++n)
        for (const auto& w : oracle::all_words(n)) {
          int j = oracle::count(w, 'x');
          ++words;
          if (t.value(w) != XY(l.get(j + 1, n - j), l.get(j, n - j + 1))) o.fail(l.to_text() + " m(" + w + ")");
        }
      const std::map<std::string, int> xi_pairs = {{"xX", -1}, {"Xx", 1}, {"yY", -1}, {"Yy", 1}};
      for (const auto& [in, cls] : t.products) {
        if (input_excess(in) == 0) continue;
        auto it = xi_pairs.find(in);
        bool ok = it == xi_pairs.end() ? cls.is_zero() : cls == CohomologyClass{3, {Rational(it->second)}};
        if (!ok) o.fail(l.to_text() + " m(" + in + ")");
      }
      if (t.closed_form_failed) o.fail(l.to_text() + " closed-form mismatch");
    }
    o.detail = o.ok ? std::to_string(words) + " degree-1 words" : o.detail;
    return o;
  });

  failures += run_criterion(8, "Stasheff identities to arity 8", 60.0, [&] {
    Outcome o;
    long ids = 0;
    for (const auto& t : models) {
      StasheffReport rep = check_stasheff(t, 8);
      ids += rep.identities;
      if (!rep.ok()) o.fail(t.lambdas.to_text() + " " + rep.first_failures.front());
    }
    if (models.size() != tables.size()) o.fail("minimal models missing");
    o.detail = o.ok ? std::to_string(ids) + " identities" : o.detail;
    return o;
  });

  failures += run_criterion(9, "Jacobi truncated dimensions", 60.0, [&] {
    Outcome o;
    if (nc_quotient_dims(LambdaTable{}, 4).cumulative_dim != 31) o.fail("zero table");
    LambdaTable flop{{{3, 0}, 3}};
    if (nc_quotient_dims(flop, 4).cumulative_dim != 19 || oracle::count_avoiding_xx(4) != 19) o.fail("l30=3");
    const std::size_t picks[] = {2, 4, 5, 11, 18};
    for (std::size_t i : picks) {
      const LambdaTable& l = tables[i];
      auto [dx, dy] = oracle::nc_relations(to_oracle(l));
      auto [px, py] = oracle::comm_relations(to_oracle(l));
      for (int d = 2; d <= 6; ++d) {
        if (nc_quotient_dims(l, d).per_degree_dims != oracle::nc_dims({dx, dy}, d))
          o.fail(l.to_text() + " nc d=" + std::to_string(d));
        if (comm_quotient_dims(l, d).per_degree_dims != oracle::comm_dims({px, py}, d))
          o.fail(l.to_text() + " comm d=" + std::to_string(d));
      }
    }
    return o;
  });

  failures += run_criterion(10, "trace expansion residue identity", 5.0, [] {
    Outcome o;
    for (int j = 0; j <= 10; ++j)
      for (int k = 0; j + k <= 10; ++k) {
        if (j + k == 0) continue;
        FreePoly brute;
        for (const auto& w : oracle::all_words(j + k))
          if (oracle::count(w, 'x') == j) brute.add_term(brute_min_rotation(w), 1);
        FreePoly te = trace_expansion(j, k);
        if (te != brute || te != cyclic_normal_form(necklace_poly(j, k) * Rational(j + k)))
          o.fail(std::to_string(j) + "," + std::to_string(k));
      }
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "crepant/resolution.hpp"

#include <stdexcept>

namespace crepant {

Model::Model(const LambdaTable& lambdas) : lambdas_(lambdas), inv_(invariants(lambdas)), glue_(lambdas) {}

const Poly3& Model::to_overlap(const Poly3& u2) const {
  auto it = overlap_cache_.find(u2.terms());
  if (it == overlap_cache_.end()) it = overlap_cache_.emplace(u2.terms(), glue_.to_overlap(u2)).first;
  return it->second;
}

PolyMatrix Model::transport(const PolyMatrix& m2, const TwistVector& source, const TwistVector& target) const {
  PolyMatrix out(m2.rows(), m2.cols());
  for (int i = 0; i < m2.rows(); ++i) {
    for (int j = 0; j < m2.cols(); ++j) {
      const Poly3& p = m2.at(i, j);
      if (p.is_zero()) continue;
      out.at(i, j) = to_overlap(p).shifted(target[static_cast<std::size_t>(i)] - source[static_cast<std::size_t>(j)], 0, 0);
    }
  }
  return out;
}

std::array<TwistVector, 4> twist_vectors(int r, int s) {
  return {TwistVector{0}, TwistVector{2 - s, -1, 2 - r}, TwistVector{1 - r - s, 1 - s, 1 - r}, TwistVector{-r - s}};
}

ResolutionComplex build_resolution(const Model& model) {
  const int r = model.r(), s = model.s(), t = model.t();
  const Poly3& A = model.inv().A;
  const Poly3& B = model.inv().B;
  const Poly3 v1 = Poly3::var(2), v2 = Poly3::var(1), a = Poly3::var(0);
  const Poly3& w1 = v1;
  const Poly3& w2 = v2;
  const Poly3& b = a;
  // b^{2-r} w1 on U1 and a^{2-s} v1 on U2, in their regular expansions.
  const Poly3 bw1 = Poly3::monomial(r + 1, 0, 1) + A.shifted(0, t - 1, 0);
  const Poly3 av1 = Poly3::monomial(s + 1, 0, 1) - B.shifted(0, t - 1, 0);

  ResolutionComplex res;
  res.E = twist_vectors(r, s);
  SheafMorphism d3{"d3", res.E[3], res.E[2],
                   PolyMatrix(3, 1, {v2, -a.pow(r + 1), Poly3(-1)}),
                   PolyMatrix(3, 1, {w2, Poly3(-1), -b.pow(s + 1)})};
  SheafMorphism d2{"d2", res.E[2], res.E[1],
                   PolyMatrix(3, 3, {a.pow(r + 1), v2, Poly3(), A.shifted(0, t - 2, 0), -v1, bw1, Poly3(-1), Poly3(), -v2}),
                   PolyMatrix(3, 3, {Poly3(1), w2, Poly3(), B.shifted(0, t - 2, 0), -av1, w1, -b.pow(s + 1), Poly3(), -w2})};
  SheafMorphism d1{"d1", res.E[1], res.E[0], PolyMatrix(1, 3, {v1, v2, bw1}), PolyMatrix(1, 3, {av1, w2, w1})};
  res.d[1] = std::move(d1);
  res.d[2] = std::move(d2);
  res.d[3] = std::move(d3);
  return res;
}

SheafMorphism identity_morphism(const TwistVector& twists) {
  int n = static_cast<int>(twists.size());
  return {"id", twists, twists, PolyMatrix::identity(n), PolyMatrix::identity(n)};
}

SheafMorphism compose(const SheafMorphism& f, const SheafMorphism& g) {
  if (g.target != f.source) throw std::invalid_argument("twist mismatch composing " + f.name + " after " + g.name);
  return {f.name + "*" + g.name, g.source, f.target, f.u1 * g.u1, f.u2 * g.u2};
}

GluingResult check_gluing(const SheafMorphism& f, const Model& model) {
  PolyMatrix moved = model.transport(f.u2, f.source, f.target);
  for (int i = 0; i < f.u1.rows(); ++i) {
    for (int j = 0; j < f.u1.cols(); ++j) {
      Poly3 diff = f.u1.at(i, j) - moved.at(i, j);
      if (!diff.is_zero()) return {false, i, j, diff};
    }
  }
  return {};
}

std::vector<ResolutionCheck> check_resolution(const Model& model, const ResolutionComplex& res) {
  std::vector<ResolutionCheck> out;
  for (int n = 2; n <= 3; ++n) {
    SheafMorphism dd = compose(res.d[static_cast<std::size_t>(n - 1)], res.d[static_cast<std::size_t>(n)]);
    out.push_back({"d" + std::to_string(n - 1) + "*d" + std::to_string(n) + " = 0 on U1", dd.u1.is_zero(), ""});
    out.push_back({"d" + std::to_string(n - 1) + "*d" + std::to_string(n) + " = 0 on U2", dd.u2.is_zero(), ""});
  }
  for (int n = 1; n <= 3; ++n) {
    GluingResult g = check_gluing(res.d[static_cast<std::size_t>(n)], model);
    std::string detail;
    if (!g.ok) {
      detail = "entry (" + std::to_string(g.row + 1) + "," + std::to_string(g.col + 1) + ") differs by " +
               g.witness.to_text(Chart::U12);
    }
    out.push_back({"d" + std::to_string(n) + " glues", g.ok, detail});
  }
  return out;
}

namespace {

bool complex_holds(const ResolutionComplex& res) {
  for (int n = 2; n <= 3; ++n) {
    SheafMorphism dd = compose(res.d[static_cast<std::size_t>(n - 1)], res.d[static_cast<std::size_t>(n)]);
    if (!dd.u1.is_zero() || !dd.u2.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<MutationOutcome> run_mutation_corpus(const Model& model, const ResolutionComplex& res) {
  std::vector<MutationOutcome> out;
  for (int n = 1; n <= 3; ++n) {
    for (int chart = 1; chart <= 2; ++chart) {
      const SheafMorphism& d = res.d[static_cast<std::size_t>(n)];
      for (int i = 0; i < d.u1.rows(); ++i) {
        for (int j = 0; j < d.u1.cols(); ++j) {
          ResolutionComplex mutated = res;
          SheafMorphism& m = mutated.d[static_cast<std::size_t>(n)];
          (chart == 1 ? m.u1 : m.u2).at(i, j) += Poly3(1);
          MutationOutcome o;
          o.description = "d" + std::to_string(n) + " on U" + std::to_string(chart) + " entry (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ") + 1";
          o.complex_broken = !complex_holds(mutated);
          o.gluing_broken = !check_gluing(m, model).ok;
          out.push_back(std::move(o));
        }
      }
    }
  }
  return out;
}

}  // namespace crepant

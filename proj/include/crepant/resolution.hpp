#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "crepant/geometry.hpp"
#include "crepant/matrix.hpp"

namespace crepant {

using TwistVector = std::vector<int>;

// The two-chart threefold for one table: invariants plus the glue.
class Model {
 public:
  explicit Model(const LambdaTable& lambdas);

  const LambdaTable& lambdas() const { return lambdas_; }
  const GeometryInvariants& inv() const { return inv_; }
  const Glue& glue() const { return glue_; }
  int t() const { return inv_.t; }
  int r() const { return inv_.r; }
  int s() const { return inv_.s; }

  // Glue image of a U2 polynomial, memoized.
  const Poly3& to_overlap(const Poly3& u2) const;
  // Restriction of a U2 matrix to U12 in U1-induced coordinates:
  // diag(a^target) * glue(M) * diag(a^-source).
  PolyMatrix transport(const PolyMatrix& m2, const TwistVector& source, const TwistVector& target) const;

 private:
  LambdaTable lambdas_;
  GeometryInvariants inv_;
  Glue glue_;
  mutable std::map<Poly3::Terms, Poly3> overlap_cache_;
};

struct SheafMorphism {
  std::string name;
  TwistVector source, target;
  PolyMatrix u1, u2;
};

struct GluingResult {
  bool ok = true;
  int row = -1, col = -1;
  Poly3 witness;  // difference on U12 at the first offending entry
};

struct ResolutionComplex {
  std::array<TwistVector, 4> E;
  std::array<SheafMorphism, 4> d;  // d[n] : E_n -> E_{n-1} for n = 1, 2, 3; d[0] unused
};

std::array<TwistVector, 4> twist_vectors(int r, int s);
ResolutionComplex build_resolution(const Model& model);

SheafMorphism identity_morphism(const TwistVector& twists);
// f after g; throws std::invalid_argument when g.target != f.source.
SheafMorphism compose(const SheafMorphism& f, const SheafMorphism& g);
GluingResult check_gluing(const SheafMorphism& f, const Model& model);

struct ResolutionCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<ResolutionCheck> check_resolution(const Model& model, const ResolutionComplex& res);

struct MutationOutcome {
  std::string description;
  bool complex_broken = false;
  bool gluing_broken = false;
  bool detected() const { return complex_broken || gluing_broken; }
};

// Adds 1 to every single entry of every differential on each chart in turn.
std::vector<MutationOutcome> run_mutation_corpus(const Model& model, const ResolutionComplex& res);

}  // namespace crepant

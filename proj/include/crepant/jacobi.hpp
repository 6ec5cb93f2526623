#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crepant/lambda_table.hpp"
#include "crepant/ncpoly.hpp"

namespace crepant {

struct Relations {
  FreePoly dx, dy;  // cyclic derivatives of the potential
};

// Throws SetupError for invalid tables and std::logic_error if the two independent
// constructions of the x-relation disagree.
Relations relations(const LambdaTable& lambdas);

struct TruncatedAlgebraReport {
  int truncation_degree = 0;
  std::vector<long> per_degree_dims;  // indexed by word length 0..d
  long cumulative_dim = 0;
  bool stabilized = false;  // per-degree dims reach 0 before d and stay 0
};

// Graded dimensions of the associated graded (lowest-term filtration) of the quotient of
// the algebra truncated above degree d by the ideal of the given relations.
TruncatedAlgebraReport nc_quotient_dims(const std::vector<FreePoly>& rels, int d);
TruncatedAlgebraReport nc_quotient_dims(const LambdaTable& lambdas, int d);
TruncatedAlgebraReport comm_quotient_dims(const std::vector<CommPoly>& rels, int d);
TruncatedAlgebraReport comm_quotient_dims(const LambdaTable& lambdas, int d);

enum class Verdict { EvidenceFinite, EvidenceInfinite, Inconclusive };
std::string to_string(Verdict v);

struct ProbeResult {
  Verdict verdict = Verdict::Inconclusive;
  TruncatedAlgebraReport report;
  long dimension = 0;  // meaningful for EvidenceFinite only
};

// Heuristic only: a verdict is never a proof of finiteness or infiniteness.
ProbeResult finiteness_probe(const LambdaTable& lambdas, int d_max);

}  // namespace crepant

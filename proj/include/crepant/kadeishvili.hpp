#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crepant/cech.hpp"

namespace crepant {

// Inputs are strings over the basis letters: '1' (unit), 'x', 'y', 'X', 'Y', 's' (xi).
// Enumeration order is x < y < X < Y < s.
inline constexpr const char* kBasisOrder = "xyXYs";

int input_degree(const std::string& inputs);   // sum of basis degrees
int input_excess(const std::string& inputs);   // sum of (degree - 1)
std::string display_inputs(const std::string& inputs);  // 's' rendered as the Greek letter

class TransferError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed formulas for degree-1 inputs with j letters x and k letters y.
CohomologyClass closed_form_m(const LambdaTable& lambdas, const std::string& inputs);
// Throws IndexError naming an out-of-range homotopy index whose coefficient is nonzero.
CechElement closed_form_f(const CechAlgebra& alg, const std::string& inputs);
// Closed arity-2 values on one degree-1 and one degree-2 input.
CohomologyClass mixed_m2(char a, char b);
std::optional<CechElement> mixed_f2(const CechAlgebra& alg, char a, char b);

struct TransferStep {
  CohomologyClass m;
  CechElement f;
  CechElement U;
  enum class Choice { ClosedFormula, Decomposition, ZeroConvention } choice = Choice::ZeroConvention;
  bool matches_closed_form = true;  // m (and f where one is known) agree with the closed formulas
};

// Lazily memoized recursion for m_n and f_n on basis tuples.
class Transfer {
 public:
  explicit Transfer(const CechAlgebra& alg) : alg_(alg) {}

  const CechAlgebra& algebra() const { return alg_; }
  CechElement compute_U(const std::string& inputs);
  const TransferStep& step(const std::string& inputs);
  CechElement f(const std::string& inputs);
  CohomologyClass m(const std::string& inputs);

  const std::map<std::string, TransferStep>& steps() const { return steps_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  const CechAlgebra& alg_;
  std::map<std::string, TransferStep> steps_;
  std::vector<std::string> notes_;
};

struct AInfinityTable {
  LambdaTable lambdas;
  int max_arity = 0;
  // Every tuple over x,y,X,Y,s of arity 2..max_arity with excess <= 2; higher excess vanishes by degree.
  std::map<std::string, CohomologyClass> products;
  std::map<std::string, TransferStep::Choice> provenance;
  std::vector<std::string> notes;
  int closed_form_checked = 0, closed_form_failed = 0, non_simple_f = 0;

  // m_n on any tuple over 1,x,y,X,Y,s, applying strict unitality and the grading.
  CohomologyClass value(const std::string& inputs) const;
  std::vector<std::pair<std::string, CohomologyClass>> nonzero() const;
};

AInfinityTable minimal_model(const LambdaTable& lambdas, int max_arity);
AInfinityTable minimal_model(const CechAlgebra& alg, int max_arity);

struct StasheffReport {
  long identities = 0;
  long failures = 0;
  std::vector<std::string> first_failures;  // up to a handful, for diagnostics
  bool ok() const { return failures == 0; }
};

// Sum over k, j of (-1)^(k + |a_1| + ... + |a_k|) m(a_1..a_k, m_j(a_k+1..a_k+j), ...) = 0,
// with m_1 = 0, on every tuple over 1,x,y,X,Y,s of arity 3..max_arity.
StasheffReport check_stasheff(const AInfinityTable& table, int max_arity);

std::string class_to_text(const CohomologyClass& c);

}  // namespace crepant

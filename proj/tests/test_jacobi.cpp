#include "crepant/geometry.hpp"
#include "crepant/jacobi.hpp"
#include "crepant/necklace.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "jacobi_oracle.hpp"

using namespace crepant;

namespace {

oracle::Lambdas to_oracle(const LambdaTable& l) {
  oracle::Lambdas out;
  for (const auto& [key, v] : l.entries()) out[key] = v;
  return out;
}

FreePoly from_oracle(const oracle::NcPoly& p) {
  FreePoly out;
  for (const auto& [w, c] : p) out.add_term(w, c);
  return out;
}

}  // namespace

TEST_CASE("relations examples") {
  Relations r = relations(LambdaTable{{{3, 0}, 3}});
  CHECK(r.dx == FreePoly::monomial("xx", 3));
  CHECK(r.dy.is_zero());
  CHECK_THROWS_AS(relations(LambdaTable{{{1, 1}, 1}}), SetupError);
}

TEST_CASE("relations agree with brute-force word sums") {
  for (int trial = 0; trial < 20; ++trial) {
    LambdaTable l = gen::lambda_table(8, 4);
    auto [dx, dy] = oracle::nc_relations(to_oracle(l));
    Relations r = relations(l);
    INFO(l.to_text());
    CHECK(r.dx == from_oracle(dx));
    CHECK(r.dy == from_oracle(dy));
  }
}

TEST_CASE("golden truncated dimensions") {
  TruncatedAlgebraReport z = nc_quotient_dims(LambdaTable{}, 4);
  CHECK(z.cumulative_dim == 31);
  CHECK(z.per_degree_dims == std::vector<long>{1, 2, 4, 8, 16});
  TruncatedAlgebraReport f = nc_quotient_dims(LambdaTable{{{3, 0}, 3}}, 4);
  CHECK(f.cumulative_dim == 19);
  CHECK(f.cumulative_dim == oracle::count_avoiding_xx(4));
  CHECK(comm_quotient_dims(LambdaTable{{{3, 0}, 3}}, 4).per_degree_dims == std::vector<long>{1, 2, 2, 2, 2});
}

TEST_CASE("zero table gives the full truncated free algebra") {
  for (int d = 0; d <= 7; ++d) CHECK(nc_quotient_dims(LambdaTable{}, d).cumulative_dim == (2L << d) - 1);
}

TEST_CASE("x^3 potential avoids the factor xx at every truncation") {
  for (int d = 1; d <= 8; ++d) CHECK(nc_quotient_dims(LambdaTable{{{3, 0}, 1}}, d).cumulative_dim == oracle::count_avoiding_xx(d));
}

TEST_CASE("engine matches the dense oracle on random tables") {
  for (int trial = 0; trial < 8; ++trial) {
    LambdaTable l = gen::lambda_table(6, 3);
    int d = gen::uniform(3, 6);
    auto [dx, dy] = oracle::nc_relations(to_oracle(l));
    auto [px, py] = oracle::comm_relations(to_oracle(l));
    INFO(l.to_text(), " d=", d);
    CHECK(nc_quotient_dims(l, d).per_degree_dims == oracle::nc_dims({dx, dy}, d));
    CHECK(comm_quotient_dims(l, d).per_degree_dims == oracle::comm_dims({px, py}, d));
  }
}

TEST_CASE("report bookkeeping") {
  TruncatedAlgebraReport r = nc_quotient_dims(LambdaTable{{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}}, 10);
  long sum = 0;
  for (long v : r.per_degree_dims) sum += v;
  CHECK(sum == r.cumulative_dim);
  CHECK(r.cumulative_dim == 8);
  CHECK(r.stabilized);
  CHECK(r.truncation_degree == 10);
}

TEST_CASE("finiteness probe verdicts") {
  ProbeResult fin = finiteness_probe(LambdaTable{{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}}, 10);
  CHECK(fin.verdict == Verdict::EvidenceFinite);
  CHECK(fin.dimension == 8);
  ProbeResult inf = finiteness_probe(LambdaTable{{{3, 0}, 3}}, 8);
  CHECK(inf.verdict == Verdict::EvidenceInfinite);
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}

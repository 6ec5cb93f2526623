#pragma once

#include <vector>

#include "crepant/lambda_table.hpp"
#include "crepant/ncpoly.hpp"

namespace crepant {

struct NecklaceOrbit {
  Word representative;  // lexicographically minimal rotation, x = shaded
  int size = 0;
};

struct OrbitDecomposition {
  int j = 0, k = 0;
  std::vector<NecklaceOrbit> orbits;  // sorted by representative
};

OrbitDecomposition enumerate_orbits(int j, int k);
FreePoly necklace_poly(int j, int k);
FreePoly mono_sum(int j, int k);
FreePoly potential(const LambdaTable& lambdas);
CommPoly commutative_potential(const LambdaTable& lambdas);
FreePoly trace_expansion(int j, int k);

// All words with j x's and k y's, in word order.
std::vector<Word> words_with_counts(int j, int k);

Rational binomial(int n, int k);

}  // namespace crepant

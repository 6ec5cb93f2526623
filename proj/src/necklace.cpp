#include "crepant/necklace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "crepant/geometry.hpp"

namespace crepant {

namespace {

void require_positive_length(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("necklace counts must be nonnegative");
  if (j + k == 0) throw std::invalid_argument("necklaces need j + k >= 1");
}

void require_setup(const LambdaTable& lambdas) {
  ValidationReport rep = validate(lambdas, true);
  for (const auto& v : rep.violations) {
    if (v.kind != Violation::Kind::Degenerate) throw SetupError(rep.summary());
  }
}

}  // namespace

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

std::vector<Word> words_with_counts(int j, int k) {
  std::vector<Word> out;
  Word w = std::string(static_cast<std::size_t>(j), 'x') + std::string(static_cast<std::size_t>(k), 'y');
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

OrbitDecomposition enumerate_orbits(int j, int k) {
  require_positive_length(j, k);
  std::map<Word, int> sizes;
  for (const Word& w : words_with_counts(j, k)) ++sizes[minimal_rotation(w)];
  OrbitDecomposition dec{j, k, {}};
  for (const auto& [rep, n] : sizes) dec.orbits.push_back({rep, n});
  return dec;
}

FreePoly necklace_poly(int j, int k) {
  OrbitDecomposition dec = enumerate_orbits(j, k);
  FreePoly out;
  for (const auto& orbit : dec.orbits) out.add_term(orbit.representative, frac(orbit.size, j + k));
  return out;
}

FreePoly mono_sum(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("monomial counts must be nonnegative");
  FreePoly out;
  for (const Word& w : words_with_counts(j, k)) out.add_term(w, 1);
  return out;
}

FreePoly potential(const LambdaTable& lambdas) {
  require_setup(lambdas);
  FreePoly out;
  for (const auto& [key, v] : lambdas.entries()) out += necklace_poly(key.first, key.second) * v;
  return out;
}

CommPoly commutative_potential(const LambdaTable& lambdas) {
  require_setup(lambdas);
  CommPoly out;
  for (const auto& [key, v] : lambdas.entries()) {
    auto [j, k] = key;
    out.add_term(j, k, v / (j + k) * binomial(j + k, k));
  }
  return out;
}

FreePoly trace_expansion(int j, int k) {
  require_positive_length(j, k);
  return cyclic_normal_form(mono_sum(j, k));
}

}  // namespace crepant

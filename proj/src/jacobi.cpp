#include "crepant/jacobi.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>

#include "crepant/necklace.hpp"

namespace crepant {

Relations relations(const LambdaTable& lambdas) {
  const FreePoly W = potential(lambdas);
  Relations out{cyclic_derivative('x', W), cyclic_derivative('y', W)};
  FreePoly mx, my;
  for (const auto& [jk, lam] : lambdas.entries()) {
    const auto [j, k] = jk;
    if (j >= 1) mx += mono_sum(j - 1, k) * lam;
    if (k >= 1) my += mono_sum(j, k - 1) * lam;
  }
  if (!(mx == out.dx) || !(my == out.dy))
    throw std::logic_error("cyclic derivative disagrees with the Mono expansion");
  return out;
}

namespace {

// Index of a word in length-then-lex order: x = 0, y = 1.
long word_index(const Word& w) {
  long bits = 0;
  for (char c : w) bits = bits * 2 + (c == 'y' ? 1 : 0);
  return ((1L << w.size()) - 1) + bits;
}

using SparseInt = std::map<long, mpz_class>;  // column -> integer coefficient

// Scale rational coefficients to coprime integers.
SparseInt to_integer_row(const std::map<long, Rational>& row) {
  mpz_class l = 1;
  for (const auto& [c, q] : row) l = lcm(l, q.get_den());
  SparseInt out;
  mpz_class g = 0;
  for (const auto& [c, q] : row) {
    mpz_class v = q.get_num() * (l / q.get_den());
    g = gcd(g, v);
    out.emplace(c, std::move(v));
  }
  if (g > 1)
    for (auto& [c, v] : out) v /= g;
  return out;
}

// Fraction-free sparse echelon form; the pivot of each row is its smallest column.
class Echelon {
 public:
  void insert(SparseInt row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = rows_.find(lead->first);
      if (it == rows_.end()) {
        normalize(row);
        rows_.emplace(lead->first, std::move(row));
        return;
      }
      const mpz_class p = it->second.begin()->second;  // pivot of stored row
      const mpz_class c = lead->second;
      const mpz_class g = gcd(p, c);
      const mpz_class sp = p / g, sc = c / g;
      // row := sp*row - sc*stored, killing the lead.
      for (auto& [col, v] : row) v *= sp;
      for (const auto& [col, v] : it->second) {
        auto [pos, inserted] = row.try_emplace(col, 0);
        pos->second -= sc * v;
        if (pos->second == 0) row.erase(pos);
      }
      normalize(row);
    }
  }
  const std::map<long, SparseInt>& rows() const { return rows_; }

 private:
  static void normalize(SparseInt& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (g > 1)
      for (auto& [c, v] : row) v /= g;
  }
  std::map<long, SparseInt> rows_;
};

TruncatedAlgebraReport finish(int d, std::vector<long> dims) {
  TruncatedAlgebraReport rep;
  rep.truncation_degree = d;
  rep.per_degree_dims = std::move(dims);
  for (long v : rep.per_degree_dims) rep.cumulative_dim += v;
  for (int l = 0; l < d; ++l) {
    bool zero_tail = true;
    for (int m = l; m <= d; ++m) zero_tail = zero_tail && rep.per_degree_dims[static_cast<std::size_t>(m)] == 0;
    if (zero_tail) {
      rep.stabilized = true;
      break;
    }
  }
  return rep;
}

std::vector<Word> words_of_length(int n) {
  std::vector<Word> out;
  for (long bits = 0; bits < (1L << n); ++bits) {
    Word w(static_cast<std::size_t>(n), 'x');
    for (int i = 0; i < n; ++i)
      if ((bits >> (n - 1 - i)) & 1) w[static_cast<std::size_t>(i)] = 'y';
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

TruncatedAlgebraReport nc_quotient_dims(const std::vector<FreePoly>& rels, int d) {
  if (d < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  std::vector<std::vector<Word>> words(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) words[static_cast<std::size_t>(n)] = words_of_length(n);
  Echelon ech;
  for (const auto& rel : rels) {
    if (rel.is_zero()) continue;
    const int low = rel.low_degree();
    for (int lu = 0; lu + low <= d; ++lu)
      for (int lv = 0; lu + low + lv <= d; ++lv)
        for (const auto& u : words[static_cast<std::size_t>(lu)])
          for (const auto& v : words[static_cast<std::size_t>(lv)]) {
            std::map<long, Rational> row;
            for (const auto& [w, c] : rel.terms()) {
              if (lu + lv + static_cast<int>(w.size()) > d) continue;
              row[word_index(u + w + v)] += c;
            }
            if (!row.empty()) ech.insert(to_integer_row(row));
          }
  }
  std::vector<long> dims(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) dims[static_cast<std::size_t>(n)] = 1L << n;
  for (const auto& [pivot, row] : ech.rows()) {
    int len = 0;
    while (((1L << (len + 1)) - 1) <= pivot) ++len;
    --dims[static_cast<std::size_t>(len)];
  }
  return finish(d, std::move(dims));
}

TruncatedAlgebraReport nc_quotient_dims(const LambdaTable& lambdas, int d) {
  const Relations r = relations(lambdas);
  return nc_quotient_dims(std::vector<FreePoly>{r.dx, r.dy}, d);
}

TruncatedAlgebraReport comm_quotient_dims(const std::vector<CommPoly>& rels, int d) {
  if (d < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  // Monomial x^i y^j of degree n = i + j sits at n(n+1)/2 + j.
  auto index = [](int i, int j) { return static_cast<long>((i + j) * (i + j + 1) / 2 + j); };
  Echelon ech;
  for (const auto& rel : rels) {
    if (rel.is_zero()) continue;
    const int low = rel.low_degree();
    for (int n = 0; n + low <= d; ++n)
      for (int i = n; i >= 0; --i) {
        std::map<long, Rational> row;
        for (const auto& [e, c] : rel.terms()) {
          if (e.first + e.second + n > d) continue;
          row[index(e.first + i, e.second + n - i)] += c;
        }
        if (!row.empty()) ech.insert(to_integer_row(row));
      }
  }
  std::vector<long> dims(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) dims[static_cast<std::size_t>(n)] = n + 1;
  for (const auto& [pivot, row] : ech.rows()) {
    int n = 0;
    while ((n + 1) * (n + 2) / 2 <= pivot) ++n;
    --dims[static_cast<std::size_t>(n)];
  }
  return finish(d, std::move(dims));
}

TruncatedAlgebraReport comm_quotient_dims(const LambdaTable& lambdas, int d) {
  const CommPoly V = commutative_potential(lambdas);
  return comm_quotient_dims(std::vector<CommPoly>{V.partial_x(), V.partial_y()}, d);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::EvidenceFinite: return "evidence-finite";
    case Verdict::EvidenceInfinite: return "evidence-infinite";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ProbeResult finiteness_probe(const LambdaTable& lambdas, int d_max) {
  if (d_max < 2) throw std::invalid_argument("probe needs d_max >= 2");
  ProbeResult out;
  out.report = nc_quotient_dims(lambdas, d_max);
  const auto& dims = out.report.per_degree_dims;
  if (out.report.stabilized) {
    out.verdict = Verdict::EvidenceFinite;
    out.dimension = out.report.cumulative_dim;
    return out;
  }
  const int window = (d_max + 1) / 2;
  bool growing = true;
  for (int l = d_max - window + 1; l <= d_max; ++l) {
    const long cur = dims[static_cast<std::size_t>(l)];
    if (cur <= 0 || cur < dims[static_cast<std::size_t>(l - 1)]) growing = false;
  }
  out.verdict = growing ? Verdict::EvidenceInfinite : Verdict::Inconclusive;
  return out;
}

}  // namespace crepant

#include "crepant/kadeishvili.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace crepant {

namespace {

int letter_degree(char c) { return CechAlgebra::basis_degree(c); }

int parity_sign(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// Basis letters of a class with their coefficients.
std::vector<std::pair<char, Rational>> class_terms(const CohomologyClass& c) {
  static const std::array<const char*, 4> kLetters = {"1", "xy", "XY", "s"};
  std::vector<std::pair<char, Rational>> out;
  if (c.degree < 0 || c.degree > 3) return out;
  for (std::size_t i = 0; i < c.coords.size(); ++i)
    if (c.coords[i] != 0) out.emplace_back(kLetters[static_cast<std::size_t>(c.degree)][i], c.coords[i]);
  return out;
}

CohomologyClass zero_class(int degree) {
  if (degree >= 0 && degree <= 3) return CohomologyClass::zero(degree);
  return CohomologyClass{degree, {}};
}

CohomologyClass letter_class(char c, const Rational& coeff) {
  CohomologyClass out = CohomologyClass::zero(letter_degree(c));
  switch (c) {
    case 'y':
    case 'Y': out.coords[1] = coeff; break;
    default: out.coords[0] = coeff; break;
  }
  return out;
}

CechElement embed(const CechAlgebra& alg, const CohomologyClass& c) {
  CechElement out(c.degree);
  for (const auto& [letter, coeff] : class_terms(c)) out += alg.basis_element(letter) * coeff;
  return out;
}

}  // namespace

int input_degree(const std::string& inputs) {
  int d = 0;
  for (char c : inputs) d += letter_degree(c);
  return d;
}

int input_excess(const std::string& inputs) { return input_degree(inputs) - static_cast<int>(inputs.size()); }

std::string display_inputs(const std::string& inputs) {
  std::string out;
  for (char c : inputs) {
    if (c == 's') out += "ξ";
    else out += c;
  }
  return out;
}

std::string class_to_text(const CohomologyClass& c) {
  auto terms = class_terms(c);
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [letter, coeff] : terms) {
    if (!out.empty()) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += "-";
    Rational mag = abs(coeff);
    if (mag != 1) out += to_string(mag) + "*";
    out += letter == 's' ? std::string("ξ") : std::string(1, letter);
  }
  return out;
}

// ---------------------------------------------------------------- closed formulas

CohomologyClass closed_form_m(const LambdaTable& lambdas, const std::string& inputs) {
  const int j = static_cast<int>(std::count(inputs.begin(), inputs.end(), 'x'));
  const int k = static_cast<int>(std::count(inputs.begin(), inputs.end(), 'y'));
  if (j + k != static_cast<int>(inputs.size())) throw std::invalid_argument("closed form needs degree-1 inputs");
  CohomologyClass out = CohomologyClass::zero(2);
  out.coords[0] = lambdas.get(j + 1, k);
  out.coords[1] = lambdas.get(j, k + 1);
  return out;
}

CechElement closed_form_f(const CechAlgebra& alg, const std::string& inputs) {
  const int j = static_cast<int>(std::count(inputs.begin(), inputs.end(), 'x'));
  const int k = static_cast<int>(std::count(inputs.begin(), inputs.end(), 'y'));
  const int n = j + k;
  if (n != static_cast<int>(inputs.size()) || n < 2) throw std::invalid_argument("closed form needs degree-1 inputs");
  const auto& lambdas = alg.model().lambdas();
  CechElement acc(1);
  auto add_k = [&](int i) {
    const Rational lam = lambdas.get(i, n + 1 - i);
    if (lam == 0) return;
    const int idx = alg.r() + i - (j + 1);
    if (!alg.k_defined(idx))
      throw IndexError("out-of-range homotopy index k_" + std::to_string(idx) + " in f_" + std::to_string(n) + "(" +
                       inputs + ")");
    acc += alg.k(idx) * lam;
  };
  for (int i = 0; i <= j - 1; ++i) add_k(i);
  for (int i = j + 2; i <= n + 1; ++i) add_k(i);
  acc += alg.e(n + 1, k);
  return -acc;
}

CohomologyClass mixed_m2(char a, char b) {
  CohomologyClass out = CohomologyClass::zero(3);
  const std::string p{a, b};
  if (p == "xX" || p == "yY") out.coords[0] = -1;
  if (p == "Xx" || p == "Yy") out.coords[0] = 1;
  return out;
}

std::optional<CechElement> mixed_f2(const CechAlgebra& alg, char a, char b) {
  const std::string p{a, b};
  auto K = [&](int i, int sign) -> std::optional<CechElement> {
    if (!alg.K_defined(i)) return std::nullopt;
    return alg.K(i) * Rational(sign);
  };
  if (p == "xY") return K(alg.r() - 1, 1);
  if (p == "Yx") return K(alg.r() - 1, -1);
  if (p == "yX") return K(alg.r() + 1, 1);
  if (p == "Xy") return K(alg.r() + 1, -1);
  return CechElement(2);
}

// ---------------------------------------------------------------- recursion

CechElement Transfer::f(const std::string& inputs) {
  if (inputs.size() == 1) return alg_.basis_element(inputs[0]);
  return step(inputs).f;
}

CohomologyClass Transfer::m(const std::string& inputs) { return step(inputs).m; }

CechElement Transfer::compute_U(const std::string& inputs) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("U_n needs n >= 2");
  CechElement out(input_degree(inputs) + 2 - n);
  for (int l = 1; l <= n - 1; ++l) {
    const std::string left = inputs.substr(0, static_cast<std::size_t>(l));
    const CechElement fl = f(left);
    if (fl.is_zero()) continue;
    const CechElement fr = f(inputs.substr(static_cast<std::size_t>(l)));
    if (fr.is_zero()) continue;
    const int deg_fl = input_degree(left) + 1 - l;
    out += alg_.star(fl, fr) * Rational(parity_sign(deg_fl + 1));
  }
  for (int k = 0; k <= n - 2; ++k) {
    const std::string prefix = inputs.substr(0, static_cast<std::size_t>(k));
    const int hat = parity_sign(k + input_degree(prefix));
    for (int j = 2; j <= std::min(n - k, n - 1); ++j) {
      const CohomologyClass inner = m(inputs.substr(static_cast<std::size_t>(k), static_cast<std::size_t>(j)));
      const std::string suffix = inputs.substr(static_cast<std::size_t>(k + j));
      for (const auto& [letter, coeff] : class_terms(inner)) {
        const CechElement term = f(prefix + letter + suffix);
        if (!term.is_zero()) out -= term * (coeff * hat);
      }
    }
  }
  return out;
}

const TransferStep& Transfer::step(const std::string& inputs) {
  if (auto it = steps_.find(inputs); it != steps_.end()) return it->second;
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("transfer steps start at arity 2");
  if (inputs.find('1') != std::string::npos) throw std::invalid_argument("unit inputs are handled by strict unitality");
  const int excess = input_excess(inputs);
  const int out_degree = excess + 2;

  TransferStep st;
  st.U = compute_U(inputs);
  st.m = zero_class(out_degree);
  st.f = CechElement(out_degree - 1);

  const bool degree_one = excess == 0 && inputs.find_first_not_of("xy") == std::string::npos;
  if (excess >= 2 || st.U.is_zero()) {
    if (!st.U.is_zero())
      throw TransferError("U_" + std::to_string(n) + "(" + display_inputs(inputs) +
                          ") is nonzero in a degree without cohomology");
    st.choice = TransferStep::Choice::ZeroConvention;
  } else {
    const Decomposition dec = out_degree == 2 ? alg_.decompose_degree2(st.U) : alg_.decompose_degree3(st.U);
    st.m = dec.cls;
    const CechElement target = embed(alg_, st.m) - st.U;
    std::optional<CechElement> closed;
    try {
      if (degree_one) closed = closed_form_f(alg_, inputs);
      else if (n == 2 && excess == 1) closed = mixed_f2(alg_, inputs[0], inputs[1]);
    } catch (const IndexError& e) {
      notes_.emplace_back(e.what());
    }
    if (closed && alg_.differential(*closed) == target) {
      st.f = *closed;
      st.choice = TransferStep::Choice::ClosedFormula;
    } else {
      if (closed)
        notes_.push_back("closed-form f_" + std::to_string(n) + "(" + display_inputs(inputs) +
                         ") fails the chain equation; using the decomposition homotopy");
      st.f = -dec.boundary.element;
      st.choice = TransferStep::Choice::Decomposition;
      if (!(alg_.differential(st.f) == target))
        throw TransferError("chain equation fails at " + display_inputs(inputs));
    }
  }

  if (degree_one) {
    st.matches_closed_form = st.m == closed_form_m(alg_.model().lambdas(), inputs);
  } else if (n == 2 && excess == 1) {
    st.matches_closed_form = st.m == mixed_m2(inputs[0], inputs[1]);
  } else {
    st.matches_closed_form = st.m.is_zero();
  }
  return steps_.emplace(inputs, std::move(st)).first->second;
}

// ---------------------------------------------------------------- tables

CohomologyClass AInfinityTable::value(const std::string& inputs) const {
  const int n = static_cast<int>(inputs.size());
  const int degree = input_degree(inputs) + 2 - n;
  if (inputs.find('1') != std::string::npos) {
    if (n != 2) return zero_class(degree);
    // m_2(a, b) = -(-1)^{|a|} a b with 1 the identity.
    const int sign = -parity_sign(letter_degree(inputs[0]));
    const char other = inputs[0] == '1' ? inputs[1] : inputs[0];
    return letter_class(other, Rational(sign));
  }
  if (degree < 0 || degree > 3) return zero_class(degree);
  auto it = products.find(inputs);
  if (it == products.end())
    throw std::out_of_range("m_" + std::to_string(n) + "(" + display_inputs(inputs) + ") not in table");
  return it->second;
}

std::vector<std::pair<std::string, CohomologyClass>> AInfinityTable::nonzero() const {
  std::vector<std::pair<std::string, CohomologyClass>> out;
  for (const auto& [k, v] : products)
    if (!v.is_zero()) out.emplace_back(k, v);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    auto rank = [](const std::string& s) {
      std::string r;
      for (char c : s) r += static_cast<char>('0' + std::string(kBasisOrder).find(c));
      return r;
    };
    return rank(a.first) < rank(b.first);
  });
  return out;
}

AInfinityTable minimal_model(const LambdaTable& lambdas, int max_arity) {
  CechAlgebra alg(lambdas);
  return minimal_model(alg, max_arity);
}

AInfinityTable minimal_model(const CechAlgebra& alg, int max_arity) {
  AInfinityTable table;
  table.lambdas = alg.model().lambdas();
  table.max_arity = max_arity;
  Transfer transfer(alg);
  const std::string letters = kBasisOrder;
  for (int n = 2; n <= max_arity; ++n) {
    std::string cur;
    std::function<void(int)> rec = [&](int excess) {
      if (static_cast<int>(cur.size()) == n) {
        const TransferStep& st = transfer.step(cur);
        table.products.emplace(cur, st.m);
        table.provenance.emplace(cur, st.choice);
        if (!st.m.is_zero() || cur.find_first_not_of("xy") == std::string::npos || n == 2) {
          ++table.closed_form_checked;
          if (!st.matches_closed_form) {
            ++table.closed_form_failed;
            table.notes.push_back("closed form disagrees at " + display_inputs(cur));
          }
        }
        if (!st.f.is_simple()) ++table.non_simple_f;
        return;
      }
      for (char c : letters) {
        const int e = excess + letter_degree(c) - 1;
        if (e > 2) continue;
        cur.push_back(c);
        rec(e);
        cur.pop_back();
      }
    };
    rec(0);
  }
  for (const auto& note : transfer.notes()) table.notes.push_back(note);
  return table;
}

// ---------------------------------------------------------------- Stasheff identities

StasheffReport check_stasheff(const AInfinityTable& table, int max_arity) {
  static const std::string kAlphabet = "1xyXYs";
  static constexpr std::array<int, 6> kDeg = {0, 1, 1, 2, 2, 3};
  constexpr int B = 6;
  StasheffReport report;
  if (max_arity < 3) return report;

  // Distinct class values, addressed by small ids; id 0 is zero.
  using Sparse = std::vector<std::pair<int, Rational>>;
  std::vector<Sparse> classes(1);
  std::map<std::vector<std::pair<int, std::string>>, int> intern;
  auto intern_class = [&](const CohomologyClass& c) -> int {
    Sparse sp;
    std::vector<std::pair<int, std::string>> key;
    for (const auto& [letter, coeff] : class_terms(c)) {
      const int idx = static_cast<int>(kAlphabet.find(letter));
      sp.emplace_back(idx, coeff);
      key.emplace_back(idx, coeff.get_str());
    }
    if (sp.empty()) return 0;
    auto [it, inserted] = intern.try_emplace(key, static_cast<int>(classes.size()));
    if (inserted) classes.push_back(std::move(sp));
    return it->second;
  };

  std::vector<long> pw(static_cast<std::size_t>(max_arity) + 1, 1);
  for (int i = 1; i <= max_arity; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * B;
  // ids[n][code] for arities 2..max_arity-1; code digits are most-significant first.
  std::vector<std::vector<int>> ids(static_cast<std::size_t>(max_arity));
  for (int n = 2; n < max_arity; ++n) {
    auto& tab = ids[static_cast<std::size_t>(n)];
    tab.assign(static_cast<std::size_t>(pw[static_cast<std::size_t>(n)]), 0);
    std::string s(static_cast<std::size_t>(n), '1');
    for (long code = 0; code < pw[static_cast<std::size_t>(n)]; ++code) {
      long c = code;
      int deg = 0;
      for (int p = n - 1; p >= 0; --p) {
        s[static_cast<std::size_t>(p)] = kAlphabet[static_cast<std::size_t>(c % B)];
        deg += kDeg[static_cast<std::size_t>(c % B)];
        c /= B;
      }
      const int out = deg + 2 - n;
      if (out < 0 || out > 3) continue;
      tab[static_cast<std::size_t>(code)] = intern_class(table.value(s));
    }
  }

  std::vector<int> digits(static_cast<std::size_t>(max_arity));
  for (int N = 3; N <= max_arity; ++N) {
    for (long code = 0; code < pw[static_cast<std::size_t>(N)]; ++code) {
      long c = code;
      int deg = 0;
      for (int p = N - 1; p >= 0; --p) {
        digits[static_cast<std::size_t>(p)] = static_cast<int>(c % B);
        deg += kDeg[static_cast<std::size_t>(c % B)];
        c /= B;
      }
      const int out = deg + 3 - N;
      if (out < 0 || out > 3) continue;
      ++report.identities;
      std::array<Rational, 6> acc;
      int prefix_deg = 0;
      for (int k = 0; k <= N - 2; ++k) {
        const int sign = parity_sign(k + prefix_deg);
        for (int j = 2; j <= N - k && j <= N - 1; ++j) {
          long inner = 0;
          for (int p = k; p < k + j; ++p) inner = inner * B + digits[static_cast<std::size_t>(p)];
          const int inner_id = ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(inner)];
          if (inner_id == 0) continue;
          const int outer_n = N - j + 1;
          for (const auto& [letter, coeff] : classes[static_cast<std::size_t>(inner_id)]) {
            long outer = 0;
            for (int p = 0; p < k; ++p) outer = outer * B + digits[static_cast<std::size_t>(p)];
            outer = outer * B + letter;
            for (int p = k + j; p < N; ++p) outer = outer * B + digits[static_cast<std::size_t>(p)];
            const int outer_id = ids[static_cast<std::size_t>(outer_n)][static_cast<std::size_t>(outer)];
            if (outer_id == 0) continue;
            for (const auto& [l2, c2] : classes[static_cast<std::size_t>(outer_id)])
              acc[static_cast<std::size_t>(l2)] += coeff * c2 * sign;
          }
        }
        prefix_deg += kDeg[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])];
      }
      bool zero = std::all_of(acc.begin(), acc.end(), [](const Rational& q) { return q == 0; });
      if (!zero) {
        ++report.failures;
        if (report.first_failures.size() < 8) {
          std::string s;
          for (int p = 0; p < N; ++p) s += kAlphabet[static_cast<std::size_t>(digits[static_cast<std::size_t>(p)])];
          report.first_failures.push_back(display_inputs(s));
        }
      }
    }
  }
  return report;
}

}  // namespace crepant

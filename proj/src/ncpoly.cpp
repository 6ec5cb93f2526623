#include "crepant/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace crepant {

bool is_word(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == 'x' || c == 'y'; });
}

FreePoly FreePoly::monomial(const Word& w, const Rational& c) {
  if (!is_word(w)) throw std::invalid_argument("word must use letters x and y: '" + w + "'");
  FreePoly p;
  p.add_term(w, c);
  return p;
}

Rational FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int FreePoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

int FreePoly::low_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

void FreePoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreePoly FreePoly::truncated(int max_len) const {
  FreePoly out;
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) <= max_len) out.terms_.emplace(w, c);
  }
  return out;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

CommPoly CommPoly::monomial(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in commutative monomial");
  CommPoly p;
  p.add_term(i, j, c);
  return p;
}

Rational CommPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int CommPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return e.first + e.second;
}

int CommPoly::low_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return e.first + e.second;
}

void CommPoly::add_term(int i, int j, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return out;
}

CommPoly CommPoly::partial_x() const {
  CommPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term(e.first - 1, e.second, c * e.first);
  }
  return out;
}

CommPoly CommPoly::partial_y() const {
  CommPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term(e.first, e.second - 1, c * e.second);
  }
  return out;
}

FreePoly add(const FreePoly& p, const FreePoly& q) { return p + q; }

FreePoly mul(const FreePoly& p, const FreePoly& q) {
  FreePoly out;
  for (const auto& [u, cu] : p.terms()) {
    for (const auto& [v, cv] : q.terms()) out.add_term(u + v, cu * cv);
  }
  return out;
}

FreePoly strike_left(char letter, const FreePoly& p) {
  FreePoly out;
  for (const auto& [w, c] : p.terms()) {
    if (!w.empty() && w[0] == letter) out.add_term(w.substr(1), c);
  }
  return out;
}

FreePoly cyclic_derivative(char letter, const FreePoly& p) {
  FreePoly out;
  for (const auto& [w, c] : p.terms()) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == letter) out.add_term(w.substr(i + 1) + w.substr(0, i), c);
    }
  }
  return out;
}

Word minimal_rotation(const Word& w) {
  Word best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word r = w.substr(i) + w.substr(0, i);
    if (r < best) best = std::move(r);
  }
  return best;
}

FreePoly cyclic_normal_form(const FreePoly& p) {
  FreePoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(minimal_rotation(w), c);
  return out;
}

CommPoly abelianize(const FreePoly& p) {
  CommPoly out;
  for (const auto& [w, c] : p.terms()) {
    int nx = static_cast<int>(std::count(w.begin(), w.end(), 'x'));
    out.add_term(nx, static_cast<int>(w.size()) - nx, c);
  }
  return out;
}

namespace {

std::string word_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += w[i];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string power_text(char var, int e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e > 1) s += '^' + std::to_string(e);
  return s;
}

template <class Range, class MonoText>
std::string render(const Range& terms, MonoText mono_text) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    std::string m = mono_text(key);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += m;
    } else {
      out += to_string(mag) + '*' + m;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const FreePoly& p) { return render(p.terms(), word_text); }

std::string to_text(const CommPoly& p) {
  return render(p.terms(), [](const CommPoly::Exponents& e) {
    std::string a = power_text('x', e.first), b = power_text('y', e.second);
    if (!a.empty() && !b.empty()) return a + '*' + b;
    return a + b;
  });
}

nlohmann::json to_json(const FreePoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : p.terms()) arr.push_back({{"word", w}, {"coeff", to_string(c)}});
  return arr;
}

nlohmann::json to_json(const CommPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"x", e.first}, {"y", e.second}, {"coeff", to_string(c)}});
  return arr;
}

FreePoly free_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  FreePoly p;
  for (const auto& t : j) {
    p += FreePoly::monomial(t.at("word").get<std::string>(), parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

}  // namespace crepant

#include "crepant/poly3.hpp"

#include <limits>
#include <stdexcept>

namespace crepant {

const char* variable_name(Chart chart, int index) {
  static const char* u1[] = {"a", "v2", "v1"};
  static const char* u2[] = {"b", "w2", "w1"};
  return chart == Chart::U2 ? u2[index] : u1[index];
}

Poly3::Poly3(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{0, 0, 0}, c);
}

Poly3 Poly3::monomial(int e0, int e1, int e2, const Rational& c) {
  Poly3 p;
  p.add_term({e0, e1, e2}, c);
  return p;
}

Poly3 Poly3::var(int index, int power) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = power;
  Poly3 p;
  p.add_term(e, 1);
  return p;
}

bool Poly3::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

bool Poly3::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) return false;
  }
  return true;
}

Rational Poly3::coeff(int e0, int e1, int e2) const {
  auto it = terms_.find({e0, e1, e2});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly3::min_exponent(int index) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<std::size_t>(index)]);
  return m;
}

int Poly3::max_exponent(int index) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<std::size_t>(index)]);
  return m;
}

void Poly3::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly3 Poly3::shifted(int d0, int d1, int d2) const {
  Poly3 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponents{e[0] + d0, e[1] + d1, e[2] + d2}, c);
  return out;
}

Poly3 Poly3::pow(int n) const {
  if (n < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Rational inv = 1;
    for (int i = 0; i < -n; ++i) inv /= c;
    return monomial(e[0] * n, e[1] * n, e[2] * n, inv);
  }
  Poly3 out(1), base = *this;
  while (n > 0) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return out;
}

Poly3 Poly3::set_zero(int index) const {
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(index)] == 0) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Poly3 Poly3::coefficient_of(int index, int power) const {
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(index)] == power) {
      Exponents f = e;
      f[static_cast<std::size_t>(index)] = 0;
      out.add_term(f, c);
    }
  }
  return out;
}

Poly3 Poly3::substitute(const std::array<Poly3, 3>& images) const {
  std::array<std::map<int, Poly3>, 3> cache;
  auto power = [&](int i, int n) -> const Poly3& {
    auto& slot = cache[static_cast<std::size_t>(i)];
    auto it = slot.find(n);
    if (it == slot.end()) it = slot.emplace(n, images[static_cast<std::size_t>(i)].pow(n)).first;
    return it->second;
  };
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    out += power(0, e[0]) * power(1, e[1]) * power(2, e[2]) * c;
  }
  return out;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  }
  return out;
}

std::string Poly3::to_text(Chart chart) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(chart, i);
      if (k != 1) mono += '^' + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

}  // namespace crepant

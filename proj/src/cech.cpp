#include "crepant/cech.hpp"

#include <sstream>
#include <tuple>

namespace crepant {

namespace {

PolyMatrix zero_map(int target_n, int source_n) { return PolyMatrix(kRank[target_n], kRank[source_n]); }

const PolyMatrix* find(const std::map<int, PolyMatrix>& part, int n) {
  auto it = part.find(n);
  return it == part.end() ? nullptr : &it->second;
}

int graded_sign(int i) { return i % 2 == 0 ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------- CechElement

void CechElement::accumulate(std::map<int, PolyMatrix>& part, int n, const PolyMatrix& m) {
  if (m.is_zero()) return;
  auto it = part.find(n);
  if (it == part.end()) {
    part.emplace(n, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) part.erase(it);
}

CechElement& CechElement::operator+=(const CechElement& o) {
  if (is_zero()) degree_ = o.degree_;
  if (!o.is_zero() && o.degree_ != degree_) throw std::invalid_argument("adding elements of different degree");
  for (const auto& [n, m] : o.u1_) add_u1(n, m);
  for (const auto& [n, m] : o.u2_) add_u2(n, m);
  for (const auto& [n, m] : o.o12_) add_o12(n, m);
  return *this;
}

CechElement& CechElement::operator-=(const CechElement& o) { return *this += o * Rational(-1); }

CechElement& CechElement::operator*=(const Rational& c) {
  if (c == 0) {
    u1_.clear();
    u2_.clear();
    o12_.clear();
    return *this;
  }
  for (auto* part : {&u1_, &u2_, &o12_}) {
    for (auto& [n, m] : *part) m *= c;
  }
  return *this;
}

bool operator==(const CechElement& a, const CechElement& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.u1_ == b.u1_ && a.u2_ == b.u2_ && a.o12_ == b.o12_;
}

std::string CechElement::to_text() const {
  if (is_zero()) return "0\n";
  std::ostringstream os;
  os << "degree " << degree_ << "\n";
  auto dump = [&](const char* label, const std::map<int, PolyMatrix>& part, Chart chart, int shift) {
    for (const auto& [n, m] : part) {
      os << label << " E" << n << " -> E" << (n - degree_ + shift) << ":\n" << m.to_text(chart);
    }
  };
  dump("U1", u1_, Chart::U1, 0);
  dump("U2", u2_, Chart::U2, 0);
  dump("U12", o12_, Chart::U12, 1);
  return os.str();
}

// ---------------------------------------------------------------- classes and boundaries

CohomologyClass CohomologyClass::zero(int degree) {
  static constexpr std::array<int, 4> kDims = {1, 2, 2, 1};
  if (degree < 0 || degree > 3) throw std::invalid_argument("cohomology lives in degrees 0..3");
  return CohomologyClass{degree, std::vector<Rational>(static_cast<std::size_t>(kDims[degree]))};
}

bool CohomologyClass::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

std::string Boundary::to_text() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [name, c] : terms) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational mag = abs(c);
    if (mag != 1) out += crepant::to_string(mag) + "*";
    out += name;
  }
  return out;
}

std::string shape_name(Shape sh) {
  switch (sh) {
    case Shape::g: return "g";
    case Shape::h: return "h";
    case Shape::z: return "z";
    case Shape::Z: return "Z";
    case Shape::G: return "G";
    case Shape::H: return "H";
    case Shape::s: return "s";
  }
  return "?";
}

// ---------------------------------------------------------------- algebra

CechAlgebra::CechAlgebra(const LambdaTable& lambdas) : model_(lambdas), res_(build_resolution(model_)) {
  const auto& inv = model_.inv();
  const int r = inv.r, s = inv.s;
  const Poly3 a = Poly3::var(0), b = Poly3::var(0);

  unit_ = CechElement(0);
  for (int n = 0; n < 4; ++n) {
    unit_.add_u1(n, PolyMatrix::identity(kRank[n]));
    unit_.add_u2(n, PolyMatrix::identity(kRank[n]));
  }

  auto x_chart = [](const Poly3& P) {
    std::map<int, PolyMatrix> m;
    m[3] = PolyMatrix(3, 1, {-1, 0, 0});
    m[2] = PolyMatrix(3, 3, {0, -1, 0, P, 0, 0, 0, 0, 1});
    m[1] = PolyMatrix(1, 3, {0, -1, 0});
    return m;
  };
  const auto x1 = x_chart(inv.A_geq_scaled(3));
  const auto x2 = x_chart(inv.B_geq_scaled(3));
  x_ = CechElement(1);
  y_ = CechElement(1);
  for (const auto& [n, m] : x1) {
    x_.add_u1(n, m);
    y_.add_u1(n, m.scaled(a));
  }
  for (const auto& [n, m] : x2) {
    x_.add_u2(n, m.scaled(b));
    y_.add_u2(n, m);
  }

  const Poly3 a_inv = Poly3::monomial(-1, 0, 0);
  X_ = s >= 1 ? shape(Shape::Z, a.pow(r), b.pow(s - 1))
              : shape(Shape::Z, a.pow(r), Poly3()) + overlap_shape(Shape::h, a_inv);
  Y_ = r >= 1 ? shape(Shape::Z, a.pow(r - 1), b.pow(s))
              : shape(Shape::Z, Poly3(), b.pow(s)) - overlap_shape(Shape::g, a_inv);
  xi_ = shape(Shape::s, a.pow(r), b.pow(s));
}

PolyMatrix CechAlgebra::restrict_u2(const PolyMatrix& m, int source_n, int target_n) const {
  return model_.transport(m, res_.E[source_n], res_.E[target_n]);
}

CechElement CechAlgebra::differential(const CechElement& e) const {
  const int i = e.degree();
  CechElement out(i + 1);
  for (int chart = 1; chart <= 2; ++chart) {
    const auto& part = chart == 1 ? e.u1() : e.u2();
    if (part.empty()) continue;
    auto d = [&](int n) -> const PolyMatrix& { return chart == 1 ? res_.d[n].u1 : res_.d[n].u2; };
    for (int n = 0; n < 4; ++n) {
      const int target = n - i - 1;
      if (target < 0) continue;
      PolyMatrix acc = zero_map(target, n);
      if (const auto* an = find(part, n); an && n - i >= 1) acc += d(n - i) * *an;
      if (const auto* prev = find(part, n - 1); prev && n >= 1) acc -= (*prev * d(n)) * Rational(graded_sign(i));
      if (chart == 1) out.add_u1(n, acc);
      else out.add_u2(n, acc);
    }
  }
  // Overlap: a1 - a2|U12 - delta(a12), with a12 of internal degree i-1.
  for (int n = 0; n < 4; ++n) {
    const int target = n - i;
    if (target < 0 || target > 3) continue;
    PolyMatrix acc = zero_map(target, n);
    if (const auto* m = find(e.u1(), n)) acc += *m;
    if (const auto* m = find(e.u2(), n)) acc -= restrict_u2(*m, n, target);
    if (const auto* m = find(e.o12(), n); m && target + 1 <= 3 && target + 1 >= 1) {
      if (fault_ == Fault::DifferentialOverlapSign) acc += res_.d[target + 1].u1 * *m;
      else acc -= res_.d[target + 1].u1 * *m;
    }
    if (const auto* m = find(e.o12(), n - 1); m && n >= 1)
      acc += (*m * res_.d[n].u1) * Rational(graded_sign(i - 1));
    out.add_o12(n, acc);
  }
  return out;
}

CechElement CechAlgebra::star(const CechElement& a, const CechElement& b) const {
  const int i = a.degree(), j = b.degree();
  CechElement out(i + j);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [n, bm] : b.u1())
    if (const auto* am = find(a.u1(), n - j)) out.add_u1(n, *am * bm);
  for (const auto& [n, bm] : b.u2())
    if (const auto* am = find(a.u2(), n - j))
      out.add_u2(n, fault_ == Fault::StarChart2Sign ? (*am * bm) * Rational(-1) : *am * bm);
  for (const auto& [n, bm] : b.u2())
    if (const auto* am = find(a.o12(), n - j)) out.add_o12(n, *am * restrict_u2(bm, n, n - j));
  for (const auto& [n, bm] : b.o12())
    if (const auto* am = find(a.u1(), n - j + 1)) {
      const int sign = fault_ == Fault::StarOverlapSign ? -graded_sign(i) : graded_sign(i);
      out.add_o12(n, (*am * bm) * Rational(sign));
    }
  return out;
}

CechElement CechAlgebra::unit() const { return unit_; }

int CechAlgebra::basis_degree(char name) {
  switch (name) {
    case '1': return 0;
    case 'x':
    case 'y': return 1;
    case 'X':
    case 'Y': return 2;
    case 's': return 3;
    default: throw std::invalid_argument(std::string("unknown basis element ") + name);
  }
}

const CechElement& CechAlgebra::basis_element(char name) const {
  switch (name) {
    case '1': return unit_;
    case 'x': return x_;
    case 'y': return y_;
    case 'X': return X_;
    case 'Y': return Y_;
    case 's': return xi_;
    default: throw std::invalid_argument(std::string("unknown basis element ") + name);
  }
}

PolyMatrix CechAlgebra::shape_matrix(Shape sh, int n) const {
  switch (sh) {
    case Shape::g:
      if (n == 2) return PolyMatrix(3, 3, {0, 0, 0, 0, 0, 1, 0, 0, 0});
      if (n == 1) return PolyMatrix(1, 3, {0, 0, 1});
      break;
    case Shape::h:
      if (n == 2) return PolyMatrix(3, 3, {0, 0, 0, 0, 1, 0, 0, 0, 0});
      if (n == 1) return PolyMatrix(1, 3, {-1, 0, 0});
      break;
    case Shape::z:
      if (n == 2) return PolyMatrix(3, 3, {0, 0, 0, -1, 0, 0, 0, 0, 0});
      break;
    case Shape::Z:
      if (n == 3) return PolyMatrix(3, 1, {0, -1, 0});
      if (n == 2) return PolyMatrix(1, 3, {-1, 0, 0});
      break;
    case Shape::G:
      if (n == 2) return PolyMatrix(1, 3, {0, 0, -1});
      break;
    case Shape::H:
      if (n == 2) return PolyMatrix(1, 3, {0, -1, 0});
      break;
    case Shape::s:
      if (n == 3) return PolyMatrix(1, 1, {-1});
      break;
  }
  return PolyMatrix();
}

namespace {
int shape_degree(Shape sh) {
  switch (sh) {
    case Shape::g:
    case Shape::h:
    case Shape::z: return 1;
    case Shape::Z:
    case Shape::G:
    case Shape::H: return 2;
    case Shape::s: return 3;
  }
  return 0;
}
}  // namespace

CechElement CechAlgebra::shape(Shape sh, const Poly3& f1, const Poly3& f2) const {
  CechElement out(shape_degree(sh));
  for (int n = 0; n < 4; ++n) {
    PolyMatrix m = shape_matrix(sh, n);
    if (m.rows() == 0) continue;
    if (!f1.is_zero()) out.add_u1(n, m.scaled(f1));
    if (!f2.is_zero()) out.add_u2(n, m.scaled(f2));
  }
  return out;
}

CechElement CechAlgebra::overlap_shape(Shape sh, const Poly3& f) const {
  CechElement out(shape_degree(sh) + 1);
  for (int n = 0; n < 4; ++n) {
    PolyMatrix m = shape_matrix(sh, n);
    if (m.rows() == 0 || f.is_zero()) continue;
    out.add_o12(n, m.scaled(f));
  }
  return out;
}

bool CechAlgebra::k_defined(int i) const {
  const int r = this->r(), s = this->s();
  return (i >= 0 && i <= r - 2) || (i >= r + 1 && i <= r + s - 1);
}

bool CechAlgebra::K_defined(int i) const {
  const int r = this->r(), s = this->s();
  return (i >= 0 && i <= r - 1) || (i >= r + 1 && i <= r + s);
}

CechElement CechAlgebra::k(int i) const {
  const int r = this->r(), s = this->s();
  const Poly3 a = Poly3::var(0);
  if (i >= 0 && i <= r - 2) return shape(Shape::g, a.pow(i), a.pow(r - 2 - i));
  if (i >= r + 1 && i <= r + s - 1) return shape(Shape::h, a.pow(i - r - 1), a.pow(r + s - 1 - i));
  throw IndexError("k_" + std::to_string(i) + " is undefined for r=" + std::to_string(r) +
                   ", s=" + std::to_string(s));
}

CechElement CechAlgebra::K(int i) const {
  const int r = this->r(), s = this->s();
  const Poly3 a = Poly3::var(0);
  if (i >= 0 && i <= r - 1) return shape(Shape::G, a.pow(i), a.pow(r - 1 - i));
  if (i >= r + 1 && i <= r + s) return shape(Shape::H, a.pow(i - r - 1), a.pow(r + s - i));
  throw IndexError("K_" + std::to_string(i) + " is undefined for r=" + std::to_string(r) +
                   ", s=" + std::to_string(s));
}

CechElement CechAlgebra::e(int i, int kk) const {
  if (i < 3 || kk < 0 || kk > i - 1)
    throw IndexError("e_{" + std::to_string(i) + "," + std::to_string(kk) + "} is undefined");
  const auto& inv = model_.inv();
  return shape(Shape::z, inv.A_geq_scaled(i + 1).shifted(kk, 0, 0), inv.B_geq_scaled(i + 1).shifted(i - kk - 1, 0, 0));
}

// ---------------------------------------------------------------- decompositions

namespace {

using Key = std::tuple<int, int, int, int, int, int, int>;  // part, n, row, col, exponents
using Flat = std::map<Key, Rational>;

Flat flatten(const CechElement& e) {
  Flat out;
  int part_id = 0;
  for (const auto* part : {&e.u1(), &e.u2(), &e.o12()}) {
    for (const auto& [n, m] : *part)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          for (const auto& [ex, c] : m.at(i, j).terms()) out[{part_id, n, i, j, ex[0], ex[1], ex[2]}] = c;
    ++part_id;
  }
  return out;
}

void axpy(Flat& y, const Rational& c, const Flat& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += c * v;
    if (it->second == 0) y.erase(it);
  }
}

}  // namespace

std::optional<std::vector<Rational>> solve_combination(const std::vector<CechElement>& candidates,
                                                       const CechElement& target) {
  const std::size_t m = candidates.size();
  struct Row {
    Flat vec;
    std::vector<Rational> combo;
  };
  std::map<Key, Row> basis;  // keyed by leading (smallest) key
  auto reduce = [&](Row& row) {
    while (!row.vec.empty()) {
      auto lead = row.vec.begin();
      auto it = basis.find(lead->first);
      if (it == basis.end()) return;
      Rational c = -lead->second / it->second.vec.begin()->second;
      axpy(row.vec, c, it->second.vec);
      for (std::size_t k = 0; k < m; ++k) row.combo[k] += c * it->second.combo[k];
    }
  };
  for (std::size_t idx = 0; idx < m; ++idx) {
    Row row{flatten(candidates[idx]), std::vector<Rational>(m)};
    row.combo[idx] = 1;
    reduce(row);
    if (!row.vec.empty()) {
      Key lead = row.vec.begin()->first;
      basis.emplace(lead, std::move(row));
    }
  }
  Row t{flatten(target), std::vector<Rational>(m)};
  reduce(t);
  if (!t.vec.empty()) return std::nullopt;
  // target + sum combo_k * cand_k = 0
  for (auto& c : t.combo) c = -c;
  return t.combo;
}

CohomologyClass CechAlgebra::decompose_degree1(const CechElement& el) const {
  if (el.is_zero()) return CohomologyClass::zero(1);
  if (el.degree() != 1) throw DecompositionError("decompose_degree1 needs a degree-1 element");
  if (!differential(el).is_zero()) throw DecompositionError("element is not closed");
  CohomologyClass out = CohomologyClass::zero(1);
  const auto* m = find(el.u1(), 1);
  if (!m) return out;
  auto mod_ideal = [](const Poly3& p) { return p.set_zero(1).set_zero(2); };
  if (!mod_ideal(m->at(0, 0)).is_zero() || !mod_ideal(m->at(0, 2)).is_zero())
    throw DecompositionError("E1 -> E0 component leaves the expected span");
  Poly3 mid = mod_ideal(m->at(0, 1));
  if (mid.min_exponent(0) < 0 || mid.max_exponent(0) > 1)
    throw DecompositionError("E1 -> E0 component leaves the expected span");
  out.coords[0] = -mid.coeff(0, 0, 0);
  out.coords[1] = -mid.coeff(1, 0, 0);
  return out;
}

namespace {

// Reads F from an element whose chart part is F times a fixed shape; nullopt otherwise.
std::optional<Poly3> shape_factor(const std::map<int, PolyMatrix>& part, const std::map<int, PolyMatrix>& unit_shape) {
  if (part.empty()) return Poly3();
  // Locate the factor at the first nonzero entry of the shape.
  std::optional<Poly3> factor;
  for (const auto& [n, sm] : unit_shape) {
    for (int i = 0; i < sm.rows() && !factor; ++i)
      for (int j = 0; j < sm.cols() && !factor; ++j)
        if (!sm.at(i, j).is_zero()) {
          auto it = part.find(n);
          Poly3 entry = it == part.end() ? Poly3() : it->second.at(i, j);
          factor = entry * (Rational(1) / sm.at(i, j).coeff(0, 0, 0));
        }
    if (factor) break;
  }
  if (!factor) return std::nullopt;
  std::map<int, PolyMatrix> rebuilt;
  for (const auto& [n, sm] : unit_shape) {
    PolyMatrix m = sm.scaled(*factor);
    if (!m.is_zero()) rebuilt.emplace(n, m);
  }
  if (rebuilt != part) return std::nullopt;
  return factor;
}

Poly3 only_variable(const Poly3& p, int keep_zero_index) {
  return p.set_zero(keep_zero_index);
}

}  // namespace

std::optional<Decomposition> CechAlgebra::decompose_z_shaped(const CechElement& el) const {
  if (!el.o12().empty()) return std::nullopt;
  const CechElement unit_Z = shape(Shape::Z, 1, 1);
  auto F = shape_factor(el.u1(), unit_Z.u1());
  auto G = shape_factor(el.u2(), unit_Z.u2());
  if (!F || !G) return std::nullopt;
  if (F->min_exponent(2) != 0 || F->max_exponent(2) != 0 || G->min_exponent(2) != 0 || G->max_exponent(2) != 0)
    return std::nullopt;
  // Peel off the part divisible by v2 (w2) as the differential of a z-shaped tail.
  const Poly3 F0 = only_variable(*F, 1), G0 = only_variable(*G, 1);
  const Poly3 Ft = (*F - F0).shifted(0, -1, 0), Gt = (*G - G0).shifted(0, -1, 0);
  Decomposition out{CohomologyClass::zero(2), {}};
  CechElement tail = shape(Shape::z, Ft, Gt);
  if (!tail.is_zero()) {
    std::vector<CechElement> es;
    std::vector<std::string> names;
    for (int i = 3; i < model_.inv().max_degree; ++i)
      for (int kk = 0; kk < i; ++kk) {
        es.push_back(e(i, kk));
        names.push_back("e_{" + std::to_string(i) + "," + std::to_string(kk) + "}");
      }
    auto sol = solve_combination(es, tail);
    if (sol) {
      for (std::size_t q = 0; q < es.size(); ++q)
        if ((*sol)[q] != 0) out.boundary.terms.emplace_back(names[q], (*sol)[q]);
    } else {
      out.boundary.terms.emplace_back("ztail", Rational(1));
    }
    out.boundary.element = tail;
  }
  const CechElement residual = el - differential(tail);
  std::vector<CechElement> cands = {X_, Y_};
  std::vector<std::string> names = {"X", "Y"};
  std::vector<int> ks;
  for (int i = 0; i <= r() + s(); ++i)
    if (k_defined(i)) {
      cands.push_back(differential(k(i)));
      names.push_back("k_" + std::to_string(i));
      ks.push_back(i);
    }
  auto sol = solve_combination(cands, residual);
  if (!sol) return std::nullopt;
  out.cls.coords[0] = (*sol)[0];
  out.cls.coords[1] = (*sol)[1];
  for (std::size_t q = 2; q < cands.size(); ++q) {
    const Rational& c = (*sol)[q];
    if (c == 0) continue;
    out.boundary.terms.emplace_back(names[q], c);
    out.boundary.element += k(ks[q - 2]) * c;
  }
  if (out.boundary.element.is_zero()) out.boundary.element = CechElement(1);
  return out;
}

std::optional<Decomposition> CechAlgebra::decompose_s_shaped(const CechElement& el) const {
  if (!el.o12().empty()) return std::nullopt;
  std::vector<CechElement> cands = {xi_};
  std::vector<int> Ks;
  for (int i = 0; i <= r() + s(); ++i)
    if (K_defined(i)) {
      cands.push_back(differential(K(i)));
      Ks.push_back(i);
    }
  auto sol = solve_combination(cands, el);
  if (!sol) return std::nullopt;
  Decomposition out{CohomologyClass::zero(3), {}};
  out.cls.coords[0] = (*sol)[0];
  out.boundary.element = CechElement(2);
  for (std::size_t q = 1; q < cands.size(); ++q) {
    const Rational& c = (*sol)[q];
    if (c == 0) continue;
    out.boundary.terms.emplace_back("K_" + std::to_string(Ks[q - 1]), c);
    out.boundary.element += K(Ks[q - 1]) * c;
  }
  return out;
}

Decomposition CechAlgebra::solve_decomposition(const CechElement& el) const {
  const int deg = el.degree();
  std::vector<CechElement> cands;
  std::vector<std::string> names;
  std::vector<CechElement> preimages;
  auto add = [&](const CechElement& pre, const std::string& name) {
    CechElement img = differential(pre);
    if (img.is_zero()) return;
    cands.push_back(std::move(img));
    names.push_back(name);
    preimages.push_back(pre);
  };
  const int nbasis = deg == 2 ? 2 : 1;
  if (deg == 2) {
    cands = {X_, Y_};
    names = {"X", "Y"};
  } else {
    cands = {xi_};
    names = {"xi"};
  }
  preimages.resize(cands.size());

  // Exponent ranges present in one part: [min, max] per variable.
  struct Range {
    std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  };
  auto bounds = [](const std::map<int, PolyMatrix>& part) {
    Range rg;
    for (const auto& [n, m] : part)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          for (int v = 0; v < 3; ++v) {
            if (m.at(i, j).is_zero()) continue;
            rg.lo[v] = std::min(rg.lo[v], m.at(i, j).min_exponent(v));
            rg.hi[v] = std::max(rg.hi[v], m.at(i, j).max_exponent(v));
          }
    return rg;
  };
  const int pad = r() + s() + 2;
  const Range b1 = bounds(el.u1()), b2 = bounds(el.u2()), bo = bounds(el.o12());
  const std::vector<Shape> shapes = deg == 2 ? std::vector<Shape>{Shape::g, Shape::h, Shape::z}
                                             : std::vector<Shape>{Shape::Z, Shape::G, Shape::H};
  for (Shape sh : shapes) {
    const std::string sn = shape_name(sh);
    for (int p = 0; p <= std::max(b1.hi[0], pad) + 1; ++p)
      for (int q = 0; q <= b1.hi[1]; ++q)
        for (int m = 0; m <= b1.hi[2]; ++m)
          add(shape(sh, Poly3::monomial(p, q, m), Poly3()), "(" + Poly3::monomial(p, q, m).to_text(Chart::U1) + " " + sn + "1,0,0)");
    for (int p = 0; p <= std::max(b2.hi[0], pad) + 1; ++p)
      for (int q = 0; q <= b2.hi[1]; ++q)
        for (int m = 0; m <= b2.hi[2]; ++m)
          add(shape(sh, Poly3(), Poly3::monomial(p, q, m)), "(0," + Poly3::monomial(p, q, m).to_text(Chart::U2) + " " + sn + "2,0)");
  }
  const std::vector<Shape> oshapes = deg == 2 ? std::vector<Shape>{} : std::vector<Shape>{Shape::g, Shape::h, Shape::z};
  for (Shape sh : oshapes)
    for (int p = bo.lo[0] - pad; p <= std::max(bo.hi[0], pad) + 1; ++p)
      for (int q = 0; q <= bo.hi[1]; ++q)
        for (int m = 0; m <= bo.hi[2]; ++m)
          add(overlap_shape(sh, Poly3::monomial(p, q, m)),
              "(0,0," + Poly3::monomial(p, q, m).to_text(Chart::U12) + " " + shape_name(sh) + "1)");

  auto sol = solve_combination(cands, el);
  if (!sol)
    throw DecompositionError("degree-" + std::to_string(deg) +
                             " element is not in the span of the basis and the homotopy family");
  Decomposition out{CohomologyClass::zero(deg), {}};
  for (int q = 0; q < nbasis; ++q) out.cls.coords[static_cast<std::size_t>(q)] = (*sol)[static_cast<std::size_t>(q)];
  out.boundary.element = CechElement(deg - 1);
  for (std::size_t q = static_cast<std::size_t>(nbasis); q < cands.size(); ++q) {
    const Rational& c = (*sol)[q];
    if (c == 0) continue;
    out.boundary.terms.emplace_back(names[q], c);
    out.boundary.element += preimages[q] * c;
  }
  return out;
}

Decomposition CechAlgebra::decompose_degree2(const CechElement& el) const {
  if (el.is_zero()) return {CohomologyClass::zero(2), {{}, CechElement(1)}};
  if (el.degree() != 2) throw DecompositionError("decompose_degree2 needs a degree-2 element");
  if (!differential(el).is_zero()) throw DecompositionError("degree-2 element is not closed");
  if (auto d = decompose_z_shaped(el)) return *d;
  return solve_decomposition(el);
}

Decomposition CechAlgebra::decompose_degree3(const CechElement& el) const {
  if (el.is_zero()) return {CohomologyClass::zero(3), {{}, CechElement(2)}};
  if (el.degree() != 3) throw DecompositionError("decompose_degree3 needs a degree-3 element");
  if (!differential(el).is_zero()) throw DecompositionError("degree-3 element is not closed");
  if (auto d = decompose_s_shaped(el)) return *d;
  return solve_decomposition(el);
}

}  // namespace crepant

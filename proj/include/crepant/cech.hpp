#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crepant/resolution.hpp"

namespace crepant {

inline constexpr std::array<int, 4> kRank = {1, 3, 3, 1};

// A homogeneous element (a1, a2, a12) of the total complex. Components are keyed by
// the source index n: a1[n], a2[n] map E_n -> E_{n-degree}; a12[n] maps
// E_n -> E_{n-degree+1} on the overlap, in U1-induced coordinates. Zero
// matrices are never stored.
class CechElement {
 public:
  CechElement() = default;
  explicit CechElement(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<int, PolyMatrix>& u1() const { return u1_; }
  const std::map<int, PolyMatrix>& u2() const { return u2_; }
  const std::map<int, PolyMatrix>& o12() const { return o12_; }
  bool is_zero() const { return u1_.empty() && u2_.empty() && o12_.empty(); }
  bool is_simple() const { return o12_.empty(); }

  void add_u1(int n, const PolyMatrix& m) { accumulate(u1_, n, m); }
  void add_u2(int n, const PolyMatrix& m) { accumulate(u2_, n, m); }
  void add_o12(int n, const PolyMatrix& m) { accumulate(o12_, n, m); }

  CechElement& operator+=(const CechElement& o);
  CechElement& operator-=(const CechElement& o);
  CechElement& operator*=(const Rational& c);
  friend CechElement operator+(CechElement a, const CechElement& b) { return a += b; }
  friend CechElement operator-(CechElement a, const CechElement& b) { return a -= b; }
  friend CechElement operator*(CechElement a, const Rational& c) { return a *= c; }
  friend CechElement operator*(const Rational& c, CechElement a) { return a *= c; }
  CechElement operator-() const { return *this * Rational(-1); }
  friend bool operator==(const CechElement& a, const CechElement& b);

  std::string to_text() const;

 private:
  static void accumulate(std::map<int, PolyMatrix>& part, int n, const PolyMatrix& m);
  int degree_ = 0;
  std::map<int, PolyMatrix> u1_, u2_, o12_;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coordinates of a cohomology class in the basis 1 | x, y | X, Y | xi.
struct CohomologyClass {
  int degree = 0;
  std::vector<Rational> coords;
  static CohomologyClass zero(int degree);
  bool is_zero() const;
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.degree == b.degree && a.coords == b.coords;
  }
};

// Formal combination of named homotopies, e.g. 5*k_3 + e_{3,0}.
struct Boundary {
  std::vector<std::pair<std::string, Rational>> terms;
  CechElement element;  // the chain whose image under D is meant
  std::string to_text() const;
};

struct Decomposition {
  CohomologyClass cls;
  Boundary boundary;
};

enum class Shape { g, h, z, Z, G, H, s };

class CechAlgebra {
 public:
  // Deliberate defects, used only to confirm that the verification suite notices them.
  enum class Fault { None, StarChart2Sign, StarOverlapSign, DifferentialOverlapSign };

  explicit CechAlgebra(const LambdaTable& lambdas);
  void inject_fault(Fault f) { fault_ = f; }

  const Model& model() const { return model_; }
  const ResolutionComplex& resolution() const { return res_; }
  int t() const { return model_.t(); }
  int r() const { return model_.r(); }
  int s() const { return model_.s(); }

  CechElement differential(const CechElement& e) const;
  CechElement star(const CechElement& a, const CechElement& b) const;
  // U2 component restricted to U12 in U1 coordinates.
  PolyMatrix restrict_u2(const PolyMatrix& m, int source_n, int target_n) const;

  // Generators.
  CechElement unit() const;
  CechElement x() const { return x_; }
  CechElement y() const { return y_; }
  CechElement shape(Shape sh, const Poly3& f1, const Poly3& f2) const;
  // Shape multiplied on the overlap only: (0, 0, f * sh_1).
  CechElement overlap_shape(Shape sh, const Poly3& f) const;
  CechElement k(int i) const;
  CechElement K(int i) const;
  CechElement e(int i, int kk) const;
  CechElement X() const { return X_; }
  CechElement Y() const { return Y_; }
  CechElement xi() const { return xi_; }
  bool k_defined(int i) const;
  bool K_defined(int i) const;

  // Representative of a basis element: 'x','y','X','Y','s' (xi) or '1'.
  const CechElement& basis_element(char name) const;
  static int basis_degree(char name);

  CohomologyClass decompose_degree1(const CechElement& e) const;
  Decomposition decompose_degree2(const CechElement& e) const;
  Decomposition decompose_degree3(const CechElement& e) const;

 private:
  PolyMatrix shape_matrix(Shape sh, int n) const;
  std::optional<Decomposition> decompose_z_shaped(const CechElement& e) const;
  std::optional<Decomposition> decompose_s_shaped(const CechElement& e) const;
  Decomposition solve_decomposition(const CechElement& e) const;

  Model model_;
  ResolutionComplex res_;
  Fault fault_ = Fault::None;
  CechElement unit_, x_, y_, X_, Y_, xi_;
};

std::string shape_name(Shape sh);

struct IdentityResult {
  std::string name;
  long instances = 0;
  long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

// Every named identity of the generator library, the DG axioms on the library and the
// degree-1 independence test, instantiated for indices up to max_i.
std::vector<IdentityResult> verify_generators(const CechAlgebra& alg, int max_i);

// Generic exact solver: coefficients c with sum c_i * candidates[i] = target, or nullopt.
std::optional<std::vector<Rational>> solve_combination(const std::vector<CechElement>& candidates,
                                                       const CechElement& target);

}  // namespace crepant

#pragma once

#include <string>
#include <vector>

#include "crepant/poly3.hpp"

namespace crepant {

// Dense matrix of Poly3 entries; maps column-space (source) to row-space (target).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {}
  PolyMatrix(int rows, int cols, std::initializer_list<Poly3> entries);
  static PolyMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly3& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Poly3& at(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  bool is_zero() const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  PolyMatrix& operator*=(const Rational& c);
  PolyMatrix scaled(const Poly3& p) const;
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(PolyMatrix a, const Rational& c) { return a *= c; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_text(Chart chart) const;  // aligned grid

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Poly3> e_;
};

}  // namespace crepant

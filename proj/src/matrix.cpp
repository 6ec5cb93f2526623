#include "crepant/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace crepant {

PolyMatrix::PolyMatrix(int rows, int cols, std::initializer_list<Poly3> entries) : PolyMatrix(rows, cols) {
  if (static_cast<int>(entries.size()) != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  std::copy(entries.begin(), entries.end(), e_.begin());
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly3(1);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Poly3& p) { return p.is_zero(); });
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& c) {
  for (auto& p : e_) p *= c;
  return *this;
}

PolyMatrix PolyMatrix::scaled(const Poly3& p) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i].is_zero()) out.e_[i] = e_[i] * p;
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  PolyMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Poly3& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Poly3& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string PolyMatrix::to_text(Chart chart) const {
  std::vector<std::string> cells(e_.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(cols_), 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      auto& c = cells[static_cast<std::size_t>(i * cols_ + j)];
      c = at(i, j).to_text(chart);
      width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], c.size());
    }
  }
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += "[ ";
    for (int j = 0; j < cols_; ++j) {
      const auto& c = cells[static_cast<std::size_t>(i * cols_ + j)];
      out += c + std::string(width[static_cast<std::size_t>(j)] - c.size(), ' ');
      out += j + 1 < cols_ ? "  " : " ]\n";
    }
  }
  return out;
}

}  // namespace crepant

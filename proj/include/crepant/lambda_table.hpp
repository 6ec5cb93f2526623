#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crepant/rational.hpp"

namespace crepant {

// Glue scalars lambda_{jk}; only nonzero entries are stored.
class LambdaTable {
 public:
  using Key = std::pair<int, int>;

  LambdaTable() = default;
  LambdaTable(std::initializer_list<std::pair<Key, Rational>> entries);

  Rational get(int j, int k) const;
  void set(int j, int k, const Rational& v);
  const std::map<Key, Rational>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int max_degree() const;  // max j+k, or -1 when empty

  std::string to_text() const;  // "{l30=3, l22=1/2}"
  friend bool operator==(const LambdaTable& a, const LambdaTable& b) { return a.entries_ == b.entries_; }

 private:
  std::map<Key, Rational> entries_;
};

}  // namespace crepant

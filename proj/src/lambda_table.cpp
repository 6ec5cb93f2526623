#include "crepant/lambda_table.hpp"

#include <stdexcept>

namespace crepant {

LambdaTable::LambdaTable(std::initializer_list<std::pair<Key, Rational>> entries) {
  for (const auto& [key, v] : entries) set(key.first, key.second, v);
}

Rational LambdaTable::get(int j, int k) const {
  auto it = entries_.find({j, k});
  return it == entries_.end() ? Rational(0) : it->second;
}

void LambdaTable::set(int j, int k, const Rational& v) {
  if (j < 0 || k < 0) throw std::invalid_argument("lambda indices must be nonnegative");
  if (v == 0) {
    entries_.erase({j, k});
  } else {
    entries_[{j, k}] = v;
  }
}

int LambdaTable::max_degree() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first + key.second);
  return m;
}

std::string LambdaTable::to_text() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, v] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += "l" + std::to_string(key.first) + "," + std::to_string(key.second) + "=" + crepant::to_string(v);
  }
  return out + "}";
}

}  // namespace crepant

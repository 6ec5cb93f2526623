#pragma once

#include <vector>

#include "crepant/lambda_table.hpp"

namespace corpus {

using crepant::frac;
using crepant::LambdaTable;
using crepant::Rational;

// Valid (-3,1) tables with j + k <= 8, covering r = 0, s = 0, t from 3 to 8 and mixed degrees.
inline std::vector<LambdaTable> tables() {
  auto R = [](long p, long q = 1) { return frac(p, q); };
  return {
      LambdaTable{{{3, 0}, R(3)}},
      LambdaTable{{{0, 3}, R(1)}},
      LambdaTable{{{2, 2}, R(1)}},
      LambdaTable{{{3, 0}, R(1)}, {{0, 3}, R(1)}},
      LambdaTable{{{2, 2}, R(1)}, {{3, 0}, R(1)}, {{0, 3}, R(1)}},
      LambdaTable{{{2, 1}, R(1, 2)}, {{1, 3}, R(-2)}},
      LambdaTable{{{3, 0}, R(1)}, {{2, 2}, R(1)}, {{0, 4}, R(-3, 5)}},
      LambdaTable{{{1, 2}, R(1)}},
      LambdaTable{{{2, 1}, R(1)}},
      LambdaTable{{{4, 0}, R(1)}},
      LambdaTable{{{0, 4}, R(2)}},
      LambdaTable{{{3, 1}, R(1)}, {{1, 3}, R(1)}},
      LambdaTable{{{5, 0}, R(1)}, {{0, 5}, R(-1)}},
      LambdaTable{{{4, 1}, R(2, 3)}, {{2, 3}, R(1)}},
      LambdaTable{{{3, 2}, R(1)}, {{6, 0}, R(-1)}},
      LambdaTable{{{7, 0}, R(1)}, {{1, 7}, R(1)}},
      LambdaTable{{{4, 4}, R(1)}},
      LambdaTable{{{8, 0}, R(1, 2)}, {{0, 8}, R(3)}},
      LambdaTable{{{3, 0}, R(1)}, {{2, 1}, R(-1)}, {{1, 2}, R(1)}, {{0, 3}, R(-1)}},
      LambdaTable{{{3, 3}, R(5)}, {{4, 2}, R(-1, 7)}},
      LambdaTable{{{2, 6}, R(1)}, {{6, 1}, R(2)}},
      LambdaTable{{{3, 5}, R(1)}, {{5, 3}, R(1)}, {{0, 3}, R(1, 4)}},
      LambdaTable{{{5, 2}, R(1)}, {{2, 5}, R(-1)}, {{3, 0}, R(2)}},
      LambdaTable{{{0, 6}, R(1)}, {{4, 0}, R(-2)}},
  };
}

}  // namespace corpus

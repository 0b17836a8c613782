// Copyright 2026 The treedist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only exhaustive alignment search, independent of the library's
// own brute force: enumerates every match/delete/insert word and prices the
// two padded rows directly. Unit relabel cost.

#ifndef TREEDIST_TESTS_ALIGNMENT_ENUMERATION_H_
#define TREEDIST_TESTS_ALIGNMENT_ENUMERATION_H_

#include <algorithm>
#include <string>

#include "treedist/rational.h"

namespace treedist::reference {

inline Rational EnumerateBest(const std::string& s1, const std::string& s2,
                       Rational a, Rational b) {
  Rational best(1000000);
  std::string ops;
  auto price = [&](const std::string& word) {
    std::string r1;
    std::string r2;
    std::size_t i = 0;
    std::size_t j = 0;
    for (char op : word) {
      r1 += op == 'I' ? '-' : s1[i++];
      r2 += op == 'D' ? '-' : s2[j++];
    }
    Rational cost(0);
    for (const std::string* row : {&r1, &r2}) {
      std::size_t k = 0;
      while (k < row->size()) {
        if ((*row)[k] != '-') {
          ++k;
          continue;
        }
        std::size_t run = 0;
        while (k < row->size() && (*row)[k] == '-') {
          ++run;
          ++k;
        }
        cost = cost + a + b * Rational(static_cast<std::int64_t>(run));
      }
    }
    for (std::size_t k = 0; k < r1.size(); ++k) {
      if (r1[k] != '-' && r2[k] != '-' && r1[k] != r2[k]) {
        cost = cost + Rational(1);
      }
    }
    return cost;
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == s1.size() && j == s2.size()) {
      best = std::min(best, price(ops));
      return;
    }
    for (char op : {'M', 'D', 'I'}) {
      const std::size_t ni = i + (op != 'I');
      const std::size_t nj = j + (op != 'D');
      if (ni > s1.size() || nj > s2.size()) continue;
      ops.push_back(op);
      self(self, ni, nj);
      ops.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace treedist::reference

#endif  // TREEDIST_TESTS_ALIGNMENT_ENUMERATION_H_

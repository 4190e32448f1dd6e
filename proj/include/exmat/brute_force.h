// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXMAT_BRUTE_FORCE_H_
#define EXMAT_BRUTE_FORCE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exmat/element.h"
#include "exmat/matroid.h"

// Exhaustive reference answers for small instances. Only independence
// queries are used here, never the exchange or augmentation code, so
// agreement with the main algorithms is real evidence.

namespace exmat {

// Ground sets larger than this still run but add a warning to the report.
inline constexpr std::size_t kOracleSoftLimit = 20;

struct OracleWitness {
  // "I", "II" or "III".
  std::string axiom;
  std::vector<ElementSet> sets;
};

struct OracleReport {
  std::uint64_t checked = 0;
  std::vector<OracleWitness> witnesses;
  std::vector<std::string> warnings;

  bool holds() const { return witnesses.empty(); }
};

// Axioms I (∅ independent), II (downward closure, via immediate subsets) and
// III (augmentation, for every pair of independent sets). A failure of II is
// reported as {missing subset, independent superset}; a failure of III as
// {I, J}. At most 16 witnesses per axiom are kept.
OracleReport CheckAxioms(const MatroidView& m);

// All maximal independent sets in lexicographic order.
std::vector<ElementSet> AllBases(const MatroidView& m);

// Every Y ⊆ b1 with (b0 \ x) ∪ Y and (b1 \ Y) ∪ x both bases, ordered by
// size, then lexicographically. Throws DomainError unless x ⊆ b0.
std::vector<ElementSet> ExchangeSearch(const MatroidView& m, const ElementSet& b0,
                                       const ElementSet& b1, const ElementSet& x);

struct BijectionSearchResult {
  bool exists = false;
  // First solution found, as (I, F(I)) pairs in lexicographic order of I.
  std::vector<std::pair<ElementSet, ElementSet>> witness;
  // Number of solutions; only counted when asked for, otherwise 0 or 1.
  std::uint64_t solutions = 0;
};

// Backtracking search for a bijection F from the k-subsets of b0 to the
// k-subsets of b1 with (b0 \ I) ∪ F(I) a basis for every I.
BijectionSearchResult BijectionSearch(const MatroidView& m, const ElementSet& b0,
                                      const ElementSet& b1, std::size_t k,
                                      bool count_all = false);

}  // namespace exmat

#endif  // EXMAT_BRUTE_FORCE_H_

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

#include "exmat/brute_force.h"

#include <algorithm>
#include <bit>
#include <limits>

#include "exmat/errors.h"

namespace exmat {
namespace {

constexpr std::size_t kMaxWitnesses = 16;

// Independence of every subset of the ground set, indexed by mask.
std::vector<bool> IndependenceTable(const MatroidView& m) {
  const std::size_t n = m.ground().size();
  if (n >= 63) throw DomainError("ground set too large for enumeration");
  std::vector<bool> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = m.IsIndependent(m.ground().SubsetByMask(mask));
  }
  return table;
}

void Warn(const MatroidView& m, OracleReport& report) {
  if (m.ground().size() > kOracleSoftLimit) {
    report.warnings.push_back("ground set of size " +
                              std::to_string(m.ground().size()) +
                              " is above the advisory limit");
  }
}

}  // namespace

OracleReport CheckAxioms(const MatroidView& m) {
  OracleReport report;
  Warn(m, report);
  const ElementSet& ground = m.ground();
  const std::size_t n = ground.size();
  const std::vector<bool> indep = IndependenceTable(m);
  report.checked += indep.size();

  if (!indep[0]) report.witnesses.push_back({"I", {ElementSet()}});

  std::size_t found = 0;
  for (std::uint64_t mask = 0; mask < indep.size() && found < kMaxWitnesses; ++mask) {
    if (!indep[mask]) continue;
    // Dropping the last member first keeps lexicographically small subsets
    // at the front of the witness list.
    for (std::size_t b = n; b-- > 0;) {
      const std::uint64_t sub = mask & ~(std::uint64_t{1} << b);
      if (sub == mask) continue;
      ++report.checked;
      if (!indep[sub]) {
        report.witnesses.push_back(
            {"II", {ground.SubsetByMask(sub), ground.SubsetByMask(mask)}});
        if (++found == kMaxWitnesses) break;
      }
    }
  }

  std::vector<std::uint64_t> independent;
  for (std::uint64_t mask = 0; mask < indep.size(); ++mask) {
    if (indep[mask]) independent.push_back(mask);
  }
  found = 0;
  for (std::uint64_t i : independent) {
    for (std::uint64_t j : independent) {
      if (std::popcount(i) >= std::popcount(j)) continue;
      ++report.checked;
      bool augmentable = false;
      for (std::uint64_t rest = j & ~i; rest != 0; rest &= rest - 1) {
        if (indep[i | (rest & -rest)]) {
          augmentable = true;
          break;
        }
      }
      if (!augmentable && found < kMaxWitnesses) {
        report.witnesses.push_back(
            {"III", {ground.SubsetByMask(i), ground.SubsetByMask(j)}});
        ++found;
      }
    }
  }
  return report;
}

std::vector<ElementSet> AllBases(const MatroidView& m) {
  const ElementSet& ground = m.ground();
  const std::vector<bool> indep = IndependenceTable(m);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < indep.size(); ++mask) {
    if (!indep[mask]) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < ground.size() && maximal; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if ((mask & bit) == 0 && indep[mask | bit]) maximal = false;
    }
    if (maximal) out.push_back(ground.SubsetByMask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> ExchangeSearch(const MatroidView& m, const ElementSet& b0,
                                       const ElementSet& b1, const ElementSet& x) {
  if (!x.IsSubsetOf(b0)) {
    throw DomainError("x = " + m.labels().Format(x) + " is not a subset of b0");
  }
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b1.size()); ++mask) {
    ElementSet y = b1.SubsetByMask(mask);
    if (m.IsBasis(b0.Minus(x).Union(y)) && m.IsBasis(b1.Minus(y).Union(x))) {
      out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end(), SizeThenLexLess);
  return out;
}

namespace {

class MatchingSearch {
 public:
  MatchingSearch(std::vector<std::vector<std::size_t>> options, bool count_all)
      : options_(std::move(options)),
        count_all_(count_all),
        assigned_(options_.size(), kFree),
        taken_(options_.size(), false) {}

  std::uint64_t Run() {
    Recurse(0);
    return solutions_;
  }
  const std::vector<std::size_t>& first() const { return first_; }

 private:
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

  bool Done() const { return solutions_ > 0 && !count_all_; }

  void Recurse(std::size_t depth) {
    if (depth == options_.size()) {
      if (solutions_++ == 0) first_ = assigned_;
      return;
    }
    // Most constrained unassigned row first.
    std::size_t best = kFree;
    std::size_t best_count = kFree;
    for (std::size_t r = 0; r < options_.size(); ++r) {
      if (assigned_[r] != kFree) continue;
      std::size_t count = 0;
      for (std::size_t c : options_[r]) count += taken_[c] ? 0 : 1;
      if (count < best_count) {
        best = r;
        best_count = count;
      }
    }
    if (best_count == 0) return;
    for (std::size_t c : options_[best]) {
      if (taken_[c]) continue;
      assigned_[best] = c;
      taken_[c] = true;
      Recurse(depth + 1);
      taken_[c] = false;
      assigned_[best] = kFree;
      if (Done()) return;
    }
  }

  std::vector<std::vector<std::size_t>> options_;
  bool count_all_;
  std::vector<std::size_t> assigned_;
  std::vector<bool> taken_;
  std::vector<std::size_t> first_;
  std::uint64_t solutions_ = 0;
};

}  // namespace

BijectionSearchResult BijectionSearch(const MatroidView& m, const ElementSet& b0,
                                      const ElementSet& b1, std::size_t k,
                                      bool count_all) {
  BijectionSearchResult result;
  const std::vector<ElementSet> left = SubsetsOfSize(b0, k);
  const std::vector<ElementSet> right = SubsetsOfSize(b1, k);
  if (left.size() != right.size()) return result;

  std::vector<std::vector<std::size_t>> options(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    const ElementSet rest = b0.Minus(left[i]);
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (m.IsBasis(rest.Union(right[j]))) options[i].push_back(j);
    }
  }
  MatchingSearch search(std::move(options), count_all);
  result.solutions = search.Run();
  result.exists = result.solutions > 0;
  if (result.exists) {
    for (std::size_t i = 0; i < left.size(); ++i) {
      result.witness.emplace_back(left[i], right[search.first()[i]]);
    }
  }
  return result;
}

}  // namespace exmat

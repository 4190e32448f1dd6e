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

#include "exmat/subset_bijection.h"

#include <algorithm>
#include <set>
#include <string>

#include "exmat/errors.h"

namespace exmat {

SubsetBijection::SubsetBijection(MatroidView m, ElementSet b0, ElementSet b1)
    : matroid_(std::move(m)), b0_(std::move(b0)), b1_(std::move(b1)) {
  Basis base0 = Basis::Certify(matroid_, b0_, "b0");
  Basis base1 = Basis::Certify(matroid_, b1_, "b1");
  order_ = SerialExchangeOrder(matroid_, base0, base1);
}

SubsetBijection& SubsetBijection::Minor(std::size_t alpha) {
  auto it = minors_.find(alpha);
  if (it != minors_.end()) return *it->second;
  const auto& e = order_.e_seq;
  const auto& f = order_.f_seq;
  ElementSet contracted{f[alpha]};
  for (std::size_t b = 0; b < alpha; ++b) contracted.Insert(e[b]);
  ElementSet sub_b0;
  ElementSet sub_b1;
  for (std::size_t b = alpha + 1; b < e.size(); ++b) {
    sub_b0.Insert(e[b]);
    sub_b1.Insert(f[b]);
  }
  auto sub = std::make_unique<SubsetBijection>(matroid_.Contract(contracted),
                                               std::move(sub_b0), std::move(sub_b1));
  return *minors_.emplace(alpha, std::move(sub)).first->second;
}

ElementSet SubsetBijection::Apply(const ElementSet& i) {
  if (!i.IsSubsetOf(b0_)) {
    throw DomainError("F is only defined on subsets of b0; got " +
                      matroid_.labels().Format(i));
  }
  if (auto it = forward_.find(i); it != forward_.end()) return it->second;

  ElementSet image;
  if (!i.empty()) {
    // e_seq lists b0 in canonical order, so the smallest member of i sits at
    // its rank in b0.
    const ElementId smallest = i.front();
    const auto& e = order_.e_seq;
    const std::size_t alpha = static_cast<std::size_t>(
        std::lower_bound(e.begin(), e.end(), smallest) - e.begin());
    image = Minor(alpha).Apply(i.Without(smallest)).With(order_.f_seq[alpha]);
  }

  const LabelTable& labels = matroid_.labels();
  if (image.size() != i.size()) {
    throw InvariantViolation("F" + labels.Format(i) + " = " + labels.Format(image) +
                             " changes size");
  }
  if (!matroid_.IsBasis(b0_.Minus(i).Union(image))) {
    throw InvariantViolation("(b0 \\ I) + F(I) is not a basis for I = " +
                             labels.Format(i) + ", F(I) = " + labels.Format(image) +
                             " [matroid " + matroid_.Describe() + "]");
  }
  auto [pos, inserted] = inverse_.emplace(image, i);
  if (!inserted && pos->second != i) {
    throw InvariantViolation("F is not injective: " + labels.Format(pos->second) +
                             " and " + labels.Format(i) + " both map to " +
                             labels.Format(image));
  }
  forward_.emplace(i, image);
  return image;
}

ElementSet SubsetBijection::Inverse(const ElementSet& j) {
  if (!j.IsSubsetOf(b1_)) {
    throw DomainError("F^-1 is only defined on subsets of b1; got " +
                      matroid_.labels().Format(j));
  }
  if (auto it = inverse_.find(j); it != inverse_.end()) return it->second;
  for (const ElementSet& candidate : SubsetsOfSize(b0_, j.size())) {
    if (Apply(candidate) == j) return candidate;
  }
  throw InvariantViolation("F is not surjective: nothing maps to " +
                           matroid_.labels().Format(j));
}

std::size_t SubsetBijection::materialized_minors() const {
  std::size_t count = minors_.size();
  for (const auto& [alpha, sub] : minors_) count += sub->materialized_minors();
  return count;
}

SubsetBijection BuildBijection(const MatroidView& m, const Basis& b0,
                               const Basis& b1) {
  return SubsetBijection(m, b0.elements(), b1.elements());
}

std::vector<std::pair<ElementSet, ElementSet>> EnumerateGraph(
    SubsetBijection& bij, std::size_t max_size) {
  if (max_size > bij.b0().size()) {
    throw DomainError("max_size " + std::to_string(max_size) + " exceeds |b0| = " +
                      std::to_string(bij.b0().size()));
  }
  const LabelTable& labels = bij.matroid().labels();
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  for (std::size_t k = 0; k <= max_size; ++k) {
    std::set<ElementSet> images;
    for (ElementSet& i : SubsetsOfSize(bij.b0(), k)) {
      ElementSet image = bij.Apply(i);
      if (image.size() != k || !image.IsSubsetOf(bij.b1())) {
        throw InvariantViolation("image " + labels.Format(image) +
                                 " is not a " + std::to_string(k) +
                                 "-subset of b1");
      }
      if (!images.insert(image).second) {
        throw InvariantViolation("F is not injective at " + labels.Format(image));
      }
      pairs.emplace_back(std::move(i), std::move(image));
    }
    if (images.size() != Binomial(bij.b1().size(), k)) {
      throw InvariantViolation("F misses some " + std::to_string(k) +
                               "-subsets of b1");
    }
  }
  return pairs;
}

}  // namespace exmat

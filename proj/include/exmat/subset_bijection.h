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

#ifndef EXMAT_SUBSET_BIJECTION_H_
#define EXMAT_SUBSET_BIJECTION_H_

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "exmat/base_exchange.h"
#include "exmat/element.h"
#include "exmat/matroid.h"

namespace exmat {

// Size-preserving bijection F between the subsets of B0 and of B1 with
// (B0 \ I) ∪ F(I) a basis for every I.
//
// With the serial order (e, f) of (B0, B1), a non-empty I whose smallest
// member is e_a is sent to F_a(I - e_a) + f_a, where F_a is the bijection of
// the same kind for the minor M / ({e_b : b < a} ∪ {f_a}) and the bases
// {e_b : b > a}, {f_b : b > a}. Sub-bijections, their serial orders and all
// evaluated values are memoized, so nothing is computed until asked for.
//
// Evaluation mutates the memo tables: calls must be serialized. Results do
// not depend on evaluation order.
class SubsetBijection {
 public:
  // Computes the serial order; throws PreconditionError if b0 or b1 is not a
  // basis of m.
  SubsetBijection(MatroidView m, ElementSet b0, ElementSet b1);

  const MatroidView& matroid() const { return matroid_; }
  const ElementSet& b0() const { return b0_; }
  const ElementSet& b1() const { return b1_; }
  const SerialOrder& order() const { return order_; }

  // F(i). Throws DomainError unless i ⊆ b0, and InvariantViolation if the
  // basis condition or injectivity fails for the value.
  ElementSet Apply(const ElementSet& i);

  // F^{-1}(j), found by evaluating F over the subsets of b0 of size |j|.
  // Throws DomainError unless j ⊆ b1.
  ElementSet Inverse(const ElementSet& j);

  // Number of sub-bijections instantiated below this one (for tests).
  std::size_t materialized_minors() const;
  std::size_t evaluated_count() const { return forward_.size(); }

 private:
  SubsetBijection& Minor(std::size_t alpha);

  MatroidView matroid_;
  ElementSet b0_;
  ElementSet b1_;
  SerialOrder order_;
  std::map<std::size_t, std::unique_ptr<SubsetBijection>> minors_;
  std::map<ElementSet, ElementSet> forward_;
  std::map<ElementSet, ElementSet> inverse_;
};

SubsetBijection BuildBijection(const MatroidView& m, const Basis& b0,
                               const Basis& b1);

// All pairs (I, F(I)) with |I| <= max_size, ordered by size then
// lexicographically. Injectivity and surjectivity onto the subsets of b1 of
// size <= max_size are checked before returning (InvariantViolation
// otherwise). Throws DomainError if max_size > |b0|.
std::vector<std::pair<ElementSet, ElementSet>> EnumerateGraph(
    SubsetBijection& bij, std::size_t max_size);

}  // namespace exmat

#endif  // EXMAT_SUBSET_BIJECTION_H_

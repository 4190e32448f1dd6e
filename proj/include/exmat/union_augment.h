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

#ifndef EXMAT_UNION_AUGMENT_H_
#define EXMAT_UNION_AUGMENT_H_

#include <optional>
#include <variant>
#include <vector>

#include "exmat/element.h"
#include "exmat/matroid.h"

namespace exmat {

// Matroids M_0..M_{k-1} on a common ground set E together with pairwise
// disjoint sets I_i, I_i independent in M_i.
class CoverState {
 public:
  // Throws DomainError if the matroids do not share a ground set, the part
  // count differs from the matroid count, parts overlap, or a part is
  // dependent in its matroid.
  CoverState(std::vector<MatroidView> matroids, std::vector<ElementSet> parts);
  // All parts empty.
  static CoverState Empty(std::vector<MatroidView> matroids);

  const std::vector<MatroidView>& matroids() const { return matroids_; }
  const std::vector<ElementSet>& parts() const { return parts_; }
  const ElementSet& ground() const { return matroids_.front().ground(); }
  // E minus the union of the parts.
  const ElementSet& uncovered() const { return uncovered_; }
  std::size_t covered_count() const;

 private:
  std::vector<MatroidView> matroids_;
  std::vector<ElementSet> parts_;
  ElementSet uncovered_;
};

struct Augmented {
  // The newly covered element of U.
  ElementId element;
  std::vector<ElementSet> parts;
};

struct Blocked {
  // U ⊆ S ⊆ E with I_i ∩ S spanning S in M_i for every i.
  ElementSet blocker;
};

using AugmentOutcome = std::variant<Augmented, Blocked>;

// One round of the exchange-digraph search.
//
// Arcs go from y to every x != y on the fundamental circuit of y in I_i
// (for each part i not containing y); y is a sink for part i when I_i + y is
// independent. Breadth-first search from U (canonical order at every step)
// finds a shortest path to a sink, which is replayed to cover one more
// element. If no sink is reachable the reachable set is returned as the
// blocker. Either certificate is checked before returning and a failure
// throws InvariantViolation.
//
// Throws PreconditionError if nothing is uncovered.
AugmentOutcome TryAugment(const CoverState& state);

struct CoverResult {
  CoverState state;
  // Set iff the final state leaves elements uncovered.
  std::optional<ElementSet> blocker;
};

// Applies TryAugment until everything is covered or a blocker appears.
CoverResult CoverOrBlock(CoverState state);

// Literal check of the blocker property.
bool IsBlocker(const CoverState& state, const ElementSet& s);

}  // namespace exmat

#endif  // EXMAT_UNION_AUGMENT_H_

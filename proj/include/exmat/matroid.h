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

#ifndef EXMAT_MATROID_H_
#define EXMAT_MATROID_H_

#include <memory>
#include <string>
#include <vector>

#include "exmat/element.h"

namespace exmat {

// Independence predicate of a root matroid on the ground set {0, ..., size-1}.
// Implementations must be immutable and safe to call concurrently.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  virtual std::size_t size() const = 0;
  // `s` is a subset of the ground set; no range checks are expected.
  virtual bool IsIndependent(const ElementSet& s) const = 0;
  virtual std::string Describe() const = 0;
};

// One entry of a view's minor stack.
struct MinorStep {
  ElementSet contracted;
  ElementSet deleted;
  // Maximal independent subset of `contracted` chosen when the step was
  // applied (empty for deletions).
  ElementSet transversal;
};

// A minor of a root matroid, presented through the root's oracle.
//
// A set S of the view is independent iff S + T is independent in the root,
// where T is the union of the transversals stored for all contractions. Views
// are immutable; every operation is a pure function of its arguments.
class MatroidView {
 public:
  MatroidView(std::shared_ptr<const IndependenceOracle> oracle,
              std::shared_ptr<const LabelTable> labels);

  const ElementSet& ground() const { return ground_; }
  const LabelTable& labels() const { return *labels_; }
  const std::shared_ptr<const LabelTable>& shared_labels() const {
    return labels_;
  }
  const IndependenceOracle& oracle() const { return *oracle_; }
  const std::vector<MinorStep>& minor_stack() const { return stack_; }

  // Throws DomainError unless s is a subset of the ground set.
  void CheckInGround(const ElementSet& s) const;

  bool IsIndependent(const ElementSet& s) const;
  bool IsBasis(const ElementSet& s) const;

  // The unique circuit inside i + e through e. Throws PreconditionError if i
  // is dependent, e is in i, or i + e is independent.
  ElementSet FundamentalCircuit(ElementId e, const ElementSet& i) const;

  // Greedy extension of the independent set i by elements of `pool`, scanned
  // in canonical order.
  ElementSet ExtendToBasis(const ElementSet& i, const ElementSet& pool) const;
  // ExtendToBasis(∅, ground()).
  ElementSet SomeBasis() const;
  std::size_t Rank() const;
  // Size of a maximal independent subset of x.
  std::size_t RankOf(const ElementSet& x) const;

  // True iff e is in x or {e} is dependent in the contraction by x.
  // x may be any subset of the ground set.
  bool Spans(const ElementSet& x, ElementId e) const;

  ElementSet Closure(const ElementSet& x) const;

  MatroidView Contract(const ElementSet& x) const;
  MatroidView Restrict(const ElementSet& x) const;
  MatroidView Delete(const ElementSet& x) const;

  // Human-readable summary of the root and the minor stack, used in
  // diagnostics.
  std::string Describe() const;

 private:
  bool IndependentUnchecked(const ElementSet& s) const;

  std::shared_ptr<const IndependenceOracle> oracle_;
  std::shared_ptr<const LabelTable> labels_;
  ElementSet ground_;
  ElementSet transversal_;
  std::vector<MinorStep> stack_;
};

// A set certified to be a basis of some view at construction time.
class Basis {
 public:
  // Throws PreconditionError if `s` is not a basis of `m`.
  static Basis Certify(const MatroidView& m, ElementSet s,
                       const std::string& name = "set");

  const ElementSet& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  explicit Basis(ElementSet s) : elements_(std::move(s)) {}
  ElementSet elements_;
};

}  // namespace exmat

#endif  // EXMAT_MATROID_H_

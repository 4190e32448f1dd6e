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

#include "exmat/matroid.h"

#include <utility>

#include "exmat/errors.h"

namespace exmat {

MatroidView::MatroidView(std::shared_ptr<const IndependenceOracle> oracle,
                         std::shared_ptr<const LabelTable> labels)
    : oracle_(std::move(oracle)), labels_(std::move(labels)) {
  if (oracle_ == nullptr || labels_ == nullptr) {
    throw DomainError("matroid view needs an oracle and a label table");
  }
  if (oracle_->size() != labels_->size()) {
    throw DomainError("oracle ground size does not match label table");
  }
  ground_ = labels_->All();
}

void MatroidView::CheckInGround(const ElementSet& s) const {
  if (s.IsSubsetOf(ground_)) return;
  ElementSet outside = s.Minus(ground_);
  std::string names;
  for (ElementId e : outside) {
    if (!names.empty()) names += ',';
    names += e.index() < labels_->size() ? labels_->Label(e)
                                         : "#" + std::to_string(e.index());
  }
  throw DomainError("elements {" + names + "} are not in the ground set");
}

bool MatroidView::IndependentUnchecked(const ElementSet& s) const {
  if (transversal_.empty()) return oracle_->IsIndependent(s);
  return oracle_->IsIndependent(s.Union(transversal_));
}

bool MatroidView::IsIndependent(const ElementSet& s) const {
  CheckInGround(s);
  return IndependentUnchecked(s);
}

bool MatroidView::IsBasis(const ElementSet& s) const {
  CheckInGround(s);
  if (!IndependentUnchecked(s)) return false;
  for (ElementId e : ground_) {
    if (s.Contains(e)) continue;
    if (IndependentUnchecked(s.With(e))) return false;
  }
  return true;
}

ElementSet MatroidView::FundamentalCircuit(ElementId e,
                                           const ElementSet& i) const {
  CheckInGround(i.With(e));
  if (i.Contains(e)) {
    throw PreconditionError("fundamental circuit: element " +
                            labels_->Label(e) + " already in the set");
  }
  if (!IndependentUnchecked(i)) {
    throw PreconditionError("fundamental circuit: set " + labels_->Format(i) +
                            " is dependent");
  }
  ElementSet circuit = i.With(e);
  if (IndependentUnchecked(circuit)) {
    throw PreconditionError("no circuit: " + labels_->Format(circuit) +
                            " is independent");
  }
  for (ElementId x : i) {
    ElementSet smaller = circuit.Without(x);
    if (!IndependentUnchecked(smaller)) circuit = std::move(smaller);
  }
  return circuit;
}

ElementSet MatroidView::ExtendToBasis(const ElementSet& i,
                                      const ElementSet& pool) const {
  CheckInGround(i);
  CheckInGround(pool);
  if (!IndependentUnchecked(i)) {
    throw PreconditionError("cannot extend dependent set " +
                            labels_->Format(i));
  }
  ElementSet current = i;
  for (ElementId e : pool) {
    if (current.Contains(e)) continue;
    ElementSet bigger = current.With(e);
    if (IndependentUnchecked(bigger)) current = std::move(bigger);
  }
  return current;
}

ElementSet MatroidView::SomeBasis() const { return ExtendToBasis({}, ground_); }

std::size_t MatroidView::Rank() const { return SomeBasis().size(); }

std::size_t MatroidView::RankOf(const ElementSet& x) const {
  return ExtendToBasis({}, x).size();
}

bool MatroidView::Spans(const ElementSet& x, ElementId e) const {
  CheckInGround(x.With(e));
  if (x.Contains(e)) return true;
  ElementSet base = ExtendToBasis({}, x);
  return !IndependentUnchecked(base.With(e));
}

ElementSet MatroidView::Closure(const ElementSet& x) const {
  CheckInGround(x);
  ElementSet base = ExtendToBasis({}, x);
  std::vector<ElementId> out;
  for (ElementId e : ground_) {
    if (x.Contains(e) || !IndependentUnchecked(base.With(e))) out.push_back(e);
  }
  return ElementSet::FromSorted(std::move(out));
}

MatroidView MatroidView::Contract(const ElementSet& x) const {
  CheckInGround(x);
  MatroidView out = *this;
  MinorStep step;
  step.contracted = x;
  step.transversal = ExtendToBasis({}, x);
  out.transversal_ = transversal_.Union(step.transversal);
  out.ground_ = ground_.Minus(x);
  out.stack_.push_back(std::move(step));
  return out;
}

MatroidView MatroidView::Restrict(const ElementSet& x) const {
  CheckInGround(x);
  MatroidView out = *this;
  MinorStep step;
  step.deleted = ground_.Minus(x);
  out.ground_ = x;
  out.stack_.push_back(std::move(step));
  return out;
}

MatroidView MatroidView::Delete(const ElementSet& x) const {
  CheckInGround(x);
  return Restrict(ground_.Minus(x));
}

std::string MatroidView::Describe() const {
  std::string out = oracle_->Describe();
  for (const MinorStep& step : stack_) {
    if (!step.contracted.empty()) {
      out += " / " + labels_->Format(step.contracted);
    }
    if (!step.deleted.empty()) out += " - " + labels_->Format(step.deleted);
  }
  out += " on " + labels_->Format(ground_);
  return out;
}

Basis Basis::Certify(const MatroidView& m, ElementSet s,
                     const std::string& name) {
  if (!s.IsSubsetOf(m.ground())) {
    throw DomainError(name + " " + m.labels().Format(s) +
                      " is not contained in the ground set");
  }
  if (!m.IsBasis(s)) {
    throw PreconditionError(name + " " + m.labels().Format(s) +
                            " is not a basis");
  }
  return Basis(std::move(s));
}

}  // namespace exmat

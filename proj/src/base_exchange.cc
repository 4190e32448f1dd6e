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

#include "exmat/base_exchange.h"

#include <utility>

#include "exmat/errors.h"
#include "exmat/union_augment.h"

namespace exmat {
namespace {

void ThrowIfInvalid(const std::string& problem, const MatroidView& m,
                    const std::string& what) {
  if (problem.empty()) return;
  throw InvariantViolation(what + ": " + problem + " [matroid " + m.Describe() +
                           "]");
}

// Moves elements of z into y, in canonical order, while y is smaller than
// `target` and stays independent in `for_y`.
void Rebalance(const MatroidView& for_y, std::size_t target, ElementSet& y,
               ElementSet& z) {
  for (ElementId e : ElementSet(z)) {
    if (y.size() >= target) break;
    ElementSet grown = y.With(e);
    if (for_y.IsIndependent(grown)) {
      y = std::move(grown);
      z.Erase(e);
    }
  }
}

void CheckPartition(const ElementSet& b0, const std::vector<ElementSet>& classes,
                    const LabelTable& labels) {
  ElementSet seen;
  for (const ElementSet& cls : classes) {
    if (cls.empty()) throw DomainError("partition classes must be non-empty");
    if (!cls.IsSubsetOf(b0)) {
      throw DomainError("class " + labels.Format(cls) + " is not inside b0");
    }
    if (!seen.IsDisjointFrom(cls)) {
      throw DomainError("class " + labels.Format(cls) + " overlaps an earlier class");
    }
    seen = seen.Union(cls);
  }
  if (seen != b0) {
    throw DomainError("classes do not cover b0: missing " +
                      labels.Format(b0.Minus(seen)));
  }
}

// One recursion step: exchange `cls` in M / used_x against the remaining
// parts of both bases.
ExchangeClass ExchangeStep(const MatroidView& minor, const ElementSet& b0,
                           const ElementSet& b1, const ElementSet& used_x,
                           const ElementSet& used_y, const ElementSet& cls,
                           bool through_complement) {
  ElementSet rest0 = b0.Minus(used_x);
  ElementSet rest1 = b1.Minus(used_y);
  if (!rest1.IsSubsetOf(minor.ground()) || !minor.IsBasis(rest1)) {
    throw InvariantViolation("remaining part of b1 " + minor.labels().Format(rest1) +
                             " is not a basis of " + minor.Describe());
  }
  Basis base0 = Basis::Certify(minor, rest0, "remaining b0");
  Basis base1 = Basis::Certify(minor, rest1, "remaining b1");
  SymmetricExchangeCertificate cert =
      through_complement ? SymmetricExchangeCofinite(minor, base0, base1, cls)
                         : SymmetricExchange(minor, base0, base1, cls);
  return ExchangeClass{cls, std::move(cert.y)};
}

PartitionExchangePlan RunDriver(const MatroidView& m, const Basis& b0,
                                const Basis& b1,
                                const std::vector<ElementSet>& classes,
                                std::size_t complement_index) {
  const ElementSet& base0 = b0.elements();
  const ElementSet& base1 = b1.elements();
  CheckPartition(base0, classes, m.labels());

  PartitionExchangePlan plan;
  ElementSet used_x;
  ElementSet used_y;
  for (std::size_t n = 0; n < classes.size(); ++n) {
    MatroidView minor = m.Contract(used_x);
    ExchangeClass step = ExchangeStep(minor, base0, base1, used_x, used_y,
                                      classes[n], n == complement_index);
    used_x = used_x.Union(step.x);
    used_y = used_y.Union(step.y);
    plan.classes.push_back(std::move(step));
    plan.sigma.push_back(n);
  }
  if (used_y != base1) {
    throw InvariantViolation("classes of b1 do not cover " +
                             m.labels().Format(base1.Minus(used_y)));
  }
  ThrowIfInvalid(CheckPlan(m, base0, base1, plan), m, "partition exchange");
  return plan;
}

}  // namespace

std::string CheckCertificate(const MatroidView& m, const ElementSet& b0,
                             const ElementSet& b1,
                             const SymmetricExchangeCertificate& cert) {
  const LabelTable& labels = m.labels();
  if (!cert.x.IsSubsetOf(b0)) return "X " + labels.Format(cert.x) + " not inside b0";
  if (!cert.y.IsSubsetOf(b1)) return "Y " + labels.Format(cert.y) + " not inside b1";
  if (cert.base_a != b0.Minus(cert.x).Union(cert.y)) return "base_a != (b0\\X)+Y";
  if (cert.base_b != b1.Minus(cert.y).Union(cert.x)) return "base_b != (b1\\Y)+X";
  if (cert.y.Minus(b0).size() != cert.x.Minus(b1).size()) {
    return "|Y\\b0| != |X\\b1|";
  }
  if (!m.IsBasis(cert.base_a)) return "base_a " + labels.Format(cert.base_a) + " is not a basis";
  if (!m.IsBasis(cert.base_b)) return "base_b " + labels.Format(cert.base_b) + " is not a basis";
  return {};
}

SymmetricExchangeCertificate SymmetricExchange(const MatroidView& m,
                                               const Basis& b0, const Basis& b1,
                                               const ElementSet& x) {
  const ElementSet& base0 = b0.elements();
  const ElementSet& base1 = b1.elements();
  if (!x.IsSubsetOf(base0)) {
    throw DomainError("X " + m.labels().Format(x) + " is not a subset of b0");
  }

  const ElementSet common = base0.Intersect(base1);
  const MatroidView reduced = m.Contract(common);
  const ElementSet b0_only = base0.Minus(base1);
  const ElementSet b1_only = base1.Minus(base0);
  const ElementSet x_only = x.Minus(base1);

  MatroidView for_y = reduced.Contract(b0_only.Minus(x_only)).Restrict(b1_only);
  MatroidView for_z = reduced.Contract(x_only).Restrict(b1_only);
  CoverResult cover = CoverOrBlock(CoverState::Empty({for_y, for_z}));
  if (cover.blocker) {
    throw InvariantViolation(
        "symmetric exchange left " +
        m.labels().Format(cover.state.uncovered()) + " uncovered [matroid " +
        m.Describe() + "]");
  }
  ElementSet y = cover.state.parts()[0];
  ElementSet z = cover.state.parts()[1];
  Rebalance(for_y, x_only.size(), y, z);
  if (y.size() != x_only.size()) {
    throw InvariantViolation("rebalancing reached |Y| = " +
                             std::to_string(y.size()) + " instead of " +
                             std::to_string(x_only.size()));
  }

  SymmetricExchangeCertificate cert;
  cert.x = x;
  cert.y = y.Union(common.Intersect(x));
  cert.base_a = base0.Minus(x).Union(cert.y);
  cert.base_b = base1.Minus(cert.y).Union(x);
  ThrowIfInvalid(CheckCertificate(m, base0, base1, cert), m, "symmetric exchange");
  return cert;
}

SymmetricExchangeCertificate SymmetricExchangeCofinite(const MatroidView& m,
                                                       const Basis& b0,
                                                       const Basis& b1,
                                                       const ElementSet& x) {
  const ElementSet& base0 = b0.elements();
  const ElementSet& base1 = b1.elements();
  if (!x.IsSubsetOf(base0)) {
    throw DomainError("X " + m.labels().Format(x) + " is not a subset of b0");
  }
  SymmetricExchangeCertificate inner =
      SymmetricExchange(m, b0, b1, base0.Minus(x));
  SymmetricExchangeCertificate cert;
  cert.x = x;
  cert.y = base1.Minus(inner.y);
  cert.base_a = base0.Minus(x).Union(cert.y);
  cert.base_b = base1.Minus(cert.y).Union(x);
  ThrowIfInvalid(CheckCertificate(m, base0, base1, cert), m,
                 "cofinite symmetric exchange");
  return cert;
}

std::string CheckPlan(const MatroidView& m, const ElementSet& b0,
                      const ElementSet& b1, const PartitionExchangePlan& plan) {
  const LabelTable& labels = m.labels();
  const std::size_t n = plan.classes.size();
  if (plan.sigma.size() != n) return "sigma has the wrong length";
  for (std::size_t i = 0; i < n; ++i) {
    if (plan.sigma[i] != i) return "sigma is not the identity";
  }
  ElementSet xs;
  ElementSet ys;
  for (const ExchangeClass& c : plan.classes) {
    if (!xs.IsDisjointFrom(c.x)) return "X classes overlap";
    if (!ys.IsDisjointFrom(c.y)) return "Y classes overlap";
    xs = xs.Union(c.x);
    ys = ys.Union(c.y);
  }
  if (xs != b0) return "X classes do not partition b0";
  if (ys != b1) return "Y classes do not partition b1";

  ElementSet prefix_x;
  for (std::size_t i = 0; i < n; ++i) {
    const ExchangeClass& c = plan.classes[i];
    ElementSet single = b0.Minus(c.x).Union(c.y);
    if (!m.IsBasis(single)) {
      return "(b0\\X_" + std::to_string(i) + ")+Y_" + std::to_string(i) + " = " +
             labels.Format(single) + " is not a basis";
    }
    ElementSet suffix_y;
    for (std::size_t j = i; j < n; ++j) suffix_y = suffix_y.Union(plan.classes[j].y);
    ElementSet tail = prefix_x.Union(suffix_y);
    if (!m.IsBasis(tail)) {
      return "tail set " + std::to_string(i) + " " + labels.Format(tail) +
             " is not a basis";
    }
    prefix_x = prefix_x.Union(c.x);
  }
  return {};
}

PartitionExchangePlan PartitionExchange(const MatroidView& m, const Basis& b0,
                                        const Basis& b1,
                                        const std::vector<ElementSet>& classes) {
  return RunDriver(m, b0, b1, classes, classes.size());
}

PartitionExchangePlan PartitionExchangeOneInfinite(
    const MatroidView& m, const Basis& b0, const Basis& b1,
    const std::vector<SizedClass>& classes) {
  std::vector<ElementSet> sets;
  std::size_t large = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sets.push_back(classes[i].elements);
    if (!classes[i].unrestricted) continue;
    if (large != classes.size()) {
      throw DomainError("at most one class may be unrestricted in size");
    }
    large = i;
  }
  return RunDriver(m, b0, b1, sets, large);
}

PartitionExchangeStream::PartitionExchangeStream(MatroidView m, Basis b0,
                                                 Basis b1, ClassSource source)
    : root_(std::move(m)),
      b0_(b0.elements()),
      b1_(b1.elements()),
      source_(std::move(source)),
      minor_(root_) {}

std::optional<ExchangeClass> PartitionExchangeStream::Next() {
  std::optional<ElementSet> cls = source_();
  if (!cls) return std::nullopt;
  const LabelTable& labels = root_.labels();
  if (cls->empty()) throw DomainError("stream class is empty");
  if (!cls->IsSubsetOf(b0_)) {
    throw DomainError("stream class " + labels.Format(*cls) + " is not inside b0");
  }
  if (!cls->IsDisjointFrom(used_x_)) {
    throw DomainError("stream class " + std::to_string(produced_.size()) + " " +
                      labels.Format(*cls) + " overlaps an earlier class");
  }
  ExchangeClass step =
      ExchangeStep(minor_, b0_, b1_, used_x_, used_y_, *cls, false);
  used_x_ = used_x_.Union(step.x);
  used_y_ = used_y_.Union(step.y);
  minor_ = minor_.Contract(step.x);
  produced_.push_back(step);
  return step;
}

bool PartitionExchangeStream::TailInvariantHolds() const {
  return root_.IsBasis(used_x_.Union(b1_.Minus(used_y_)));
}

PartitionExchangePlan PartitionExchangeStream::ToPlan() const {
  PartitionExchangePlan plan;
  plan.classes = produced_;
  for (std::size_t i = 0; i < produced_.size(); ++i) plan.sigma.push_back(i);
  return plan;
}

std::string CheckSerialOrder(const MatroidView& m, const ElementSet& b0,
                             const ElementSet& b1, const SerialOrder& order) {
  const LabelTable& labels = m.labels();
  const std::size_t n = order.e_seq.size();
  if (order.f_seq.size() != n) return "e and f have different lengths";
  if (ElementSet(order.e_seq) != b0 || ElementSet(order.e_seq).size() != n) {
    return "e does not enumerate b0";
  }
  if (ElementSet(order.f_seq) != b1 || ElementSet(order.f_seq).size() != n) {
    return "f does not enumerate b1";
  }
  for (std::size_t a = 0; a < n; ++a) {
    ElementSet swapped = b0.Without(order.e_seq[a]).With(order.f_seq[a]);
    if (!m.IsBasis(swapped)) {
      return "b0 - " + labels.Label(order.e_seq[a]) + " + " +
             labels.Label(order.f_seq[a]) + " is not a basis";
    }
    ElementSet tail = b0;
    for (std::size_t b = a; b < n; ++b) tail.Erase(order.e_seq[b]);
    for (std::size_t b = a; b < n; ++b) tail.Insert(order.f_seq[b]);
    if (!m.IsBasis(tail)) {
      return "tail set at " + std::to_string(a) + " " + labels.Format(tail) +
             " is not a basis";
    }
  }
  return {};
}

SerialOrder SerialExchangeOrder(const MatroidView& m, const Basis& b0,
                                const Basis& b1) {
  std::vector<ElementSet> singletons;
  for (ElementId e : b0.elements()) singletons.push_back(ElementSet{e});
  PartitionExchangePlan plan = PartitionExchange(m, b0, b1, singletons);
  SerialOrder order;
  for (const ExchangeClass& c : plan.classes) {
    if (c.y.size() != 1) {
      throw InvariantViolation("singleton class paired with " +
                               m.labels().Format(c.y));
    }
    order.e_seq.push_back(c.x.front());
    order.f_seq.push_back(c.y.front());
  }
  ThrowIfInvalid(CheckSerialOrder(m, b0.elements(), b1.elements(), order), m,
                 "serial order");
  return order;
}

}  // namespace exmat

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

#ifndef EXMAT_BASE_EXCHANGE_H_
#define EXMAT_BASE_EXCHANGE_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exmat/element.h"
#include "exmat/matroid.h"

namespace exmat {

// Answer to a symmetric subset exchange query: Y ⊆ B1 such that
// base_a = (B0 \ X) ∪ Y and base_b = (B1 \ Y) ∪ X are both bases.
struct SymmetricExchangeCertificate {
  ElementSet x;
  ElementSet y;
  ElementSet base_a;
  ElementSet base_b;

  friend bool operator==(const SymmetricExchangeCertificate&,
                         const SymmetricExchangeCertificate&) = default;
};

// Empty string if the certificate is valid for (b0, b1), otherwise a
// description of the first failed condition.
std::string CheckCertificate(const MatroidView& m, const ElementSet& b0,
                             const ElementSet& b1,
                             const SymmetricExchangeCertificate& cert);

// Finds Y for a subset X of B0.
//
// Works in M / (B0 ∩ B1) with the disjoint bases B0' = B0 \ B1,
// B1' = B1 \ B0 and X' = X \ B1. Disjoint Y, Z ⊆ B1' are grown by
// augmenting paths for the pair of matroids M/(B0' \ X')|B1' (for Y) and
// M/X'|B1' (for Z) until B1' is covered; the result is
// Y' ∪ (B0 ∩ B1 ∩ X).
//
// Throws DomainError if x is not a subset of b0 and InvariantViolation if the
// cover cannot be completed or the certificate fails.
SymmetricExchangeCertificate SymmetricExchange(const MatroidView& m,
                                               const Basis& b0, const Basis& b1,
                                               const ElementSet& x);

// Same query answered through the complement: runs SymmetricExchange on
// B0 \ x and returns Y = B1 \ Y*.
SymmetricExchangeCertificate SymmetricExchangeCofinite(const MatroidView& m,
                                                       const Basis& b0,
                                                       const Basis& b1,
                                                       const ElementSet& x);

struct ExchangeClass {
  ElementSet x;
  ElementSet y;

  friend bool operator==(const ExchangeClass&, const ExchangeClass&) = default;
};

// Ordered classes (X_i, Y_i) with {X_i} partitioning B0 and {Y_i}
// partitioning B1, such that for every i
//   (B0 \ X_i) ∪ Y_i                          is a basis, and
//   (∪_{j<i} X_j) ∪ (∪_{j>=i} Y_j)           is a basis.
struct PartitionExchangePlan {
  std::vector<ExchangeClass> classes;
  // Order in which the classes of B0 were consumed; always the identity here.
  std::vector<std::size_t> sigma;

  friend bool operator==(const PartitionExchangePlan&,
                         const PartitionExchangePlan&) = default;
};

// Literal check of both certificate families; empty string when valid.
std::string CheckPlan(const MatroidView& m, const ElementSet& b0,
                      const ElementSet& b1, const PartitionExchangePlan& plan);

// Sequential driver: class n is exchanged by SymmetricExchange in
// M / (X_0 ∪ ... ∪ X_{n-1}) against the bases B0 minus those classes and B1
// minus the Y already produced.
//
// Throws DomainError if the classes are empty or do not partition b0.
PartitionExchangePlan PartitionExchange(const MatroidView& m, const Basis& b0,
                                        const Basis& b1,
                                        const std::vector<ElementSet>& classes);

// Class description for PartitionExchangeOneInfinite.
struct SizedClass {
  ElementSet elements;
  // At most one class may be unrestricted in size.
  bool unrestricted = false;
};

// Variant allowing one class of unrestricted size. At its turn that class is
// cofinite in what remains of B0, so it is exchanged through
// SymmetricExchangeCofinite; placed last it receives exactly the remainder
// of B1.
//
// Throws DomainError for more than one unrestricted class or a bad partition.
PartitionExchangePlan PartitionExchangeOneInfinite(
    const MatroidView& m, const Basis& b0, const Basis& b1,
    const std::vector<SizedClass>& classes);

// Pull-based form of PartitionExchange. Each call to Next() consumes one class
// from the source and produces its Y. Not safe to share mid-iteration.
class PartitionExchangeStream {
 public:
  using ClassSource = std::function<std::optional<ElementSet>()>;

  PartitionExchangeStream(MatroidView m, Basis b0, Basis b1, ClassSource source);

  // Next (X_i, Y_i), or nullopt once the source is exhausted. Throws
  // DomainError if the class overlaps an earlier one or leaves B0.
  std::optional<ExchangeClass> Next();

  // Classes produced so far.
  const std::vector<ExchangeClass>& produced() const { return produced_; }
  // True iff (∪ produced X) ∪ (B1 \ ∪ produced Y) is a basis.
  bool TailInvariantHolds() const;
  // Everything produced so far as a plan (sigma = identity).
  PartitionExchangePlan ToPlan() const;

 private:
  MatroidView root_;
  ElementSet b0_;
  ElementSet b1_;
  ClassSource source_;
  MatroidView minor_;
  ElementSet used_x_;
  ElementSet used_y_;
  std::vector<ExchangeClass> produced_;
};

// Paired enumerations e (B0 in canonical order) and f of B1 with
//   B0 - e_a + f_a                              a basis for every a, and
//   (B0 \ {e_b : b >= a}) ∪ {f_b : b >= a}      a basis for every a.
struct SerialOrder {
  std::vector<ElementId> e_seq;
  std::vector<ElementId> f_seq;

  friend bool operator==(const SerialOrder&, const SerialOrder&) = default;
};

std::string CheckSerialOrder(const MatroidView& m, const ElementSet& b0,
                             const ElementSet& b1, const SerialOrder& order);

// PartitionExchange with singleton classes in canonical order.
SerialOrder SerialExchangeOrder(const MatroidView& m, const Basis& b0,
                                const Basis& b1);

}  // namespace exmat

#endif  // EXMAT_BASE_EXCHANGE_H_

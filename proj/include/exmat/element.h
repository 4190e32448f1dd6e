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

#ifndef EXMAT_ELEMENT_H_
#define EXMAT_ELEMENT_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace exmat {

// Handle of a ground-set element. Ids are dense indices into the LabelTable of
// the root matroid; the table is sorted, so id order is label order.
class ElementId {
 public:
  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;

 private:
  std::uint32_t index_ = 0;
};

// Finite set of elements. Members are kept sorted and unique, so iteration
// order is the canonical element order.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);
  // Sorts and removes duplicates.
  explicit ElementSet(std::vector<ElementId> ids);

  static ElementSet FromSorted(std::vector<ElementId> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }
  ElementId front() const { return ids_.front(); }
  std::span<const ElementId> span() const { return ids_; }

  bool Contains(ElementId e) const;
  bool IsSubsetOf(const ElementSet& other) const;
  bool IsDisjointFrom(const ElementSet& other) const;

  ElementSet With(ElementId e) const;
  ElementSet Without(ElementId e) const;
  ElementSet Union(const ElementSet& other) const;
  ElementSet Minus(const ElementSet& other) const;
  ElementSet Intersect(const ElementSet& other) const;

  void Insert(ElementId e);
  void Erase(ElementId e);

  // Subset selected by the low bits of `mask`, bit i standing for the i-th
  // member in canonical order. Requires size() < 64.
  ElementSet SubsetByMask(std::uint64_t mask) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Lexicographic on the sorted member lists.
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<ElementId> ids_;
};

// Orders sets by size first, then lexicographically. Used wherever subsets
// are listed ("all pairs with |I| <= k in canonical order").
bool SizeThenLexLess(const ElementSet& a, const ElementSet& b);

// All k-subsets of s in lexicographic order.
std::vector<ElementSet> SubsetsOfSize(const ElementSet& s, std::size_t k);

// Binomial coefficient; exact for the small arguments used here.
std::uint64_t Binomial(std::size_t n, std::size_t k);

// Sorted table of element labels. Shared by all views derived from one root
// matroid.
class LabelTable {
 public:
  LabelTable() = default;
  // Labels must be unique; they are sorted on construction.
  explicit LabelTable(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool Has(std::string_view label) const;
  ElementId Id(std::string_view label) const;
  const std::string& Label(ElementId e) const;

  ElementSet Set(std::span<const std::string> labels) const;
  ElementSet Set(std::initializer_list<std::string_view> labels) const;
  ElementSet All() const;
  std::vector<std::string> Labels(const ElementSet& s) const;
  // "{a,b,c}"
  std::string Format(const ElementSet& s) const;

  friend bool operator==(const LabelTable& a, const LabelTable& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

std::ostream& operator<<(std::ostream& os, ElementId e);
std::ostream& operator<<(std::ostream& os, const ElementSet& s);

}  // namespace exmat

#endif  // EXMAT_ELEMENT_H_

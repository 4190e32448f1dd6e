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

#include "exmat/element.h"

#include <algorithm>
#include <iterator>
#include <utility>

#include "exmat/errors.h"

namespace exmat {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet ElementSet::FromSorted(std::vector<ElementId> ids) {
  ElementSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool ElementSet::Contains(ElementId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

bool ElementSet::IsDisjointFrom(const ElementSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

ElementSet ElementSet::With(ElementId e) const {
  ElementSet out = *this;
  out.Insert(e);
  return out;
}

ElementSet ElementSet::Without(ElementId e) const {
  ElementSet out = *this;
  out.Erase(e);
  return out;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  std::vector<ElementId> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

ElementSet ElementSet::Minus(const ElementSet& other) const {
  std::vector<ElementId> out;
  out.reserve(ids_.size());
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

ElementSet ElementSet::Intersect(const ElementSet& other) const {
  std::vector<ElementId> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

void ElementSet::Insert(ElementId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

void ElementSet::Erase(ElementId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it != ids_.end() && *it == e) ids_.erase(it);
}

ElementSet ElementSet::SubsetByMask(std::uint64_t mask) const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < ids_.size() && (mask >> i) != 0; ++i) {
    if ((mask >> i) & 1U) out.push_back(ids_[i]);
  }
  return FromSorted(std::move(out));
}

bool SizeThenLexLess(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<ElementSet> SubsetsOfSize(const ElementSet& s, std::size_t k) {
  std::vector<ElementSet> out;
  if (k > s.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<ElementId> members;
    members.reserve(k);
    for (std::size_t i : idx) members.push_back(s[i]);
    out.push_back(ElementSet::FromSorted(std::move(members)));
    // Advance the rightmost index that still has room.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == s.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::uint64_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LabelTable::LabelTable(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw DomainError("duplicate element label");
  }
  index_.reserve(labels_.size());
  for (std::uint32_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = i;
}

bool LabelTable::Has(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

ElementId LabelTable::Id(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw DomainError("unknown element label '" + std::string(label) + "'");
  }
  return ElementId(it->second);
}

const std::string& LabelTable::Label(ElementId e) const {
  if (e.index() >= labels_.size()) {
    throw DomainError("element id " + std::to_string(e.index()) +
                      " out of range");
  }
  return labels_[e.index()];
}

ElementSet LabelTable::Set(std::span<const std::string> labels) const {
  std::vector<ElementId> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) ids.push_back(Id(l));
  return ElementSet(std::move(ids));
}

ElementSet LabelTable::Set(std::initializer_list<std::string_view> labels) const {
  std::vector<ElementId> ids;
  ids.reserve(labels.size());
  for (auto l : labels) ids.push_back(Id(l));
  return ElementSet(std::move(ids));
}

ElementSet LabelTable::All() const {
  std::vector<ElementId> ids;
  ids.reserve(labels_.size());
  for (std::uint32_t i = 0; i < labels_.size(); ++i) ids.emplace_back(i);
  return ElementSet::FromSorted(std::move(ids));
}

std::vector<std::string> LabelTable::Labels(const ElementSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (ElementId e : s) out.push_back(Label(e));
  return out;
}

std::string LabelTable::Format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (ElementId e : s) {
    if (!first) out += ',';
    out += Label(e);
    first = false;
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, ElementId e) {
  return os << '#' << e.index();
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  bool first = true;
  for (ElementId e : s) {
    if (!first) os << ',';
    os << e.index();
    first = false;
  }
  return os << '}';
}

}  // namespace exmat

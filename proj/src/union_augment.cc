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

#include "exmat/union_augment.h"

#include <deque>
#include <map>
#include <string>
#include <utility>

#include "exmat/errors.h"

namespace exmat {
namespace {

constexpr std::size_t kNoPart = static_cast<std::size_t>(-1);

struct Visit {
  // Element that was pushed into `part` to eject this one; unset for sources.
  std::optional<ElementId> from;
  std::size_t part = kNoPart;
};

std::size_t OwnerOf(const std::vector<ElementSet>& parts, ElementId e) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].Contains(e)) return i;
  }
  return kNoPart;
}

void CheckCover(const std::vector<MatroidView>& matroids,
                const std::vector<ElementSet>& parts) {
  ElementSet seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    matroids[i].CheckInGround(parts[i]);
    if (!seen.IsDisjointFrom(parts[i])) {
      throw DomainError("cover parts are not pairwise disjoint");
    }
    seen = seen.Union(parts[i]);
    if (!matroids[i].IsIndependent(parts[i])) {
      throw DomainError("cover part " + std::to_string(i) + " " +
                        matroids[i].labels().Format(parts[i]) +
                        " is dependent in its matroid");
    }
  }
}

}  // namespace

CoverState::CoverState(std::vector<MatroidView> matroids,
                       std::vector<ElementSet> parts)
    : matroids_(std::move(matroids)), parts_(std::move(parts)) {
  if (matroids_.empty()) throw DomainError("cover needs at least one matroid");
  if (matroids_.size() != parts_.size()) {
    throw DomainError("cover has " + std::to_string(matroids_.size()) +
                      " matroids but " + std::to_string(parts_.size()) + " parts");
  }
  for (const MatroidView& m : matroids_) {
    if (m.ground() != matroids_.front().ground() ||
        !(m.labels() == matroids_.front().labels())) {
      throw DomainError("cover matroids must share one ground set");
    }
  }
  CheckCover(matroids_, parts_);
  ElementSet covered;
  for (const ElementSet& p : parts_) covered = covered.Union(p);
  uncovered_ = ground().Minus(covered);
}

CoverState CoverState::Empty(std::vector<MatroidView> matroids) {
  std::vector<ElementSet> parts(matroids.size());
  return CoverState(std::move(matroids), std::move(parts));
}

std::size_t CoverState::covered_count() const {
  return ground().size() - uncovered_.size();
}

bool IsBlocker(const CoverState& state, const ElementSet& s) {
  if (!state.uncovered().IsSubsetOf(s) || !s.IsSubsetOf(state.ground())) {
    return false;
  }
  for (std::size_t i = 0; i < state.matroids().size(); ++i) {
    ElementSet spanning = state.parts()[i].Intersect(s);
    for (ElementId e : s) {
      if (!state.matroids()[i].Spans(spanning, e)) return false;
    }
  }
  return true;
}

AugmentOutcome TryAugment(const CoverState& state) {
  if (state.uncovered().empty()) {
    throw PreconditionError("try_augment: every element is already covered");
  }
  const auto& matroids = state.matroids();
  const auto& parts = state.parts();
  const std::size_t k = matroids.size();

  std::map<ElementId, Visit> visited;
  std::deque<ElementId> queue;
  for (ElementId u : state.uncovered()) {
    visited.emplace(u, Visit{});
    queue.push_back(u);
  }

  std::optional<std::pair<ElementId, std::size_t>> sink;
  while (!queue.empty() && !sink) {
    ElementId y = queue.front();
    queue.pop_front();
    const std::size_t owner = OwnerOf(parts, y);
    for (std::size_t i = 0; i < k && !sink; ++i) {
      if (i == owner) continue;
      ElementSet grown = parts[i].With(y);
      if (matroids[i].IsIndependent(grown)) {
        sink.emplace(y, i);
        break;
      }
      ElementSet circuit = matroids[i].FundamentalCircuit(y, parts[i]);
      for (ElementId x : circuit) {
        if (x == y || visited.count(x) > 0) continue;
        visited.emplace(x, Visit{y, i});
        queue.push_back(x);
      }
    }
  }

  if (!sink) {
    std::vector<ElementId> reached;
    reached.reserve(visited.size());
    for (const auto& [e, unused] : visited) reached.push_back(e);
    ElementSet blocker = ElementSet::FromSorted(std::move(reached));
    if (!IsBlocker(state, blocker)) {
      throw InvariantViolation(
          "reachable set " + matroids.front().labels().Format(blocker) +
          " fails the spanning certificate");
    }
    return Blocked{std::move(blocker)};
  }

  // Replay the path backwards: the sink joins its part, then each element on
  // the path takes the place of the one it ejected.
  std::vector<ElementSet> next = parts;
  ElementId current = sink->first;
  next[sink->second].Insert(current);
  while (true) {
    const Visit& v = visited.at(current);
    if (!v.from) break;
    next[v.part].Erase(current);
    next[v.part].Insert(*v.from);
    current = *v.from;
  }

  // `current` is the path's source in U.
  try {
    CoverState check(matroids, next);
    if (check.covered_count() != state.covered_count() + 1 ||
        check.uncovered() != state.uncovered().Without(current)) {
      throw InvariantViolation("augmentation did not cover exactly one element");
    }
  } catch (const DomainError& e) {
    throw InvariantViolation(std::string("augmentation broke the cover: ") +
                             e.what());
  }
  return Augmented{current, std::move(next)};
}

CoverResult CoverOrBlock(CoverState state) {
  while (!state.uncovered().empty()) {
    AugmentOutcome outcome = TryAugment(state);
    if (auto* blocked = std::get_if<Blocked>(&outcome)) {
      return CoverResult{std::move(state), std::move(blocked->blocker)};
    }
    state = CoverState(state.matroids(),
                       std::move(std::get<Augmented>(outcome).parts));
  }
  return CoverResult{std::move(state), std::nullopt};
}

}  // namespace exmat

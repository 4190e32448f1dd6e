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

#ifndef EXMAT_COUNTEREXAMPLE_H_
#define EXMAT_COUNTEREXAMPLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "exmat/models.h"

// Exhaustive checks on finite truncations of the two-tree graph built by
// MakeFigureGraph. The graph has edge-disjoint spanning trees T0 = {f_n} and
// T1 = {e_n, h_n}; with X0 = {f_2n} and X1 = {f_2n+1} there are no
// edge-disjoint spanning trees S0, S1 with T0 ∩ S_i = X_i, because the
// constraints force S0 = X0 ∪ {e_n} and S1 = X1 ∪ {h_n}, and the latter
// is two disjoint rays.
//
// In a truncation on v0..v_{N-1} a vertex is interior when every edge of the
// infinite graph at it is present. A spanning tree S of the infinite graph
// restricts to an acyclic edge set in which every component contains a
// non-interior (boundary) vertex, since a component made of interior
// vertices only would be cut off from the rest of S. Those are the
// conditions enforced here.

namespace exmat {

// Edge sets assigned to S0 and S1. s0 ∩ s1 = ∅, s0 ∪ s1 = all edges,
// s0 ∩ T0 = X0 and s1 ∩ T0 = X1 (edge labels of the truncation).
struct AssignmentCandidate {
  std::vector<std::string> s0;
  std::vector<std::string> s1;
};

struct CandidateEnumeration {
  std::vector<AssignmentCandidate> candidates;
  // Complete assignments that were tested. Branches are pruned as soon as
  // either side contains a cycle, so this stays well below 2^(|e|+|h|).
  std::uint64_t checks = 0;
};

// True iff v_m has all of its infinite-graph edges inside v0..v_{N-1}.
bool IsInteriorVertex(std::size_t vertex_count, std::size_t m);

// All assignments of the e- and h-edges to S0/S1 for which both sides are
// acyclic and, if require_connected, every component of each side contains
// a boundary vertex. Throws DomainError for vertex_count < 4.
CandidateEnumeration EnumerateCandidates(std::size_t vertex_count,
                                         bool require_connected);

// Largest k for which the pairs (e_i, h_i), i < k, are forced inside the
// truncation: the forcing of e_j and h_j needs v0..v_{2j+1} interior, which
// holds iff 2j + 4 <= N.
std::size_t MaxAdmissibleK(std::size_t vertex_count);

// The vertex sets V_n = {v_{2n+2-4k} : k <= (n+1)/2} ∪ {v_{2n+1-4k} : k <= n/2}
// whose cuts drive the forcing of h_{n+1}. Reported for cross-reference only.
std::vector<std::size_t> ProofCutSet(std::size_t n);

struct ForcedPrefixReport {
  std::size_t vertex_count = 0;
  std::size_t k = 0;
  std::size_t candidate_count = 0;
  std::uint64_t checks = 0;
  // Edges that every candidate places in S0 / S1, beyond X0 / X1.
  std::vector<std::string> forced_s0;
  std::vector<std::string> forced_s1;
  // Expected prefix: e_i ∈ S0 and h_i ∈ S1 for i < k.
  std::vector<std::string> expected_s0;
  std::vector<std::string> expected_s1;
  std::vector<std::vector<std::size_t>> cut_sets;
  bool vacuous = false;
  // True iff non-vacuous and every candidate contains the expected prefix.
  bool passed = false;
};

// Throws DomainError if k > MaxAdmissibleK(vertex_count).
ForcedPrefixReport VerifyForcedPrefix(std::size_t vertex_count, std::size_t k);

// Number of connected components of X1 ∪ {h_i} on the vertices it covers.
// Throws DomainError for vertex_count < 5.
std::size_t LimitWitness(std::size_t vertex_count);

}  // namespace exmat

#endif  // EXMAT_COUNTEREXAMPLE_H_

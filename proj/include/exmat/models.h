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

#ifndef EXMAT_MODELS_H_
#define EXMAT_MODELS_H_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "exmat/element.h"
#include "exmat/matroid.h"

namespace exmat {

struct UniformDescription {
  std::size_t rank = 0;
  std::vector<std::string> ground;

  friend bool operator==(const UniformDescription&,
                         const UniformDescription&) = default;
};

struct GraphEdge {
  std::string label;
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Vertices are 0..vertex_count-1. Loops and parallel edges are allowed.
struct MultiGraph {
  std::size_t vertex_count = 0;
  std::vector<GraphEdge> edges;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

// Columns over GF(2), all of length row_count.
struct Gf2Matrix {
  std::size_t row_count = 0;
  std::map<std::string, std::vector<std::uint8_t>> columns;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
};

using MatroidDescription = std::variant<UniformDescription, MultiGraph, Gf2Matrix>;

// Throws DomainError if the description violates its invariants.
void Validate(const UniformDescription& d);
void Validate(const MultiGraph& g);
void Validate(const Gf2Matrix& m);

MatroidView UniformMatroid(const UniformDescription& d);
MatroidView UniformMatroid(std::size_t rank,
                           const std::vector<std::string>& ground);
// Independent sets are the acyclic edge sets.
MatroidView GraphicMatroid(const MultiGraph& g);
// Independent sets are the linearly independent column sets.
MatroidView Gf2Matroid(const Gf2Matrix& m);
MatroidView BuildMatroid(const MatroidDescription& d);

// Matroid given by an explicit list of independent sets (labels). Nothing is
// checked beyond label validity, so this also expresses non-matroids, which
// is what the axiom checker tests need.
MatroidView SetSystemMatroid(const std::vector<std::string>& ground,
                             const std::vector<std::vector<std::string>>& independent);

// Complete graph K_n. Vertex i is named i+1 in edge labels, so K4 has edges
// "12", "13", ..., "34" (n <= 9).
MultiGraph CompleteGraph(std::size_t n);

// Finite truncation of the infinite graph with vertices v0, v1, ... and edges
//   f_n = {v_n, v_{n+1}}, e_n = {v_{2n+1}, v_{2n+3}}, h_n = {v_{2n}, v_{2n+3}}.
// An edge is kept iff both of its endpoints are among v0..v_{N-1}.
struct FigureGraph {
  std::size_t vertex_count = 0;
  MultiGraph graph;
  std::vector<std::string> f_edges;
  std::vector<std::string> e_edges;
  std::vector<std::string> h_edges;

  // T0 = {f_n}; T1 = {e_n} ∪ {h_n}; X0 = {f_2n}; X1 = {f_2n+1}.
  std::vector<std::string> T0() const { return f_edges; }
  std::vector<std::string> T1() const;
  std::vector<std::string> X0() const;
  std::vector<std::string> X1() const;
};

// Throws DomainError for vertex_count < 4.
FigureGraph MakeFigureGraph(std::size_t vertex_count);

enum class InstanceKind { kUniform, kGraphic, kGf2 };

std::string ToString(InstanceKind kind);
// Throws DomainError for unknown names.
InstanceKind ParseInstanceKind(const std::string& name);

// Seeded random instance with at most `size` ground elements:
//  - uniform: U(r, size) with r uniform in 0..size, labels e0, e1, ...
//  - graphic: G(n, 1/2) on the fewest n vertices with C(n,2) >= size, edges
//    kept in order (0,1), (0,2), ... and cut off after `size`; labels "u-v"
//  - gf2: `size` uniformly random columns of length ceil(2*size/3), labels
//    c0, c1, ...
// The generator is a fixed 64-bit Mersenne twister so results are stable.
MatroidDescription RandomInstance(InstanceKind kind, std::size_t size,
                                  std::uint64_t seed);

}  // namespace exmat

#endif  // EXMAT_MODELS_H_

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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exmat/base_exchange.h"
#include "exmat/brute_force.h"
#include "exmat/counterexample.h"
#include "exmat/errors.h"
#include "exmat/models.h"
#include "exmat/subset_bijection.h"
#include "test_oracles.h"

namespace exmat {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 5) notes_.push_back(what);
  }
  // Runs `body`, turning an exception into a failure.
  template <typename F>
  void Guard(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      Check(false, what + ": " + e.what());
    }
  }
  void Note(std::string note) { detail_ = std::move(note); }

  bool Report() const {
    const bool pass = failures_ == 0 && checks_ > 0;
    std::cout << (pass ? "PASS " : "FAIL ") << name_ << ": " << checks_ << " checks, "
              << failures_ << " failures";
    if (!detail_.empty()) std::cout << "; " << detail_;
    std::cout << "\n";
    for (const auto& n : notes_) std::cout << "    " << n << "\n";
    return pass;
  }

 private:
  std::string name_;
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> notes_;
  std::string detail_;
};

struct Instance {
  std::string name;
  MatroidView m;
  std::vector<ElementSet> bases;
};

std::vector<Instance> SeededInstances() {
  std::vector<Instance> out;
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto inst = testing::MakeSeededInstance(s);
    MatroidView m = BuildMatroid(inst.desc);
    std::string name = ToString(inst.kind) + "/size " + std::to_string(inst.size) +
                       "/seed " + std::to_string(s);
    out.push_back({name, m, {}});
  }
  return out;
}

// Up to `cap` ordered pairs spread evenly over all |bases|^2 pairs.
std::vector<std::pair<std::size_t, std::size_t>> SpreadPairs(std::size_t n, std::size_t cap) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t total = n * n;
  if (total == 0) return out;
  const std::size_t stride = std::max<std::size_t>(1, total / cap);
  for (std::size_t p = 0; p < total && out.size() < cap; p += stride) {
    out.emplace_back(p / n, p % n);
  }
  return out;
}

// Ordered partitions of s into exactly k non-empty classes.
std::vector<std::vector<ElementSet>> OrderedPartitions(const ElementSet& s, std::size_t k) {
  std::vector<std::vector<ElementSet>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < s.size(); ++i) total *= k;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<ElementSet> classes(k);
    std::size_t c = code;
    for (ElementId e : s) {
      classes[c % k].Insert(e);
      c /= k;
    }
    bool surjective = true;
    for (const auto& cls : classes) surjective = surjective && !cls.empty();
    if (surjective) out.push_back(std::move(classes));
  }
  return out;
}

// Both families of the partition theorem, checked with IsBasis only.
std::string LiteralPlanCheck(const MatroidView& m, const ElementSet& b0, const ElementSet& b1,
                             const std::vector<ElementSet>& classes,
                             const PartitionExchangePlan& plan) {
  if (plan.classes.size() != classes.size()) return "wrong class count";
  ElementSet ys;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (plan.classes[i].x != classes[i]) return "X_" + std::to_string(i) + " changed";
    if (!plan.classes[i].y.IsSubsetOf(b1) || !plan.classes[i].y.IsDisjointFrom(ys)) {
      return "Y classes do not partition b1";
    }
    ys = ys.Union(plan.classes[i].y);
  }
  if (ys != b1) return "Y classes do not cover b1";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!m.IsBasis(b0.Minus(classes[i]).Union(plan.classes[i].y))) {
      return "per-index set " + std::to_string(i) + " is not a basis";
    }
  }
  for (std::size_t i = 0; i <= classes.size(); ++i) {
    ElementSet tail;
    for (std::size_t j = 0; j < i; ++j) tail = tail.Union(classes[j]);
    for (std::size_t j = i; j < classes.size(); ++j) tail = tail.Union(plan.classes[j].y);
    if (!m.IsBasis(tail)) return "tail set " + std::to_string(i) + " is not a basis";
  }
  return "";
}

std::string LiteralSerialCheck(const MatroidView& m, const ElementSet& b0, const ElementSet& b1,
                               const SerialOrder& order) {
  const std::size_t r = b0.size();
  if (order.e_seq.size() != r || order.f_seq.size() != r) return "wrong length";
  if (ElementSet(order.e_seq) != b0 || ElementSet(order.f_seq) != b1) {
    return "sequences do not enumerate the bases";
  }
  for (std::size_t a = 0; a < r; ++a) {
    if (!m.IsBasis(b0.Without(order.e_seq[a]).With(order.f_seq[a]))) {
      return "single swap " + std::to_string(a) + " is not a basis";
    }
    ElementSet tail = b0;
    for (std::size_t b = a; b < r; ++b) tail.Erase(order.e_seq[b]);
    for (std::size_t b = a; b < r; ++b) tail.Insert(order.f_seq[b]);
    if (!m.IsBasis(tail)) return "tail swap " + std::to_string(a) + " is not a basis";
  }
  return "";
}

int Main() {
  const auto start = Clock::now();
  bool all = true;
  std::vector<Instance> instances = SeededInstances();

  {
    Criterion c("axiom suite (200 seeded instances, ground <= 8, < 60 s)");
    const auto t = Clock::now();
    for (Instance& inst : instances) {
      c.Guard(inst.name, [&] {
        OracleReport r = CheckAxioms(inst.m);
        c.Check(inst.m.ground().size() <= 8, inst.name + ": ground too large");
        c.Check(r.holds(), inst.name + ": axiom " +
                               (r.holds() ? std::string() : r.witnesses[0].axiom) + " fails");
        inst.bases = AllBases(inst.m);
      });
    }
    const double secs = Seconds(t);
    c.Check(secs < 60.0, "took " + std::to_string(secs) + " s");
    c.Note("took " + std::to_string(secs).substr(0, 5) + " s");
    all &= c.Report();
  }

  Criterion equibase("equibase invariant (|B0 \\ B1| = |B1 \\ B0| over all basis pairs)");
  Criterion serial("serial order (single and tail swaps are bases for every index)");
  {
    Criterion c("symmetric exchange (<= 20 basis pairs per instance, |X| <= 3, Y in search)");
    std::uint64_t pair_count = 0;
    for (const Instance& inst : instances) {
      for (const ElementSet& b0 : inst.bases) {
        for (const ElementSet& b1 : inst.bases) {
          equibase.Check(b0.Minus(b1).size() == b1.Minus(b0).size(),
                         inst.name + ": " + inst.m.labels().Format(b0) + " vs " +
                             inst.m.labels().Format(b1));
        }
      }
      for (auto [i, j] : SpreadPairs(inst.bases.size(), 20)) {
        ++pair_count;
        const ElementSet& b0 = inst.bases[i];
        const ElementSet& b1 = inst.bases[j];
        const std::string where = inst.name + " b0=" + inst.m.labels().Format(b0) +
                                  " b1=" + inst.m.labels().Format(b1);
        for (std::size_t k = 0; k <= std::min<std::size_t>(3, b0.size()); ++k) {
          for (const ElementSet& x : SubsetsOfSize(b0, k)) {
            c.Guard(where, [&] {
              auto cert = SymmetricExchange(inst.m, Basis::Certify(inst.m, b0),
                                            Basis::Certify(inst.m, b1), x);
              const bool literal = cert.x == x && cert.y.IsSubsetOf(b1) &&
                                   inst.m.IsBasis(b0.Minus(x).Union(cert.y)) &&
                                   inst.m.IsBasis(b1.Minus(cert.y).Union(x));
              auto ys = ExchangeSearch(inst.m, b0, b1, x);
              const bool found = std::find(ys.begin(), ys.end(), cert.y) != ys.end();
              c.Check(literal && found, where + " X=" + inst.m.labels().Format(x));
            });
          }
        }
        serial.Guard(where, [&] {
          auto order = SerialExchangeOrder(inst.m, Basis::Certify(inst.m, b0),
                                           Basis::Certify(inst.m, b1));
          std::string p = LiteralSerialCheck(inst.m, b0, b1, order);
          serial.Check(p.empty(), where + ": " + p);
        });
      }
    }
    c.Note(std::to_string(pair_count) + " basis pairs");
    all &= c.Report();
  }

  {
    Criterion c("partition exchange (rank <= 5, all ordered partitions into <= 4 classes)");
    std::uint64_t partitions = 0;
    for (const Instance& inst : instances) {
      if (inst.m.Rank() > 5) continue;
      for (auto [i, j] : SpreadPairs(inst.bases.size(), 5)) {
        const ElementSet& b0 = inst.bases[i];
        const ElementSet& b1 = inst.bases[j];
        for (std::size_t k = 1; k <= std::min<std::size_t>(4, b0.size()); ++k) {
          for (const auto& classes : OrderedPartitions(b0, k)) {
            ++partitions;
            c.Guard(inst.name, [&] {
              auto plan = PartitionExchange(inst.m, Basis::Certify(inst.m, b0),
                                            Basis::Certify(inst.m, b1), classes);
              std::string p = LiteralPlanCheck(inst.m, b0, b1, classes, plan);
              c.Check(p.empty(), inst.name + ": " + p);
            });
          }
        }
      }
    }
    c.Note(std::to_string(partitions) + " ordered partitions");
    all &= c.Report();
  }

  {
    Criterion c("streaming = batch (100 seeded cases)");
    std::mt19937_64 rng(2026);
    std::size_t cases = 0;
    for (const Instance& inst : instances) {
      if (cases == 100) break;
      if (inst.bases.empty() || inst.m.Rank() == 0) continue;
      ++cases;
      const ElementSet& b0 = inst.bases[rng() % inst.bases.size()];
      const ElementSet& b1 = inst.bases[rng() % inst.bases.size()];
      const std::size_t k = 1 + rng() % b0.size();
      auto options = OrderedPartitions(b0, k);
      const auto& classes = options[rng() % options.size()];
      c.Guard(inst.name, [&] {
        auto batch = PartitionExchange(inst.m, Basis::Certify(inst.m, b0),
                                       Basis::Certify(inst.m, b1), classes);
        std::size_t pos = 0;
        PartitionExchangeStream stream(inst.m, Basis::Certify(inst.m, b0),
                                       Basis::Certify(inst.m, b1),
                                       [&]() -> std::optional<ElementSet> {
                                         if (pos == classes.size()) return std::nullopt;
                                         return classes[pos++];
                                       });
        while (stream.Next()) {
          c.Check(stream.TailInvariantHolds(), inst.name + ": tail invariant mid-stream");
        }
        c.Check(stream.ToPlan() == batch, inst.name + ": plans differ");
      });
    }
    c.Check(cases == 100, "only " + std::to_string(cases) + " cases");
    all &= c.Report();
  }

  all &= serial.Report();

  {
    Criterion c("bijection (rank <= 5, ground <= 10, counts and search for k <= 2)");
    std::vector<Instance> pool;
    for (const Instance& inst : instances) {
      if (inst.m.Rank() <= 5) pool.push_back(inst);
    }
    // Larger grounds than the seeded family reaches.
    const InstanceKind kinds[] = {InstanceKind::kUniform, InstanceKind::kGraphic,
                                  InstanceKind::kGf2};
    for (std::uint64_t s = 0; s < 30; ++s) {
      MatroidView m = BuildMatroid(RandomInstance(kinds[s % 3], 9 + s % 2, 1000 + s));
      if (m.Rank() > 5) continue;
      pool.push_back({ToString(kinds[s % 3]) + "/size " + std::to_string(9 + s % 2) +
                          "/seed " + std::to_string(1000 + s),
                      m, AllBases(m)});
    }
    std::size_t graphs = 0;
    for (const Instance& inst : pool) {
      for (auto [i, j] : SpreadPairs(inst.bases.size(), 3)) {
        const ElementSet& b0 = inst.bases[i];
        const ElementSet& b1 = inst.bases[j];
        c.Guard(inst.name, [&] {
          SubsetBijection bij(inst.m, b0, b1);
          auto pairs = EnumerateGraph(bij, b0.size());
          ++graphs;
          std::uint64_t expected = 0;
          for (std::size_t k = 0; k <= b0.size(); ++k) expected += Binomial(b0.size(), k);
          c.Check(pairs.size() == expected, inst.name + ": pair count");
          std::set<ElementSet> images;
          for (const auto& [from, to] : pairs) {
            c.Check(from.size() == to.size() && to.IsSubsetOf(b1) &&
                        inst.m.IsBasis(b0.Minus(from).Union(to)),
                    inst.name + ": pair " + inst.m.labels().Format(from));
            images.insert(to);
          }
          c.Check(images.size() == pairs.size(), inst.name + ": not injective");
          for (std::size_t k = 0; k <= std::min<std::size_t>(2, b0.size()); ++k) {
            c.Check(BijectionSearch(inst.m, b0, b1, k).exists,
                    inst.name + ": search finds no bijection for k=" + std::to_string(k));
          }
        });
      }
    }
    c.Note(std::to_string(graphs) + " bijections over " + std::to_string(pool.size()) +
           " instances");
    all &= c.Report();
  }

  {
    Criterion c("counterexample (forced prefix at maximal k, limit witness = 2)");
    std::ostringstream note;
    for (std::size_t n : {8, 12, 16, 20}) {
      c.Guard("n=" + std::to_string(n), [&] {
        const std::size_t k = MaxAdmissibleK(n);
        ForcedPrefixReport r = VerifyForcedPrefix(n, k);
        c.Check(!r.vacuous && r.candidate_count >= 1, "n=" + std::to_string(n) + " vacuous");
        c.Check(r.passed, "n=" + std::to_string(n) + " prefix not forced");
        // The forced pattern is S0 = X0 + e_i and S1 = X1 + h_i.
        FigureGraph fig = MakeFigureGraph(n);
        c.Check(r.forced_s0 == fig.e_edges && r.forced_s1 == fig.h_edges,
                "n=" + std::to_string(n) + " pattern differs");
        note << "n=" << n << " k=" << k << " candidates=" << r.candidate_count << " ";
      });
    }
    for (std::size_t n = 5; n <= 20; ++n) {
      c.Guard("limit", [&] {
        c.Check(LimitWitness(n) == 2, "limit witness at n=" + std::to_string(n));
      });
    }
    c.Note(note.str());
    all &= c.Report();
  }

  all &= equibase.Report();

  {
    Criterion c("suite budget (acceptance run well inside 5 minutes)");
    const double secs = Seconds(start);
    c.Check(secs < 300.0, "took " + std::to_string(secs) + " s");
    c.Note("acceptance took " + std::to_string(secs).substr(0, 5) +
           " s; see ctest total for the whole suite");
    all &= c.Report();
  }
  return all ? 0 : 1;
}

}  // namespace
}  // namespace exmat

int main() { return exmat::Main(); }

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

#include <gtest/gtest.h>

#include "exmat/errors.h"
#include "exmat/models.h"
#include "test_oracles.h"

namespace exmat {
namespace {

class K4Test : public ::testing::Test {
 protected:
  MatroidView m = GraphicMatroid(CompleteGraph(4));
  ElementSet S(std::initializer_list<std::string_view> l) { return m.labels().Set(l); }
  ElementId E(std::string_view l) { return m.labels().Id(l); }
};

class U24Test : public ::testing::Test {
 protected:
  MatroidView m = UniformMatroid(2, {"a", "b", "c", "d"});
  ElementSet S(std::initializer_list<std::string_view> l) { return m.labels().Set(l); }
  ElementId E(std::string_view l) { return m.labels().Id(l); }
};

TEST_F(U24Test, Independence) {
  EXPECT_FALSE(m.IsIndependent(S({"a", "b", "c"})));
  EXPECT_TRUE(m.IsIndependent(ElementSet()));
  EXPECT_TRUE(m.IsBasis(S({"a", "b"})));
  EXPECT_EQ(m.Rank(), 2u);
}

TEST_F(U24Test, CircuitExtensionSpan) {
  EXPECT_EQ(m.FundamentalCircuit(E("c"), S({"a", "b"})), S({"a", "b", "c"}));
  EXPECT_EQ(m.ExtendToBasis(ElementSet(), m.ground()), S({"a", "b"}));
  EXPECT_TRUE(m.Spans(S({"a", "b"}), E("c")));
}

TEST_F(U24Test, ContractionDropsRank) {
  EXPECT_TRUE(m.Contract(S({"a"})).IsBasis(S({"b"})));
}

TEST_F(K4Test, Independence) {
  EXPECT_TRUE(m.IsIndependent(S({"12", "23", "34"})));
  EXPECT_TRUE(m.IsBasis(S({"12", "23", "34"})));
  EXPECT_FALSE(m.IsBasis(S({"12", "23"})));
}

TEST_F(K4Test, FundamentalCircuits) {
  EXPECT_EQ(m.FundamentalCircuit(E("13"), S({"12", "23", "34"})), S({"12", "13", "23"}));
  EXPECT_EQ(m.FundamentalCircuit(E("14"), S({"12", "23", "34"})),
            S({"12", "14", "23", "34"}));
}

TEST_F(K4Test, GreedyExtensionUsesEdgeOrder) {
  EXPECT_EQ(m.ExtendToBasis(S({"12"}), m.ground()), S({"12", "13", "14"}));
  const ElementSet tree = S({"12", "23", "34"});
  EXPECT_EQ(m.ExtendToBasis(tree, m.ground()), tree);
}

TEST_F(K4Test, Spans) {
  EXPECT_TRUE(m.Spans(S({"12", "23"}), E("13")));
  EXPECT_FALSE(m.Spans(S({"12"}), E("34")));
  EXPECT_TRUE(m.Spans(S({"12"}), E("12")));
}

TEST_F(K4Test, Minors) {
  EXPECT_TRUE(m.Restrict(S({"12", "23", "34"})).IsBasis(S({"12", "23", "34"})));
  EXPECT_FALSE(m.Contract(S({"12"})).IsIndependent(S({"13", "23"})));
  EXPECT_EQ(m.Contract(S({"12"})).ground().size(), 5u);
  EXPECT_EQ(m.Delete(S({"12"})).Rank(), 3u);
}

TEST_F(K4Test, Errors) {
  EXPECT_THROW(m.IsIndependent(ElementSet{ElementId(40)}), DomainError);
  EXPECT_THROW(m.FundamentalCircuit(E("12"), S({"12"})), PreconditionError);
  EXPECT_THROW(m.FundamentalCircuit(E("34"), S({"12"})), PreconditionError);
  EXPECT_THROW(m.FundamentalCircuit(E("13"), S({"12", "23", "13"})), PreconditionError);
  EXPECT_THROW(m.ExtendToBasis(S({"12", "23", "13"}), m.ground()), PreconditionError);
  MatroidView c = m.Contract(S({"12"}));
  EXPECT_THROW(c.Contract(S({"12"})), DomainError);
  EXPECT_THROW(c.Restrict(S({"12", "13"})), DomainError);
  EXPECT_THROW(Basis::Certify(m, S({"12"}), "b"), PreconditionError);
}

TEST(MatroidTest, EmptyGroundHasEmptyBasis) {
  MatroidView m = UniformMatroid(0, {});
  EXPECT_TRUE(m.IsBasis(ElementSet()));
  EXPECT_EQ(m.Rank(), 0u);
}

// The library's oracles against the reference oracles, on every subset.
TEST(MatroidPropertyTest, OraclesAgreeWithReference) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto inst = testing::MakeSeededInstance(s);
    MatroidView m = BuildMatroid(inst.desc);
    const ElementSet& g = m.ground();
    for (std::uint64_t mask = 0; mask < (1u << g.size()); ++mask) {
      ElementSet sub = g.SubsetByMask(mask);
      ASSERT_EQ(m.IsIndependent(sub),
                testing::ReferenceIndependent(inst.desc, m.labels().Labels(sub)))
          << "seed " << s << " set " << m.labels().Format(sub);
    }
  }
}

TEST(MatroidPropertyTest, BasesAreIndependentAndEquicardinal) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    MatroidView m = BuildMatroid(testing::MakeSeededInstance(s).desc);
    const ElementSet& g = m.ground();
    for (std::uint64_t mask = 0; mask < (1u << g.size()); ++mask) {
      ElementSet sub = g.SubsetByMask(mask);
      if (m.IsBasis(sub)) {
        EXPECT_TRUE(m.IsIndependent(sub));
        EXPECT_EQ(sub.size(), m.Rank());
      }
    }
  }
}

TEST(MatroidPropertyTest, ContractionAndRestrictionCommute) {
  for (std::uint64_t s = 0; s < 45; ++s) {
    auto inst = testing::MakeSeededInstance(s);
    if (inst.size > 7) continue;
    MatroidView m = BuildMatroid(inst.desc);
    const ElementSet& g = m.ground();
    // X = first element, Y = last element, when distinct.
    if (g.size() < 2) continue;
    ElementSet x{g.front()};
    ElementSet y{g[g.size() - 1]};
    MatroidView a = m.Restrict(g.Minus(y)).Contract(x);
    MatroidView b = m.Contract(x).Restrict(g.Minus(x.Union(y)));
    ASSERT_EQ(a.ground(), b.ground());
    for (std::uint64_t mask = 0; mask < (1u << a.ground().size()); ++mask) {
      ElementSet sub = a.ground().SubsetByMask(mask);
      EXPECT_EQ(a.IsIndependent(sub), b.IsIndependent(sub)) << "seed " << s;
    }
  }
}

TEST(MatroidPropertyTest, FundamentalCircuitsAreMinimal) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    MatroidView m = BuildMatroid(testing::MakeSeededInstance(s).desc);
    const ElementSet b = m.SomeBasis();
    for (ElementId e : m.ground().Minus(b)) {
      ElementSet c = m.FundamentalCircuit(e, b);
      EXPECT_TRUE(c.Contains(e));
      EXPECT_FALSE(m.IsIndependent(c));
      for (ElementId x : c) EXPECT_TRUE(m.IsIndependent(c.Without(x)));
    }
  }
}

}  // namespace
}  // namespace exmat

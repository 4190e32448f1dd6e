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

#include "exmat/brute_force.h"

#include <gtest/gtest.h>

#include "exmat/errors.h"
#include "exmat/models.h"

namespace exmat {
namespace {

TEST(CheckAxiomsTest, Matroids) {
  EXPECT_TRUE(CheckAxioms(UniformMatroid(2, {"a", "b", "c", "d"})).holds());
  auto k4 = CheckAxioms(GraphicMatroid(CompleteGraph(4)));
  EXPECT_TRUE(k4.holds());
  EXPECT_GE(k4.checked, 64u);
  EXPECT_TRUE(k4.warnings.empty());
}

TEST(CheckAxiomsTest, MissingSubset) {
  MatroidView m = SetSystemMatroid({"a", "b"}, {{}, {"a", "b"}});
  auto report = CheckAxioms(m);
  ASSERT_FALSE(report.holds());
  EXPECT_EQ(report.witnesses.front().axiom, "II");
  EXPECT_EQ(report.witnesses.front().sets.front(), m.labels().Set({"a"}));
}

TEST(CheckAxiomsTest, NoExchange) {
  MatroidView m = SetSystemMatroid({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"c"}, {"b", "c"}});
  auto report = CheckAxioms(m);
  ASSERT_EQ(report.witnesses.size(), 1u);
  EXPECT_EQ(report.witnesses[0].axiom, "III");
  EXPECT_EQ(report.witnesses[0].sets,
            (std::vector<ElementSet>{m.labels().Set({"a"}), m.labels().Set({"b", "c"})}));
}

TEST(CheckAxiomsTest, EmptySetMissing) {
  auto report = CheckAxioms(SetSystemMatroid({"a"}, {{"a"}}));
  ASSERT_FALSE(report.holds());
  EXPECT_EQ(report.witnesses.front().axiom, "I");
}

TEST(CheckAxiomsTest, LargeGroundWarns) {
  std::vector<std::string> ground;
  for (int i = 0; i < 21; ++i) ground.push_back("x" + std::to_string(i));
  auto report = CheckAxioms(UniformMatroid(0, ground));
  EXPECT_TRUE(report.holds());
  EXPECT_EQ(report.warnings.size(), 1u);
}

TEST(AllBasesTest, Counts) {
  EXPECT_EQ(AllBases(UniformMatroid(2, {"a", "b", "c", "d"})).size(), 6u);
  MatroidView triangle = GraphicMatroid({3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}}});
  EXPECT_EQ(AllBases(triangle).size(), 3u);
  // Cayley: n^(n-2) spanning trees.
  EXPECT_EQ(AllBases(GraphicMatroid(CompleteGraph(4))).size(), 16u);
  EXPECT_EQ(AllBases(GraphicMatroid(CompleteGraph(5))).size(), 125u);
  auto bases = AllBases(triangle);
  EXPECT_TRUE(std::is_sorted(bases.begin(), bases.end()));
}

TEST(ExchangeSearchTest, Examples) {
  MatroidView k4 = GraphicMatroid(CompleteGraph(4));
  const LabelTable& l = k4.labels();
  ElementSet b0 = l.Set({"12", "23", "34"});
  ElementSet b1 = l.Set({"13", "14", "24"});
  auto ys = ExchangeSearch(k4, b0, b1, l.Set({"12", "23"}));
  EXPECT_NE(std::find(ys.begin(), ys.end(), l.Set({"13", "24"})), ys.end());
  EXPECT_EQ(ExchangeSearch(k4, b0, b1, ElementSet()), std::vector<ElementSet>{ElementSet()});
  EXPECT_THROW(ExchangeSearch(k4, b0, b1, l.Set({"13"})), DomainError);

  MatroidView u = UniformMatroid(2, {"a", "b", "c", "d"});
  EXPECT_EQ(ExchangeSearch(u, u.labels().Set({"a", "b"}), u.labels().Set({"c", "d"}),
                           u.labels().Set({"a"})),
            (std::vector<ElementSet>{u.labels().Set({"c"}), u.labels().Set({"d"})}));
}

TEST(BijectionSearchTest, Examples) {
  MatroidView k4 = GraphicMatroid(CompleteGraph(4));
  const LabelTable& l = k4.labels();
  ElementSet b0 = l.Set({"12", "23", "34"});
  ElementSet b1 = l.Set({"13", "14", "24"});
  EXPECT_TRUE(BijectionSearch(k4, b0, b1, 0).exists);
  auto one = BijectionSearch(k4, b0, b1, 1);
  ASSERT_TRUE(one.exists);
  EXPECT_EQ(one.witness.size(), 3u);
  for (const auto& [i, j] : one.witness) EXPECT_TRUE(k4.IsBasis(b0.Minus(i).Union(j)));
  EXPECT_TRUE(BijectionSearch(k4, b0, b1, 2).exists);
}

TEST(BijectionSearchTest, ReportsImpossibility) {
  // b is a loop, so {b} is no basis and {a} has nowhere to go.
  MatroidView loops = SetSystemMatroid({"a", "b"}, {{}, {"a"}});
  EXPECT_FALSE(
      BijectionSearch(loops, loops.labels().Set({"a"}), loops.labels().Set({"b"}), 1).exists);
}

}  // namespace
}  // namespace exmat

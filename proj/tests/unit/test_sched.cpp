// Copyright 2026 The toffoli-forge Authors
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

#include "tforge/sched.hpp"
#include "tforge/synth.hpp"

#include "dense_oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

namespace tforge {
namespace {

Gate crx(std::int64_t num, std::uint32_t exp, Qubit c, Qubit t) {
  return Gate::crx(DyadicAngle(num, exp), c, t);
}

std::vector<std::size_t> layer_of(const Schedule& s, std::size_t gates) {
  std::vector<std::size_t> out(gates);
  for (std::size_t k = 0; k < s.layers.size(); ++k) {
    for (const std::size_t i : s.layers[k]) {
      out[i] = k;
    }
  }
  return out;
}

TEST(CommutesTest, SharedControl) {
  EXPECT_TRUE(commutes(crx(1, 1, 0, 1), crx(1, 2, 0, 2)));
}

TEST(CommutesTest, SharedTarget) {
  const Gate g = crx(1, 1, 0, 2);
  const Gate h = crx(1, 2, 1, 2);
  EXPECT_TRUE(commutes(g, h));
  const Circuit gh(3, {g, h});
  const Circuit hg(3, {h, g});
  EXPECT_LE(oracle::max_abs_diff(oracle::circuit_matrix(gh), oracle::circuit_matrix(hg)), 1e-12);
}

TEST(CommutesTest, ControlMeetsTarget) {
  const Gate g = crx(1, 1, 0, 1);
  const Gate h = crx(1, 0, 2, 0);
  EXPECT_FALSE(commutes(g, h));
  const Circuit gh(3, {g, h});
  const Circuit hg(3, {h, g});
  EXPECT_GT(oracle::max_abs_diff(oracle::circuit_matrix(gh), oracle::circuit_matrix(hg)), 1e-3);
}

TEST(CommutesTest, MixedKindsAndSwaps) {
  EXPECT_FALSE(commutes(crx(1, 1, 0, 2), Gate::cprx(DyadicAngle(1, 1), 1, 2)));
  EXPECT_TRUE(commutes(Gate::cprx(DyadicAngle(1, 1), 0, 2), Gate::cprx(DyadicAngle(1, 2), 1, 2)));
  EXPECT_FALSE(commutes(Gate::swap(0, 1), crx(1, 1, 0, 2)));
  EXPECT_TRUE(commutes(Gate::swap(0, 1), crx(1, 1, 2, 3)));
}

TEST(CommutesTest, RandomizedSoundness) {
  // Every pair shape reported as commuting, on 4 qubits with random angles.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(-15, 15);
  std::uniform_int_distribution<std::uint32_t> exp(0, 4);
  const auto angle = [&] { return DyadicAngle(num(rng), exp(rng)); };
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<std::pair<Gate, Gate>> pairs = {
        {Gate::crx(angle(), 0, 1), Gate::crx(angle(), 0, 2)},
        {Gate::crx(angle(), 0, 3), Gate::crx(angle(), 1, 3)},
        {Gate::cprx(angle(), 2, 3), Gate::cprx(angle(), 1, 3)},
        {Gate::cprx(angle(), 2, 0), Gate::crx(angle(), 2, 1)},
        {Gate::crx(angle(), 0, 1), Gate::crx(angle(), 2, 3)},
        {Gate::swap(0, 1), Gate::crx(angle(), 2, 3)},
    };
    for (const auto& [g, h] : pairs) {
      ASSERT_TRUE(commutes(g, h));
      const Circuit gh(4, {g, h});
      const Circuit hg(4, {h, g});
      EXPECT_LE(oracle::max_abs_diff(oracle::circuit_matrix(gh), oracle::circuit_matrix(hg)),
                1e-12);
    }
  }
}

TEST(AsapScheduleTest, EmptySchedule) {
  EXPECT_EQ(depth(Schedule{}), 0u);
  const Schedule s = asap_schedule(Circuit(3));
  EXPECT_EQ(depth(s), 0u);
}

TEST(AsapScheduleTest, FiveQubitGroupDepths) {
  const Schedule s = asap_schedule(synth_toffoli(5));
  EXPECT_EQ(depth(s), 20u);
  EXPECT_EQ(s.group_depths(), (std::vector<std::size_t>{7, 5, 5, 3}));
}

TEST(AsapScheduleTest, SmallWidths) {
  const Schedule s3 = asap_schedule(synth_toffoli(3));
  EXPECT_EQ(depth(s3), 5u);
  EXPECT_EQ(s3.group_depths(), (std::vector<std::size_t>{3, 1, 1, 0}));
  const Schedule s4 = asap_schedule(synth_toffoli(4));
  EXPECT_EQ(depth(s4), 12u);
  EXPECT_EQ(s4.group_depths(), (std::vector<std::size_t>{5, 3, 3, 1}));
  EXPECT_EQ(depth(asap_schedule(synth_toffoli(10))), 60u);
}

TEST(AsapScheduleTest, FiveQubitFirstGroupSlots) {
  const Circuit c = synth_toffoli(5);
  const Schedule s = asap_schedule(c);
  const auto layer = layer_of(s, c.size());
  // (control, target) in 1-based wire labels -> 1-based time slot.
  const std::map<std::pair<Qubit, Qubit>, std::size_t> slots = {
      {{4, 5}, 1}, {{3, 5}, 2}, {{2, 5}, 3}, {{1, 5}, 4}, {{3, 4}, 3},
      {{2, 4}, 4}, {{1, 4}, 5}, {{2, 3}, 5}, {{1, 3}, 6}, {{1, 2}, 7}};
  std::size_t seen = 0;
  for (const Section& sec : c.sections()) {
    if (sec.label != SectionLabel::c1 && sec.label != SectionLabel::c2) {
      continue;
    }
    for (std::size_t i = sec.begin; i < sec.end; ++i) {
      const auto key = std::pair<Qubit, Qubit>{c[i].control + 1, c[i].target + 1};
      EXPECT_EQ(layer[i] + 1, slots.at(key)) << c[i];
      ++seen;
    }
  }
  EXPECT_EQ(seen, 10u);
}

TEST(AsapScheduleTest, DepthFormula) {
  for (std::size_t n = 5; n <= 128; ++n) {
    const Circuit c = synth_toffoli(n);
    const Schedule s = asap_schedule(c);
    validate_schedule(c, s);
    EXPECT_EQ(depth(s), 8 * n - 20);
    EXPECT_EQ(s.group_depths(),
              (std::vector<std::size_t>{2 * n - 3, 2 * n - 5, 2 * n - 5, 2 * n - 7}));
  }
}

TEST(AsapScheduleTest, LayersAreDisjointAndGroupsStaySeparate) {
  for (std::size_t n = 3; n <= 30; ++n) {
    const Circuit c = synth_toffoli(n);
    const Schedule s = asap_schedule(c);
    EXPECT_NO_THROW(validate_schedule(c, s));
    ASSERT_EQ(s.group_barriers.size(), 3u);
    std::vector<std::size_t> group_of_gate(c.size());
    for (const Section& sec : c.sections()) {
      const std::size_t g = sec.label <= SectionLabel::c2   ? 0
                            : sec.label == SectionLabel::c3 ? 1
                            : sec.label <= SectionLabel::c5 ? 2
                                                            : 3;
      for (std::size_t i = sec.begin; i < sec.end; ++i) {
        group_of_gate[i] = g;
      }
    }
    for (std::size_t k = 0; k < s.layers.size(); ++k) {
      const std::size_t g = static_cast<std::size_t>(
          std::upper_bound(s.group_barriers.begin(), s.group_barriers.end(), k) -
          s.group_barriers.begin());
      for (const std::size_t i : s.layers[k]) {
        EXPECT_EQ(group_of_gate[i], g);
      }
    }
  }
}

TEST(AsapScheduleTest, ShuffledLayersKeepTheUnitary) {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 3; n <= 7; ++n) {
    const Circuit c = synth_toffoli(n);
    const Schedule s = asap_schedule(c);
    const oracle::Mat want = oracle::circuit_matrix(c);
    for (int t = 0; t < 10; ++t) {
      const oracle::Mat got = oracle::circuit_matrix(flatten_shuffled(c, s, rng));
      EXPECT_LE(oracle::max_abs_diff(got, want), 1e-10);
    }
  }
}

TEST(AsapScheduleTest, UnsectionedCircuitsUseOneGroup) {
  const Circuit c = synth_recursive(5);
  const Schedule s = asap_schedule(c);
  EXPECT_TRUE(s.group_barriers.empty());
  validate_schedule(c, s);
  EXPECT_LE(oracle::max_abs_diff(oracle::circuit_matrix(flatten(c, s)),
                                 oracle::circuit_matrix(c)),
            1e-10);
}

TEST(AsapScheduleTest, FallbackHandlesSwaps) {
  const Circuit c(4, {Gate::swap(0, 1), crx(1, 1, 1, 2), Gate::swap(2, 3), crx(1, 2, 0, 3),
                      crx(-1, 1, 3, 1)});
  const Schedule s = asap_schedule(c);
  validate_schedule(c, s);
  EXPECT_LE(oracle::max_abs_diff(oracle::circuit_matrix(flatten(c, s)),
                                 oracle::circuit_matrix(c)),
            1e-12);
}

TEST(ValidateScheduleTest, DetectsOverlapAndGaps) {
  const Circuit c(3, {crx(1, 1, 0, 1), crx(1, 1, 1, 2)});
  EXPECT_THROW(validate_schedule(c, Schedule{{{0, 1}}, {}}), std::logic_error);
  EXPECT_THROW(validate_schedule(c, Schedule{{{0}}, {}}), std::logic_error);
  EXPECT_THROW(validate_schedule(c, Schedule{{{0}, {0}}, {}}), std::logic_error);
  EXPECT_NO_THROW(validate_schedule(c, Schedule{{{0}, {1}}, {}}));
}

} // namespace
} // namespace tforge

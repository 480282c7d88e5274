//  Copyright 2026 The irislogic Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "irislogic/octal_algebra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <vector>

namespace irislogic {
namespace {

// Product and sum tables as printed, with the entropy column last.
constexpr int kProductTable[8][9] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 1, 0, 1, 2},
    {0, 0, 2, 2, 0, 0, 2, 2, 2}, {0, 1, 2, 3, 0, 1, 2, 3, 4},
    {0, 0, 0, 0, 4, 4, 4, 4, 2}, {0, 1, 0, 1, 4, 5, 4, 5, 4},
    {0, 0, 2, 2, 4, 4, 6, 6, 4}, {0, 1, 2, 3, 4, 5, 6, 7, 8},
};
constexpr int kSumTable[8][9] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8}, {1, 1, 3, 3, 5, 5, 7, 7, 4},
    {2, 3, 2, 3, 6, 7, 6, 7, 4}, {3, 3, 3, 3, 7, 7, 7, 7, 2},
    {4, 5, 6, 7, 4, 5, 6, 7, 4}, {5, 5, 7, 7, 5, 5, 7, 7, 2},
    {6, 7, 6, 7, 6, 7, 6, 7, 2}, {7, 7, 7, 7, 7, 7, 7, 7, 1},
};

// Native subset order on 3-bit masks; independent of product().
bool subset(int a, int b) { return (a & b) == a; }

TEST(OctalTest, ReducesModuloEight) {
  EXPECT_EQ(Octal(9).value(), 1);
  EXPECT_EQ(Octal(-1).value(), 7);
  EXPECT_EQ(Octal(16).value(), 0);
  EXPECT_EQ(Octal(-9).value(), 7);
}

TEST(OctalTest, Negation) {
  EXPECT_EQ(neg(Octal(3)), Octal(4));
  EXPECT_EQ(neg(Octal(0)), Octal(7));
  EXPECT_EQ(neg(Octal(5)), Octal(2));
}

TEST(OctalTest, ProductExamples) {
  EXPECT_EQ(product(Octal(3), Octal(5)), Octal(1));
  EXPECT_EQ(product(Octal(4), Octal(1)), Octal(0));
  for (Octal b : all_octals()) EXPECT_EQ(product(Octal(7), b), b);
}

TEST(OctalTest, SumExamples) {
  EXPECT_EQ(sum(Octal(1), Octal(2)), Octal(3));
  EXPECT_EQ(sum(Octal(4), Octal(1)), Octal(5));
  for (Octal a : all_octals()) EXPECT_EQ(sum(a, Octal(0)), a);
}

TEST(OctalTest, OracleExamples) {
  EXPECT_EQ(product_oracle(Octal(3), Octal(5)), Octal(1));
  EXPECT_EQ(sum_oracle(Octal(2), Octal(4)), Octal(6));
  for (Octal a : all_octals()) EXPECT_EQ(product_oracle(a, a), a);
}

TEST(OctalTest, ThreeConstructionsAgreeOnAllPairs) {
  for (Octal a : all_octals()) {
    for (Octal b : all_octals()) {
      EXPECT_EQ(product(a, b), product_oracle(a, b));
      EXPECT_EQ(product(a, b), meet_via_order(a, b));
      EXPECT_EQ(sum(a, b), sum_oracle(a, b));
      EXPECT_EQ(sum(a, b), join_via_order(a, b));
      EXPECT_EQ(product(a, b).value(), a.value() & b.value());
      EXPECT_EQ(sum(a, b).value(), a.value() | b.value());
    }
  }
}

TEST(OctalTest, GeneratedTablesMatchPrintedTables) {
  const OctalTable p = generate_table(Operation::kProduct);
  const OctalTable s = generate_table(Operation::kSum);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      EXPECT_EQ(p[a][b].value(), kProductTable[a][b]) << a << "," << b;
      EXPECT_EQ(s[a][b].value(), kSumTable[a][b]) << a << "," << b;
    }
    EXPECT_EQ(entropy(Octal(a), Operation::kProduct), kProductTable[a][8]);
    EXPECT_EQ(entropy(Octal(a), Operation::kSum), kSumTable[a][8]);
  }
}

TEST(OctalTest, EntropyIsPowerOfSetBits) {
  EXPECT_EQ(entropy(Octal(5), Operation::kProduct), 4);
  EXPECT_EQ(entropy(Octal(7), Operation::kProduct), 8);
  EXPECT_EQ(entropy(Octal(3), Operation::kSum), 2);
  for (Octal a : all_octals()) {
    const int bits = std::popcount(static_cast<unsigned>(a.value()));
    EXPECT_EQ(entropy(a, Operation::kProduct), 1 << bits);
    EXPECT_EQ(entropy(a, Operation::kSum), 1 << (3 - bits));
  }
}

TEST(OctalTest, BooleanAxiomsHoldExhaustively) {
  int distributive = 0;
  for (Octal a : all_octals()) {
    EXPECT_EQ(product(a, neg(a)), Octal(0));
    EXPECT_EQ(sum(a, neg(a)), Octal(7));
    EXPECT_EQ(neg(neg(a)), a);
    for (Octal b : all_octals()) {
      EXPECT_EQ(product(a, b), product(b, a));
      EXPECT_EQ(sum(a, b), sum(b, a));
      EXPECT_EQ(product(a, sum(a, b)), a);
      EXPECT_EQ(sum(a, product(a, b)), a);
      EXPECT_EQ(neg(product(a, b)), sum(neg(a), neg(b)));
      EXPECT_EQ(neg(sum(a, b)), product(neg(a), neg(b)));
      for (Octal c : all_octals()) {
        EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
        EXPECT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
        EXPECT_EQ(product(a, sum(b, c)), sum(product(a, b), product(a, c)));
        EXPECT_EQ(sum(a, product(b, c)), product(sum(a, b), sum(a, c)));
        ++distributive;
      }
    }
  }
  EXPECT_EQ(distributive, 512);
}

TEST(OrderTest, LeqExamplesAndPartialOrder) {
  EXPECT_TRUE(leq(Octal(1), Octal(5)));
  EXPECT_FALSE(leq(Octal(1), Octal(2)));
  for (Octal x : all_octals()) EXPECT_TRUE(leq(Octal(0), x));
  for (Octal a : all_octals()) {
    EXPECT_TRUE(leq(a, a));
    for (Octal b : all_octals()) {
      EXPECT_EQ(leq(a, b), subset(a.value(), b.value()));
      EXPECT_EQ(leq(a, b), sum(a, b) == b);
      if (leq(a, b) && leq(b, a)) {
        EXPECT_EQ(a, b);
      }
      for (Octal c : all_octals()) {
        if (leq(a, b) && leq(b, c)) {
          EXPECT_TRUE(leq(a, c));
        }
      }
    }
  }
}

TEST(OrderTest, MeetJoinExamples) {
  EXPECT_EQ(join_via_order(Octal(1), Octal(2)), Octal(3));
  EXPECT_EQ(meet_via_order(Octal(5), Octal(6)), Octal(4));
  for (Octal a : all_octals()) EXPECT_EQ(join_via_order(a, a), a);
}

// Brute force over all 256 subsets of {0..7}: keep totally ordered ones
// (under the native subset order) that no other chain strictly contains.
std::vector<std::vector<int>> brute_force_maximal_chains() {
  std::vector<unsigned> chains;
  for (unsigned mask = 1; mask < 256; ++mask) {
    bool total = true;
    for (int a = 0; a < 8 && total; ++a) {
      for (int b = 0; b < 8 && total; ++b) {
        if ((mask >> a & 1) && (mask >> b & 1) && !subset(a, b) && !subset(b, a)) {
          total = false;
        }
      }
    }
    if (total) chains.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (unsigned c : chains) {
    bool maximal = true;
    for (unsigned d : chains) {
      if (d != c && (c & d) == c) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> elems;
    for (int x = 0; x < 8; ++x) {
      if (c >> x & 1) elems.push_back(x);
    }
    // Bottom to top in the subset order coincides with popcount order.
    std::sort(elems.begin(), elems.end(), [](int a, int b) {
      return std::popcount(static_cast<unsigned>(a)) <
             std::popcount(static_cast<unsigned>(b));
    });
    out.push_back(elems);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ChainsTest, MatchBruteForceEnumeration) {
  const auto oracle = brute_force_maximal_chains();
  ASSERT_EQ(oracle.size(), 6u);
  const auto chains = maximal_chains();
  ASSERT_EQ(chains.size(), oracle.size());
  for (std::size_t i = 0; i < chains.size(); ++i) {
    ASSERT_EQ(chains[i].size(), 4u);
    EXPECT_EQ(chains[i].front(), Octal(0));
    EXPECT_EQ(chains[i].back(), Octal(7));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(chains[i][k].value(), oracle[i][k]);
  }
  const std::vector<Octal> a{Octal(0), Octal(1), Octal(3), Octal(7)};
  const std::vector<Octal> b{Octal(0), Octal(4), Octal(6), Octal(7)};
  EXPECT_NE(std::find(chains.begin(), chains.end(), a), chains.end());
  EXPECT_NE(std::find(chains.begin(), chains.end(), b), chains.end());
}

TEST(TableTest, ProductTableIsBlockRecursive) {
  EXPECT_TRUE(verify_block_recursive(generate_table(Operation::kProduct)));
  EXPECT_FALSE(verify_block_recursive(generate_table(Operation::kSum)));
  OctalTable broken = generate_table(Operation::kProduct);
  broken[6][5] = Octal(5);
  EXPECT_FALSE(verify_block_recursive(broken));
}

TEST(RepresentationTest, ModalStringsToBits) {
  EXPECT_EQ(modal_to_bits(ModalString::parse("ID")), make_bits(1, 0, 1));
  EXPECT_EQ(modal_to_bits(ModalString::parse("")), make_bits(0, 0, 0));
  EXPECT_EQ(modal_to_bits(ModalString::parse("O")), make_bits(0, 1, 0));
  EXPECT_EQ(ModalString::parse("DI"), ModalString::parse("ID"));
  EXPECT_EQ(ModalString::parse("E").label(), "E");
  EXPECT_THROW(ModalString::parse("IX"), std::invalid_argument);
  EXPECT_THROW(ModalString::parse("II"), std::invalid_argument);
  for (const ModalString& m : all_modal_strings()) {
    EXPECT_EQ(bits_to_modal(modal_to_bits(m)), m);
  }
}

TEST(RepresentationTest, BitsToOctalUsesIAsMostSignificant) {
  EXPECT_EQ(bits_to_octal(make_bits(1, 0, 0)), Octal(4));
  EXPECT_EQ(bits_to_octal(make_bits(0, 1, 1)), Octal(3));
  EXPECT_EQ(bits_to_octal(make_bits(1, 1, 1)), Octal(7));
  for (Octal a : all_octals()) EXPECT_EQ(bits_to_octal(octal_to_bits(a)), a);
  EXPECT_THROW(make_bits(2, 0, 0), std::invalid_argument);
}

TEST(RepresentationTest, CubeOperations) {
  EXPECT_EQ(cube_join(CubeVector(1, 0, 0), CubeVector(0, 0, 1)), CubeVector(1, 0, 1));
  EXPECT_EQ(cube_meet(CubeVector(1, 1, 0), CubeVector(0, 1, 1)), CubeVector(0, 1, 0));
  EXPECT_EQ(cube_not(CubeVector(1, 0, 1)), CubeVector(0, 1, 0));
  EXPECT_THROW(CubeVector(0.5, 0, 0), std::invalid_argument);
  EXPECT_THROW(CubeVector(0, -1, 0), std::invalid_argument);
}

// Every representation map carries the operations across, checked on all
// 64 pairs of each algebra.
TEST(RepresentationTest, AllMapsAreIsomorphisms) {
  const ScoreBands bands{0.3725, 0.55, 1e-10};
  for (const ModalString& x : all_modal_strings()) {
    for (const ModalString& y : all_modal_strings()) {
      EXPECT_EQ(modal_to_bits(modal_union(x, y)),
                bits_or(modal_to_bits(x), modal_to_bits(y)));
      EXPECT_EQ(modal_to_bits(modal_intersection(x, y)),
                bits_and(modal_to_bits(x), modal_to_bits(y)));
    }
    EXPECT_EQ(modal_to_bits(modal_complement(x)), bits_not(modal_to_bits(x)));
  }
  for (Octal a : all_octals()) {
    const BitTriple ta = octal_to_bits(a);
    EXPECT_EQ(cube_to_bits(cube_not(bits_to_cube(ta))), bits_not(ta));
    EXPECT_EQ(octal_to_bits(neg(a)), bits_not(ta));
    EXPECT_EQ(octal_to_intervals(neg(a), bands),
              interval_complement(octal_to_intervals(a, bands)));
    for (Octal b : all_octals()) {
      const BitTriple tb = octal_to_bits(b);
      EXPECT_EQ(octal_to_bits(product(a, b)), bits_and(ta, tb));
      EXPECT_EQ(octal_to_bits(sum(a, b)), bits_or(ta, tb));
      EXPECT_EQ(cube_to_bits(cube_meet(bits_to_cube(ta), bits_to_cube(tb))),
                bits_and(ta, tb));
      EXPECT_EQ(cube_to_bits(cube_join(bits_to_cube(ta), bits_to_cube(tb))),
                bits_or(ta, tb));
      EXPECT_EQ(octal_to_intervals(product(a, b), bands),
                interval_intersection(octal_to_intervals(a, bands),
                                      octal_to_intervals(b, bands)));
      EXPECT_EQ(octal_to_intervals(sum(a, b), bands),
                interval_union(octal_to_intervals(a, bands),
                               octal_to_intervals(b, bands)));
    }
  }
}

TEST(IntervalTest, OctalToIntervals) {
  const ScoreBands bands{0.3725, 0.55, 1e-10};
  const IntervalSet four = octal_to_intervals(Octal(4), bands);
  EXPECT_TRUE(four.genuine);
  EXPECT_FALSE(four.uncertain);
  EXPECT_FALSE(four.imposter);
  EXPECT_TRUE(four.contains(0.55));
  EXPECT_TRUE(four.contains(1.0));
  EXPECT_FALSE(four.contains(0.5499));
  EXPECT_TRUE(octal_to_intervals(Octal(0), bands).empty());
  const IntervalSet seven = octal_to_intervals(Octal(7), bands);
  EXPECT_TRUE(seven.genuine && seven.uncertain && seven.imposter);
  EXPECT_THROW(octal_to_intervals(Octal(1), ScoreBands{0.6, 0.5, 1e-10}),
               std::invalid_argument);
  EXPECT_THROW(interval_union(four, octal_to_intervals(Octal(1), {0.1, 0.2, 1e-3})),
               std::invalid_argument);
}

TEST(SubalgebraTest, ClosureAndRelativeComplement) {
  const Subalgebra sub = subalgebra_closure({Octal(1), Octal(4)});
  EXPECT_EQ(sub.elements, (std::set<Octal>{Octal(0), Octal(1), Octal(4), Octal(5)}));
  EXPECT_EQ(sub.bottom, Octal(0));
  EXPECT_EQ(sub.top, Octal(5));
  for (Octal x : sub.elements) {
    for (Octal y : sub.elements) {
      EXPECT_TRUE(sub.elements.count(product(x, y)));
      EXPECT_TRUE(sub.elements.count(sum(x, y)));
    }
  }
  EXPECT_EQ(relative_complement(Octal(4), Octal(5)), Octal(1));
  EXPECT_EQ(relative_complement(Octal(1), Octal(5)), Octal(4));
  EXPECT_EQ(relative_complement(Octal(0), Octal(5)), Octal(5));
  EXPECT_THROW(relative_complement(Octal(2), Octal(5)), std::invalid_argument);
  // Global negation leaves the subalgebra.
  EXPECT_FALSE(sub.elements.count(neg(Octal(1))));

  const Subalgebra single = subalgebra_closure({Octal(7)});
  EXPECT_EQ(single.elements, std::set<Octal>{Octal(7)});
  EXPECT_EQ(single.bottom, Octal(7));
  EXPECT_EQ(single.top, Octal(7));
  EXPECT_THROW(subalgebra_closure({}), std::invalid_argument);
}

TEST(SubalgebraTest, ClosureOfGeneratorsIsAnInterval) {
  // For any seed, the closure equals the interval [meet, join] restricted to
  // elements generated from the seed, and always contains bottom and top.
  for (unsigned mask = 1; mask < 256; ++mask) {
    std::set<Octal> seed;
    for (int x = 0; x < 8; ++x) {
      if (mask >> x & 1) seed.insert(Octal(x));
    }
    const Subalgebra sub = subalgebra_closure(seed);
    EXPECT_TRUE(sub.elements.count(sub.bottom));
    EXPECT_TRUE(sub.elements.count(sub.top));
    for (Octal x : sub.elements) {
      EXPECT_TRUE(leq(sub.bottom, x) && leq(x, sub.top));
      EXPECT_TRUE(sub.elements.count(relative_complement(x, sub.top, sub.bottom)));
    }
    const std::size_t n = sub.elements.size();
    EXPECT_TRUE(n == 1 || n == 2 || n == 4 || n == 8) << "mask " << mask;
  }
}

}  // namespace
}  // namespace irislogic

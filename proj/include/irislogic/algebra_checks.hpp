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

#ifndef IRISLOGIC_ALGEBRA_CHECKS_HPP_
#define IRISLOGIC_ALGEBRA_CHECKS_HPP_

// Exhaustive self-checks of the 8-valent algebra, run by `algebra verify`.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "irislogic/decision.hpp"
#include "irislogic/octal_algebra.hpp"

namespace irislogic {

// Reference operation tables with their absolute-entropy columns.
inline constexpr std::array<std::array<int, 8>, 8> kReferenceProduct{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 1, 0, 1, 0, 1},
    {0, 0, 2, 2, 0, 0, 2, 2},
    {0, 1, 2, 3, 0, 1, 2, 3},
    {0, 0, 0, 0, 4, 4, 4, 4},
    {0, 1, 0, 1, 4, 5, 4, 5},
    {0, 0, 2, 2, 4, 4, 6, 6},
    {0, 1, 2, 3, 4, 5, 6, 7},
}};
inline constexpr std::array<std::array<int, 8>, 8> kReferenceSum{{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 1, 3, 3, 5, 5, 7, 7},
    {2, 3, 2, 3, 6, 7, 6, 7},
    {3, 3, 3, 3, 7, 7, 7, 7},
    {4, 5, 6, 7, 4, 5, 6, 7},
    {5, 5, 7, 7, 5, 5, 7, 7},
    {6, 7, 6, 7, 6, 7, 6, 7},
    {7, 7, 7, 7, 7, 7, 7, 7},
}};
inline constexpr std::array<int, 8> kReferenceProductEntropy{1, 2, 2, 4, 2, 4, 4, 8};
inline constexpr std::array<int, 8> kReferenceSumEntropy{8, 4, 4, 2, 4, 2, 2, 1};

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;

  bool ok() const { return passed == total; }
};

inline std::vector<CheckResult> run_algebra_checks() {
  std::vector<CheckResult> results;
  const auto elems = all_octals();

  auto pairs = [&](const std::string& name,
                   const std::function<bool(Octal, Octal)>& pred) {
    CheckResult r{name, 0, 0};
    for (Octal a : elems) {
      for (Octal b : elems) {
        ++r.total;
        if (pred(a, b)) ++r.passed;
      }
    }
    results.push_back(r);
  };
  auto triples = [&](const std::string& name,
                     const std::function<bool(Octal, Octal, Octal)>& pred) {
    CheckResult r{name, 0, 0};
    for (Octal a : elems) {
      for (Octal b : elems) {
        for (Octal c : elems) {
          ++r.total;
          if (pred(a, b, c)) ++r.passed;
        }
      }
    }
    results.push_back(r);
  };
  auto singles = [&](const std::string& name, const std::function<bool(Octal)>& pred) {
    CheckResult r{name, 0, 0};
    for (Octal a : elems) {
      ++r.total;
      if (pred(a)) ++r.passed;
    }
    results.push_back(r);
  };

  pairs("product matches bitwise oracle",
        [](Octal a, Octal b) { return product(a, b) == product_oracle(a, b); });
  pairs("sum matches bitwise oracle",
        [](Octal a, Octal b) { return sum(a, b) == sum_oracle(a, b); });
  pairs("product matches order meet",
        [](Octal a, Octal b) { return product(a, b) == meet_via_order(a, b); });
  pairs("sum matches order join",
        [](Octal a, Octal b) { return sum(a, b) == join_via_order(a, b); });
  pairs("product matches reference table", [](Octal a, Octal b) {
    return product(a, b).value() == kReferenceProduct[a.value()][b.value()];
  });
  pairs("sum matches reference table", [](Octal a, Octal b) {
    return sum(a, b).value() == kReferenceSum[a.value()][b.value()];
  });
  singles("product entropy matches reference column", [](Octal a) {
    return entropy(a, Operation::kProduct) == kReferenceProductEntropy[a.value()];
  });
  singles("sum entropy matches reference column", [](Octal a) {
    return entropy(a, Operation::kSum) == kReferenceSumEntropy[a.value()];
  });

  pairs("commutativity", [](Octal a, Octal b) {
    return product(a, b) == product(b, a) && sum(a, b) == sum(b, a);
  });
  triples("associativity", [](Octal a, Octal b, Octal c) {
    return product(product(a, b), c) == product(a, product(b, c)) &&
           sum(sum(a, b), c) == sum(a, sum(b, c));
  });
  triples("distributivity of product over sum", [](Octal a, Octal b, Octal c) {
    return product(a, sum(b, c)) == sum(product(a, b), product(a, c));
  });
  triples("distributivity of sum over product", [](Octal a, Octal b, Octal c) {
    return sum(a, product(b, c)) == product(sum(a, b), sum(a, c));
  });
  pairs("absorption", [](Octal a, Octal b) {
    return product(a, sum(a, b)) == a && sum(a, product(a, b)) == a;
  });
  singles("complement", [](Octal a) {
    return product(a, neg(a)) == Octal(0) && sum(a, neg(a)) == Octal(7) &&
           neg(neg(a)) == a;
  });
  pairs("De Morgan", [](Octal a, Octal b) {
    return neg(product(a, b)) == sum(neg(a), neg(b)) &&
           neg(sum(a, b)) == product(neg(a), neg(b));
  });
  triples("partial order", [](Octal a, Octal b, Octal c) {
    const bool reflexive = leq(a, a);
    const bool antisymmetric = !(leq(a, b) && leq(b, a)) || a == b;
    const bool transitive = !(leq(a, b) && leq(b, c)) || leq(a, c);
    return reflexive && antisymmetric && transitive;
  });

  results.push_back({"product table is block-recursive",
                     verify_block_recursive(generate_table(Operation::kProduct)) ? 1u : 0u,
                     1});
  {
    const auto chains = maximal_chains();
    std::size_t good = 0;
    for (const Chain& c : chains) {
      if (c.size() == 4 && c.front() == Octal(0) && c.back() == Octal(7)) ++good;
    }
    results.push_back({"maximal chains (6 of length 4)",
                       chains.size() == 6 ? good : 0, 6});
  }
  {
    CheckResult r{"psi equals bits_to_octal after modal_to_bits", 0, 0};
    for (const ModalString& m : all_modal_strings()) {
      ++r.total;
      if (psi(m) == bits_to_octal(modal_to_bits(m))) ++r.passed;
    }
    results.push_back(r);
  }
  {
    CheckResult r{"psi is an algebra isomorphism", 0, 0};
    const auto modal = all_modal_strings();
    for (const ModalString& x : modal) {
      for (const ModalString& y : modal) {
        ++r.total;
        if (psi(modal_union(x, y)) == sum(psi(x), psi(y)) &&
            psi(modal_intersection(x, y)) == product(psi(x), psi(y)) &&
            psi(modal_complement(x)) == neg(psi(x))) {
          ++r.passed;
        }
      }
    }
    results.push_back(r);
  }
  return results;
}

}  // namespace irislogic

#endif  // IRISLOGIC_ALGEBRA_CHECKS_HPP_

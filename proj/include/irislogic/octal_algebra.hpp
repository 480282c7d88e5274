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

#ifndef IRISLOGIC_OCTAL_ALGEBRA_HPP_
#define IRISLOGIC_OCTAL_ALGEBRA_HPP_

// The 8-valent Boolean algebra (Z8, P, S, N) together with the isomorphic
// algebras it is built from:
//
//   ModalString  subsets of {I, O, D} under union / intersection / complement
//   BitTriple    {0,1}^3 under And / Or / Neg, bit_I being the most significant
//   CubeVector   vertices of the unit cube under *, (+), !
//   IntervalSet  unions of the three score bands [0,n], (n,p), [p,1]
//   Octal        integers modulo 8 under P, S, N
//
// P is evaluated with the modulo/comparison formula only. The bitwise route
// through BitTriple (product_oracle / sum_oracle) and the order-theoretic
// route (meet_via_order / join_via_order) are kept separate so that each can
// check the others.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irislogic/bands.hpp"

namespace irislogic {

class Octal {
 public:
  constexpr Octal() = default;
  // Any integer is reduced modulo 8 (negative values wrap).
  constexpr explicit Octal(long long v)
      : value_(static_cast<std::uint8_t>(((v % 8) + 8) % 8)) {}

  constexpr int value() const { return value_; }

  // Natural order on {0..7}. The lattice order is leq().
  constexpr auto operator<=>(const Octal&) const = default;

 private:
  std::uint8_t value_ = 0;
};

inline constexpr int kOctalCount = 8;

inline constexpr std::array<Octal, kOctalCount> all_octals() {
  std::array<Octal, kOctalCount> out{};
  for (int i = 0; i < kOctalCount; ++i) out[i] = Octal(i);
  return out;
}

enum class Operation { kProduct, kSum };

inline std::string_view to_string(Operation op) {
  return op == Operation::kProduct ? "product" : "sum";
}

// N(a) = 7 - a.
constexpr Octal neg(Octal a) { return Octal(7 - a.value()); }

// P(a,b) = sum_{n=0..2} 2^n (a mod 2^(n+1) >= 2^n)(b mod 2^(n+1) >= 2^n)
constexpr Octal product(Octal a, Octal b) {
  int c = 0;
  for (int n = 0, weight = 1; n < 3; ++n, weight *= 2) {
    const int a_term = (a.value() % (2 * weight)) >= weight ? 1 : 0;
    const int b_term = (b.value() % (2 * weight)) >= weight ? 1 : 0;
    c += weight * a_term * b_term;
  }
  return Octal(c);
}

// S(a,b) = N(P(N(a), N(b)))
constexpr Octal sum(Octal a, Octal b) { return neg(product(neg(a), neg(b))); }

constexpr Octal apply(Operation op, Octal a, Octal b) {
  return op == Operation::kProduct ? product(a, b) : sum(a, b);
}

// ---------------------------------------------------------------------------
// BitTriple

struct BitTriple {
  std::uint8_t bit_i = 0;
  std::uint8_t bit_o = 0;
  std::uint8_t bit_d = 0;

  bool operator==(const BitTriple&) const = default;
};

inline BitTriple make_bits(int bit_i, int bit_o, int bit_d) {
  auto check = [](int b) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("bit triple components must be 0 or 1");
    }
    return static_cast<std::uint8_t>(b);
  };
  return BitTriple{check(bit_i), check(bit_o), check(bit_d)};
}

inline BitTriple bits_and(BitTriple x, BitTriple y) {
  return {std::min(x.bit_i, y.bit_i), std::min(x.bit_o, y.bit_o),
          std::min(x.bit_d, y.bit_d)};
}

inline BitTriple bits_or(BitTriple x, BitTriple y) {
  return {std::max(x.bit_i, y.bit_i), std::max(x.bit_o, y.bit_o),
          std::max(x.bit_d, y.bit_d)};
}

inline BitTriple bits_not(BitTriple x) {
  return {static_cast<std::uint8_t>(1 - x.bit_i),
          static_cast<std::uint8_t>(1 - x.bit_o),
          static_cast<std::uint8_t>(1 - x.bit_d)};
}

// "IOD"-style label of a triple, e.g. (1,0,1) -> "101".
inline std::string to_string(BitTriple t) {
  return {static_cast<char>('0' + t.bit_i), static_cast<char>('0' + t.bit_o),
          static_cast<char>('0' + t.bit_d)};
}

// I carries weight 4, O weight 2, D weight 1.
inline Octal bits_to_octal(BitTriple t) {
  return Octal(4 * t.bit_i + 2 * t.bit_o + t.bit_d);
}

inline BitTriple octal_to_bits(Octal a) {
  const int v = a.value();
  return {static_cast<std::uint8_t>(v / 4), static_cast<std::uint8_t>((v / 2) % 2),
          static_cast<std::uint8_t>(v % 2)};
}

// Independent oracles: componentwise min / max over the bit triples.
inline Octal product_oracle(Octal a, Octal b) {
  return bits_to_octal(bits_and(octal_to_bits(a), octal_to_bits(b)));
}

inline Octal sum_oracle(Octal a, Octal b) {
  return bits_to_octal(bits_or(octal_to_bits(a), octal_to_bits(b)));
}

// ---------------------------------------------------------------------------
// ModalString

// A set of modal letters kept in canonical order I, O, D. The empty set is E.
class ModalString {
 public:
  ModalString() = default;

  // Accepts the letters I, O, D in any order without repetition. "" and "E"
  // both denote the empty value.
  static ModalString parse(std::string_view text) {
    ModalString m;
    if (text == "E") return m;
    bool seen[3] = {false, false, false};
    for (char c : text) {
      const auto pos = kLetters.find(c);
      if (pos == std::string_view::npos) {
        throw std::invalid_argument("modal string may only contain I, O, D: '" +
                                    std::string(text) + "'");
      }
      if (seen[pos]) {
        throw std::invalid_argument("modal string repeats '" + std::string(1, c) +
                                    "'");
      }
      seen[pos] = true;
    }
    for (std::size_t k = 0; k < kLetters.size(); ++k) {
      if (seen[k]) m.members_.push_back(kLetters[k]);
    }
    return m;
  }

  bool contains(char letter) const {
    return members_.find(letter) != std::string::npos;
  }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  // Canonical letters, "" for E.
  const std::string& letters() const { return members_; }
  // Display label, "E" for the empty value.
  std::string label() const { return members_.empty() ? "E" : members_; }

  bool operator==(const ModalString&) const = default;

  friend ModalString modal_union(const ModalString& x, const ModalString& y) {
    return parse_filtered([&](char c) { return x.contains(c) || y.contains(c); });
  }
  friend ModalString modal_intersection(const ModalString& x,
                                        const ModalString& y) {
    return parse_filtered([&](char c) { return x.contains(c) && y.contains(c); });
  }
  friend ModalString modal_complement(const ModalString& x) {
    return parse_filtered([&](char c) { return !x.contains(c); });
  }

 private:
  static constexpr std::string_view kLetters = "IOD";

  template <typename Pred>
  static ModalString parse_filtered(Pred keep) {
    ModalString m;
    for (char c : kLetters) {
      if (keep(c)) m.members_.push_back(c);
    }
    return m;
  }

  std::string members_;
};

// The eight modal values E, D, O, I, OD, ID, IO, IOD.
inline std::vector<ModalString> all_modal_strings() {
  std::vector<ModalString> out;
  for (const char* s : {"E", "D", "O", "I", "OD", "ID", "IO", "IOD"}) {
    out.push_back(ModalString::parse(s));
  }
  return out;
}

// str2bin: bit_I = va('I' in s), bit_O = va('O' in s), bit_D = va('D' in s).
inline BitTriple modal_to_bits(const ModalString& m) {
  return {static_cast<std::uint8_t>(m.contains('I')),
          static_cast<std::uint8_t>(m.contains('O')),
          static_cast<std::uint8_t>(m.contains('D'))};
}

inline ModalString bits_to_modal(BitTriple t) {
  std::string s;
  if (t.bit_i) s.push_back('I');
  if (t.bit_o) s.push_back('O');
  if (t.bit_d) s.push_back('D');
  return ModalString::parse(s);
}

// ---------------------------------------------------------------------------
// CubeVector

class CubeVector {
 public:
  CubeVector() = default;
  CubeVector(double x, double y, double z) : coords_{x, y, z} {
    for (double c : coords_) {
      if (c != 0.0 && c != 1.0) {
        throw std::invalid_argument("cube vector coordinates must be 0 or 1");
      }
    }
  }

  const std::array<double, 3>& coords() const { return coords_; }
  double operator[](std::size_t k) const { return coords_[k]; }

  bool operator==(const CubeVector&) const = default;

 private:
  std::array<double, 3> coords_{0.0, 0.0, 0.0};
};

// '*': the common part, componentwise product.
inline CubeVector cube_meet(const CubeVector& u, const CubeVector& v) {
  return {u[0] * v[0], u[1] * v[1], u[2] * v[2]};
}

// u (+) v = u + v - u * v
inline CubeVector cube_join(const CubeVector& u, const CubeVector& v) {
  const CubeVector common = cube_meet(u, v);
  return {u[0] + v[0] - common[0], u[1] + v[1] - common[1],
          u[2] + v[2] - common[2]};
}

// '!u': from u to the main diagonal (1,1,1).
inline CubeVector cube_not(const CubeVector& u) {
  return {1.0 - u[0], 1.0 - u[1], 1.0 - u[2]};
}

inline CubeVector bits_to_cube(BitTriple t) {
  return {static_cast<double>(t.bit_i), static_cast<double>(t.bit_o),
          static_cast<double>(t.bit_d)};
}

inline BitTriple cube_to_bits(const CubeVector& u) {
  return make_bits(static_cast<int>(u[0]), static_cast<int>(u[1]),
                   static_cast<int>(u[2]));
}

// ---------------------------------------------------------------------------
// IntervalSet

// A union of the three base bands, stored symbolically.
struct IntervalSet {
  bool imposter = false;   // [0, n]
  bool uncertain = false;  // (n, p)
  bool genuine = false;    // [p, 1]
  ScoreBands bands{};

  bool operator==(const IntervalSet&) const = default;

  bool empty() const { return !imposter && !uncertain && !genuine; }

  // Whether a similarity score falls in one of the member bands.
  bool contains(double score) const {
    if (score <= bands.n) return imposter;
    if (score >= bands.p) return genuine;
    return uncertain;
  }

  std::string to_string() const {
    if (empty()) return "{}";
    std::string out = "{";
    auto add = [&](const std::string& piece) {
      if (out.size() > 1) out += " U ";
      out += piece;
    };
    if (imposter) add("[0," + std::to_string(bands.n) + "]");
    if (uncertain) {
      add("(" + std::to_string(bands.n) + "," + std::to_string(bands.p) + ")");
    }
    if (genuine) add("[" + std::to_string(bands.p) + ",1]");
    return out + "}";
  }
};

namespace detail {
inline void require_same_bands(const IntervalSet& x, const IntervalSet& y) {
  if (!(x.bands == y.bands)) {
    throw std::invalid_argument("interval sets built over different bands");
  }
}
}  // namespace detail

inline IntervalSet interval_union(const IntervalSet& x, const IntervalSet& y) {
  detail::require_same_bands(x, y);
  return {x.imposter || y.imposter, x.uncertain || y.uncertain,
          x.genuine || y.genuine, x.bands};
}

inline IntervalSet interval_intersection(const IntervalSet& x,
                                         const IntervalSet& y) {
  detail::require_same_bands(x, y);
  return {x.imposter && y.imposter, x.uncertain && y.uncertain,
          x.genuine && y.genuine, x.bands};
}

inline IntervalSet interval_complement(const IntervalSet& x) {
  return {!x.imposter, !x.uncertain, !x.genuine, x.bands};
}

// [p,1] iff bit_I, (n,p) iff bit_O, [0,n] iff bit_D.
inline IntervalSet octal_to_intervals(Octal a, const ScoreBands& bands) {
  validated(bands);
  const BitTriple t = octal_to_bits(a);
  return {t.bit_d == 1, t.bit_o == 1, t.bit_i == 1, bands};
}

// ---------------------------------------------------------------------------
// Order structure

// a <= b in the lattice order iff P(a,b) = a.
constexpr bool leq(Octal a, Octal b) { return product(a, b) == a; }

// Greatest common lower bound, found by exhaustive search using leq only.
inline Octal meet_via_order(Octal a, Octal b) {
  std::vector<Octal> lower;
  for (Octal x : all_octals()) {
    if (leq(x, a) && leq(x, b)) lower.push_back(x);
  }
  std::vector<Octal> greatest;
  for (Octal x : lower) {
    if (std::all_of(lower.begin(), lower.end(),
                    [&](Octal y) { return leq(y, x); })) {
      greatest.push_back(x);
    }
  }
  if (greatest.size() != 1) {
    throw std::logic_error("meet is not unique");
  }
  return greatest.front();
}

// Least common upper bound, found by exhaustive search using leq only.
inline Octal join_via_order(Octal a, Octal b) {
  std::vector<Octal> upper;
  for (Octal x : all_octals()) {
    if (leq(a, x) && leq(b, x)) upper.push_back(x);
  }
  std::vector<Octal> least;
  for (Octal x : upper) {
    if (std::all_of(upper.begin(), upper.end(),
                    [&](Octal y) { return leq(x, y); })) {
      least.push_back(x);
    }
  }
  if (least.size() != 1) {
    throw std::logic_error("join is not unique");
  }
  return least.front();
}

// Absolute entropy: number of distinct values op(a, b) over all b.
inline int entropy(Octal a, Operation op) {
  std::set<Octal> seen;
  for (Octal b : all_octals()) seen.insert(apply(op, a, b));
  return static_cast<int>(seen.size());
}

using Chain = std::vector<Octal>;

// All maximal totally ordered subsets of ({0..7}, leq), bottom to top,
// sorted lexicographically.
inline std::vector<Chain> maximal_chains() {
  const auto elems = all_octals();
  auto strictly_below = [](Octal a, Octal b) { return a != b && leq(a, b); };
  auto covers = [&](Octal a, Octal b) {  // b covers a
    if (!strictly_below(a, b)) return false;
    return std::none_of(elems.begin(), elems.end(), [&](Octal c) {
      return strictly_below(a, c) && strictly_below(c, b);
    });
  };

  std::vector<Chain> chains;
  std::vector<Chain> stack;
  for (Octal x : elems) {
    const bool minimal = std::none_of(elems.begin(), elems.end(),
                                      [&](Octal y) { return strictly_below(y, x); });
    if (minimal) stack.push_back({x});
  }
  while (!stack.empty()) {
    Chain chain = std::move(stack.back());
    stack.pop_back();
    bool extended = false;
    for (Octal next : elems) {
      if (covers(chain.back(), next)) {
        Chain longer = chain;
        longer.push_back(next);
        stack.push_back(std::move(longer));
        extended = true;
      }
    }
    if (!extended) chains.push_back(std::move(chain));
  }
  std::sort(chains.begin(), chains.end());
  return chains;
}

// ---------------------------------------------------------------------------
// Operation tables

using OctalTable = std::array<std::array<Octal, kOctalCount>, kOctalCount>;

inline OctalTable generate_table(Operation op) {
  OctalTable t{};
  for (Octal a : all_octals()) {
    for (Octal b : all_octals()) t[a.value()][b.value()] = apply(op, a, b);
  }
  return t;
}

// Checks T_2k = [[T_k, T_k], [T_k, T_k + k]] for k = 1, 2, 4 with T_1 = [0],
// the block-recursive shape of the product table.
inline bool verify_block_recursive(const OctalTable& table) {
  if (table[0][0].value() != 0) return false;
  for (int k : {1, 2, 4}) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const int base = table[i][j].value();
        if (table[i][j + k].value() != base) return false;
        if (table[i + k][j].value() != base) return false;
        if (table[i + k][j + k].value() != base + k) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subalgebras

struct Subalgebra {
  std::set<Octal> elements;
  Octal bottom;
  Octal top;
};

// The unique b in [bottom, top] with P(a,b) = bottom and S(a,b) = top.
inline Octal relative_complement(Octal a, Octal top, Octal bottom = Octal(0)) {
  if (!leq(bottom, top)) {
    throw std::invalid_argument("relative complement: bottom is not below top");
  }
  if (!leq(a, top) || !leq(bottom, a)) {
    throw std::invalid_argument("relative complement: " +
                                std::to_string(a.value()) + " is not within [" +
                                std::to_string(bottom.value()) + ", " +
                                std::to_string(top.value()) + "]");
  }
  std::vector<Octal> found;
  for (Octal b : all_octals()) {
    if (leq(bottom, b) && leq(b, top) && product(a, b) == bottom &&
        sum(a, b) == top) {
      found.push_back(b);
    }
  }
  if (found.size() != 1) {
    throw std::logic_error("relative complement is not unique");
  }
  return found.front();
}

// Smallest set containing the seed that is closed under P, S and complement
// relative to its own bottom (meet of all members) and top (join of all).
inline Subalgebra subalgebra_closure(const std::set<Octal>& seed) {
  if (seed.empty()) {
    throw std::invalid_argument("subalgebra closure needs a non-empty seed");
  }
  Subalgebra sub{seed, *seed.begin(), *seed.begin()};
  for (;;) {
    std::set<Octal> next = sub.elements;
    Octal bottom = *next.begin();
    Octal top = *next.begin();
    for (Octal x : sub.elements) {
      bottom = product(bottom, x);
      top = sum(top, x);
    }
    next.insert(bottom);
    next.insert(top);
    for (Octal x : sub.elements) {
      for (Octal y : sub.elements) {
        next.insert(product(x, y));
        next.insert(sum(x, y));
      }
    }
    for (Octal x : sub.elements) next.insert(relative_complement(x, top, bottom));
    sub.bottom = bottom;
    sub.top = top;
    if (next == sub.elements) return sub;
    sub.elements = std::move(next);
  }
}

}  // namespace irislogic

#endif  // IRISLOGIC_OCTAL_ALGEBRA_HPP_

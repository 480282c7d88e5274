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

#ifndef IRISLOGIC_ENROLLMENT_HPP_
#define IRISLOGIC_ENROLLMENT_HPP_

// Synthetic binary templates, Hamming similarity, and the one-to-all
// enrollment / verification protocol that keeps a gallery free of
// undecidable (O) pairs.
//
// A Gallery is single-writer: enroll() calls must be serialized by the
// caller. Concurrent reads (verify, consistency_check) are safe between
// mutations.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irislogic/bands.hpp"
#include "irislogic/calibration.hpp"
#include "irislogic/decision.hpp"
#include "irislogic/octal_algebra.hpp"

namespace irislogic {

// Fixed-length bit vector packed into 64-bit words. Unused high bits of the
// last word are always zero.
class BitCode {
 public:
  BitCode() = default;
  explicit BitCode(std::size_t bit_length)
      : bit_length_(bit_length), words_((bit_length + 63) / 64, 0) {}

  std::size_t size() const { return bit_length_; }

  bool get(std::size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  void set(std::size_t i, bool value) {
    check(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) {
    check(i);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  std::size_t hamming_distance(const BitCode& other) const {
    if (other.bit_length_ != bit_length_) {
      throw std::invalid_argument("bit length mismatch: " +
                                  std::to_string(bit_length_) + " vs " +
                                  std::to_string(other.bit_length_));
    }
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      d += static_cast<std::size_t>(std::popcount(words_[w] ^ other.words_[w]));
    }
    return d;
  }

  // Lowercase hex, one digit per 4 bits; bit 4k is the most significant bit
  // of digit k. Padding bits of a partial last digit are zero.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve((bit_length_ + 3) / 4);
    for (std::size_t k = 0; k * 4 < bit_length_; ++k) {
      int nibble = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        const std::size_t i = 4 * k + j;
        nibble = (nibble << 1) | (i < bit_length_ && get(i) ? 1 : 0);
      }
      out.push_back(kDigits[nibble]);
    }
    return out;
  }

  static BitCode from_hex(std::string_view hex, std::size_t bit_length) {
    if (hex.size() != (bit_length + 3) / 4) {
      throw std::invalid_argument("hex code has " + std::to_string(hex.size()) +
                                  " digits, expected " +
                                  std::to_string((bit_length + 3) / 4));
    }
    BitCode code(bit_length);
    for (std::size_t k = 0; k < hex.size(); ++k) {
      const char c = hex[k];
      int nibble = 0;
      if (c >= '0' && c <= '9') {
        nibble = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        nibble = c - 'a' + 10;
      } else {
        throw std::invalid_argument("invalid lowercase hex digit '" +
                                    std::string(1, c) + "'");
      }
      for (std::size_t j = 0; j < 4; ++j) {
        const bool bit = (nibble >> (3 - j)) & 1;
        const std::size_t i = 4 * k + j;
        if (i < bit_length) {
          code.set(i, bit);
        } else if (bit) {
          throw std::invalid_argument("hex code sets padding bits");
        }
      }
    }
    return code;
  }

  bool operator==(const BitCode&) const = default;

 private:
  void check(std::size_t i) const {
    if (i >= bit_length_) throw std::out_of_range("bit index out of range");
  }

  friend class PopulationBuilder;

  std::size_t bit_length_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Template {
  BitCode bits;
  std::string identity;
  std::string template_id;

  bool operator==(const Template&) const = default;
};

// 1 - fractional Hamming distance.
inline double similarity(const Template& a, const Template& b) {
  const std::size_t d = a.bits.hamming_distance(b.bits);
  if (a.bits.size() == 0) throw std::invalid_argument("empty templates");
  return 1.0 - static_cast<double>(d) / static_cast<double>(a.bits.size());
}

struct PopulationParams {
  int identities = 10;
  int samples_per_identity = 5;
  std::size_t bit_length = 1024;
  double flip_probability = 0.15;
  std::uint64_t seed = 1;
};

inline std::string identity_label(int identity) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "id%04d", identity);
  return buf;
}

inline std::string template_label(int identity, int sample) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "id%04d.s%03d", identity, sample);
  return buf;
}

class PopulationBuilder {
 public:
  explicit PopulationBuilder(std::uint64_t seed) : rng_(seed) {}

  BitCode random_code(std::size_t bit_length) {
    BitCode code(bit_length);
    for (auto& w : code.words_) w = rng_();
    if (const std::size_t rem = bit_length % 64; rem != 0) {
      code.words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
    return code;
  }

  BitCode noisy_copy(const BitCode& master, double flip_probability) {
    BitCode code = master;
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (uniform() < flip_probability) code.flip(i);
    }
    return code;
  }

 private:
  // 53 high bits of the engine output, so the stream is identical on every
  // standard library.
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
};

// One uniform random master code per identity; every sample is the master
// with independent per-bit flips. Deterministic in `seed`.
inline std::vector<Template> generate_population(const PopulationParams& p) {
  if (p.identities < 1 || p.samples_per_identity < 1 || p.bit_length < 1) {
    throw std::invalid_argument("population counts must be >= 1");
  }
  if (!(p.flip_probability >= 0.0 && p.flip_probability < 0.5)) {
    throw std::invalid_argument("flip probability must be in [0, 0.5)");
  }
  PopulationBuilder builder(p.seed);
  std::vector<Template> out;
  out.reserve(static_cast<std::size_t>(p.identities) *
              static_cast<std::size_t>(p.samples_per_identity));
  for (int id = 0; id < p.identities; ++id) {
    const BitCode master = builder.random_code(p.bit_length);
    for (int s = 0; s < p.samples_per_identity; ++s) {
      out.push_back(Template{builder.noisy_copy(master, p.flip_probability),
                             identity_label(id), template_label(id, s)});
    }
  }
  return out;
}

struct PairScore {
  std::string pair_id;  // "<template_id>:<template_id>"
  bool genuine = false;
  double score = 0.0;
};

// Every unordered pair (i < j) in population order.
inline std::vector<PairScore> all_pairs(std::span<const Template> population) {
  std::vector<PairScore> out;
  if (!population.empty()) {
    out.reserve(population.size() * (population.size() - 1) / 2);
  }
  for (std::size_t i = 0; i < population.size(); ++i) {
    for (std::size_t j = i + 1; j < population.size(); ++j) {
      const Template& a = population[i];
      const Template& b = population[j];
      out.push_back({a.template_id + ":" + b.template_id,
                     a.identity == b.identity, similarity(a, b)});
    }
  }
  return out;
}

inline LabeledScores to_labeled_scores(std::span<const PairScore> pairs) {
  LabeledScores s;
  for (const PairScore& p : pairs) {
    (p.genuine ? s.genuine : s.imposter).push_back(p.score);
  }
  return s;
}

// Counts of the partition ICP = EICP + UICP, EICP = I + D, with the octal tag
// each block carries in Z8.
struct PartitionReport {
  std::size_t icp_count = 0;
  std::size_t eicp_count = 0;
  std::size_t uicp_count = 0;
  std::size_t genuine_count = 0;   // modal I
  std::size_t imposter_count = 0;  // modal D
  Octal icp_tag;
  Octal eicp_tag;
  Octal uicp_tag;
};

inline PartitionReport partition(std::span<const double> scores,
                                 const ScoreBands& bands) {
  validated(bands);
  PartitionReport r;
  for (double s : scores) {
    switch (classify(s, bands)) {
      case Modal::kIdentical: ++r.genuine_count; break;
      case Modal::kDifferent: ++r.imposter_count; break;
      case Modal::kOtherwise: ++r.uicp_count; break;
    }
  }
  r.eicp_count = r.genuine_count + r.imposter_count;
  r.icp_count = r.eicp_count + r.uicp_count;
  const Octal i = psi(to_modal_string(Modal::kIdentical));
  const Octal d = psi(to_modal_string(Modal::kDifferent));
  r.eicp_tag = sum(i, d);
  r.uicp_tag = psi(to_modal_string(Modal::kOtherwise));
  r.icp_tag = sum(r.eicp_tag, r.uicp_tag);
  return r;
}

inline PartitionReport partition(std::span<const PairScore> pairs,
                                 const ScoreBands& bands) {
  std::vector<double> scores;
  scores.reserve(pairs.size());
  for (const PairScore& p : pairs) scores.push_back(p.score);
  return partition(std::span<const double>(scores), bands);
}

struct EnrollOutcome;

class Gallery {
 public:
  explicit Gallery(const ScoreBands& bands) : bands_(validated(bands)) {}

  // Builds a gallery without running the enrollment protocol (loading from
  // disk, or constructing test fixtures). Use consistency_check() to audit.
  static Gallery from_templates_unchecked(const ScoreBands& bands,
                                          std::vector<Template> templates) {
    Gallery g(bands);
    for (Template& t : templates) g.append(std::move(t));
    return g;
  }

  const ScoreBands& bands() const { return bands_; }
  const std::vector<Template>& enrolled() const { return enrolled_; }
  std::size_t size() const { return enrolled_.size(); }
  bool empty() const { return enrolled_.empty(); }
  // 0 until the first template is added.
  std::size_t bit_length() const {
    return enrolled_.empty() ? 0 : enrolled_.front().bits.size();
  }

  bool operator==(const Gallery&) const = default;

 private:
  friend EnrollOutcome enroll(Gallery&, const Template&);

  void append(Template t) {
    if (!enrolled_.empty() && t.bits.size() != bit_length()) {
      throw std::invalid_argument("template " + t.template_id + " has " +
                                  std::to_string(t.bits.size()) +
                                  " bits, gallery uses " +
                                  std::to_string(bit_length()));
    }
    for (const Template& e : enrolled_) {
      if (e.template_id == t.template_id) {
        throw std::invalid_argument("duplicate template id " + t.template_id);
      }
    }
    enrolled_.push_back(std::move(t));
  }

  ScoreBands bands_;
  std::vector<Template> enrolled_;
};

struct EnrollOutcome {
  enum class Status { kEnrolled, kRejectedUnenrollable };
  Status status = Status::kEnrolled;
  std::vector<std::string> conflicting_ids;

  bool enrolled() const { return status == Status::kEnrolled; }
};

// One-to-all enrollment: the candidate is compared with every enrolled
// template and refused if any comparison lands in the O band. A refused
// candidate leaves the gallery untouched.
inline EnrollOutcome enroll(Gallery& gallery, const Template& candidate) {
  if (!gallery.empty() && candidate.bits.size() != gallery.bit_length()) {
    throw std::invalid_argument("candidate bit length does not match gallery");
  }
  EnrollOutcome out;
  for (const Template& e : gallery.enrolled()) {
    if (classify(similarity(candidate, e), gallery.bands()) == Modal::kOtherwise) {
      out.conflicting_ids.push_back(e.template_id);
    }
  }
  if (!out.conflicting_ids.empty()) {
    out.status = EnrollOutcome::Status::kRejectedUnenrollable;
    return out;
  }
  gallery.append(candidate);
  return out;
}

struct TargetDecision {
  std::string template_id;
  DecisionRecord record;
};

struct Verification {
  // The claim's polarity asserted against each enrolled template's identity.
  std::vector<TargetDecision> per_target;
  // Adjudication on the best score among the claimed identity's templates.
  DecisionRecord claim_decision;
  std::string best_template_id;
  Response overall = Response::kRepeat;
  // Templates whose comparison with the probe classified O.
  std::vector<std::string> conflicting_ids;
};

inline Verification verify(const Gallery& gallery, const Template& probe,
                           const Claim& claim) {
  if (!gallery.empty() && probe.bits.size() != gallery.bit_length()) {
    throw std::invalid_argument("probe bit length does not match gallery");
  }
  Verification v;
  bool found = false;
  double best = -1.0;
  for (const Template& e : gallery.enrolled()) {
    const double s = similarity(probe, e);
    DecisionRecord rec = decide(Claim{claim.polarity, e.identity}, s, gallery.bands());
    if (rec.modal == Modal::kOtherwise) v.conflicting_ids.push_back(e.template_id);
    if (e.identity == claim.claimed_identity && s > best) {
      best = s;
      found = true;
      v.best_template_id = e.template_id;
    }
    v.per_target.push_back({e.template_id, std::move(rec)});
  }
  if (!found) {
    throw std::invalid_argument("claimed identity '" + claim.claimed_identity +
                                "' is not enrolled");
  }
  v.claim_decision = decide(claim, best, gallery.bands());
  v.overall = v.conflicting_ids.empty() ? v.claim_decision.response
                                        : Response::kRepeat;
  return v;
}

struct ConsistencyReport {
  bool pass = true;
  std::size_t pair_count = 0;
  std::size_t crisp_identical = 0;  // pairs defuzzified to 1
  std::size_t crisp_different = 0;  // pairs defuzzified to 0
  std::vector<std::pair<std::string, std::string>> undecidable_pairs;
  // Recognition errors are not consistency violations: the crisp value is
  // unique, it just disagrees with the ground-truth labels.
  std::size_t false_accepts = 0;  // different identities, crisp 1
  std::size_t false_rejects = 0;  // same identity, crisp 0
};

inline ConsistencyReport consistency_check(const Gallery& gallery) {
  ConsistencyReport r;
  const auto& t = gallery.enrolled();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      ++r.pair_count;
      const Modal m = classify(similarity(t[i], t[j]), gallery.bands());
      const std::optional<int> crisp = defuzzify(m);
      if (!crisp) {
        r.undecidable_pairs.emplace_back(t[i].template_id, t[j].template_id);
        continue;
      }
      const bool same = t[i].identity == t[j].identity;
      if (*crisp == 1) {
        ++r.crisp_identical;
        if (!same) ++r.false_accepts;
      } else {
        ++r.crisp_different;
        if (same) ++r.false_rejects;
      }
    }
  }
  r.pass = r.undecidable_pairs.empty() &&
           r.crisp_identical + r.crisp_different == r.pair_count;
  return r;
}

}  // namespace irislogic

#endif  // IRISLOGIC_ENROLLMENT_HPP_

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

#ifndef IRISLOGIC_DECISION_HPP_
#define IRISLOGIC_DECISION_HPP_

// Fuzzy 3-valent decision model: a similarity score is banded into one of
// the modal values I (Identical), O (Otherwise) or D (Different), and a
// positive ("I am X") or negative ("I am not X") claim is adjudicated from it.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "irislogic/bands.hpp"
#include "irislogic/decimal.hpp"
#include "irislogic/octal_algebra.hpp"

namespace irislogic {

enum class Modal { kIdentical, kOtherwise, kDifferent };

inline char letter(Modal m) {
  switch (m) {
    case Modal::kIdentical: return 'I';
    case Modal::kOtherwise: return 'O';
    case Modal::kDifferent: return 'D';
  }
  return '?';
}

inline ModalString to_modal_string(Modal m) {
  return ModalString::parse(std::string(1, letter(m)));
}

enum class Polarity { kPositive, kNegative };

inline std::string_view to_string(Polarity p) {
  return p == Polarity::kPositive ? "positive" : "negative";
}

inline Polarity parse_polarity(std::string_view text) {
  if (text == "positive" || text == "P") return Polarity::kPositive;
  if (text == "negative" || text == "N") return Polarity::kNegative;
  throw std::invalid_argument("claim must be 'positive' or 'negative', got '" +
                              std::string(text) + "'");
}

struct Claim {
  Polarity polarity = Polarity::kPositive;
  std::string claimed_identity;
};

enum class Response { kAccepted, kRejected, kRepeat };

inline std::string_view to_string(Response r) {
  switch (r) {
    case Response::kAccepted: return "Accepted";
    case Response::kRejected: return "Rejected";
    case Response::kRepeat: return "Repeat";
  }
  return "?";
}

// I if score >= p, D if score <= n, O strictly between. Both outer bands are
// closed, so the boundaries themselves are decidable.
inline Modal classify(double score, const ScoreBands& bands) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw std::out_of_range("similarity score outside [0,1]: " +
                            format_decimal(score));
  }
  validated(bands);
  if (score >= bands.p) return Modal::kIdentical;
  if (score <= bands.n) return Modal::kDifferent;
  return Modal::kOtherwise;
}

// Correspondence from modal subsets to Z8, held as data.
inline Octal psi(const ModalString& m) {
  struct Row {
    std::string_view label;
    int octal;
  };
  static constexpr std::array<Row, 8> kPsi{{{"E", 0},
                                            {"D", 1},
                                            {"O", 2},
                                            {"I", 4},
                                            {"OD", 3},
                                            {"ID", 5},
                                            {"IO", 6},
                                            {"IOD", 7}}};
  const std::string label = m.label();
  for (const Row& row : kPsi) {
    if (row.label == label) return Octal(row.octal);
  }
  throw std::logic_error("psi: unknown modal value " + label);
}

struct OutputEncoding {
  Octal octal;
  BitTriple bits;
  std::string meaning;
};

// Output column of the encoding table: each modal value maps to the octal
// label of the claim outcomes it produces (P/N = positive/negative claim,
// A'/R' = accepted/rejected).
inline OutputEncoding output_encoding(const ModalString& m) {
  struct Row {
    std::string_view modal;
    int output_octal;
    std::string_view output_bits;
    std::string_view meaning;
  };
  static constexpr std::array<Row, 8> kRows{{
      {"IOD", 7, "111", "PR' NR'"},
      {"OD", 6, "110", "PR' NA'"},
      {"IO", 5, "101", "PA' NR'"},
      {"ID", 4, "100", "PA' NA'"},
      {"O", 3, "011", "PR'&NR'"},
      {"D", 2, "010", "PR'&NA'"},
      {"I", 1, "001", "PA'&NR'"},
      {"E", 0, "000", "PA'&NA'"},
  }};
  const std::string label = m.label();
  for (const Row& row : kRows) {
    if (row.modal == label) {
      const auto& b = row.output_bits;
      return {Octal(row.output_octal),
              make_bits(b[0] - '0', b[1] - '0', b[2] - '0'),
              std::string(row.meaning)};
    }
  }
  throw std::logic_error("output_encoding: unknown modal value " + label);
}

struct DecisionRecord {
  Claim claim;
  double score = 0.0;
  Modal modal = Modal::kOtherwise;
  Response response = Response::kRepeat;
  Octal output_octal;
  BitTriple output_bits;
  std::string output_meaning;
};

inline Response respond(Polarity polarity, Modal modal) {
  if (modal == Modal::kOtherwise) return Response::kRepeat;
  const bool identical = modal == Modal::kIdentical;
  const bool positive = polarity == Polarity::kPositive;
  return identical == positive ? Response::kAccepted : Response::kRejected;
}

inline DecisionRecord decide(const Claim& claim, double score,
                             const ScoreBands& bands) {
  DecisionRecord rec;
  rec.claim = claim;
  rec.score = score;
  rec.modal = classify(score, bands);
  rec.response = respond(claim.polarity, rec.modal);
  OutputEncoding enc = output_encoding(to_modal_string(rec.modal));
  rec.output_octal = enc.octal;
  rec.output_bits = enc.bits;
  rec.output_meaning = std::move(enc.meaning);
  return rec;
}

// Crisp recognition value: I -> 1 (genuine), D -> 0 (imposter), O -> none.
inline std::optional<int> defuzzify(Modal m) {
  switch (m) {
    case Modal::kIdentical: return 1;
    case Modal::kDifferent: return 0;
    case Modal::kOtherwise: return std::nullopt;
  }
  return std::nullopt;
}

// One-line key=value audit record.
inline std::string to_record_line(const DecisionRecord& r) {
  std::string out;
  out += "claim=";
  out += to_string(r.claim.polarity);
  out += " identity=" + (r.claim.claimed_identity.empty() ? std::string("-")
                                                          : r.claim.claimed_identity);
  out += " score=" + format_decimal(r.score);
  out += " modal=";
  out += letter(r.modal);
  out += " response=";
  out += to_string(r.response);
  out += " output_octal=" + std::to_string(r.output_octal.value());
  out += " output_bits=" + to_string(r.output_bits);
  out += " meaning=" + r.output_meaning;
  return out;
}

}  // namespace irislogic

#endif  // IRISLOGIC_DECISION_HPP_

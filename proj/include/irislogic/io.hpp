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

#ifndef IRISLOGIC_IO_HPP_
#define IRISLOGIC_IO_HPP_

// Text formats: operation tables and chains (CSV / lines), labeled scores
// CSV `pair_id,label,score`, curves CSV `t,far,frr,pofa,pofr`, bands JSON
// `{n, p, target_rate}` with decimal-string values, and gallery JSON.

#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "irislogic/bands.hpp"
#include "irislogic/calibration.hpp"
#include "irislogic/decimal.hpp"
#include "irislogic/enrollment.hpp"
#include "irislogic/octal_algebra.hpp"

namespace irislogic {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string table_csv(Operation op) {
  const OctalTable t = generate_table(op);
  std::string out = op == Operation::kProduct ? "P" : "S";
  for (int j = 0; j < kOctalCount; ++j) out += "," + std::to_string(j);
  out += ",E\n";
  for (Octal a : all_octals()) {
    out += std::to_string(a.value());
    for (Octal v : t[a.value()]) out += "," + std::to_string(v.value());
    out += "," + std::to_string(entropy(a, op)) + "\n";
  }
  return out;
}

inline std::string entropy_csv() {
  std::string out = "a,E_product,E_sum\n";
  for (Octal a : all_octals()) {
    out += std::to_string(a.value()) + "," +
           std::to_string(entropy(a, Operation::kProduct)) + "," +
           std::to_string(entropy(a, Operation::kSum)) + "\n";
  }
  return out;
}

inline std::string chains_text(const std::vector<Chain>& chains) {
  std::string out;
  for (const Chain& c : chains) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c[i].value());
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scores CSV

inline std::string scores_csv(const std::vector<PairScore>& pairs) {
  std::string out = "pair_id,label,score\n";
  for (const PairScore& p : pairs) {
    out += p.pair_id;
    out += p.genuine ? ",genuine," : ",imposter,";
    out += format_decimal(p.score);
    out += "\n";
  }
  return out;
}

namespace detail {
inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}
}  // namespace detail

inline LabeledScores read_scores_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      detail::strip_cr(line) != std::string_view("pair_id,label,score")) {
    throw ParseError("scores CSV must start with header 'pair_id,label,score'");
  }
  LabeledScores s;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = detail::strip_cr(line);
    if (row.empty()) continue;
    const auto fields = detail::split_commas(row);
    const std::string where = "scores CSV line " + std::to_string(line_no);
    if (fields.size() != 3) throw ParseError(where + ": expected 3 fields");
    double score = 0.0;
    try {
      score = parse_decimal(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!(score >= 0.0 && score <= 1.0)) {
      throw ParseError(where + ": score outside [0,1]");
    }
    if (fields[1] == "genuine") {
      s.genuine.push_back(score);
    } else if (fields[1] == "imposter") {
      s.imposter.push_back(score);
    } else {
      throw ParseError(where + ": label must be genuine or imposter");
    }
  }
  return s;
}

inline std::string curves_csv(const RateCurves& c) {
  std::string out = "t,far,frr,pofa,pofr\n";
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    out += format_decimal(c.grid[i]) + "," + format_decimal(c.far[i]) + "," +
           format_decimal(c.frr[i]) + "," + format_decimal(c.pofa[i]) + "," +
           format_decimal(c.pofr[i]) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

inline Json bands_to_json(const ScoreBands& b) {
  Json j;
  j["n"] = format_decimal(b.n);
  j["p"] = format_decimal(b.p);
  j["target_rate"] = format_decimal(b.target_rate);
  return j;
}

namespace detail {
inline double json_decimal(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  const Json& v = j.at(key);
  try {
    if (v.is_string()) return parse_decimal(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(key) + ": " + e.what());
  }
  if (v.is_number()) return v.get<double>();
  throw ParseError(std::string("key '") + key + "' must be a decimal string");
}

inline const Json& json_string_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError(std::string("missing string key '") + key + "'");
  }
  return j.at(key);
}
}  // namespace detail

inline ScoreBands bands_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("bands must be a JSON object");
  ScoreBands b{detail::json_decimal(j, "n"), detail::json_decimal(j, "p"),
               detail::json_decimal(j, "target_rate")};
  if (!is_valid(b)) throw ParseError("bands violate 0 <= n < p <= 1");
  return b;
}

inline Json template_to_json(const Template& t) {
  Json j;
  j["template_id"] = t.template_id;
  j["identity"] = t.identity;
  j["bits"] = t.bits.to_hex();
  return j;
}

// `bit_length` 0 means: take it from the object's own "bit_length" key, or
// four bits per hex digit.
inline Template template_from_json(const Json& j, std::size_t bit_length = 0) {
  if (!j.is_object()) throw ParseError("template must be a JSON object");
  const std::string hex = detail::json_string_field(j, "bits").get<std::string>();
  if (bit_length == 0) {
    bit_length = j.contains("bit_length") ? j.at("bit_length").get<std::size_t>()
                                          : hex.size() * 4;
  }
  try {
    return Template{BitCode::from_hex(hex, bit_length),
                    detail::json_string_field(j, "identity").get<std::string>(),
                    detail::json_string_field(j, "template_id").get<std::string>()};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("template: ") + e.what());
  }
}

inline Json templates_to_json(const std::vector<Template>& templates) {
  Json j;
  j["bit_length"] = templates.empty() ? 0 : templates.front().bits.size();
  j["templates"] = Json::array();
  for (const Template& t : templates) j["templates"].push_back(template_to_json(t));
  return j;
}

inline std::vector<Template> templates_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("templates") || !j.at("templates").is_array()) {
    throw ParseError("expected an object with a 'templates' array");
  }
  const std::size_t bits = j.value("bit_length", std::size_t{0});
  std::vector<Template> out;
  for (const Json& t : j.at("templates")) out.push_back(template_from_json(t, bits));
  return out;
}

inline Json gallery_to_json(const Gallery& g) {
  Json j;
  j["bands"] = bands_to_json(g.bands());
  j["bit_length"] = g.bit_length();
  j["templates"] = Json::array();
  for (const Template& t : g.enrolled()) j["templates"].push_back(template_to_json(t));
  return j;
}

inline Gallery gallery_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bands")) {
    throw ParseError("gallery must be an object with a 'bands' key");
  }
  const ScoreBands bands = bands_from_json(j.at("bands"));
  std::vector<Template> templates;
  if (j.contains("templates")) templates = templates_from_json(j);
  try {
    return Gallery::from_templates_unchecked(bands, std::move(templates));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("gallery: ") + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace irislogic

#endif  // IRISLOGIC_IO_HPP_

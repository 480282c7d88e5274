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

#ifndef IRISLOGIC_BANDS_HPP_
#define IRISLOGIC_BANDS_HPP_

#include <stdexcept>
#include <string>

namespace irislogic {

// Thresholds splitting the similarity range [0,1] into three bands:
// [0, n] (Different), (n, p) (Otherwise, the f-EER band), [p, 1] (Identical).
struct ScoreBands {
  double n = 0.3725;
  double p = 0.55;
  double target_rate = 1e-10;

  bool operator==(const ScoreBands&) const = default;
};

inline bool is_valid(const ScoreBands& b) {
  return b.n >= 0.0 && b.n < b.p && b.p <= 1.0 && b.target_rate > 0.0 &&
         b.target_rate < 1.0;
}

inline const ScoreBands& validated(const ScoreBands& b) {
  if (!is_valid(b)) {
    throw std::invalid_argument("invalid score bands: need 0 <= n < p <= 1 "
                                "and target_rate in (0,1), got n=" +
                                std::to_string(b.n) +
                                " p=" + std::to_string(b.p));
  }
  return b;
}

// Reference bands: uncertainty interval (0.3725, 0.55) at target rate 1E-10.
inline constexpr ScoreBands kReferenceBands{0.3725, 0.55, 1e-10};

}  // namespace irislogic

#endif  // IRISLOGIC_BANDS_HPP_

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

#ifndef IRISLOGIC_BINOMIAL_HPP_
#define IRISLOGIC_BINOMIAL_HPP_

#include <cstddef>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace irislogic {

// One-sided Clopper-Pearson upper confidence bound on a binomial proportion
// after observing `successes` out of `trials`.
//
// This is the p solving P[X <= k | trials, p] = 1 - confidence, i.e. the
// `confidence` quantile of Beta(k + 1, trials - k). For k = 0 this reduces to
// 1 - (1 - confidence)^(1 / trials).
inline double binomial_upper_bound(std::size_t successes, std::size_t trials,
                                   double confidence = 0.95) {
  if (trials == 0) throw std::invalid_argument("binomial bound needs trials >= 1");
  if (successes > trials) {
    throw std::invalid_argument("binomial bound: successes exceed trials");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("binomial bound: confidence must be in (0,1)");
  }
  if (successes == trials) return 1.0;
  return boost::math::ibeta_inv(static_cast<double>(successes) + 1.0,
                                static_cast<double>(trials - successes),
                                confidence);
}

}  // namespace irislogic

#endif  // IRISLOGIC_BINOMIAL_HPP_

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

#ifndef IRISLOGIC_CALIBRATION_HPP_
#define IRISLOGIC_CALIBRATION_HPP_

// FAR / FRR curves over a fixed threshold grid, their pessimistic envelopes
// (POFA / POFR), and derivation of the f-EER band for a target error rate.
//
// Conventions, for a threshold t:
//   FAR(t) = fraction of imposter scores >= t   (nonincreasing in t)
//   FRR(t) = fraction of genuine scores  <  t   (nondecreasing in t)
//
// The pessimistic envelope of a rate is the larger of
//   - the one-sided binomial upper confidence bound for the observed count,
//   - a straight line fitted to log10(rate) over the sparse tail, where the
//     rate lies in [1/N, 100/N], extended past the last observed score.
// Beyond the data (zero observed events) only the tail line applies, so
// targets far below 1/N can still be resolved. The result is forced
// monotone by a running maximum taken from the tail inwards.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "irislogic/bands.hpp"
#include "irislogic/binomial.hpp"
#include "irislogic/decimal.hpp"

namespace irislogic {

class TargetUnachievable : public std::runtime_error {
 public:
  explicit TargetUnachievable(const std::string& what)
      : std::runtime_error("target unachievable: " + what) {}
};

struct LabeledScores {
  std::vector<double> genuine;
  std::vector<double> imposter;
};

inline void validate(const LabeledScores& s) {
  if (s.genuine.empty() || s.imposter.empty()) {
    throw std::invalid_argument(
        "calibration needs at least one genuine and one imposter score");
  }
  auto check = [](const std::vector<double>& v, const char* what) {
    for (double x : v) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw std::out_of_range(std::string(what) + " score outside [0,1]: " +
                                format_decimal(x));
      }
    }
  };
  check(s.genuine, "genuine");
  check(s.imposter, "imposter");
}

// Direct counts, used for held-out evaluation.
inline double empirical_far(std::span<const double> imposter, double t) {
  const auto k = std::count_if(imposter.begin(), imposter.end(),
                               [t](double s) { return s >= t; });
  return static_cast<double>(k) / static_cast<double>(imposter.size());
}

inline double empirical_frr(std::span<const double> genuine, double t) {
  const auto k = std::count_if(genuine.begin(), genuine.end(),
                               [t](double s) { return s < t; });
  return static_cast<double>(k) / static_cast<double>(genuine.size());
}

// Thresholds {0, step, 2 step, ..., 1}. When 1/step is an integer m the
// points are i/m, so decimal thresholds such as 0.3725 are hit exactly.
inline std::vector<double> make_grid(double step) {
  if (!(step > 0.0 && step <= 0.01)) {
    throw std::invalid_argument("grid step must be in (0, 0.01], got " +
                                format_decimal(step));
  }
  const double inverse = 1.0 / step;
  const double rounded = std::round(inverse);
  std::vector<double> grid;
  if (std::abs(inverse - rounded) < 1e-6 * rounded) {
    const auto m = static_cast<std::size_t>(rounded);
    grid.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      grid.push_back(static_cast<double>(i) / static_cast<double>(m));
    }
  } else {
    for (std::size_t i = 0;; ++i) {
      const double t = static_cast<double>(i) * step;
      if (t >= 1.0) break;
      grid.push_back(t);
    }
    grid.push_back(1.0);
  }
  return grid;
}

enum class Side { kAccept, kReject };

// log10(rate) = intercept + slope * t
struct TailFit {
  double intercept = 0.0;
  double slope = 0.0;
  double region_lo = 0.0;  // smallest threshold used in the fit
  double region_hi = 0.0;  // largest threshold used in the fit

  double log10_rate(double t) const { return intercept + slope * t; }
  double rate(double t) const { return std::pow(10.0, log10_rate(t)); }
};

// Least-squares line through (t, log10 rate). Needs at least two distinct
// rate values; zero rates are not allowed.
inline std::optional<TailFit> fit_log_tail(std::span<const double> t,
                                           std::span<const double> rate) {
  if (t.size() != rate.size()) {
    throw std::invalid_argument("tail fit: mismatched point counts");
  }
  const std::size_t m = t.size();
  if (m < 2) return std::nullopt;
  const auto [lo_rate, hi_rate] = std::minmax_element(rate.begin(), rate.end());
  if (*lo_rate <= 0.0) throw std::invalid_argument("tail fit: rates must be > 0");
  if (*lo_rate == *hi_rate) return std::nullopt;

  double mean_t = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mean_t += t[i];
    mean_y += std::log10(rate[i]);
  }
  mean_t /= static_cast<double>(m);
  mean_y /= static_cast<double>(m);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dt = t[i] - mean_t;
    sxx += dt * dt;
    sxy += dt * (std::log10(rate[i]) - mean_y);
  }
  if (sxx <= 0.0) return std::nullopt;
  TailFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_t;
  const auto [t_lo, t_hi] = std::minmax_element(t.begin(), t.end());
  fit.region_lo = *t_lo;
  fit.region_hi = *t_hi;
  return fit;
}

struct Envelope {
  std::vector<double> rates;
  std::optional<TailFit> fit;
  // True when no usable tail line existed and only the confidence bound was
  // applied.
  bool degenerate_fit = false;
};

// `counts[i]` is the number of events (imposters >= t for kAccept, genuines
// < t for kReject) out of `sample_size` at threshold grid[i].
inline Envelope pessimistic_envelope(std::span<const double> grid,
                                     std::span<const std::size_t> counts,
                                     std::size_t sample_size, Side side,
                                     double confidence = 0.95) {
  if (sample_size == 0) throw std::invalid_argument("envelope needs N >= 1");
  if (grid.size() != counts.size()) {
    throw std::invalid_argument("envelope: grid and counts differ in length");
  }
  const double n = static_cast<double>(sample_size);

  std::vector<double> fit_t;
  std::vector<double> fit_rate;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto k = counts[i];
    if (k > sample_size) throw std::invalid_argument("envelope: count exceeds N");
    if (k >= 1 && k <= 100) {
      fit_t.push_back(grid[i]);
      fit_rate.push_back(static_cast<double>(k) / n);
    }
  }

  Envelope env;
  env.fit = fit_log_tail(fit_t, fit_rate);
  if (env.fit) {
    const bool decays = side == Side::kAccept ? env.fit->slope < 0.0
                                              : env.fit->slope > 0.0;
    if (!decays) env.fit.reset();
  }
  env.degenerate_fit = !env.fit.has_value();

  env.rates.resize(grid.size());
  std::size_t cached_k = sample_size + 1;
  double cached_bound = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::size_t k = counts[i];
    if (k != cached_k) {
      cached_bound = binomial_upper_bound(k, sample_size, confidence);
      cached_k = k;
    }
    double value = cached_bound;
    if (env.fit) {
      const bool in_tail = side == Side::kAccept ? grid[i] >= env.fit->region_lo
                                                 : grid[i] <= env.fit->region_hi;
      if (in_tail) {
        const double line = std::min(1.0, env.fit->rate(grid[i]));
        value = k == 0 ? line : std::max(cached_bound, line);
      }
    }
    env.rates[i] = std::clamp(value, 0.0, 1.0);
  }

  // Running maximum from the tail inwards.
  if (side == Side::kAccept) {
    for (std::size_t i = env.rates.size(); i-- > 1;) {
      env.rates[i - 1] = std::max(env.rates[i - 1], env.rates[i]);
    }
  } else {
    for (std::size_t i = 1; i < env.rates.size(); ++i) {
      env.rates[i] = std::max(env.rates[i], env.rates[i - 1]);
    }
  }
  return env;
}

struct RateCurves {
  std::vector<double> grid;
  std::vector<double> far;
  std::vector<double> frr;
  std::vector<double> pofa;
  std::vector<double> pofr;
  std::size_t genuine_count = 0;
  std::size_t imposter_count = 0;
  bool pofa_degenerate_fit = false;
  bool pofr_degenerate_fit = false;
};

inline RateCurves empirical_curves(const LabeledScores& samples, double grid_step,
                                   double confidence = 0.95) {
  validate(samples);
  RateCurves c;
  c.grid = make_grid(grid_step);
  c.genuine_count = samples.genuine.size();
  c.imposter_count = samples.imposter.size();

  std::vector<double> genuine = samples.genuine;
  std::vector<double> imposter = samples.imposter;
  std::sort(genuine.begin(), genuine.end());
  std::sort(imposter.begin(), imposter.end());

  std::vector<std::size_t> accept_counts(c.grid.size());
  std::vector<std::size_t> reject_counts(c.grid.size());
  const double g = static_cast<double>(genuine.size());
  const double im = static_cast<double>(imposter.size());
  c.far.resize(c.grid.size());
  c.frr.resize(c.grid.size());
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    const double t = c.grid[i];
    const auto below_imp = static_cast<std::size_t>(
        std::lower_bound(imposter.begin(), imposter.end(), t) - imposter.begin());
    accept_counts[i] = imposter.size() - below_imp;
    reject_counts[i] = static_cast<std::size_t>(
        std::lower_bound(genuine.begin(), genuine.end(), t) - genuine.begin());
    c.far[i] = static_cast<double>(accept_counts[i]) / im;
    c.frr[i] = static_cast<double>(reject_counts[i]) / g;
  }

  Envelope pofa = pessimistic_envelope(c.grid, accept_counts, imposter.size(),
                                       Side::kAccept, confidence);
  Envelope pofr = pessimistic_envelope(c.grid, reject_counts, genuine.size(),
                                       Side::kReject, confidence);
  c.pofa = std::move(pofa.rates);
  c.pofr = std::move(pofr.rates);
  c.pofa_degenerate_fit = pofa.degenerate_fit;
  c.pofr_degenerate_fit = pofr.degenerate_fit;
  return c;
}

// Index of the largest grid point <= t (with a little slack for decimal
// thresholds that are not exactly representable).
inline std::size_t grid_index(const RateCurves& c, double t) {
  if (c.grid.empty()) throw std::invalid_argument("empty rate curves");
  if (t < c.grid.front() - 1e-12 || t > c.grid.back() + 1e-12) {
    throw std::out_of_range("threshold " + format_decimal(t) +
                            " outside the curve grid");
  }
  const auto it = std::upper_bound(c.grid.begin(), c.grid.end(), t + 1e-12);
  return static_cast<std::size_t>(it - c.grid.begin()) - 1;
}

// p is the smallest threshold with POFA(p) < target and n the largest with
// POFR(n) < target. When the score classes are separated at this target the
// two crossings come out in the opposite order; both thresholds stay safe
// under either order, so the band is taken between them. A band that would
// leave no genuine sample accepted, or no imposter sample rejected, is
// rejected as unachievable.
inline ScoreBands derive_bands(const RateCurves& c, double target) {
  if (!(target > 0.0 && target < 1.0)) {
    throw std::invalid_argument("target rate must be in (0,1), got " +
                                format_decimal(target));
  }
  if (c.grid.empty() || c.pofa.size() != c.grid.size() ||
      c.pofr.size() != c.grid.size()) {
    throw std::invalid_argument("malformed rate curves");
  }
  std::optional<std::size_t> accept_at;
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    if (c.pofa[i] < target) {
      accept_at = i;
      break;
    }
  }
  std::optional<std::size_t> reject_at;
  for (std::size_t i = c.grid.size(); i-- > 0;) {
    if (c.pofr[i] < target) {
      reject_at = i;
      break;
    }
  }
  if (!accept_at) {
    throw TargetUnachievable("POFA never drops below " + format_decimal(target));
  }
  if (!reject_at) {
    throw TargetUnachievable("POFR is never below " + format_decimal(target));
  }
  const std::size_t lo = std::min(*accept_at, *reject_at);
  const std::size_t hi = std::max(*accept_at, *reject_at);
  if (lo == hi) {
    throw TargetUnachievable("accept and reject thresholds coincide at " +
                             format_decimal(c.grid[lo]));
  }
  if (!c.frr.empty() && c.frr[hi] >= 1.0) {
    throw TargetUnachievable("no genuine score reaches the accept band [" +
                             format_decimal(c.grid[hi]) + ", 1]");
  }
  if (!c.far.empty() && c.far[lo] >= 1.0) {
    throw TargetUnachievable("no imposter score falls in the reject band [0, " +
                             format_decimal(c.grid[lo]) + "]");
  }
  return ScoreBands{c.grid[lo], c.grid[hi], target};
}

struct ComfortReport {
  double genuine_discomfort = 0.0;   // FRR(p)
  double imposter_discomfort = 0.0;  // FAR(n)
  double total_discomfort = 0.0;
  double true_accept_safety = 0.0;   // 1 - FAR(p)
  double false_reject_safety = 0.0;  // 1 - FRR(n)
};

inline ComfortReport comfort_report(const RateCurves& c, const ScoreBands& bands) {
  const std::size_t at_p = grid_index(c, bands.p);
  const std::size_t at_n = grid_index(c, bands.n);
  ComfortReport r;
  r.genuine_discomfort = c.frr.at(at_p);
  r.imposter_discomfort = c.far.at(at_n);
  r.total_discomfort = r.genuine_discomfort + r.imposter_discomfort;
  r.true_accept_safety = 1.0 - c.far.at(at_p);
  r.false_reject_safety = 1.0 - c.frr.at(at_n);
  return r;
}

}  // namespace irislogic

#endif  // IRISLOGIC_CALIBRATION_HPP_

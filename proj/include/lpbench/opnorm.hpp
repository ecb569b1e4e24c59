// Copyright 2026 the lpbench authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lpbench/detail/pnorm.hpp"
#include "lpbench/errors.hpp"
#include "lpbench/exponent.hpp"
#include "lpbench/functions.hpp"
#include "lpbench/norms.hpp"
#include "lpbench/operators.hpp"
#include "lpbench/rng.hpp"

namespace lpbench {

enum class EstimateKind { exact, lower_bound, certified_interval };

inline const char* to_string(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::exact:
      return "exact";
    case EstimateKind::lower_bound:
      return "lower_bound";
    case EstimateKind::certified_interval:
      return "certified_interval";
  }
  return "?";
}

// Estimate of the induced (r -> s) norm. `maximizer` always attains
// `value` as the ratio ||A f||_{w,s} / ||f||_{w,r}; for kind=exact the
// value is also an upper bound. lo and hi bracket the norm (equal to value
// except for certified_interval).
template <ScalarType T>
struct OperatorNormEstimate {
  double value;
  EstimateKind kind;
  double lo;
  double hi;
  ScalarFunction<T> maximizer;
};

struct AscentBudget {
  int restarts = 32;
  int iterations = 500;
  std::uint64_t seed = 0;
};

namespace detail {

inline bool at_least_one(const Exponent& e) {
  return e.is_infinite() || e.value() >= 1.0;
}

template <ScalarType T>
double attained_ratio(const KernelOperator<T>& a, const ScalarFunction<T>& f,
                      const Exponent& r, const Exponent& s) {
  const double nf = weighted_norm(f, r);
  if (nf == 0.0) return 0.0;
  return weighted_norm(apply(a, f), s) / nf;
}

// G_y = sum_x a(x,y) v(x) w(x): the transpose action that carries an image
// direction back to the argument side during ascent.
template <ScalarType T>
std::vector<T> transpose_apply(const KernelOperator<T>& a,
                               const std::vector<T>& v) {
  const std::size_t n = a.size();
  const double* w = a.domain().weights().data();
  std::vector<T> g(n, T{});
  for (std::size_t x = 0; x < n; ++x) {
    const T scale = v[x] * T{w[x]};
    if (scale == T{}) continue;
    const T* row = a.row(x);
    for (std::size_t y = 0; y < n; ++y) g[y] += row[y] * scale;
  }
  return g;
}

// s = inf with r >= 1: the norm is the largest conjugate-exponent row norm,
// max_x ||a(x,.)||_{w,r'}, attained by the per-row pairing maximizer.
template <ScalarType T>
OperatorNormEstimate<T> opnorm_rows_exact(const KernelOperator<T>& a,
                                          const Exponent& r) {
  const std::size_t n = a.size();
  const WeightedSet& domain = a.domain();
  const double* w = domain.weights().data();
  const Exponent rc = conjugate(r);
  std::size_t best_x = 0;
  double best = -1.0;
  for (std::size_t x = 0; x < n; ++x) {
    const double row_norm = weighted_p_norm(a.row(x), w, n, rc);
    if (row_norm > best) {
      best = row_norm;
      best_x = x;
    }
  }
  std::vector<T> f(n, T{});
  if (best == 0.0) {
    f[0] = T{1.0};
  } else if (r.is_infinite()) {
    for (std::size_t y = 0; y < n; ++y) f[y] = conj_value(sgn(a.entry(best_x, y)));
  } else if (r.value() == 1.0) {
    std::size_t best_y = 0;
    double m = -1.0;
    for (std::size_t y = 0; y < n; ++y) {
      const double cur = abs_value(a.entry(best_x, y));
      if (cur > m) {
        m = cur;
        best_y = y;
      }
    }
    f[best_y] = conj_value(sgn(a.entry(best_x, best_y))) * T{1.0 / w[best_y]};
  } else {
    const double e = rc.value() / r.value();
    for (std::size_t y = 0; y < n; ++y) {
      const T& axy = a.entry(best_x, y);
      f[y] = conj_value(sgn(axy)) * T{pow_abs(abs_value(axy), e)};
    }
  }
  ScalarFunction<T> maximizer(a.domain_ptr(), std::move(f));
  return {best, EstimateKind::exact, best, best, std::move(maximizer)};
}

// r = 1 with s >= 1: the norm is the largest column norm
// max_y ||a(.,y)||_{w,s}, attained by the normalized delta there. For
// s < 1 the quasinorm ball has no extreme-delta structure and this formula
// undershoots, so that range stays with the ascent path.
template <ScalarType T>
OperatorNormEstimate<T> opnorm_columns_exact(const KernelOperator<T>& a,
                                             const Exponent& s) {
  const std::size_t n = a.size();
  const double* w = a.domain().weights().data();
  std::vector<T> column(n);
  std::size_t best_y = 0;
  double best = -1.0;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) column[x] = a.entry(x, y);
    const double col_norm = weighted_p_norm(column.data(), w, n, s);
    if (col_norm > best) {
      best = col_norm;
      best_y = y;
    }
  }
  std::vector<T> f(n, T{});
  f[best == 0.0 ? 0 : best_y] = T{1.0 / w[best == 0.0 ? 0 : best_y]};
  ScalarFunction<T> maximizer(a.domain_ptr(), std::move(f));
  return {best, EstimateKind::exact, best, best, std::move(maximizer)};
}

template <ScalarType T>
bool is_diagonal(const KernelOperator<T>& a) {
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && a.entry(x, y) != T{}) return false;
    }
  }
  return true;
}

// Diagonal kernel with r = s: the operator is multiplication by
// h(x) = a(x,x) w(x), so the norm is max |h|, attained by the delta at the
// first argmax. The delta's r- and s-norms cancel in the ratio.
template <ScalarType T>
OperatorNormEstimate<T> opnorm_diagonal_exact(const KernelOperator<T>& a) {
  const std::size_t n = a.size();
  const double* w = a.domain().weights().data();
  std::size_t best_x = 0;
  double best = -1.0;
  for (std::size_t x = 0; x < n; ++x) {
    const double cur = abs_value(a.entry(x, x)) * w[x];
    if (cur > best) {
      best = cur;
      best_x = x;
    }
  }
  std::vector<T> f(n, T{});
  f[best_x] = T{1.0};
  ScalarFunction<T> maximizer(a.domain_ptr(), std::move(f));
  return {best, EstimateKind::exact, best, best, std::move(maximizer)};
}

// Real (inf -> 1) for small n: ||A||_{inf->1} = max over sign patterns of
// ||A eps||_{w,1}, since the objective is convex and the sign patterns are
// the vertices of the unit ball. Gray-code order updates the matvec one
// column per step; eps_{n-1} stays +1 because eps and -eps tie. The
// accumulated vector is refreshed from scratch periodically to keep
// incremental rounding from drifting across half a million steps.
inline OperatorNormEstimate<double> opnorm_sign_enumeration(
    const KernelOperator<double>& a) {
  const std::size_t n = a.size();
  const double* w = a.domain().weights().data();
  const auto& k = kernels::active();

  std::vector<double> at(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) at[y * n + x] = a.entry(x, y);
  }

  std::vector<double> eps(n, 1.0), v(n), best_eps(eps);
  auto refresh = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      v[x] = k.dot_w(a.row(x), w, eps.data(), n);
    }
  };
  refresh();
  double best = k.sum_abs_w(v.data(), w, n);

  const std::size_t m = n - 1;
  const std::uint64_t steps = m == 0 ? 0 : (std::uint64_t{1} << m);
  for (std::uint64_t step = 1; step < steps; ++step) {
    const int j = std::countr_zero(step);
    const double alpha = -2.0 * eps[j] * w[j];
    eps[j] = -eps[j];
    k.axpy(alpha, at.data() + static_cast<std::size_t>(j) * n, v.data(), n);
    if ((step & 0xFFF) == 0) refresh();
    const double value = k.sum_abs_w(v.data(), w, n);
    if (value > best) {
      best = value;
      best_eps = eps;
    }
  }

  ScalarFunction<double> maximizer(a.domain_ptr(), std::move(best_eps));
  const double value = weighted_norm(apply(a, maximizer), Exponent::finite(1.0));
  return {value, EstimateKind::exact, value, value, std::move(maximizer)};
}

// One ascent step: image direction v from u, pull back through the
// transpose, map to the r-sphere. Every power is taken on magnitudes
// normalized by their maximum so extreme exponents cannot overflow.
template <ScalarType T>
std::vector<T> ascent_step(const KernelOperator<T>& a, const std::vector<T>& u,
                           const Exponent& r, const Exponent& s) {
  const std::size_t n = u.size();
  double umax = 0.0;
  for (const T& x : u) umax = std::max(umax, abs_value(x));
  if (umax == 0.0) return {};

  std::vector<T> v(n, T{});
  if (s.is_infinite()) {
    std::size_t peak = 0;
    double m = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double cur = abs_value(u[i]);
      if (cur > m) {
        m = cur;
        peak = i;
      }
    }
    v[peak] = conj_value(sgn(u[peak]));
  } else {
    const double e = s.value() - 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = abs_value(u[i]) / umax;
      if (m == 0.0) continue;
      const double mag = std::min(pow_abs(m, e), 1e15);
      v[i] = conj_value(sgn(u[i])) * T{mag};
    }
  }

  std::vector<T> g = transpose_apply(a, v);
  double gmax = 0.0;
  for (const T& x : g) gmax = std::max(gmax, abs_value(x));
  if (gmax == 0.0) return {};

  const double* w = a.domain().weights().data();
  std::vector<T> f(n, T{});
  if (r.is_infinite()) {
    for (std::size_t i = 0; i < n; ++i) f[i] = conj_value(sgn(g[i]));
  } else if (r.value() > 1.0) {
    const double e = 1.0 / (r.value() - 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double m = abs_value(g[i]) / gmax;
      if (m == 0.0) continue;
      f[i] = conj_value(sgn(g[i])) * T{pow_abs(m, e)};
    }
  } else {
    // r <= 1: a unit r-mass concentrates where it buys the most pairing.
    std::size_t peak = 0;
    double m = -1.0;
    const double we = 1.0 - r.reciprocal();
    for (std::size_t i = 0; i < n; ++i) {
      const double cur = abs_value(g[i]) * pow_abs(w[i], we);
      if (cur > m) {
        m = cur;
        peak = i;
      }
    }
    f[peak] = conj_value(sgn(g[peak]));
  }
  return f;
}

template <ScalarType T>
std::vector<T> ascent_seed(Rng& rng, std::size_t n, int restart) {
  std::vector<T> f(n, T{});
  if (restart == 0) {
    std::fill(f.begin(), f.end(), T{1.0});
  } else if (restart <= static_cast<int>(std::min<std::size_t>(n, 8))) {
    f[restart - 1] = T{1.0};
  } else if (restart % 2 == 0) {
    for (auto& x : f) {
      if constexpr (is_complex_v<T>) {
        const double phase = rng.uniform(0.0, 6.283185307179586);
        x = T{std::cos(phase), std::sin(phase)};
      } else {
        x = rng.coin(0.5) ? 1.0 : -1.0;
      }
    }
  } else {
    for (auto& x : f) {
      if constexpr (is_complex_v<T>) {
        x = rng.gaussian_complex();
      } else {
        x = rng.gaussian();
      }
    }
  }
  return f;
}

template <ScalarType T>
OperatorNormEstimate<T> opnorm_ascent(const KernelOperator<T>& a,
                                      const Exponent& r, const Exponent& s,
                                      const AscentBudget& budget) {
  const std::size_t n = a.size();
  double best = 0.0;
  ScalarFunction<T> best_f(a.domain_ptr(), std::vector<T>(n, T{1.0}));

  for (int restart = 0; restart < budget.restarts; ++restart) {
    Rng rng = Rng::stream(budget.seed, 0x09CE47u, static_cast<std::uint64_t>(restart));
    std::vector<T> f = ascent_seed<T>(rng, n, restart);
    for (int it = 0; it < budget.iterations; ++it) {
      ScalarFunction<T> ff(a.domain_ptr(), f);
      const double nf = weighted_norm(ff, r);
      if (nf == 0.0) break;
      const ScalarFunction<T> u = apply(a, ff);
      const double ratio = weighted_norm(u, s) / nf;
      if (ratio > best) {
        best = ratio;
        best_f = std::move(ff);
      }
      std::vector<T> next = ascent_step(a, u.values(), r, s);
      if (next.empty()) break;
      f = std::move(next);
    }
  }
  const double value = best;
  return {value, EstimateKind::lower_bound, value, value, std::move(best_f)};
}

}  // namespace detail

// Induced (r -> s) operator norm. Exact closed forms where they exist:
// s = inf (r >= 1) by row norms, r = 1 (s >= 1) by column norms, diagonal
// kernels with r = s as multiplication operators, and the real (inf -> 1)
// case by sign-pattern enumeration up to n = 20. Everything else runs
// multi-start projected ascent and honestly reports a lower bound attained
// by its maximizer.
template <ScalarType T>
OperatorNormEstimate<T> operator_norm(const KernelOperator<T>& a,
                                      const Exponent& r, const Exponent& s,
                                      const AscentBudget& budget = {}) {
  if (s.is_infinite() && detail::at_least_one(r)) {
    return detail::opnorm_rows_exact(a, r);
  }
  if (!r.is_infinite() && r.value() == 1.0 && detail::at_least_one(s)) {
    return detail::opnorm_columns_exact(a, s);
  }
  if (r == s && detail::is_diagonal(a)) {
    return detail::opnorm_diagonal_exact(a);
  }
  if constexpr (!is_complex_v<T>) {
    if (r.is_infinite() && s.is_finite() && s.value() == 1.0 &&
        a.size() <= 20) {
      return detail::opnorm_sign_enumeration(a);
    }
  }
  return detail::opnorm_ascent(a, r, s, budget);
}

}  // namespace lpbench

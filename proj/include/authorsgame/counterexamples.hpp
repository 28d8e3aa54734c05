// Copyright 2026 The authorsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTHORSGAME_COUNTEREXAMPLES_HPP_
#define AUTHORSGAME_COUNTEREXAMPLES_HPP_

// Explicit 4-author, 3-topic games with an improvement cycle under scoring
// mediators: one exposure-targeted family and two action-targeted ones.
// Existence arguments are made constructive with monotone bisection on f;
// bisection roots are snapped to the simplest rational in the final bracket,
// so smooth cases land on exact values (identity f gives 1/2, 1/10, ...).

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "authorsgame/errors.hpp"
#include "authorsgame/game.hpp"

namespace authorsgame {

inline constexpr double kCycleMargin = 1e-12;

struct SearchOptions {
  double resolution = 1e-6;    // smallest grid point probed
  double bisection_tol = 1e-13;
  double ratio_margin = 1e-6;  // relative slack demanded of strict ratios
};

struct CycleCheck {
  bool ok = false;
  std::vector<Author> movers;
  std::vector<Rational> before;
  std::vector<Rational> after;
  std::vector<double> relative_gains;  // (after - before) / max(|before|, |after|)
};

// Checks that every consecutive pair of `profiles` is a strict improvement of
// its unique mover. The list must close (last == first). A step where nobody
// moves fails the check; a step where two authors move is malformed.
inline CycleCheck verify_improvement_cycle(const Game& game,
                                           const std::vector<StrategyProfile>& profiles,
                                           double margin = kCycleMargin) {
  if (profiles.size() < 2) {
    throw ValidationError("a cycle needs at least two profiles");
  }
  for (const auto& a : profiles) game.validate(a);
  if (profiles.front() != profiles.back()) {
    throw ValidationError("cycle does not return to its first profile");
  }
  const double used_margin = game.mediator().is_scoring() ? margin : 0.0;
  CycleCheck check;
  check.ok = true;
  for (std::size_t r = 0; r + 1 < profiles.size(); ++r) {
    const auto& a = profiles[r];
    const auto& b = profiles[r + 1];
    std::vector<Author> changed;
    for (Author j = 0; j < a.size(); ++j) {
      if (a[j] != b[j]) changed.push_back(j);
    }
    if (changed.size() > 1) {
      throw ValidationError("profiles " + std::to_string(r + 1) + " and " +
                            std::to_string(r + 2) +
                            " differ in more than one author");
    }
    if (changed.empty()) {
      check.ok = false;
      continue;
    }
    const Author j = changed.front();
    Rational u_before = game.utility(a, j);
    Rational u_after = game.utility(b, j);
    const Rational scale = std::max(magnitude(u_before), magnitude(u_after));
    check.relative_gains.push_back(
        scale == 0 ? 0.0 : to_double((u_after - u_before) / scale));
    check.ok = check.ok && strictly_improves(u_before, u_after, used_margin);
    check.movers.push_back(j);
    check.before.push_back(std::move(u_before));
    check.after.push_back(std::move(u_after));
  }
  return check;
}

namespace detail {

// Root bracket of a non-decreasing f on [lo, hi] for f(x) = target, snapped
// to the simplest rational inside the bracket.
inline std::optional<Rational> solve_monotone(const ScoreFunction& f,
                                              double target, double lo,
                                              double hi, double tol) {
  if (!(f(lo) <= target) || !(target <= f(hi))) return std::nullopt;
  for (int i = 0; i < 400 && hi - lo > tol; ++i) {
    const double mid = lo + (hi - lo) / 2;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return simplest_between(from_double(lo), from_double(hi));
}

inline double f_at(const ScoreFunction& f, const Rational& x) {
  return f(to_double(x));
}

// 1/4, 1/8, ... (or 1/6, 1/12, ...) until `ok` accepts.
inline Rational halve_until(Rational start,
                            const std::function<bool(double)>& ok) {
  Rational eps = std::move(start);
  for (int i = 0; i < 64; ++i) {
    if (ok(to_double(eps))) return eps;
    eps /= 2;
  }
  throw SearchFailure("no admissible epsilon down to 2^-64");
}

inline std::vector<StrategyProfile> published_cycle() {
  // (1,1,1,2) (1,2,1,2) (1,2,3,2) (1,2,3,3) (1,1,3,3) (1,1,1,3) (1,1,1,2)
  return {{0, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 2, 1}, {0, 1, 2, 2},
          {0, 0, 2, 2}, {0, 0, 0, 2}, {0, 0, 0, 1}};
}

}  // namespace detail

struct ScoreTriple {
  Rational x1, x2, x3;
  double c1 = 0;
  double c2 = 0;
};

// 0 < x3 < x2 < x1 <= 1 with c2 > 2 c1 > 2, where c1 = f(x1)/f(x2) and
// c2 = f(x2)/f(x3). Tries c1 = 2, c2 = 5 first, then scans x3 downward
// setting f(x2) = sqrt(2.2 f(1) f(x3)).
inline ScoreTriple find_triple_thm3(const ScoreFunction& f,
                                    const SearchOptions& opt = {}) {
  const double f1 = f(1.0);
  const double f0 = f(0.0);
  if (!(f1 > 2 * f0)) {
    throw ValidationError("score function violates f(1) > 2 f(0)");
  }
  const double slack = 1 + opt.ratio_margin;
  auto accept = [&](const Rational& x1, const Rational& x2,
                    const Rational& x3) -> std::optional<ScoreTriple> {
    if (!(0 < x3 && x3 < x2 && x2 < x1 && x1 <= 1)) return std::nullopt;
    const double fx1 = detail::f_at(f, x1);
    const double fx2 = detail::f_at(f, x2);
    const double fx3 = detail::f_at(f, x3);
    if (!(fx3 > 0)) return std::nullopt;
    const double c1 = fx1 / fx2;
    const double c2 = fx2 / fx3;
    if (c2 > 2 * c1 * slack && 2 * c1 > 2 * slack) {
      return ScoreTriple{x1, x2, x3, c1, c2};
    }
    return std::nullopt;
  };

  const Rational x1 = 1;
  if (auto x2 = detail::solve_monotone(f, f1 / 2, 0, 1, opt.bisection_tol)) {
    const double fx2 = detail::f_at(f, *x2);
    if (auto x3 = detail::solve_monotone(f, fx2 / 5, 0, to_double(*x2),
                                         opt.bisection_tol)) {
      if (auto t = accept(x1, *x2, *x3)) return *t;
    }
  }
  for (double x3d = 0.1; x3d >= opt.resolution * (1 - 1e-9); x3d /= 10) {
    const Rational x3 = simplest_between(from_double(x3d * (1 - 1e-12)),
                                         from_double(x3d * (1 + 1e-12)));
    const double f3 = detail::f_at(f, x3);
    if (!(f3 > 0) || !(f1 > 2 * f3 * slack)) continue;
    double kappa = 2.2;
    if (!(kappa * f3 * slack < f1)) kappa = std::sqrt(2 * f1 / f3);
    const double target = std::sqrt(kappa * f1 * f3);
    auto x2 = detail::solve_monotone(f, target, to_double(x3), 1,
                                     opt.bisection_tol);
    if (!x2) continue;
    if (auto t = accept(x1, *x2, x3)) return *t;
  }
  throw SearchFailure("no (x1, x2, x3) with c2 > 2 c1 > 2 at resolution " +
                      std::to_string(opt.resolution));
}

// Epsilon for the exposure construction: first of 1/4, 1/8, ...
// with  c1(1+c2)/(c2(1+2c1)) < (1-2e)/2,  1/(1+c1) < (1-4e)/2,
// and  1 < c2(1-4e).
inline Rational solve_epsilon_exposure(double c1, double c2) {
  if (!(c2 > 2 * c1 && 2 * c1 > 2)) {
    throw ValidationError("epsilon solver needs c2 > 2 c1 > 2");
  }
  return detail::halve_until(Rational(1, 4), [&](double e) {
    return c1 * (1 + c2) / (c2 * (1 + 2 * c1)) < (1 - 2 * e) / 2 &&
           1 / (1 + c1) < (1 - 4 * e) / 2 && 1 < c2 * (1 - 4 * e);
  });
}

// Epsilon for the action construction, starting at 1/6, with
// c1 = f(x1)/f(x2) and c2 = f(x1)/f(x3).
inline Rational solve_epsilon_action(double c1, double c2, double alpha) {
  if (!(alpha > 1) || !(c2 > 2 * c1) || !(c1 > 2 * alpha - 1)) {
    throw ValidationError("epsilon solver needs alpha > 1, c1 > 2 alpha - 1, c2 > 2 c1");
  }
  return detail::halve_until(Rational(1, 6), [&](double e) {
    return c1 * (1 + c2) / (c2 * (1 + 2 * c1)) < (1 - e) / 2 &&
           1 / (1 + c1) < (1 - 2 * e) / (2 * alpha) &&
           alpha * (1 - e) / (1 + c2) < (1 - 2 * e) / 2;
  });
}

// Epsilon for the linearly bounded construction, z = beta/alpha.
inline Rational solve_epsilon_linear(double z) {
  if (!(z >= 1)) throw ValidationError("epsilon solver needs z = beta/alpha >= 1");
  const double share = (5 * z + 0.6) / (15 * z + 3.8);
  return detail::halve_until(Rational(1, 4), [&](double e) {
    return 10 * z / (10 * z + 1) * (share + e / 2) <
               11 * z / (11 * z + 1) * (share - e) &&
           (10 * z + 1.2 + e * (15 * z + 3.8)) / (5 * z + 1) < 2 &&
           4.4 * z / (15 * z + 3.8) < share - e;
  });
}

struct CounterexampleParams {
  Rational x1, x2, x3;
  double c1 = 0;
  double c2 = 0;
  std::optional<double> z;
  std::optional<double> alpha;
  std::optional<double> beta;
  Rational epsilon;
};

struct CounterexampleBundle {
  Game game;
  std::vector<StrategyProfile> cycle;  // 7 profiles, last == first
  CounterexampleParams params;
};

namespace detail {

inline QualityMatrix exposure_quality(const Rational& x1, const Rational& x2,
                                      const Rational& x3) {
  const Rational o = 0;
  return QualityMatrix({{x1, o, o}, {x1, x2, o}, {x2, o, x3}, {o, x3, x2}});
}

inline QualityMatrix action_quality(const Rational& x1, const Rational& x2,
                                    const Rational& x3) {
  const Rational o = 0;
  return QualityMatrix({{x1, o, o}, {x1, x1, o}, {x2, o, x2}, {o, x3, x2}});
}

inline CounterexampleBundle finish_bundle(Game game, CounterexampleParams p,
                                          const char* what) {
  CounterexampleBundle bundle{std::move(game), published_cycle(),
                              std::move(p)};
  if (!verify_improvement_cycle(bundle.game, bundle.cycle).ok) {
    throw SearchFailure(std::string(what) +
                        ": constructed cycle failed verification");
  }
  return bundle;
}

}  // namespace detail

// Exposure-targeted game with an improvement cycle for any continuous
// scoring function with f(1) > 2 f(0).
inline CounterexampleBundle build_thm3_game(const ScoreFunction& f,
                                            const SearchOptions& opt = {}) {
  const ScoreTriple t = find_triple_thm3(f, opt);
  const Rational eps = solve_epsilon_exposure(t.c1, t.c2);
  const Rational base = 2 - 3 * eps;
  TopicDistribution demand({1 / base, (1 - 2 * eps) / (2 * base),
                            (1 - 4 * eps) / (2 * base)});
  Game game(std::move(demand), detail::exposure_quality(t.x1, t.x2, t.x3),
            Mediator::scoring(f), UtilityScheme::kExposure, kCycleMargin);
  CounterexampleParams p;
  p.x1 = t.x1;
  p.x2 = t.x2;
  p.x3 = t.x3;
  p.c1 = t.c1;
  p.c2 = t.c2;
  p.epsilon = eps;
  return detail::finish_bundle(std::move(game), std::move(p), "thm3");
}

// Action-targeted game for scoring functions with
// f(1) > 2(2 alpha - 1) f(1/alpha), alpha > 1. The qualities satisfy
// 1/alpha < x3 < x2 < x1 <= 1 and
// 2(2a-1) < 2 f(x1)/f(x2) < f(x1)/f(x3) < 2(2a-1/2).
inline CounterexampleBundle build_thm4_game(const ScoreFunction& f,
                                            double alpha,
                                            const SearchOptions& opt = {}) {
  if (!(alpha > 1) || !std::isfinite(alpha)) {
    throw ValidationError("alpha must be a finite value > 1");
  }
  const double f1 = f(1.0);
  const double f_inv = f(1 / alpha);
  const double lower = 2 * (2 * alpha - 1);
  const double upper = 2 * (2 * alpha - 0.5);
  if (!(f1 > lower * f_inv)) {
    throw ValidationError("score function violates f(1) > 2(2 alpha - 1) f(1/alpha)");
  }
  // Place 2 c1 and c2 at thirds of (lower, hi).
  const double hi = f_inv > 0 ? std::min(upper, f1 / f_inv) : upper;
  const double two_c1 = lower + (hi - lower) / 3;
  const double c2_target = lower + 2 * (hi - lower) / 3;
  const auto x2 = detail::solve_monotone(f, 2 * f1 / two_c1, 1 / alpha, 1,
                                         opt.bisection_tol);
  if (!x2) throw SearchFailure("thm4: no x2 in (1/alpha, 1]");
  const auto x3 = detail::solve_monotone(f, f1 / c2_target, 1 / alpha,
                                         to_double(*x2), opt.bisection_tol);
  if (!x3) throw SearchFailure("thm4: no x3 in (1/alpha, x2)");
  const Rational x1 = 1;
  const Rational inv_alpha = 1 / from_double(alpha);
  const double fx2 = detail::f_at(f, *x2);
  const double fx3 = detail::f_at(f, *x3);
  const double c1 = f1 / fx2;
  const double c2 = f1 / fx3;
  const double slack = 1 + opt.ratio_margin;
  if (!(inv_alpha < *x3 && *x3 < *x2 && *x2 < x1) ||
      !(lower * slack < 2 * c1 && 2 * c1 * slack < c2 && c2 * slack < upper)) {
    throw SearchFailure("thm4: no triple satisfies the sandwich chain at this resolution");
  }
  const Rational eps = solve_epsilon_action(c1, c2, alpha);
  const Rational a = from_double(alpha);
  const Rational denom = 3 * a + 1 - eps * (a + 2);
  TopicDistribution demand(
      {2 * a / denom, a * (1 - eps) / denom, (1 - 2 * eps) / denom});
  Game game(std::move(demand), detail::action_quality(x1, *x2, *x3),
            Mediator::scoring(f), UtilityScheme::kAction, kCycleMargin);
  CounterexampleParams p;
  p.x1 = x1;
  p.x2 = *x2;
  p.x3 = *x3;
  p.c1 = c1;
  p.c2 = c2;
  p.alpha = alpha;
  p.epsilon = eps;
  return detail::finish_bundle(std::move(game), std::move(p), "thm4");
}

// Action-targeted game for continuous f with alpha x <= f(x) <= beta x on
// [0, 1]. With z = beta/alpha, x2 and x3 solve 5 z f(x2) = f(x1) and
// 11 z f(x3) = f(x1).
inline CounterexampleBundle build_thm5_game(const ScoreFunction& f,
                                            double alpha, double beta,
                                            double x1d = 1.0,
                                            const SearchOptions& opt = {}) {
  if (!(alpha > 0) || !(beta >= alpha) || !std::isfinite(beta)) {
    throw ValidationError("need 0 < alpha <= beta");
  }
  if (!(x1d > 0 && x1d <= 1)) throw ValidationError("x1 must lie in (0, 1]");
  constexpr int kGrid = 1000;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = static_cast<double>(i) / kGrid;
    const double fx = f(x);
    const double tol = 1e-12 * std::max(1.0, std::abs(fx));
    if (fx < alpha * x - tol || fx > beta * x + tol) {
      throw ValidationError("alpha x <= f(x) <= beta x fails at x = " +
                            std::to_string(x));
    }
  }
  const double z = beta / alpha;
  const Rational x1 = simplest_between(from_double(x1d - 1e-15),
                                       from_double(std::min(1.0, x1d + 1e-15)));
  const double fx1 = detail::f_at(f, x1);
  const auto x2 = detail::solve_monotone(f, fx1 / (5 * z), 0, x1d,
                                         opt.bisection_tol);
  const auto x3 = detail::solve_monotone(f, fx1 / (11 * z), 0, x1d,
                                         opt.bisection_tol);
  if (!x2 || !x3 || !(0 < *x3 && *x3 < *x2 && *x2 < x1)) {
    throw SearchFailure("thm5: bisection found no 0 < x3 < x2 < x1");
  }
  const double rel2 =
      std::abs(5 * z * detail::f_at(f, *x2) - fx1) / std::abs(fx1);
  const double rel3 =
      std::abs(11 * z * detail::f_at(f, *x3) - fx1) / std::abs(fx1);
  if (rel2 > 1e-9 || rel3 > 1e-9) {
    throw SearchFailure("thm5: f-equations not met within 1e-9");
  }
  const Rational eps = solve_epsilon_linear(z);
  const Rational zr = from_double(z);
  const Rational denom = 15 * zr + Rational(19, 5);
  TopicDistribution demand({(10 * zr + Rational(6, 5)) / denom + eps,
                            (5 * zr + Rational(3, 5)) / denom - eps,
                            2 / denom});
  Game game(std::move(demand), detail::action_quality(x1, *x2, *x3),
            Mediator::scoring(f), UtilityScheme::kAction, kCycleMargin);
  CounterexampleParams p;
  p.x1 = x1;
  p.x2 = *x2;
  p.x3 = *x3;
  p.c1 = fx1 / detail::f_at(f, *x2);
  p.c2 = fx1 / detail::f_at(f, *x3);
  p.z = z;
  p.alpha = alpha;
  p.beta = beta;
  p.epsilon = eps;
  return detail::finish_bundle(std::move(game), std::move(p), "thm5");
}

}  // namespace authorsgame

#endif  // AUTHORSGAME_COUNTEREXAMPLES_HPP_

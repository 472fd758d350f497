#include "basepack/online.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace basepack {

namespace {

/// floor(2^R / denominator), clamped to at least one color. Floating point
/// is acceptable here: at realistic scales the quotient is far from integer
/// boundaries, and negative R simply collapses to a single color.
long long clamped_palette(long long R, double denominator) {
  double raw = std::floor(std::ldexp(1.0, static_cast<int>(R)) / denominator);
  if (raw < 1.0) return 1;
  if (raw > 4.0e18) return 4'000'000'000'000'000'000LL;
  return static_cast<long long>(raw);
}

double log2_squared(long long v) {
  double l = std::log2(static_cast<double>(v));
  return l * l;
}

/// Shared sampler for alg1/alg2: given the estimate, draw R and a color.
TraceStep sample_step(int t, const Rational& estimate, long long spread,
                      double denominator, RngStream& rng) {
  TraceStep step;
  step.t = t;
  step.estimate = estimate;
  step.ell = ceil_log2(estimate);
  step.R = rng.range(step.ell - spread, step.ell + spread);
  step.palette = clamped_palette(step.R, denominator);
  step.color = 1 + static_cast<long long>(
                       rng.below(static_cast<std::uint64_t>(step.palette)));
  return step;
}

ColorAssignment all_ones(int m) {
  ColorAssignment a;
  a.colors.assign(m, 1);
  return a;
}

ColorAssignment identity_colors(int m) {
  ColorAssignment a;
  a.colors.resize(m);
  for (int t = 1; t <= m; ++t) a.colors[t - 1] = t;
  return a;
}

void require_rank_at_least_two(long long r) {
  if (r < 2) {
    throw std::invalid_argument("algorithm requires rank >= 2");
  }
}

}  // namespace

ColorAssignment greedy_single(int m, long long rank,
                              const SubsetRankFn& rank_fn) {
  ColorAssignment a;
  long long c = 1;
  std::vector<int> current;
  for (int e = 0; e < m; ++e) {
    a.colors.push_back(c);
    current.push_back(e);
    if (rank_fn(current) == rank) {
      ++c;
      current.clear();
    }
  }
  return a;
}

ColorAssignment greedy_single(const Polymatroid& f) {
  return greedy_single(f.ground_size(), f.rank(),
                       [&f](const std::vector<int>& elems) {
                         Subset s = 0;
                         for (int e : elems) s = with(s, e);
                         return f.eval(s);
                       });
}

ColorAssignment ccv_known_kstar(int m, long long r, long long k_star,
                                RngStream& rng) {
  if (k_star < 1) throw std::invalid_argument("k_star must be positive");
  long long k = 1;
  if (r >= 2) {
    double rd = static_cast<double>(r);
    // Minimized at r = 2 where it is exactly 1, so always >= 1.
    double denom = std::log2(rd) + std::log2(std::log2(rd));
    k = std::max<long long>(
        1, static_cast<long long>(std::floor(static_cast<double>(k_star) / denom)));
  }
  ColorAssignment a;
  for (int e = 0; e < m; ++e) {
    a.colors.push_back(1 + static_cast<long long>(
                               rng.below(static_cast<std::uint64_t>(k))));
  }
  return a;
}

ColorAssignment ccv_known_kstar(const Polymatroid& f, long long k_star,
                                RngStream& rng) {
  return ccv_known_kstar(f.ground_size(), f.rank(), k_star, rng);
}

ColorAssignment alg1(int m, long long r, const QSolver& q_solver,
                     RngStream& rng) {
  require_rank_at_least_two(r);
  long long spread = 3LL * ceil_log2(r);
  double denom = 60.0 * log2_squared(r);
  ColorAssignment a;
  for (int t = 1; t <= m; ++t) {
    long long q = q_solver(t);
    if (q < 0) throw std::invalid_argument("q_solver returned a negative value");
    if (q == 0) {
      // Degenerate arrival (zero singleton value): colored arbitrarily and
      // excluded from the estimator trace.
      a.colors.push_back(1);
      continue;
    }
    TraceStep step = sample_step(t, Rational(q, 1), spread, denom, rng);
    a.trace.push_back(step);
    a.colors.push_back(step.color);
  }
  return a;
}

ColorAssignment alg2(const Polymatroid& f, long long r, RngStream& rng) {
  require_rank_at_least_two(r);
  long long spread = 3LL * ceil_log2(r);
  double denom = 60.0 * log2_squared(r);
  ColorAssignment a;
  Subset active = 0;  // arrived elements with positive singleton value
  for (int t = 1; t <= f.ground_size(); ++t) {
    int e = t - 1;
    if (f.eval(Subset{1} << e) == 0) {
      // Degenerate arrival: colored arbitrarily, excluded from the trace,
      // and kept out of the decomposition (which needs f(e) > 0).
      a.colors.push_back(1);
      continue;
    }
    active = with(active, e);
    Polymatroid prefix = restrict(f, active);
    StrengthDecomposition d = strength_decomposition(prefix);
    Rational eta = eta_estimate(prefix, d, popcount(active) - 1);
    TraceStep step = sample_step(t, eta, spread, denom, rng);
    a.trace.push_back(step);
    a.colors.push_back(step.color);
  }
  return a;
}

ColorAssignment alg3(const HypergraphInstance& h, int n, RngStream& rng) {
  validate(h);
  if (n < 2) throw std::invalid_argument("alg3 requires n >= 2");
  long long spread = ceil_log2(static_cast<long long>(n));
  double denom = 40.0 * log2_squared(n);
  std::map<std::pair<int, int>, long long> pair_count;
  ColorAssignment a;
  for (int t = 1; t <= static_cast<int>(h.hyperedges.size()); ++t) {
    std::vector<int> verts = h.hyperedges[t - 1];
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    TraceStep step;
    step.t = t;
    if (verts.size() < 2) {
      step.estimate = Rational(1, 1);
      step.note = "singleton_eta";
    } else {
      long long eta = -1;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
          long long c = ++pair_count[{verts[i], verts[j]}];
          ++a.pair_updates;
          if (eta < 0 || c < eta) eta = c;
        }
      }
      step.estimate = Rational(eta, 1);
    }
    step.ell = ceil_log2(step.estimate);
    step.R = rng.range(step.ell, step.ell + 2 * spread);
    step.palette = clamped_palette(step.R, denom);
    step.color = 1 + static_cast<long long>(
                         rng.below(static_cast<std::uint64_t>(step.palette)));
    a.trace.push_back(step);
    a.colors.push_back(step.color);
  }
  return a;
}

ColorAssignment combined_alg1(int m, long long r, const QSolver& q_solver,
                              RngStream& rng) {
  std::uint64_t coin = rng.below(3);
  ColorAssignment a;
  if (coin == 0) {
    a = alg1(m, std::max<long long>(r, 2), q_solver, rng);
    a.branch = "algorithm";
  } else if (coin == 1) {
    a = all_ones(m);
    a.branch = "all_ones";
  } else {
    a = identity_colors(m);
    a.branch = "identity";
  }
  return a;
}

ColorAssignment combined_alg2(const Polymatroid& f, long long r,
                              RngStream& rng) {
  std::uint64_t coin = rng.below(3);
  ColorAssignment a;
  if (coin == 0) {
    a = alg2(f, std::max<long long>(r, 2), rng);
    a.branch = "algorithm";
  } else if (coin == 1) {
    a = all_ones(f.ground_size());
    a.branch = "all_ones";
  } else {
    a = identity_colors(f.ground_size());
    a.branch = "identity";
  }
  return a;
}

ColorAssignment combined_alg3(const HypergraphInstance& h, int n,
                              RngStream& rng) {
  std::uint64_t coin = rng.below(2);
  ColorAssignment a;
  if (coin == 0) {
    a = alg3(h, n, rng);
    a.branch = "algorithm";
  } else {
    a = all_ones(static_cast<int>(h.hyperedges.size()));
    a.branch = "all_ones";
  }
  return a;
}

long long count_base_colors(int m, long long rank, const SubsetRankFn& rank_fn,
                            const ColorAssignment& assignment) {
  if (static_cast<int>(assignment.colors.size()) != m) {
    throw std::invalid_argument("assignment size does not match ground set");
  }
  std::map<long long, std::vector<int>> classes;
  for (int e = 0; e < m; ++e) classes[assignment.colors[e]].push_back(e);
  long long bases = 0;
  for (const auto& [color, members] : classes) {
    if (rank_fn(members) == rank) ++bases;
  }
  return bases;
}

long long count_base_colors(const Polymatroid& f,
                            const ColorAssignment& assignment) {
  return count_base_colors(f.ground_size(), f.rank(),
                           [&f](const std::vector<int>& elems) {
                             Subset s = 0;
                             for (int e : elems) s = with(s, e);
                             return f.eval(s);
                           },
                           assignment);
}

}  // namespace basepack

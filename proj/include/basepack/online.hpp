#pragma once

#include <functional>
#include <string>
#include <vector>

#include "basepack/core.hpp"
#include "basepack/instances.hpp"
#include "basepack/rational.hpp"
#include "basepack/rng.hpp"
#include "basepack/strength.hpp"

namespace basepack {

/// Per-timestep record of an estimator-driven coloring step.
struct TraceStep {
  int t = 0;            // 1-based arrival index
  Rational estimate;    // q_t (integer) or eta_t (rational)
  int ell = 0;          // ceil(log2 estimate)
  long long R = 0;      // sampled exponent
  long long palette = 1;  // clamped palette size
  long long color = 1;
  std::string note;     // deviation markers, e.g. "singleton_eta"
};

/// Result of one online run. Colors are positive, assigned irrevocably in
/// arrival order; trace is empty for algorithms without an estimator.
struct ColorAssignment {
  std::vector<long long> colors;
  std::vector<TraceStep> trace;
  std::string branch;           // combined algorithms: algorithm|all_ones|identity
  long long pair_updates = 0;   // alg3 instrumentation: pair counter touches
};

/// q_t for the 1-based prefix length t (i.e. elements 0..t-1 arrived, the
/// newest being t-1).
using QSolver = std::function<long long(int t)>;

/// Rank of an element index list. Backs the overloads that scale past the
/// 63-element bitmask oracle (see subset_rank in instances.hpp).
using SubsetRankFn = std::function<long long(const std::vector<int>&)>;

/// Greedy baseline: color with a running counter, incrementing it whenever
/// the current color class becomes a base. Deterministic.
ColorAssignment greedy_single(const Polymatroid& f);
ColorAssignment greedy_single(int m, long long rank, const SubsetRankFn& rank_fn);

/// Uniform coloring with palette max(1, floor(k*/(log2 r + log2 log2 r)));
/// palette {1} when r < 2.
ColorAssignment ccv_known_kstar(const Polymatroid& f, long long k_star,
                                RngStream& rng);
ColorAssignment ccv_known_kstar(int m, long long r, long long k_star,
                                RngStream& rng);

/// Algorithm driven by the quotient estimate q_t:
/// ell = ceil(log2 q_t); R uniform in [ell - 3 ceil(log2 r), ell + 3 ceil(log2 r)];
/// palette max(1, floor(2^R / (60 (log2 r)^2))); color uniform in the palette.
/// Requires r >= 2. A q_solver value of 0 marks a degenerate arrival (zero
/// singleton value): it receives color 1 and no trace entry.
ColorAssignment alg1(int m, long long r, const QSolver& q_solver,
                     RngStream& rng);

/// Same sampler as alg1 with the strength-decomposition estimate eta_t in
/// place of q_t. Requires r >= 2; elements with f(e) = 0 are degenerate
/// (color 1, no trace entry, excluded from the decomposition).
ColorAssignment alg2(const Polymatroid& f, long long r, RngStream& rng);

/// Hypergraph algorithm: eta_t = min over vertex pairs of e_t of the number
/// of arrived hyperedges containing both (including e_t); R uniform in
/// [ell, ell + 2 ceil(log2 n)]; palette max(1, floor(2^R / (40 (log2 n)^2))).
/// Singleton hyperedges use eta_t = 1. Requires n >= 2.
ColorAssignment alg3(const HypergraphInstance& h, int n, RngStream& rng);

/// One three-way coin per run: alg1 (resp. alg2), all colors 1, or
/// C(e_t) = t. Handles r = 1 by construction.
ColorAssignment combined_alg1(int m, long long r, const QSolver& q_solver,
                              RngStream& rng);
ColorAssignment combined_alg2(const Polymatroid& f, long long r,
                              RngStream& rng);

/// Two-way coin per run: alg3 or all colors 1.
ColorAssignment combined_alg3(const HypergraphInstance& h, int n,
                              RngStream& rng);

/// Number of colors whose color class is a base of f.
long long count_base_colors(const Polymatroid& f,
                            const ColorAssignment& assignment);
long long count_base_colors(int m, long long rank, const SubsetRankFn& rank_fn,
                            const ColorAssignment& assignment);

}  // namespace basepack

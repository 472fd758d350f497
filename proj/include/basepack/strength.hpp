#pragma once

#include <functional>
#include <vector>

#include "basepack/core.hpp"
#include "basepack/rational.hpp"

namespace basepack {

/// Descending chain of closed sets N = S_0 > S_1 > ... > S_w = empty with
/// nondecreasing strength ratios and strictly decreasing function values.
struct StrengthDecomposition {
  std::vector<Subset> chain;       // S_0, ..., S_w
  std::vector<Rational> ratios;    // phi(S_i | S_{i-1}), i in [1, w]
  std::vector<long long> values;   // f(S_i), i in [0, w]

  /// Index i with e in S_{i-1} \ S_i.
  int level_of(int e) const;
};

/// phi(T | S) = (|S| - |T|) / (f(S) - f(T)), with x/0 = +infinity.
Rational strength_ratio(const Polymatroid& f, Subset t, Subset s);

/// Minimizer interface for an integer-valued submodular function given as
/// an oracle over subsets of `domain`. Returns the minimizing subset; ties
/// broken by the callee's documented order.
using SubmodularMinimizer =
    std::function<Subset(const std::function<long long(Subset)>&, Subset domain)>;

/// Exhaustive minimizer (guarded at |domain| <= 22). Ties broken by lowest
/// bitmask.
Subset exhaustive_sfm(const std::function<long long(Subset)>& g, Subset domain);

/// Builds a strength decomposition via Dinkelbach iteration on the
/// parametric submodular function  num*(f(S_prev) - f(S)) - den*(|S_prev| - |S|).
/// Requires f(e) > 0 for every element. Among ratio minimizers the set with
/// smallest f(S), then smallest |S|, then lowest bitmask is selected.
StrengthDecomposition strength_decomposition(
    const Polymatroid& f, const SubmodularMinimizer& sfm = exhaustive_sfm);

/// Reference path: per level, enumerate all candidate subsets and take the
/// exact-rational argmin directly. Used to cross-check the Dinkelbach path.
StrengthDecomposition strength_decomposition_exhaustive(const Polymatroid& f);

/// eta_t = |N_t \ S_i| / (f(N_t) - f(S_i)) where e_t lies in S_{i-1} \ S_i.
/// f here is the prefix oracle the decomposition was built from.
Rational eta_estimate(const Polymatroid& f, const StrengthDecomposition& d, int e);

}  // namespace basepack

#include "basepack/strength.hpp"

#include <stdexcept>

namespace basepack {

namespace {

void require_positive_singletons(const Polymatroid& f) {
  for (int e = 0; e < f.ground_size(); ++e) {
    if (f.eval(Subset{1} << e) <= 0) {
      throw std::invalid_argument(
          "strength decomposition requires f(e) > 0 for every element");
    }
  }
}

struct Candidate {
  Subset set = 0;
  long long value = 0;  // f(set)
  bool valid = false;

  /// Smallest f(S), then |S|, then lowest bitmask.
  void offer(Subset s, long long v) {
    if (!valid || v < value || (v == value && popcount(s) < popcount(set)) ||
        (v == value && popcount(s) == popcount(set) && s < set)) {
      set = s;
      value = v;
      valid = true;
    }
  }
};

}  // namespace

int StrengthDecomposition::level_of(int e) const {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!contains(chain[i], e)) return static_cast<int>(i);
  }
  throw std::invalid_argument("element not in ground set of decomposition");
}

Rational strength_ratio(const Polymatroid& f, Subset t, Subset s) {
  if (t & ~s) throw std::invalid_argument("T must be a subset of S");
  return Rational(popcount(s) - popcount(t), f.eval(s) - f.eval(t));
}

Subset exhaustive_sfm(const std::function<long long(Subset)>& g, Subset domain) {
  if (popcount(domain) > 22) {
    throw CapacityError("exhaustive_sfm: domain too large");
  }
  Subset best_set = domain;
  long long best = g(domain);
  for (Subset s = (domain - 1) & domain;; s = (s - 1) & domain) {
    long long v = g(s);
    if (v < best || (v == best && s < best_set)) {
      best = v;
      best_set = s;
    }
    if (s == 0) break;
  }
  return best_set;
}

namespace {

/// Optimal strength ratio over {S subset of prev : f(S) < f(prev)} via
/// Dinkelbach on the submodular parametric function
/// h(S) = num*f(S) - den*|S|. phi(S|prev) < num/den iff h(S) < h(prev).
Rational optimal_ratio(const Polymatroid& f, Subset prev,
                       const SubmodularMinimizer& sfm) {
  Rational lambda = strength_ratio(f, 0, prev);  // phi(empty | prev), finite
  for (;;) {
    long long a = lambda.num, b = lambda.den;
    auto h = [&](Subset s) { return a * f.eval(s) - b * popcount(s); };
    Subset minimizer = sfm(h, prev);
    if (h(minimizer) < h(prev)) {
      // f(minimizer) < f(prev) is forced, so the ratio is finite and < lambda.
      lambda = strength_ratio(f, minimizer, prev);
    } else {
      return lambda;
    }
  }
}

Subset select_level_set(const Polymatroid& f, Subset prev,
                        const Rational& lambda) {
  Candidate best;
  long long f_prev = f.eval(prev);
  for (Subset s = (prev - 1) & prev;; s = (s - 1) & prev) {
    long long v = f.eval(s);
    if (v < f_prev && strength_ratio(f, s, prev) == lambda) best.offer(s, v);
    if (s == 0) break;
  }
  if (!best.valid) throw std::logic_error("no ratio minimizer found");
  return best.set;
}

}  // namespace

StrengthDecomposition strength_decomposition(const Polymatroid& f,
                                             const SubmodularMinimizer& sfm) {
  require_positive_singletons(f);
  if (f.ground_size() > 22) {
    throw CapacityError("strength_decomposition: ground set too large");
  }
  StrengthDecomposition d;
  Subset prev = full_mask(f.ground_size());
  d.chain.push_back(prev);
  d.values.push_back(f.eval(prev));
  while (prev != 0) {
    Rational lambda = optimal_ratio(f, prev, sfm);
    Subset next = select_level_set(f, prev, lambda);
    d.chain.push_back(next);
    d.ratios.push_back(lambda);
    d.values.push_back(f.eval(next));
    prev = next;
  }
  return d;
}

StrengthDecomposition strength_decomposition_exhaustive(const Polymatroid& f) {
  require_positive_singletons(f);
  if (f.ground_size() > 22) {
    throw CapacityError("strength_decomposition_exhaustive: ground set too large");
  }
  StrengthDecomposition d;
  Subset prev = full_mask(f.ground_size());
  d.chain.push_back(prev);
  d.values.push_back(f.eval(prev));
  while (prev != 0) {
    long long f_prev = f.eval(prev);
    Rational best_ratio = Rational::infinity();
    for (Subset s = (prev - 1) & prev;; s = (s - 1) & prev) {
      if (f.eval(s) < f_prev) {
        Rational ratio = strength_ratio(f, s, prev);
        if (ratio < best_ratio) best_ratio = ratio;
      }
      if (s == 0) break;
    }
    Subset next = select_level_set(f, prev, best_ratio);
    d.chain.push_back(next);
    d.ratios.push_back(best_ratio);
    d.values.push_back(f.eval(next));
    prev = next;
  }
  return d;
}

Rational eta_estimate(const Polymatroid& f, const StrengthDecomposition& d,
                      int e) {
  int i = d.level_of(e);
  Subset ground = d.chain.front();
  Subset s_i = d.chain[i];
  // Strict value decrease along the chain keeps the denominator positive.
  return Rational(popcount(ground) - popcount(s_i),
                  f.eval(ground) - f.eval(s_i));
}

}  // namespace basepack

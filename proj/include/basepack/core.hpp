#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace basepack {

// Element subsets are bitmasks over [0, n); n <= 63 keeps everything in a
// single word and makes exhaustive enumeration cheap.
using Subset = std::uint64_t;

inline int popcount(Subset s) { return __builtin_popcountll(s); }
inline Subset full_mask(int n) { return n == 0 ? 0 : (~Subset{0} >> (64 - n)); }
inline bool contains(Subset s, int e) { return (s >> e) & 1; }
inline Subset with(Subset s, int e) { return s | (Subset{1} << e); }
inline Subset without(Subset s, int e) { return s & ~(Subset{1} << e); }

/// Thrown when a brute-force routine is asked to handle a ground set
/// larger than its enumeration guard.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation oracle for an integer-valued monotone submodular function
/// with f(empty) = 0. Immutable after construction; evaluations are
/// memoized per oracle.
class Polymatroid {
 public:
  using EvalFn = std::function<long long(Subset)>;

  Polymatroid(int ground_size, EvalFn eval);

  int ground_size() const { return n_; }
  long long rank() const { return rank_; }

  long long eval(Subset s) const;

 private:
  int n_;
  EvalFn eval_;
  long long rank_;
  mutable std::unordered_map<Subset, long long> cache_;
};

/// f(A + e) - f(A). Nonnegative for a genuine polymatroid.
long long marginal(const Polymatroid& f, Subset a, int e);

/// Restriction of f to S, with elements of S re-indexed to [0, |S|).
/// The i-th smallest element of S becomes element i.
Polymatroid restrict(const Polymatroid& f, Subset s);

/// Elements with zero marginal with respect to S. Always a superset of S.
Subset span_of(const Polymatroid& f, Subset s);

bool is_closed(const Polymatroid& f, Subset s);

/// True iff every element of Q has positive marginal w.r.t. N \ Q.
/// Cross-checked in tests against the closed-complement characterization.
bool is_quotient(const Polymatroid& f, Subset q);

/// Equivalent route: Q is a quotient iff N \ Q equals its own span.
bool is_quotient_via_closure(const Polymatroid& f, Subset q);

bool is_base(const Polymatroid& f, Subset s);

/// Exhaustive axiom check: f(empty) = 0, monotone, submodular.
/// Guarded at ground_size <= 16.
bool validate_polymatroid(const Polymatroid& f);

}  // namespace basepack

#include "basepack/core.hpp"

#include <utility>

namespace basepack {

Polymatroid::Polymatroid(int ground_size, EvalFn eval)
    : n_(ground_size), eval_(std::move(eval)) {
  if (n_ < 0 || n_ > 63) {
    throw std::invalid_argument("ground size must be in [0, 63]");
  }
  if (eval_(0) != 0) {
    throw std::invalid_argument("f(empty) must be 0");
  }
  rank_ = eval_(full_mask(n_));
  if (rank_ < 0) {
    throw std::invalid_argument("rank must be nonnegative");
  }
}

long long Polymatroid::eval(Subset s) const {
  if (s & ~full_mask(n_)) {
    throw std::invalid_argument("subset contains out-of-range elements");
  }
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  long long v = eval_(s);
  cache_.emplace(s, v);
  return v;
}

long long marginal(const Polymatroid& f, Subset a, int e) {
  if (e < 0 || e >= f.ground_size()) {
    throw std::invalid_argument("element index out of range");
  }
  return f.eval(with(a, e)) - f.eval(a);
}

Polymatroid restrict(const Polymatroid& f, Subset s) {
  if (s & ~full_mask(f.ground_size())) {
    throw std::invalid_argument("restriction set out of range");
  }
  std::vector<int> elems;
  for (int e = 0; e < f.ground_size(); ++e) {
    if (contains(s, e)) elems.push_back(e);
  }
  // Copy the parent by value so the restricted oracle owns its view.
  Polymatroid parent = f;
  return Polymatroid(
      static_cast<int>(elems.size()),
      [parent, elems](Subset t) {
        Subset expanded = 0;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if (contains(t, static_cast<int>(i))) expanded = with(expanded, elems[i]);
        }
        return parent.eval(expanded);
      });
}

Subset span_of(const Polymatroid& f, Subset s) {
  Subset result = s;
  long long base = f.eval(s);
  for (int e = 0; e < f.ground_size(); ++e) {
    if (contains(s, e)) continue;
    if (f.eval(with(s, e)) == base) result = with(result, e);
  }
  return result;
}

bool is_closed(const Polymatroid& f, Subset s) { return span_of(f, s) == s; }

bool is_quotient(const Polymatroid& f, Subset q) {
  Subset complement = full_mask(f.ground_size()) & ~q;
  long long base = f.eval(complement);
  for (int e = 0; e < f.ground_size(); ++e) {
    if (!contains(q, e)) continue;
    if (f.eval(with(complement, e)) <= base) return false;
  }
  return true;
}

bool is_quotient_via_closure(const Polymatroid& f, Subset q) {
  Subset complement = full_mask(f.ground_size()) & ~q;
  return span_of(f, complement) == complement;
}

bool is_base(const Polymatroid& f, Subset s) { return f.eval(s) == f.rank(); }

bool validate_polymatroid(const Polymatroid& f) {
  int n = f.ground_size();
  if (n > 16) {
    throw CapacityError("validate_polymatroid: ground set too large");
  }
  if (f.eval(0) != 0) return false;
  Subset all = full_mask(n);
  // Monotonicity via single-element extensions suffices.
  for (Subset s = 0; s <= all; ++s) {
    for (int e = 0; e < n; ++e) {
      if (contains(s, e)) continue;
      if (f.eval(with(s, e)) < f.eval(s)) return false;
    }
    if (s == all) break;
  }
  // Submodularity: f(S+e) - f(S) nonincreasing in S, checked pairwise.
  for (Subset s = 0; s <= all; ++s) {
    for (int e1 = 0; e1 < n; ++e1) {
      if (contains(s, e1)) continue;
      for (int e2 = e1 + 1; e2 < n; ++e2) {
        if (contains(s, e2)) continue;
        long long m1 = f.eval(with(s, e1)) - f.eval(s);
        long long m2 = f.eval(with(with(s, e1), e2)) - f.eval(with(s, e2));
        if (m1 < m2) return false;
      }
    }
    if (s == all) break;
  }
  return true;
}

}  // namespace basepack

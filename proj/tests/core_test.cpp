#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "basepack/core.hpp"
#include "basepack/instances.hpp"
#include "test_util.hpp"

using namespace basepack;
using namespace basepack::testutil;

TEST_CASE("marginal values") {
  Polymatroid fab = coverage_oracle(cover_ab(), true);
  CHECK(marginal(fab, mask({1}), 0) == 0);  // e1={a} adds nothing to e2={a,b}
  CHECK(marginal(fab, 0, 1) == fab.eval(mask({1})));

  Polymatroid k3 = graphic_oracle(triangle());
  CHECK(marginal(k3, mask({0, 1}), 2) == 0);
  CHECK_THROWS_AS(marginal(k3, 0, 3), std::invalid_argument);
}

TEST_CASE("restrict") {
  Polymatroid f = coverage_oracle(cover_abb());
  Polymatroid id = restrict(f, full_mask(3));
  for (Subset s = 0; s <= full_mask(3); ++s) CHECK(id.eval(s) == f.eval(s));

  Polymatroid empty = restrict(f, 0);
  CHECK(empty.ground_size() == 0);
  CHECK(empty.rank() == 0);

  Polymatroid sub = restrict(f, mask({0, 2}));  // {e1={a}, e3={b}}
  CHECK(sub.ground_size() == 2);
  CHECK(sub.rank() == 2);
  CHECK(sub.eval(mask({0})) == 1);
}

TEST_CASE("span and closedness") {
  Polymatroid f = coverage_oracle(cover_ab(), true);
  CHECK(span_of(f, 0) == 0);                 // all singleton values positive
  CHECK(span_of(f, mask({1})) == mask({0, 1}));
  CHECK(span_of(f, full_mask(2)) == full_mask(2));
  CHECK(is_closed(f, 0));
  CHECK_FALSE(is_closed(f, mask({1})));
  CHECK(is_closed(f, full_mask(2)));
}

TEST_CASE("quotients") {
  Polymatroid k3 = graphic_oracle(triangle());
  CHECK(is_quotient(k3, full_mask(3)));
  CHECK(is_quotient(k3, mask({0, 2})));  // delta({v0}) = {e01, e02}
  CHECK(is_quotient(k3, 0));
  CHECK_FALSE(is_quotient(k3, mask({0})));
}

TEST_CASE("bases") {
  Polymatroid k3 = graphic_oracle(triangle());
  CHECK(is_base(k3, full_mask(3)));
  CHECK(is_base(k3, mask({0, 1})));  // spanning tree
  Polymatroid f = coverage_oracle(cover_abb());
  CHECK_FALSE(is_base(f, mask({0})));
}

TEST_CASE("validate_polymatroid") {
  for (const auto& entry : small_corpus(5)) {
    CAPTURE(entry.family);
    CHECK(validate_polymatroid(entry.oracle));
  }
  Polymatroid bad(2, [](Subset s) {
    long long k = popcount(s);
    return k * k;
  });
  CHECK_FALSE(validate_polymatroid(bad));
  Polymatroid zero(3, [](Subset) { return 0LL; });
  CHECK(validate_polymatroid(zero));
}

TEST_CASE("span idempotence and monotonicity") {
  for (const auto& entry : small_corpus(6, 2000)) {
    const Polymatroid& f = entry.oracle;
    if (f.ground_size() > 8) continue;
    Subset all = full_mask(f.ground_size());
    for (Subset s = 0; s <= all; ++s) {
      Subset sp = span_of(f, s);
      CHECK((sp & s) == s);
      CHECK(span_of(f, sp) == sp);
      if (s == all) break;
    }
    // Monotonicity on single-element extensions covers the general case by
    // chaining, and keeps the loop quadratic rather than quartic.
    for (Subset s = 0; s < all; ++s) {
      for (int e = 0; e < f.ground_size(); ++e) {
        if (contains(s, e)) continue;
        Subset sp_small = span_of(f, s);
        Subset sp_big = span_of(f, with(s, e));
        CHECK((sp_small & sp_big) == sp_small);
      }
    }
  }
}

TEST_CASE("quotient characterizations agree") {
  for (const auto& entry : small_corpus(6, 3000)) {
    const Polymatroid& f = entry.oracle;
    if (f.ground_size() > 8) continue;
    Subset all = full_mask(f.ground_size());
    for (Subset q = 0; q <= all; ++q) {
      CHECK(is_quotient(f, q) == is_quotient_via_closure(f, q));
      if (q == all) break;
    }
  }
}

TEST_CASE("restriction preserves quotients") {
  for (const auto& entry : small_corpus(4, 4000)) {
    const Polymatroid& f = entry.oracle;
    if (f.ground_size() > 7) continue;
    Subset all = full_mask(f.ground_size());
    for (Subset q = 0; q <= all; ++q) {
      if (!is_quotient(f, q)) {
        if (q == all) break;
        continue;
      }
      for (Subset s = 0; s <= all; ++s) {
        Polymatroid fs = restrict(f, s);
        // Re-index Q cap S into the restricted ground set.
        Subset qs = 0;
        int pos = 0;
        for (int e = 0; e < f.ground_size(); ++e) {
          if (!contains(s, e)) continue;
          if (contains(q, e)) qs = with(qs, pos);
          ++pos;
        }
        CHECK(is_quotient(fs, qs));
        if (s == all) break;
      }
      if (q == all) break;
    }
  }
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(Polymatroid(64, [](Subset) { return 0LL; }),
                  std::invalid_argument);
  Polymatroid f(2, [](Subset s) { return static_cast<long long>(popcount(s)); });
  CHECK_THROWS_AS(f.eval(mask({2})), std::invalid_argument);
  Polymatroid big(17, [](Subset s) { return static_cast<long long>(popcount(s)); });
  CHECK_THROWS_AS(validate_polymatroid(big), CapacityError);
}

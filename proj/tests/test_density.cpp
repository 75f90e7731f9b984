#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sqf/density.hpp"
#include "sqf/errors.hpp"
#include "sqf/parse.hpp"

using namespace sqf;

namespace {

const FieldPtr F2 = Field::make(2);
const FieldPtr F3 = Field::make(3);

Admissible A2(const char* s) { return Admissible(parse_bipoly(s, F2)); }

// prod over deg P < M of (1 - rho/(|P|^2 - |P|)) as an exact rational, with
// rho from the brute-force root counter and primes from trial division.
Rational exact_product(const BiPoly& f, int M) {
  Rational prod = 1;
  const std::int64_t q = f.field()->order();
  for (int d = 1; d < M; ++d) {
    BigInt norm = 1;
    for (int i = 0; i < d; ++i) norm *= q;
    for (const Poly& P : oracle::primes_of_degree(f.field(), d))
      prod *= 1 - Rational(BigInt(oracle::rho(f, P)), norm * norm - norm);
  }
  return prod;
}

// T by direct summation far past the point where terms drop below 1e-30.
long double tail_oracle(const Admissible& f, int M) {
  const long double q = f.poly().field()->order();
  long double T = 0;
  for (int i = M; i < M + 400; ++i) {
    const long double b = i > f.bad_degree() ? f.degree() : f.root_bound().convert_to<long double>();
    T += b / (i * (std::pow(q, static_cast<long double>(i)) - 1));
  }
  return T;
}

}  // namespace

TEST_CASE("f = x: every factor is 1") {
  const Admissible f = A2("x");
  const DensityEstimate d = truncated_density(f, 3);
  CHECK(d.truncated_value == 1.0);
  CHECK(d.upper == 1.0);
  CHECK(d.positive);
  CHECK_FALSE(d.culprit);
  const long double T = tail_oracle(f, 3);
  CHECK(tail_sum(f, 3) == doctest::Approx(static_cast<double>(T)).epsilon(1e-12));
  const double K = 1.0 / (1.0 - 1.0 / (64.0 - 8.0));
  CHECK(d.lower == doctest::Approx(std::exp(-static_cast<double>(T) * K)).epsilon(1e-12));
}

TEST_CASE("degenerate product vanishes at t") {
  const DensityEstimate d = truncated_density(A2("(x+1)*(x+1+t^2)"), 2);
  CHECK(d.truncated_value == 0.0);
  CHECK(d.lower == 0.0);
  CHECK(d.upper == 0.0);
  CHECK_FALSE(d.positive);
  REQUIRE(d.culprit);
  CHECK(d.culprit->poly() == Poly::t(F2));
}

TEST_CASE("x^3 + t: certified interval at M = 8") {
  const Admissible f = A2("x^3+t");
  const DensityEstimate d = truncated_density(f, 8);
  CHECK(d.B == 16);
  CHECK(d.positive);
  CHECK(d.truncated_value > 0.0);
  CHECK(d.truncated_value < 1.0);
  CHECK(d.lower <= d.upper);
  CHECK(d.upper == d.truncated_value);
  // Frozen from the exact-rational oracle below (M = 8, 12 digits).
  CHECK(d.truncated_value == doctest::Approx(0.472172743602).epsilon(1e-11));
  // Width with the Hensel-refined tail; the < 1e-3 target is not reached (see README).
  CHECK(d.upper - d.lower == doctest::Approx(1.2559e-3).epsilon(1e-3));
}

TEST_CASE("truncated product matches the exact rational oracle") {
  for (const char* s : {"x^3+t", "x^2+x+t", "t*x^2+x+1", "x^3+t^2*x+t"}) {
    const Admissible f = A2(s);
    for (int M = 1; M <= 6; ++M) {
      DensityEstimate d;
      try {
        d = truncated_density(f, M);
      } catch (const InvalidArgument&) {
        continue;  // tail not certifiable yet
      }
      const double exact = exact_product(f.poly(), M).convert_to<double>();
      CHECK(d.truncated_value == doctest::Approx(exact).epsilon(1e-12));
    }
  }
  const Admissible g(parse_bipoly("x^2+t", F3));
  for (int M = 2; M <= 4; ++M)
    CHECK(truncated_density(g, M).truncated_value ==
          doctest::Approx(exact_product(g.poly(), M).convert_to<double>()).epsilon(1e-12));
}

TEST_CASE("uncertifiable cutoffs are refused") {
  CHECK_THROWS_AS(truncated_density(A2("x^3+t"), 2), InvalidArgument);
  CHECK_THROWS_AS(truncated_density(A2("x^3+t"), 0), InvalidArgument);
}

TEST_CASE("intervals nest as M grows") {
  for (const char* s : {"x^3+t", "x^2+x+t", "x"}) {
    const Admissible f = A2(s);
    std::optional<DensityEstimate> prev;
    for (int M = 1; M <= 10; ++M) {
      DensityEstimate d;
      try {
        d = truncated_density(f, M);
      } catch (const InvalidArgument&) {
        continue;
      }
      CHECK(0.0 <= d.lower);
      CHECK(d.lower <= d.upper);
      CHECK(d.upper <= 1.0);
      if (prev) {
        CHECK(d.upper <= prev->upper * (1 + 1e-12));
        CHECK(d.lower >= prev->lower * (1 - 1e-12));
        CHECK(d.upper - d.lower <= (prev->upper - prev->lower) * (1 + 1e-9));
      }
      prev = d;
    }
  }
}

TEST_CASE("positivity check") {
  const PositivityResult a = positivity_check(A2("x^3+t"));
  CHECK(a.positive);
  CHECK_FALSE(a.culprit);
  REQUIRE(a.records.size() == 3);  // t, t+1, t^2+t+1
  CHECK(a.records[0].prime.poly() == Poly::t(F2));
  REQUIRE(a.records[0].witness);
  CHECK(a.records[0].witness->is_one());
  for (const auto& r : a.records) {
    REQUIRE(r.witness);
    const Poly& p = r.prime.poly();
    CHECK_FALSE(oracle::divides(p, *r.witness));
    CHECK_FALSE(oracle::divides(p * p, oracle::value(parse_bipoly("x^3+t", F2), *r.witness)));
  }

  const PositivityResult b = positivity_check(A2("(x+1)*(x+1+t^2)"));
  CHECK_FALSE(b.positive);
  REQUIRE(b.culprit);
  CHECK(b.culprit->poly() == Poly::t(F2));

  CHECK(positivity_check(A2("x")).positive);
}

// positive iff every computed factor is nonzero for M beyond the bad degree.
TEST_CASE("positivity agrees with the product") {
  for (const char* s : {"x^3+t", "(x+1)*(x+1+t^2)", "x^2+x+t", "x*(x+1)+t^2", "x", "(x+t)*(x+t+t^2)"}) {
    const Admissible f = A2(s);
    const PositivityResult pos = positivity_check(f);
    for (int M = f.bad_degree() + 1; M <= f.bad_degree() + 3; ++M) {
      DensityEstimate d;
      try {
        d = truncated_density(f, M);
      } catch (const InvalidArgument&) {
        continue;
      }
      CHECK(pos.positive == (d.truncated_value > 0));
      CHECK(pos.positive == d.positive);
      if (!pos.positive) CHECK(d.culprit->poly() == pos.culprit->poly());
    }
  }
}

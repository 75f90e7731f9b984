#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sqf/errors.hpp"
#include "sqf/parse.hpp"
#include "sqf/primes.hpp"

using namespace sqf;

namespace {

const FieldPtr F2 = Field::make(2);
const FieldPtr F3 = Field::make(3);

BiPoly B2(const char* s) { return parse_bipoly(s, F2); }
Poly P2(const char* s) { return parse_poly(s, F2); }

}  // namespace

TEST_CASE("evaluation spot values") {
  const BiPoly f = B2("x^3+t");
  CHECK(eval(f, P2("t")) == P2("t^3+t"));
  CHECK(eval(f, P2("0")) == P2("t"));
  CHECK(eval(f, P2("t+1")) == P2("t^3+t^2+1"));
  CHECK(eval_mod(f, P2("t+1"), P2("t^2")) == P2("1"));
}

TEST_CASE("derivatives") {
  CHECK(derivative(B2("x^3+t"), Var::x) == B2("x^2"));
  CHECK(derivative(B2("x^3+t"), Var::t) == B2("1"));
  CHECK(derivative(B2("x^2"), Var::x).is_zero());
  CHECK(derivative(B2("t^3*x^2 + t^2*x"), Var::t) == B2("t^2*x^2"));
}

TEST_CASE("content") {
  CHECK(content(B2("t*x + t^2")) == P2("t"));
  CHECK(content(B2("x^3+t")).is_one());
  CHECK(content(B2("(t^2+t)*x^2 + (t^2+t)")) == P2("t^2+t"));
  CHECK(content(parse_bipoly("2*t*x", F3)) == parse_poly("t", F3));
  CHECK_THROWS_AS(content(BiPoly(F2)), InvalidArgument);
}

TEST_CASE("discriminant spot values") {
  CHECK(discriminant(B2("x^3+t")) == P2("t^2"));
  CHECK(discriminant(B2("x+t")).is_one());
  CHECK(discriminant(parse_bipoly("x^2+t", F3)) == parse_poly("2*t", F3));
  CHECK(discriminant(B2("x^2+1")).is_zero());
  CHECK_THROWS_AS(discriminant(B2("t")), InvalidArgument);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(B2("x^3+t")));
  CHECK_FALSE(is_admissible(B2("x^2+1")));
  CHECK_THROWS_AS(is_admissible(B2("x^2+t")), Inseparable);
  CHECK_FALSE(is_admissible(B2("t^2*x + t^2")));  // content t^2
  CHECK(is_admissible(B2("t*x + t")));            // content t is square-free
  CHECK(is_admissible(B2("x")));
  CHECK(is_admissible(B2("(x+1)*(x+1+t^2)")));
  CHECK_THROWS_AS(is_admissible(BiPoly(F2)), InvalidArgument);
  CHECK_THROWS_AS(is_admissible(B2("t+1")), InvalidArgument);

  const Admissible f(B2("x^3+t"));
  CHECK(f.bad_degree() == 2);
  CHECK(f.root_bound() == 16);
  CHECK(f.dx() == B2("x^2"));
  CHECK_THROWS_AS(Admissible(B2("x^2+1")), InvalidArgument);
  CHECK(Admissible(B2("x")).root_bound() == 1);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(23);
  for (const auto& F : {F2, F3, Field::make(2, 2)}) {
    for (int i = 0; i < 200; ++i) {
      const BiPoly f = oracle::random_bipoly(F, 4, 3, rng), g = oracle::random_bipoly(F, 4, 3, rng);
      const Poly a = oracle::random_poly(F, 4, rng), m = oracle::random_poly(F, 3, rng);
      CHECK(eval(f + g, a) == eval(f, a) + eval(g, a));
      CHECK(eval(f * g, a) == eval(f, a) * eval(g, a));
      CHECK(eval(f, a) == oracle::value(f, a));
      if (m.degree() >= 1) CHECK(eval_mod(f, a, m) == eval(f, a) % m);
    }
  }
}

TEST_CASE("resultant: Bareiss, subresultants and cofactor expansion agree") {
  std::mt19937_64 rng(29);
  for (const auto& F : {F2, F3, Field::make(5), Field::make(2, 2)}) {
    for (int i = 0; i < 150; ++i) {
      const BiPoly f = oracle::random_bipoly(F, 4, 3, rng), g = oracle::random_bipoly(F, 3, 3, rng);
      if (f.is_zero() || g.is_zero()) continue;
      const Poly r = resultant(f, g);
      CHECK(r == resultant_subresultant(f, g));
      CHECK(r == oracle::sylvester_resultant(f, g));
      if (f.degree() >= 1) {
        const BiPoly fx = derivative(f, Var::x);
        const int n = f.degree();
        Poly expect = fx.is_zero() ? Poly(F) : oracle::sylvester_resultant(f, fx);
        if (n * (n - 1) / 2 % 2) expect = -expect;
        if (n == 1) expect = Poly::one(F);
        CHECK(discriminant(f) == expect);
      }
    }
  }
}

TEST_CASE("content scales out") {
  std::mt19937_64 rng(31);
  for (const auto& F : {F2, F3}) {
    for (int i = 0; i < 200; ++i) {
      const BiPoly f = oracle::random_bipoly(F, 3, 3, rng);
      const Poly c = oracle::random_poly(F, 3, rng);
      if (f.is_zero() || c.is_zero()) continue;
      CHECK(content(c * f) == (c * content(f)).monic());
    }
  }
}

// A repeated root mod P (P not dividing w_f) forces P | disc(f).
TEST_CASE("repeated roots mod P divide the discriminant") {
  std::mt19937_64 rng(37);
  int hits = 0;
  for (const auto& F : {F2, F3}) {
    const auto primes = primes_up_to(F, 2);
    for (int i = 0; i < 150; ++i) {
      const BiPoly f = oracle::random_bipoly(F, 4, 2, rng);
      if (f.degree() < 2) continue;
      const BiPoly fx = derivative(f, Var::x);
      if (fx.is_zero()) continue;
      const Poly d = discriminant(f);
      for (const auto& P : primes) {
        const Poly& p = P.poly();
        if (oracle::divides(p, f.leading())) continue;
        bool repeated = false;
        oracle::for_each_below(F, P.degree(), [&](const Poly& C) {
          if (oracle::divides(p, oracle::value(f, C)) && oracle::divides(p, oracle::value(fx, C))) repeated = true;
        });
        if (repeated) {
          ++hits;
          CHECK(oracle::divides(p, d));
        }
      }
    }
  }
  CHECK(hits > 10);
}

TEST_CASE("admissibility when df/dx vanishes") {
  CHECK_FALSE(is_admissible(B2("(x^2+1)*(x^2+t)")));  // (x+1)^2 hidden in an x^2-polynomial
  CHECK_FALSE(is_admissible(B2("x^4 + t^2")));        // a square
  CHECK_THROWS_AS(is_admissible(B2("x^4 + t*x^2 + t")), Inseparable);
  CHECK_THROWS_AS(is_admissible(parse_bipoly("x^3 + t", F3)), Inseparable);
  CHECK_FALSE(is_admissible(parse_bipoly("x^3 + 1", F3)));  // (x+1)^3
}

#pragma once

#include <cstdint>
#include <vector>

#include "sqf/bigint.hpp"
#include "sqf/poly.hpp"

namespace sqf {

/// The q^n monic polynomials of degree n in odometer order: index i has
/// coefficient codes given by the base-q digits of i, constant term fastest.
/// Contiguous index sub-ranges partition the set for parallel scans.
class MonicRange {
 public:
  /// Throws BudgetExceeded when q^n does not fit in 62 bits.
  MonicRange(FieldPtr field, int n);

  std::uint64_t size() const noexcept { return size_; }
  int degree() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }
  Poly at(std::uint64_t index) const;

  /// Calls fn(const Poly&) for indices [begin, end), reusing one buffer.
  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    Poly a = at(begin);
    const std::uint32_t q = field_->order();
    for (std::uint64_t i = begin;;) {
      fn(static_cast<const Poly&>(a));
      if (++i == end) break;
      auto& c = a.raw();
      std::size_t k = 0;
      while (++c[k] == q) c[k++] = 0;
    }
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(0, size_, std::forward<Fn>(fn));
  }

 private:
  FieldPtr field_;
  int n_;
  std::uint64_t size_;
};

/// |pi_q(n)| = (1/n) sum_{d | n} mu(d) q^{n/d}. Throws on n < 1.
BigInt count_primes(std::uint64_t q, int n);

/// Primes of degree n in odometer order.
std::vector<PrimeMod> enumerate_primes(const FieldPtr& field, int n);

/// All primes of degree 1..max_deg, ordered by degree then odometer order.
std::vector<PrimeMod> primes_up_to(const FieldPtr& field, int max_deg);

struct ApCount {
  BigInt count;
  Rational main_term;  // q^n / (n phi(Q))
  double deviation;    // |count - main_term|
};

/// Primes P of degree n with P = A (mod Q), by enumeration.
/// Throws InvalidArgument unless gcd(Q, A) = 1 and deg Q >= 1.
ApCount count_primes_ap(int n, const Poly& Q, const Poly& A);

}  // namespace sqf

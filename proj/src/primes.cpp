#include "sqf/primes.hpp"

#include "sqf/errors.hpp"

namespace sqf {

namespace {

int mobius(int n) {
  int mu = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

MonicRange::MonicRange(FieldPtr field, int n) : field_(std::move(field)), n_(n), size_(1) {
  if (n < 0) throw InvalidArgument("negative degree");
  const std::uint64_t q = field_->order();
  for (int i = 0; i < n; ++i) {
    if (size_ > (std::uint64_t{1} << 62) / q) throw BudgetExceeded("q^n overflows the enumeration index");
    size_ *= q;
  }
}

Poly MonicRange::at(std::uint64_t index) const {
  const std::uint32_t q = field_->order();
  std::vector<Code> c(static_cast<std::size_t>(n_) + 1, 0);
  for (int k = 0; k < n_; ++k) {
    c[k] = static_cast<Code>(index % q);
    index /= q;
  }
  c[n_] = 1;
  return Poly(field_, std::move(c));
}

BigInt count_primes(std::uint64_t q, int n) {
  if (n < 1) throw InvalidArgument("prime count needs n >= 1");
  BigInt sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(d);
    if (mu != 0) sum += mu * ipow(q, static_cast<unsigned>(n / d));
  }
  return sum / n;
}

std::vector<PrimeMod> enumerate_primes(const FieldPtr& field, int n) {
  if (n < 1) throw InvalidArgument("prime enumeration needs n >= 1");
  std::vector<PrimeMod> out;
  MonicRange(field, n).for_each([&](const Poly& a) {
    if (is_irreducible(a)) out.push_back(PrimeMod::trusted(a));
  });
  return out;
}

std::vector<PrimeMod> primes_up_to(const FieldPtr& field, int max_deg) {
  std::vector<PrimeMod> out;
  for (int d = 1; d <= max_deg; ++d) {
    auto ps = enumerate_primes(field, d);
    out.insert(out.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
  }
  return out;
}

ApCount count_primes_ap(int n, const Poly& Q, const Poly& A) {
  if (Q.degree() < 1) throw InvalidArgument("modulus of an arithmetic progression must be nonconstant");
  if (!gcd(Q, A).is_one()) throw InvalidArgument("gcd(Q, A) != 1");
  const Poly target = A % Q;
  BigInt count = 0;
  MonicRange(Q.field(), n).for_each([&](const Poly& a) {
    if (a % Q == target && is_irreducible(a)) ++count;
  });
  const Rational main_term(ipow(Q.F().order(), static_cast<unsigned>(n)), n * euler_phi(Q));
  const Rational diff = Rational(count) - main_term;
  return {count, main_term, std::abs(diff.convert_to<double>())};
}

}  // namespace sqf

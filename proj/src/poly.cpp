#include "sqf/poly.hpp"

#include <algorithm>

#include "sqf/errors.hpp"

namespace sqf {

namespace {

// r <- r mod m in place; m nonzero with inverse leading coefficient lead_inv.
void reduce(std::vector<Code>& r, const Poly& m, Code lead_inv) {
  const Field& F = m.F();
  const auto mc = m.coeffs();
  const std::size_t dm = mc.size() - 1;
  while (!r.empty() && r.back() == 0) r.pop_back();
  while (r.size() > dm) {
    const Code c = F.mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - 1 - dm;
    if (c != 0) {
      for (std::size_t i = 0; i < dm; ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, mc[i]));
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
}

std::vector<Code> mul_raw(const Field& F, std::span<const Code> a, std::span<const Code> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Code> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Steps `cand` (monic, fixed degree) to the next polynomial in odometer order.
// Returns false after the last one.
bool next_monic(std::vector<Code>& cand, std::uint32_t q) {
  const std::size_t d = cand.size() - 1;
  std::size_t i = 0;
  while (i < d && ++cand[i] == q) cand[i++] = 0;
  return i < d;
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Code c : c_)
    if (c >= field_->order()) throw InvalidArgument("coefficient code out of range");
  normalize();
}

Poly Poly::monomial(FieldPtr field, Code c, int k) {
  std::vector<Code> v(static_cast<std::size_t>(k) + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

BigInt Poly::norm() const {
  if (is_zero()) return 0;
  return ipow(field_->order(), static_cast<unsigned>(degree()));
}

Poly Poly::scaled(Code c) const {
  if (c == 0) return Poly(field_);
  Poly r = *this;
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r = *this;
  r.c_.insert(r.c_.begin(), static_cast<std::size_t>(k), 0);
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  require_same_field(field_, b.field_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_->add(c_[i], b.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  require_same_field(field_, b.field_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_->sub(c_[i], b.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& b) { return *this = *this * b; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  Poly r(a.field_);
  r.c_ = mul_raw(*a.field_, a.c_, b.c_);
  r.normalize();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& x : r.c_) x = a.field_->neg(x);
  return r;
}

bool operator<(const Poly& a, const Poly& b) noexcept {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  require_same_field(a.field(), b.field());
  const Field& F = a.F();
  const Code lead_inv = F.inv(b.lead());
  const int db = b.degree();
  if (a.degree() < db) return {Poly(a.field()), a};
  std::vector<Code> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Code> quot(r.size() - static_cast<std::size_t>(db), 0);
  const auto bc = b.coeffs();
  for (std::size_t top = r.size(); top-- > static_cast<std::size_t>(db);) {
    const Code c = F.mul(r[top], lead_inv);
    const std::size_t shift = top - db;
    quot[shift] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, bc[i]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly operator%(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  Poly r = a;
  reduce(r.raw(), b, a.F().inv(b.lead()));
  return r;
}

bool divides(const Poly& b, const Poly& a) { return (a % b).is_zero(); }

Poly derivative(const Poly& a) {
  const Field& F = a.F();
  if (a.degree() <= 0) return Poly(a.field());
  std::vector<Code> d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]);
  return Poly(a.field(), std::move(d));
}

Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::one(a.field()), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  const auto& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(F), s1(F);
  Poly t0(F), t1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    Poly s2 = s0 - quot * s1;
    Poly t2 = t0 - quot * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Code k = a.F().inv(r0.lead());
  return {r0.scaled(k), s0.scaled(k), t0.scaled(k)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  if (m.degree() < 1) throw InvalidArgument("inverse modulo a constant");
  auto [g, s, t] = xgcd(a % m, m);
  if (!g.is_one()) throw InvalidArgument("not invertible modulo m");
  return s % m;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  Poly r(a.field(), mul_raw(a.F(), a.coeffs(), b.coeffs()));
  reduce(r.raw(), m, a.F().inv(m.lead()));
  return r;
}

Poly modpow(const Poly& base, const BigInt& e, const Poly& m) {
  if (m.is_zero()) throw InvalidArgument("modpow with zero modulus");
  if (e < 0) throw InvalidArgument("negative exponent");
  if (m.degree() == 0) return Poly(m.field());
  if (e == 0) return Poly::one(m.field()) % m;
  Poly b = base % m;
  Poly r = b;
  for (std::size_t i = boost::multiprecision::msb(e); i-- > 0;) {
    r = mulmod(r, r, m);
    if (boost::multiprecision::bit_test(e, i)) r = mulmod(r, b, m);
  }
  return r;
}

Poly modpow(const Poly& base, std::uint64_t e, const Poly& m) { return modpow(base, BigInt(e), m); }

bool is_irreducible(const Poly& a) {
  const int n = a.degree();
  if (n < 1) throw InvalidArgument("irreducibility of a constant");
  if (n == 1) return true;
  if (a[0] == 0) return false;
  const Poly f = a.monic();
  const auto& F = f.field();
  const Poly t = Poly::t(F);
  const std::uint64_t q = F->order();

  // powers[k] = t^(q^k) mod f
  std::vector<Poly> powers;
  powers.reserve(static_cast<std::size_t>(n) + 1);
  powers.push_back(t % f);
  for (int k = 1; k <= n; ++k) powers.push_back(modpow(powers.back(), q, f));
  if (!(powers[n] == t % f)) return false;
  for (int r : prime_factors(n)) {
    if (!gcd(powers[n / r] - t, f).is_one()) return false;
  }
  return true;
}

bool is_squarefree(const Poly& a) {
  if (a.is_zero()) throw InvalidArgument("square-freeness of zero");
  if (a.degree() == 0) return true;
  const Poly d = derivative(a);
  if (d.is_zero()) return false;
  return gcd(a, d).is_one();
}

PrimeMod PrimeMod::certify(Poly p) {
  if (!p.is_monic() || p.degree() < 1) throw InvalidArgument("prime must be monic of positive degree");
  if (!is_irreducible(p)) throw InvalidArgument("polynomial is reducible");
  return PrimeMod(std::move(p));
}

Factorization factorize(const Poly& a) {
  if (a.is_zero()) throw InvalidArgument("factorization of zero");
  Factorization out;
  out.unit = a.lead();
  Poly rem = a.monic();
  const auto& F = a.field();
  for (int d = 1; 2 * d <= rem.degree(); ++d) {
    std::vector<Code> cand(static_cast<std::size_t>(d) + 1, 0);
    cand[d] = 1;
    do {
      Poly c(F, cand);
      int mult = 0;
      while (true) {
        auto [quot, r] = divmod(rem, c);
        if (!r.is_zero()) break;
        rem = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(PrimeMod::trusted(std::move(c)), mult);
    } while (2 * d <= rem.degree() && next_monic(cand, F->order()));
  }
  if (rem.degree() >= 1) out.factors.emplace_back(PrimeMod::trusted(std::move(rem)), 1);
  return out;
}

std::vector<int> distinct_prime_degrees(const Poly& a) {
  if (a.is_zero()) throw InvalidArgument("prime degrees of zero");
  std::vector<int> degs;
  Poly h = a.monic();
  const auto& F = a.field();
  const Poly t = Poly::t(F);
  const std::uint64_t q = F->order();
  Poly x = t;  // t^(q^d) mod h
  for (int d = 1; 2 * d <= h.degree(); ++d) {
    x = modpow(x, q, h);
    Poly g = gcd(x - t, h);
    if (g.degree() > 0) {
      degs.push_back(d);
      // Strip every power of the degree-d primes.
      while (g.degree() > 0) {
        h = h / g;
        g = gcd(h, g);
      }
      x = x % h;
    }
  }
  if (h.degree() >= 1) degs.push_back(h.degree());
  return degs;
}

BigInt euler_phi(const Poly& Q) {
  if (Q.degree() < 1) throw InvalidArgument("euler_phi needs a nonconstant modulus");
  const std::uint64_t q = Q.F().order();
  BigInt phi = 1;
  for (const auto& [P, k] : factorize(Q).factors) {
    const unsigned d = static_cast<unsigned>(P.degree());
    phi *= ipow(q, d * k) - ipow(q, d * (k - 1));
  }
  return phi;
}

std::vector<Poly> frobenius_decompose(const Poly& a) {
  const Field& F = a.F();
  const std::uint32_t p = F.characteristic();
  std::vector<std::vector<Code>> parts(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto& part = parts[i % p];
    const std::size_t k = i / p;
    if (part.size() <= k) part.resize(k + 1, 0);
    part[k] = F.frobenius_root(a[i]);
  }
  std::vector<Poly> out;
  out.reserve(p);
  for (auto& part : parts) out.emplace_back(a.field(), std::move(part));
  return out;
}

Poly frobenius_recompose(std::span<const Poly> parts) {
  if (parts.empty()) throw InvalidArgument("empty Frobenius decomposition");
  const auto& F = parts.front().field();
  const std::uint32_t p = F->characteristic();
  if (parts.size() != p) throw InvalidArgument("decomposition needs exactly p parts");
  Poly sum(F);
  for (std::size_t j = 0; j < p; ++j) {
    // (sum c_k t^k)^p = sum c_k^p t^(kp)
    std::vector<Code> v;
    const auto& part = parts[j];
    if (part.is_zero()) continue;
    v.assign(j + part.size() * p, 0);
    for (std::size_t k = 0; k < part.size(); ++k) v[j + k * p] = F->pow(part[k], p);
    sum += Poly(F, std::move(v));
  }
  return sum;
}

}  // namespace sqf

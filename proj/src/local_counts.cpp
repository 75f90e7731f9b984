#include "sqf/local_counts.hpp"

#include "sqf/errors.hpp"
#include "sqf/primes.hpp"

namespace sqf {

namespace {

std::uint64_t residue_count(const Field& F, int d, std::uint64_t budget) {
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > budget / F.order()) throw BudgetExceeded("residue scan of q^" + std::to_string(d) + " exceeds the budget");
    n *= F.order();
  }
  if (n > budget) throw BudgetExceeded("residue scan exceeds the budget");
  return n;
}

// Calls fn(b) for every b with deg b < d, in odometer order.
template <class Fn>
void for_each_residue(const FieldPtr& field, int d, std::uint64_t budget, Fn&& fn) {
  const std::uint64_t total = residue_count(*field, d, budget);
  const std::uint32_t q = field->order();
  std::vector<Code> c(static_cast<std::size_t>(d), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    fn(Poly(field, c));
    for (std::size_t k = 0; k < c.size() && ++c[k] == q; ++k) c[k] = 0;
  }
}

BiPoly reduce_coeffs(const BiPoly& f, const Poly& m) {
  std::vector<Poly> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(a % m);
  return BiPoly(f.field(), std::move(c));
}

// Polynomials in X over the residue field K = F_q[t]/(P); entries reduced mod P.
class ResiduePolys {
 public:
  using KX = std::vector<Poly>;

  explicit ResiduePolys(const Poly& P) : P_(P) {}

  void trim(KX& a) const {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }

  KX make_monic(KX a) const {
    const Poly inv = inverse_mod(a.back(), P_);
    for (auto& c : a) c = mulmod(c, inv, P_);
    return a;
  }

  // a mod m, m monic.
  KX mod(KX a, const KX& m) const {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
      const Poly c = a.back();
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i < dm; ++i) a[shift + i] = (a[shift + i] - mulmod(c, m[i], P_));
      a.pop_back();
      trim(a);
    }
    return a;
  }

  KX mulmod_x(const KX& a, const KX& b, const KX& m) const {
    if (a.empty() || b.empty()) return {};
    KX r(a.size() + b.size() - 1, Poly(P_.field()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += mulmod(a[i], b[j], P_);
    return mod(std::move(r), m);
  }

  KX pow_mod(const KX& a, std::uint64_t e, const KX& m) const {
    KX r{Poly::one(P_.field())};
    r = mod(std::move(r), m);
    KX b = a;
    while (e) {
      if (e & 1) r = mulmod_x(r, b, m);
      e >>= 1;
      if (e) b = mulmod_x(b, b, m);
    }
    return r;
  }

  int gcd_degree(KX a, KX b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      KX r = mod(a, make_monic(b));
      a = std::move(b);
      b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
  }

 private:
  Poly P_;
};

}  // namespace

std::uint64_t roots_mod_prime_exhaustive(const BiPoly& f, const PrimeMod& P, std::uint64_t budget) {
  const Poly& m = P.poly();
  const BiPoly fr = reduce_coeffs(f, m);
  std::uint64_t count = 0;
  for_each_residue(f.field(), P.degree(), budget, [&](const Poly& a) {
    if (eval_mod(fr, a, m).is_zero()) ++count;
  });
  return count;
}

std::uint64_t roots_mod_prime_gcd(const BiPoly& f, const PrimeMod& P) {
  const Poly& m = P.poly();
  const FieldPtr& field = f.field();
  ResiduePolys K(m);
  ResiduePolys::KX fbar;
  for (const auto& c : f.coeffs()) fbar.push_back(c % m);
  K.trim(fbar);
  if (fbar.empty()) {
    // f vanishes identically mod P: every residue is a root.
    return static_cast<std::uint64_t>(m.norm());
  }
  if (fbar.size() == 1) return 0;
  fbar = K.make_monic(std::move(fbar));

  const ResiduePolys::KX X{Poly(field), Poly::one(field)};
  ResiduePolys::KX x = K.mod(X, fbar);
  for (int i = 0; i < P.degree(); ++i) x = K.pow_mod(x, field->order(), fbar);
  // x = X^{|P|} mod fbar
  if (x.size() < 2) x.resize(2, Poly(field));
  x[1] -= Poly::one(field);
  return static_cast<std::uint64_t>(K.gcd_degree(fbar, x));
}

std::uint64_t roots_mod_prime(const Admissible& f, const PrimeMod& P) {
  if (P.degree() <= kExhaustiveRootDegree) return roots_mod_prime_exhaustive(f.poly(), P);
  return roots_mod_prime_gcd(f.poly(), P);
}

std::uint64_t roots_mod_prime_square_exhaustive(const BiPoly& f, const PrimeMod& P, std::uint64_t budget) {
  const Poly m = P.poly() * P.poly();
  const BiPoly fr = reduce_coeffs(f, m);
  std::uint64_t count = 0;
  for_each_residue(f.field(), 2 * P.degree(), budget, [&](const Poly& b) {
    if (eval_mod(fr, b, m).is_zero()) ++count;
  });
  return count;
}

std::uint64_t roots_mod_prime_square(const Admissible& f, const PrimeMod& P, std::uint64_t budget) {
  if (P.degree() > f.bad_degree()) return roots_mod_prime(f, P);
  return roots_mod_prime_square_exhaustive(f.poly(), P, budget);
}

Poly hensel_lift(const Admissible& f, const PrimeMod& P, const Poly& c) {
  if (P.degree() <= f.bad_degree())
    throw InvalidArgument("Hensel lift needs deg P > max{deg disc, deg w_f} = " + std::to_string(f.bad_degree()));
  const Poly& p = P.poly();
  if (!eval_mod(f.poly(), c, p).is_zero()) throw InvalidArgument("Hensel lift of a non-root");
  const Poly dfc = eval_mod(f.dx(), c, p);
  if (dfc.is_zero()) throw ContractViolation("df/dx vanishes at a root above the discriminant degree");
  const Poly h = inverse_mod(dfc, p);
  const Poly p2 = p * p;
  const Poly fc = eval_mod(f.poly(), c, p2);
  return (c - mulmod(fc, h, p2)) % p2;
}

std::uint64_t rho_exhaustive(const BiPoly& f, const PrimeMod& P, std::uint64_t budget) {
  const Poly& p = P.poly();
  const Poly m = p * p;
  const BiPoly fr = reduce_coeffs(f, m);
  std::uint64_t count = 0;
  for_each_residue(f.field(), 2 * P.degree(), budget, [&](const Poly& b) {
    if ((b % p).is_zero()) return;
    if (eval_mod(fr, b, m).is_zero()) ++count;
  });
  return count;
}

std::uint64_t rho(const Admissible& f, const PrimeMod& P, std::uint64_t budget) {
  if (P.degree() > f.bad_degree()) {
    // Roots lift one-to-one; the lift of 0 mod P is the only non-unit.
    const bool zero_root = (f.poly()[0] % P.poly()).is_zero();
    return roots_mod_prime(f, P) - (zero_root ? 1 : 0);
  }
  return rho_exhaustive(f.poly(), P, budget);
}

LocalCount local_count(const Admissible& f, const PrimeMod& P, std::uint64_t budget) {
  LocalCount lc{P};
  lc.roots_mod_P = roots_mod_prime(f, P);
  if (P.degree() > f.bad_degree()) {
    lc.hensel_path = true;
    lc.roots_mod_P2 = lc.roots_mod_P;
    const bool zero_root = (f.poly()[0] % P.poly()).is_zero();
    lc.rho = lc.roots_mod_P - (zero_root ? 1 : 0);
  } else {
    lc.roots_mod_P2 = roots_mod_prime_square_exhaustive(f.poly(), P, budget);
    lc.rho = rho_exhaustive(f.poly(), P, budget);
  }
  return lc;
}

std::vector<LocalCount> local_profile(const Admissible& f, int max_deg, std::uint64_t budget) {
  std::vector<LocalCount> out;
  for (const auto& P : primes_up_to(f.poly().field(), max_deg)) out.push_back(local_count(f, P, budget));
  return out;
}

}  // namespace sqf

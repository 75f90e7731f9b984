#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqf/bipoly.hpp"
#include "sqf/defaults.hpp"
#include "sqf/poly.hpp"

namespace sqf {

struct LocalCount {
  PrimeMod prime;
  std::uint64_t roots_mod_P = 0;
  std::uint64_t roots_mod_P2 = 0;
  std::uint64_t rho = 0;      // coprime roots mod P^2
  bool hensel_path = false;   // deg P > bad_degree, counts derived from mod-P roots
};

/// Roots of f in F_q[t]/(P): exhaustive for deg P <= kExhaustiveRootDegree,
/// otherwise deg gcd(f mod P, X^{|P|} - X) over the residue field.
std::uint64_t roots_mod_prime(const Admissible& f, const PrimeMod& P);

/// The two routes of roots_mod_prime, exposed for cross-checking.
std::uint64_t roots_mod_prime_exhaustive(const BiPoly& f, const PrimeMod& P, std::uint64_t budget = kLocalScanBudget);
std::uint64_t roots_mod_prime_gcd(const BiPoly& f, const PrimeMod& P);

/// |{b : deg b < 2 deg P, f(b) = 0 mod P^2}|. Hensel fast path above
/// bad_degree, otherwise an exhaustive scan; BudgetExceeded when
/// q^{2 deg P} > budget.
std::uint64_t roots_mod_prime_square(const Admissible& f, const PrimeMod& P,
                                     std::uint64_t budget = kLocalScanBudget);
std::uint64_t roots_mod_prime_square_exhaustive(const BiPoly& f, const PrimeMod& P,
                                                std::uint64_t budget = kLocalScanBudget);

/// The unique lift d of a root c mod P with f(d) = 0 mod P^2. Requires
/// deg P > bad_degree and f(c) = 0 mod P; InvalidArgument otherwise.
Poly hensel_lift(const Admissible& f, const PrimeMod& P, const Poly& c);

/// rho_f(P^2): roots mod P^2 coprime to P.
std::uint64_t rho(const Admissible& f, const PrimeMod& P, std::uint64_t budget = kLocalScanBudget);
std::uint64_t rho_exhaustive(const BiPoly& f, const PrimeMod& P, std::uint64_t budget = kLocalScanBudget);

LocalCount local_count(const Admissible& f, const PrimeMod& P, std::uint64_t budget = kLocalScanBudget);

/// One record per prime of degree 1..max_deg, ordered by degree then
/// odometer order.
std::vector<LocalCount> local_profile(const Admissible& f, int max_deg, std::uint64_t budget = kLocalScanBudget);

}  // namespace sqf

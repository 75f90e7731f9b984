#include "sqf/field.hpp"

#include <algorithm>
#include <sstream>

#include "sqf/errors.hpp"
#include "sqf/poly.hpp"

namespace sqf {

namespace {

// Dense polynomials over F_p on plain integers, low-to-high, trimmed.
using CoordPoly = std::vector<std::int64_t>;

void trim(CoordPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = ((a % p) + p) % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - k * s1};
  }
  return ((s0 % p) + p) % p;
}

// a mod b, b nonzero.
CoordPoly coord_mod(CoordPoly a, const CoordPoly& b, std::int64_t p) {
  const std::int64_t lead_inv = inv_mod_p(b.back(), p);
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Quotient and remainder of a by b.
std::pair<CoordPoly, CoordPoly> coord_divmod(CoordPoly a, const CoordPoly& b, std::int64_t p) {
  const std::int64_t lead_inv = inv_mod_p(b.back(), p);
  const std::size_t db = b.size() - 1;
  trim(a);
  CoordPoly quot(a.size() > db ? a.size() - db : 0, 0);
  while (a.size() > db) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return {quot, a};
}

CoordPoly coord_mul(const CoordPoly& a, const CoordPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  CoordPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

CoordPoly coord_sub(CoordPoly a, const CoordPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

bool divides(const CoordPoly& d, const CoordPoly& a, std::int64_t p) {
  return coord_mod(a, d, p).empty();
}

// Trial division by every monic polynomial of degree 1..m/2.
bool irreducible_by_search(const CoordPoly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    CoordPoly cand(d + 1, 0);
    cand[d] = 1;
    while (true) {
      if (divides(cand, f, p)) return false;
      std::size_t i = 0;
      while (i < d && ++cand[i] == p) cand[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

bool irreducible_over_prime_field(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  CoordPoly c(f.begin(), f.end());
  if (f.size() - 1 <= 4) return irreducible_by_search(c, p);
  auto fp = Field::make(p);
  std::vector<Code> codes(f.begin(), f.end());
  return is_irreducible(Poly(fp, std::move(codes)));
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("field order exceeds 2^16");
  }

  std::vector<std::uint32_t> mod;
  if (m == 1) {
    if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1))
      throw InvalidArgument("prime field takes no modulus other than a monic linear one");
  } else if (modulus) {
    mod = *modulus;
    while (!mod.empty() && mod.back() == 0) mod.pop_back();
    if (mod.size() != m + 1) throw InvalidArgument("modulus must have degree " + std::to_string(m));
    for (auto c : mod)
      if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    if (mod.back() != 1) throw InvalidArgument("modulus must be monic");
    if (!irreducible_over_prime_field(mod, p)) throw InvalidArgument("modulus is reducible");
  } else {
    // Lexicographic order with the constant term most significant.
    std::vector<std::uint32_t> cand(m + 1, 0);
    cand[m] = 1;
    bool found = false;
    while (!found) {
      if (cand[0] != 0 && irreducible_over_prime_field(cand, p)) {
        found = true;
        break;
      }
      std::int64_t i = static_cast<std::int64_t>(m) - 1;
      while (i >= 0 && ++cand[i] == p) cand[i--] = 0;
      if (i < 0) break;
    }
    if (!found) throw ContractViolation("no irreducible polynomial found");
    mod = cand;
  }
  return FieldPtr(new Field(p, m, std::move(mod)));
}

FieldPtr Field::of_order(std::uint64_t q, std::optional<std::vector<std::uint32_t>> modulus) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  if (q > kMaxOrder) throw InvalidArgument("field order exceeds 2^16");
  auto divs = prime_divisors(q);
  if (divs.size() != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  std::uint32_t p = static_cast<std::uint32_t>(divs[0]);
  std::uint32_t m = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++m;
  return make(p, m, std::move(modulus));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;

  neg_.resize(q_);
  for (Code a = 0; a < q_; ++a) {
    std::vector<std::uint32_t> c = coords(a);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_[a] = from_coords(c);
  }
  if (p_ != 2 && m_ > 1 && q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Code a = 0; a < q_; ++a)
      for (Code b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
  }

  // Primitive element by testing g^((q-1)/r) != 1 for every prime r | q-1.
  const auto ref_pow = [this](Code a, std::uint64_t e) {
    Code r = 1;
    while (e) {
      if (e & 1) r = mul_reference(r, a);
      a = mul_reference(a, a);
      e >>= 1;
    }
    return r;
  };
  Code gen = 1;
  if (q_ > 2) {
    const auto rs = prime_divisors(q_ - 1);
    for (gen = 2; gen < q_; ++gen) {
      bool primitive = std::all_of(rs.begin(), rs.end(),
                                   [&](std::uint64_t r) { return ref_pow(gen, (q_ - 1) / r) != 1; });
      if (primitive) break;
    }
  }
  log_.assign(q_, 0);
  exp_.assign(2 * std::size_t{q_}, 0);
  Code x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = mul_reference(x, gen);
  }

  inv_.assign(q_, 0);
  for (Code a = 1; a < q_; ++a) inv_[a] = inv_euclid(a);
}

Code Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Code>(r < 0 ? r + p_ : r);
}

std::vector<std::uint32_t> Field::coords(Code a) const {
  std::vector<std::uint32_t> c(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Code Field::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > m_) throw InvalidArgument("too many coordinates");
  Code a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw InvalidArgument("coordinate out of range");
    a = a * p_ + c[i];
  }
  return a;
}

Code Field::add_digits(Code a, Code b) const noexcept {
  Code r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    Code d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Code Field::inv(Code a) const {
  if (a == 0) throw InvalidArgument("inversion of zero");
  return inv_[a];
}

Code Field::pow(Code a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

Code Field::mul_reference(Code a, Code b) const {
  const auto ca = coords(a), cb = coords(b);
  CoordPoly x(ca.begin(), ca.end()), y(cb.begin(), cb.end());
  trim(x);
  trim(y);
  CoordPoly r = coord_mul(x, y, p_);
  if (m_ > 1) r = coord_mod(r, CoordPoly(modulus_.begin(), modulus_.end()), p_);
  std::vector<std::uint32_t> out(m_, 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return from_coords(out);
}

// Extended Euclid on (modulus, a) over F_p.
Code Field::inv_euclid(Code a) const {
  if (m_ == 1) return static_cast<Code>(inv_mod_p(a, p_));
  const auto ca = coords(a);
  CoordPoly r0(modulus_.begin(), modulus_.end()), r1(ca.begin(), ca.end());
  trim(r1);
  CoordPoly s0{}, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = coord_divmod(r0, r1, p_);
    CoordPoly s2 = coord_sub(s0, coord_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant.
  const std::int64_t c = inv_mod_p(r0[0], p_);
  std::vector<std::uint32_t> out(m_, 0);
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = static_cast<std::uint32_t>(s0[i] * c % p_);
  return from_coords(out);
}

std::string Field::format(Code a) const {
  if (m_ == 1) return std::to_string(a);
  const auto c = coords(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = m_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << 'u';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && !(*a == *b)) throw InvalidArgument("field descriptor mismatch");
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->order()) throw InvalidArgument("field element code out of range");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->add(a.code_, b.code_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->sub(a.code_, b.code_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.code_, b.code_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.code_, a.field_->inv(b.code_))};
}

}  // namespace sqf

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sqf {

/// Packed element of F_q: coordinates (c_0, ..., c_{m-1}) over F_p encoded as
/// sum c_i p^i. Zero is 0, one is 1.
using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^m, realised as F_p[u]/(modulus(u)).
///
/// Immutable after construction. Element operations work on packed codes so
/// the polynomial layers can store plain integer vectors; multiplication goes
/// through log/antilog tables and inversion through a table filled by the
/// extended Euclidean algorithm on coordinate polynomials.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;

  /// Builds F_{p^m}. Without an explicit modulus (and m > 1) the least monic
  /// irreducible of degree m is chosen, comparing coefficient vectors from the
  /// constant term upward. `modulus` is given low-to-high and includes the
  /// leading 1.
  static FieldPtr make(std::uint32_t p, std::uint32_t m = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Factors q as a prime power and forwards to make().
  static FieldPtr of_order(std::uint64_t q,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Low-to-high coefficients of the defining polynomial; empty when m = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// The class of u (only meaningful when m > 1).
  Code generator() const noexcept { return m_ > 1 ? p_ : 0; }
  Code from_int(std::int64_t v) const noexcept;
  std::vector<std::uint32_t> coords(Code a) const;
  Code from_coords(std::span<const std::uint32_t> coords) const;

  Code add(Code a, Code b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Code neg(Code a) const noexcept { return neg_[a]; }
  Code sub(Code a, Code b) const noexcept { return add(a, neg_[b]); }
  Code mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InvalidArgument on zero.
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const noexcept;
  /// The unique r with r^p = a, i.e. a^(q/p).
  Code frobenius_root(Code a) const noexcept { return pow(a, q_ / p_); }

  /// Schoolbook product of coordinate polynomials reduced by the modulus.
  /// Independent of the log tables; used to build them and to check them.
  Code mul_reference(Code a, Code b) const;

  std::string format(Code a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
  Code add_digits(Code a, Code b) const noexcept;
  Code inv_euclid(Code a) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Code> add_table_;
  std::vector<Code> neg_;
  std::vector<Code> inv_;
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of F_q tied to its descriptor. Value type.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Code code);

  static FieldElement zero(FieldPtr f) { return {std::move(f), 0}; }
  static FieldElement one(FieldPtr f) { return {std::move(f), 1}; }

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  std::vector<std::uint32_t> coords() const { return field_->coords(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement inv() const { return {field_, field_->inv(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
  FieldElement frobenius_root() const { return {field_, field_->frobenius_root(code_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.code_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.code_ == b.code_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
  }

 private:
  FieldPtr field_;
  Code code_;
};

/// Throws InvalidArgument unless both descriptors describe the same field.
void require_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace sqf

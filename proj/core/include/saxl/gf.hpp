#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace saxl::gf {

/// Discrete log of an element; ZERO stands for the zero element.
using Log = std::int32_t;
inline constexpr Log ZERO = -1;

/// GF(p^f) in Zech-logarithm form.
///
/// Elements are powers of a fixed primitive element lambda. The modulus is the
/// lexicographically least monic irreducible of degree f, comparing
/// coefficient tuples (c_0, c_1, ..., c_{f-1}) with c_0 most significant;
/// lambda is the least primitive element under the same tuple order.
/// These are not Conway polynomials: logs differ from other systems.
class Field {
 public:
  /// Requires p prime and p^f <= 2^20.
  Field(std::uint32_t p, std::uint32_t f);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t f() const noexcept { return f_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Order of the multiplicative group.
  std::uint32_t q1() const noexcept { return q_ - 1; }
  bool odd() const noexcept { return p_ != 2; }

  /// Modulus coefficients c_0..c_f (c_f = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// Coefficients c_0..c_{f-1} of lambda^k as a polynomial in x mod the modulus.
  std::vector<std::uint32_t> coefficients(Log a) const;
  /// Log of the element with the given coefficients c_0..c_{f-1}.
  Log from_coefficients(const std::vector<std::uint32_t>& c) const;
  /// Log of the prime-field element n mod p.
  Log from_int(std::int64_t n) const;

  /// log(lambda^k + 1), or ZERO when lambda^k = -1.
  Log zech(Log k) const { return zech_[static_cast<std::size_t>(k)]; }

  Log one() const noexcept { return 0; }
  Log minus_one() const noexcept { return odd() ? static_cast<Log>(q1() / 2) : 0; }

  Log mul(Log a, Log b) const noexcept {
    if (a == ZERO || b == ZERO) return ZERO;
    return static_cast<Log>((static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b)) % q1());
  }
  Log inv(Log a) const;
  Log div(Log a, Log b) const { return mul(a, inv(b)); }
  Log neg(Log a) const noexcept { return mul(a, minus_one()); }
  Log add(Log a, Log b) const noexcept;
  Log sub(Log a, Log b) const noexcept { return add(a, neg(b)); }
  /// a^e for any integer e (e < 0 needs a != 0; 0^0 = 1).
  Log pow(Log a, std::int64_t e) const;
  /// x^(p^k).
  Log frobenius(Log a, std::uint32_t k = 1) const noexcept;

  /// Requires q odd and a != 0.
  bool is_square(Log a) const;
  /// x^(p^k) = x for some 0 < k < f, checked for every such k.
  bool in_proper_subfield(Log a) const noexcept;
  /// Same predicate checking only divisors k of f.
  bool in_proper_subfield_divisors(Log a) const noexcept;
  /// Multiplicative order of a != 0.
  std::uint32_t order(Log a) const;

  std::string to_string(Log a) const;

 private:
  std::uint32_t p_, f_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // lambda^k as packed coefficients
  std::vector<Log> zech_;
};

/// Cached field instance; fields are immutable so sharing is safe.
const Field& field(std::uint32_t p, std::uint32_t f);
/// Field with q elements; q must be a prime power.
const Field& field_of_order(std::uint32_t q);

/// Value-semantics element bound to a field. Comparison orders by log
/// (zero first), which is the project's canonical element order.
class Elem {
 public:
  Elem() = default;
  Elem(const Field& field, Log log) : field_(&field), log_(log) {}
  static Elem zero(const Field& field) { return {field, ZERO}; }
  static Elem one(const Field& field) { return {field, 0}; }
  static Elem from_int(const Field& field, std::int64_t n) { return {field, field.from_int(n)}; }

  const Field& field() const noexcept { return *field_; }
  Log log() const noexcept { return log_; }
  bool is_zero() const noexcept { return log_ == ZERO; }
  bool is_one() const noexcept { return log_ == 0; }

  Elem operator+(const Elem& o) const { return {*field_, field_->add(log_, o.log_)}; }
  Elem operator-(const Elem& o) const { return {*field_, field_->sub(log_, o.log_)}; }
  Elem operator*(const Elem& o) const { return {*field_, field_->mul(log_, o.log_)}; }
  Elem operator/(const Elem& o) const { return {*field_, field_->div(log_, o.log_)}; }
  Elem operator-() const { return {*field_, field_->neg(log_)}; }
  Elem inv() const { return {*field_, field_->inv(log_)}; }
  Elem pow(std::int64_t e) const { return {*field_, field_->pow(log_, e)}; }
  Elem frobenius(std::uint32_t k = 1) const { return {*field_, field_->frobenius(log_, k)}; }

  bool is_square() const { return field_->is_square(log_); }
  bool in_proper_subfield() const { return field_->in_proper_subfield(log_); }

  friend bool operator==(const Elem& a, const Elem& b) noexcept { return a.log_ == b.log_; }
  friend auto operator<=>(const Elem& a, const Elem& b) noexcept { return a.log_ <=> b.log_; }

  std::string to_string() const { return field_->to_string(log_); }

 private:
  const Field* field_ = nullptr;
  Log log_ = ZERO;
};

/// #{x != 0 : x non-square and x in no proper subfield}; q odd.
std::uint64_t count_nonsquare_nonsubfield(const Field& field);

/// Lower bound n / (e^gamma ln ln n + 3 / ln ln n) for phi(n), n >= 3, with
/// gamma = 0.5772156649.
double euler_lower_bound(std::uint64_t n);
/// phi(n) > euler_lower_bound(n), compared with the bound inflated by a
/// relative 2^-40 so float error can only make the check stricter.
bool euler_bound_holds(std::uint64_t n);
/// As above with phi(n) supplied by the caller.
bool euler_bound_holds(std::uint64_t n, std::uint64_t phi);

}  // namespace saxl::gf

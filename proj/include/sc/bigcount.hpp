#ifndef SC_BIGCOUNT_HPP
#define SC_BIGCOUNT_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sc/errors.hpp"

namespace sc {

/// Signed arbitrary-precision integer used for intermediate arithmetic
/// (power-series coefficients, closed forms with negative terms).
using BigInt = mpz_class;

/// Non-negative arbitrary-precision count.
///
/// Every way of producing a BigCount from a signed quantity is checked, so a
/// negative intermediate surfaces as InternalInvariantBroken instead of a
/// silently wrong count.
class BigCount {
 public:
  BigCount() = default;

  template <std::unsigned_integral T>
  BigCount(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::signed_integral T>
  BigCount(T v) : value_(static_cast<long>(v)) {  // NOLINT(google-explicit-constructor)
    check_non_negative();
  }

  explicit BigCount(BigInt v) : value_(std::move(v)) { check_non_negative(); }

  /// Parses a decimal string of digits. Throws DomainError on malformed input.
  static BigCount from_string(std::string_view text);

  const BigInt& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool fits_u64() const noexcept;
  /// Throws CapacityExceeded when the value does not fit.
  std::uint64_t to_u64() const;

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }
  /// Throws InternalInvariantBroken if the result would be negative.
  BigCount& operator-=(const BigCount& o);

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }

  /// Quotient of an exact division; a non-zero remainder is an invariant break.
  BigCount exact_div(const BigCount& divisor) const;

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  void check_non_negative() const;

  BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

BigCount pow2(unsigned exponent);
BigCount factorial(unsigned n);
/// n (n-1) ... (n-m+1); zero when m > n.
BigCount falling_factorial(unsigned n, unsigned m);

}  // namespace sc

#endif  // SC_BIGCOUNT_HPP

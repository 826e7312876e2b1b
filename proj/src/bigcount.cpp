#include "sc/bigcount.hpp"

#include <ostream>

namespace sc {

BigCount BigCount::from_string(std::string_view text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw DomainError("not a non-negative decimal integer: '" + std::string(text) + "'");
  }
  return BigCount(BigInt(std::string(text), 10));
}

bool BigCount::fits_u64() const noexcept {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return value_.fits_ulong_p();
}

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw CapacityExceeded("count " + to_string() + " does not fit in 64 bits");
  return value_.get_ui();
}

BigCount& BigCount::operator-=(const BigCount& o) {
  if (cmp(value_, o.value_) < 0) {
    throw InternalInvariantBroken("negative count: " + to_string() + " - " + o.to_string());
  }
  value_ -= o.value_;
  return *this;
}

BigCount BigCount::exact_div(const BigCount& divisor) const {
  if (divisor.is_zero()) throw InternalInvariantBroken("division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  if (sgn(r) != 0) {
    throw InternalInvariantBroken(to_string() + " is not divisible by " + divisor.to_string());
  }
  return BigCount(std::move(q));
}

void BigCount::check_non_negative() const {
  if (sgn(value_) < 0) throw InternalInvariantBroken("negative count: " + value_.get_str());
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

BigCount pow2(unsigned exponent) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return BigCount(std::move(v));
}

BigCount factorial(unsigned n) {
  BigInt v;
  mpz_fac_ui(v.get_mpz_t(), n);
  return BigCount(std::move(v));
}

BigCount falling_factorial(unsigned n, unsigned m) {
  if (m > n) return BigCount{0u};
  BigCount r{1u};
  for (unsigned i = 0; i < m; ++i) r *= BigCount{n - i};
  return r;
}

}  // namespace sc

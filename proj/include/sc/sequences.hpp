#ifndef SC_SEQUENCES_HPP
#define SC_SEQUENCES_HPP

#include <cstdint>
#include <vector>

#include "sc/bigcount.hpp"
#include "sc/core.hpp"

namespace sc {

/// Counting sequences behind N(k,d), the d-complexity of a word of k
/// pairwise distinct symbols.
///
///   c_{n,d} = c_{n-1,d} + ... + c_{n-d,d},  c_{n,d} = 1 for n <= 0    (d >= 2)
///   b_{k,d} = b_{k-1,d} + ... + b_{k-d,d},  b_{1,d} = 1, b_{k,d} = 0 for k <= 0
///
/// b_{k,d} counts 0/1 strings of length k that start and end with 1 and have
/// no run of d zeros; c_{i,d} = (d-1) a_{i,d} + 1.

enum class SequenceFamily { A, B, C };

class CountSequence {
 public:
  CountSequence(SequenceFamily family, GapParam d, std::vector<BigCount> values)
      : family_(family), d_(d), values_(std::move(values)) {}

  SequenceFamily family() const noexcept { return family_; }
  GapParam d() const noexcept { return d_; }
  /// Largest stored index; values are stored for indices 1..max_index().
  long max_index() const noexcept { return static_cast<long>(values_.size()); }
  const std::vector<BigCount>& values() const noexcept { return values_; }

  /// Term n, applying the family's base case for n <= 0.
  /// Throws DomainError past max_index().
  BigCount at(long n) const;

 private:
  SequenceFamily family_;
  GapParam d_;
  std::vector<BigCount> values_;
};

/// c_{1..n_max,d}. Throws DNotSupported for d < 2.
CountSequence c_sequence(GapParam d, long n_max);
/// b_{1..k_max,d}.
CountSequence b_sequence(GapParam d, long k_max);
/// a_{1..k_max,d} = 1 + a_{i-1,d} + ... + a_{i-d,d}, zero for i <= 0.
CountSequence a_sequence(GapParam d, long k_max);

/// N(k,d) from the c recurrence: (sum_{i<=k} c_{i,d} - k) / (d-1), or
/// k(k+1)/2 when d = 1.
BigCount n_kd(long k, GapParam d);
/// N(k,d) = b_{k,d} + 2 b_{k-1,d} + ... + k b_{1,d}.
BigCount n_kd_via_b(long k, GapParam d);
/// N(k,2) = F_{k+4} - k - 3.
BigCount n_k2_closed(long k);
/// floor(phi^{k+4}/sqrt(5) + 1/2) - k - 3 in double precision. Exact for
/// k <= kBinetExactMaxK.
long long n_k2_binet(long k);
/// floor(3.0652475 * 1.6180339^k + 1/2) - k - 3. The constants are rounded
/// to 8 digits, so this only agrees with n_k2_closed for k <= kShortApproxExactMaxK.
long long n_k2_short_approx(long k);

inline constexpr long kBinetExactMaxK = 40;
inline constexpr long kShortApproxExactMaxK = 24;

/// N(k, k-m) = 2^k - (m-2) 2^{m-1} - 2. Throws DomainError unless
/// m >= 1, k - m >= 1 and k >= 2m - 2.
BigCount n_kd_high_d(long k, long m);

using Polynomial = std::vector<BigInt>;

/// A power series truncated after z^order, with integer coefficients.
class IntSeries {
 public:
  IntSeries(std::vector<BigInt> coefficients, long order);

  /// numerator / denominator as a series, by long division. Every quotient
  /// coefficient must divide exactly by the denominator's constant term;
  /// otherwise InternalInvariantBroken.
  static IntSeries divide(const Polynomial& numerator, const Polynomial& denominator, long order);

  long order() const noexcept { return order_; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of z^n; 0 for n < 0. Throws DomainError past order().
  const BigInt& operator[](long n) const;

  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend bool operator==(const IntSeries& a, const IntSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
  long order_;
};

/// 1 - 2z + z^{d+1}
Polynomial shifted_denominator(GapParam d);

/// F_d(z) = sum_{n>=0} c_{n,d} z^n = (1 + (d-2)z - z^2 - ... - z^d) / (1 - 2z + z^{d+1}).
/// Throws DNotSupported for d < 2.
IntSeries series_F(GapParam d, long order);
/// The same series from the equivalent form
/// (1 + (d-3)z - (d-1)z^2 + z^{d+1}) / ((1-z)(1 - 2z + z^{d+1})).
IntSeries series_F_factored(GapParam d, long order);
/// B_d(z) = z(1-z) / (1 - 2z + z^{d+1}).
IntSeries series_B(GapParam d, long order);
/// N_d(z) = z / ((1-z)(1 - 2z + z^{d+1})).
IntSeries series_N(GapParam d, long order);
/// 1/(1-z)^2 = sum (n+1) z^n; N_d(z) = B_d(z) / (1-z)^2.
IntSeries series_inverse_square(long order);

/// Grid of N(k,d); row k-1 holds d = 1..d_max.
using CountGrid = std::vector<std::vector<BigCount>>;

CountGrid table1(long k_max, long d_max);

}  // namespace sc

#endif  // SC_SEQUENCES_HPP

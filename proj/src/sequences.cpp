#include "sc/sequences.hpp"

#include <cmath>
#include <string>

namespace sc {

namespace {

void require_positive(long v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

void require_d_at_least_2(GapParam d) {
  if (d.value() < 2) throw DNotSupported("construction divides by d-1; needs d >= 2");
}

// Terms 1..n of x_i = base + x_{i-1} + ... + x_{i-d} with x_i = `before` for i <= 0.
std::vector<BigCount> d_step(std::size_t d, long n, const BigCount& first, const BigCount& before,
                             const BigCount& base) {
  std::vector<BigCount> v;
  v.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    if (i == 1) {
      v.push_back(first);
      continue;
    }
    BigCount x = base;
    for (std::size_t back = 1; back <= d; ++back) {
      const long j = i - static_cast<long>(back);
      x += j >= 1 ? v[static_cast<std::size_t>(j - 1)] : before;
    }
    v.push_back(std::move(x));
  }
  return v;
}

BigCount triangular(long k) { return BigCount{static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k + 1) / 2}; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

BigCount CountSequence::at(long n) const {
  if (n <= 0) {
    switch (family_) {
      case SequenceFamily::C: return BigCount{1u};
      case SequenceFamily::A:
      case SequenceFamily::B: return BigCount{0u};
    }
  }
  if (n > max_index()) throw DomainError("index " + std::to_string(n) + " beyond stored terms");
  return values_[static_cast<std::size_t>(n - 1)];
}

CountSequence c_sequence(GapParam d, long n_max) {
  require_d_at_least_2(d);
  require_positive(n_max, "n_max");
  // c_1 = c_0 + ... + c_{1-d} = d falls out of the recurrence
  auto v = d_step(d.value(), n_max, BigCount{d.value()}, BigCount{1u}, BigCount{0u});
  return CountSequence(SequenceFamily::C, d, std::move(v));
}

CountSequence b_sequence(GapParam d, long k_max) {
  require_positive(k_max, "k_max");
  auto v = d_step(d.value(), k_max, BigCount{1u}, BigCount{0u}, BigCount{0u});
  return CountSequence(SequenceFamily::B, d, std::move(v));
}

CountSequence a_sequence(GapParam d, long k_max) {
  require_positive(k_max, "k_max");
  auto v = d_step(d.value(), k_max, BigCount{1u}, BigCount{0u}, BigCount{1u});
  return CountSequence(SequenceFamily::A, d, std::move(v));
}

BigCount n_kd(long k, GapParam d) {
  require_positive(k, "k");
  if (d.value() == 1) return triangular(k);
  const auto c = c_sequence(d, k);
  BigCount sum{0u};
  for (const auto& v : c.values()) sum += v;
  return (sum - BigCount{static_cast<std::uint64_t>(k)}).exact_div(BigCount{d.value() - 1});
}

BigCount n_kd_via_b(long k, GapParam d) {
  require_positive(k, "k");
  const auto b = b_sequence(d, k);
  BigCount sum{0u};
  for (long i = 1; i <= k; ++i) sum += BigCount{static_cast<std::uint64_t>(k - i + 1)} * b.at(i);
  return sum;
}

BigCount n_k2_closed(long k) {
  require_positive(k, "k");
  BigInt fib;
  mpz_fib_ui(fib.get_mpz_t(), static_cast<unsigned long>(k + 4));
  return BigCount(std::move(fib)) - BigCount{static_cast<std::uint64_t>(k + 3)};
}

long long n_k2_binet(long k) {
  require_positive(k, "k");
  const double sqrt5 = std::sqrt(5.0);
  const double phi = (1.0 + sqrt5) / 2.0;
  return static_cast<long long>(std::floor(std::pow(phi, static_cast<double>(k + 4)) / sqrt5 + 0.5)) - k - 3;
}

long long n_k2_short_approx(long k) {
  require_positive(k, "k");
  return static_cast<long long>(std::floor(3.0652475 * std::pow(1.6180339, static_cast<double>(k)) + 0.5)) - k - 3;
}

BigCount n_kd_high_d(long k, long m) {
  if (m < 1 || k - m < 1 || k < 2 * m - 2) {
    throw DomainError("N(k,k-m) closed form needs m >= 1, k-m >= 1, k >= 2m-2; got k=" + std::to_string(k) +
                      " m=" + std::to_string(m));
  }
  BigInt v = pow2(static_cast<unsigned>(k)).value();
  BigInt correction = pow2(static_cast<unsigned>(m - 1)).value();
  correction *= m - 2;
  v -= correction;
  v -= 2;
  return BigCount(std::move(v));
}

IntSeries::IntSeries(std::vector<BigInt> coefficients, long order) : coeffs_(std::move(coefficients)), order_(order) {
  if (order_ < 0) throw DomainError("series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order_ + 1), BigInt(0));
}

IntSeries IntSeries::divide(const Polynomial& numerator, const Polynomial& denominator, long order) {
  if (denominator.empty() || sgn(denominator[0]) == 0) {
    throw InternalInvariantBroken("series division needs a non-zero constant term");
  }
  if (order < 0) throw DomainError("series order must be >= 0");
  std::vector<BigInt> q(static_cast<std::size_t>(order + 1), BigInt(0));
  for (std::size_t n = 0; n < q.size(); ++n) {
    BigInt r = n < numerator.size() ? numerator[n] : BigInt(0);
    for (std::size_t j = 1; j < denominator.size() && j <= n; ++j) r -= denominator[j] * q[n - j];
    BigInt rem;
    mpz_tdiv_qr(q[n].get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), denominator[0].get_mpz_t());
    if (sgn(rem) != 0) {
      throw InternalInvariantBroken("inexact series division at order " + std::to_string(n));
    }
  }
  return IntSeries(std::move(q), order);
}

const BigInt& IntSeries::operator[](long n) const {
  static const BigInt zero(0);
  if (n < 0) return zero;
  if (n > order_) throw DomainError("coefficient " + std::to_string(n) + " beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const long order = std::min(a.order_, b.order_);
  std::vector<BigInt> r(static_cast<std::size_t>(order + 1), BigInt(0));
  for (long i = 0; i <= order; ++i) {
    for (long j = 0; i + j <= order; ++j) r[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return IntSeries(std::move(r), order);
}

Polynomial shifted_denominator(GapParam d) {
  Polynomial p(d.value() + 2, BigInt(0));
  p[0] = 1;
  p[1] = -2;
  p[d.value() + 1] += 1;
  return p;
}

IntSeries series_F(GapParam d, long order) {
  require_d_at_least_2(d);
  const std::size_t dd = d.value();
  Polynomial num(dd + 1, BigInt(0));
  num[0] = 1;
  num[1] = static_cast<long>(dd) - 2;
  for (std::size_t j = 2; j <= dd; ++j) num[j] -= 1;
  return IntSeries::divide(num, shifted_denominator(d), order);
}

IntSeries series_F_factored(GapParam d, long order) {
  require_d_at_least_2(d);
  const std::size_t dd = d.value();
  Polynomial num(dd + 2, BigInt(0));
  num[0] = 1;
  num[1] += static_cast<long>(dd) - 3;
  num[2] -= static_cast<long>(dd) - 1;
  num[dd + 1] += 1;
  return IntSeries::divide(num, Polynomial{1, -1} * shifted_denominator(d), order);
}

IntSeries series_B(GapParam d, long order) {
  return IntSeries::divide(Polynomial{0, 1, -1}, shifted_denominator(d), order);
}

IntSeries series_N(GapParam d, long order) {
  return IntSeries::divide(Polynomial{0, 1}, Polynomial{1, -1} * shifted_denominator(d), order);
}

IntSeries series_inverse_square(long order) { return IntSeries::divide(Polynomial{1}, Polynomial{1, -2, 1}, order); }

CountGrid table1(long k_max, long d_max) {
  require_positive(k_max, "k_max");
  require_positive(d_max, "d_max");
  CountGrid grid(static_cast<std::size_t>(k_max));
  for (long k = 1; k <= k_max; ++k) {
    auto& row = grid[static_cast<std::size_t>(k - 1)];
    row.reserve(static_cast<std::size_t>(d_max));
    for (long d = 1; d <= d_max; ++d) row.push_back(n_kd(k, GapParam(d)));
  }
  return grid;
}

}  // namespace sc

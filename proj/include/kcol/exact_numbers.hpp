// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic: GMP-backed rationals, elements of real quadratic fields
// Q(sqrt d), canonical algebraic event times and quadratic root finding.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kcol {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Largest trial divisor used when splitting square factors off a radicand.
inline constexpr unsigned long kDefaultTrialBound = 1UL << 12;

/// Canonical "num/den" form, e.g. "-3/4" or "7/1".
std::string to_string(const Rational& value);

/// Parses "num/den" or a bare integer; the result is canonical.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

/// n = root^2 * radicand with as much of the square part removed as could be
/// found. `certified` means radicand is provably squarefree.
struct SquareSplit {
    BigInt root;
    BigInt radicand;
    bool certified = false;
};

/// Requires n > 0. Trial division by primes up to `trial_bound`, followed by
/// perfect-square tests on the cofactor. A cofactor below bound^3 that is not a
/// perfect square has at most two prime factors above the bound, both simple,
/// so it is certified squarefree; larger cofactors are left uncertified.
SquareSplit split_square_factor(const BigInt& n,
                                unsigned long trial_bound = kDefaultTrialBound);

/// Thrown when a caller demands a certified squarefree radicand and the trial
/// division bound is too small to provide one.
class UncertifiedRadicand : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// a + b*sqrt(d). `d` is only meaningful when b != 0; rational values carry
/// d = 0. Arithmetic between two irrational values requires equal radicands.
class QuadraticNumber {
  public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational value);  // NOLINT(google-explicit-constructor)
    QuadraticNumber(long value) : QuadraticNumber(Rational(value)) {}  // NOLINT
    QuadraticNumber(Rational rational_part, Rational radical_coeff, BigInt radicand);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const BigInt& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    /// Exact sign in {-1, 0, +1}.
    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    double to_double() const;

    QuadraticNumber operator-() const;
    QuadraticNumber& operator+=(const QuadraticNumber& rhs);
    QuadraticNumber& operator-=(const QuadraticNumber& rhs);
    QuadraticNumber& operator*=(const QuadraticNumber& rhs);

    friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) {
        return lhs += rhs;
    }
    friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) {
        return lhs -= rhs;
    }
    friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) {
        return lhs *= rhs;
    }
    /// Structural equality. Values in a common field compare exactly.
    friend bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs);

    std::string to_string() const;

  private:
    const BigInt& common_radicand(const QuadraticNumber& rhs) const;

    Rational a_;
    Rational b_;
    BigInt d_;
};

/// An exact event time: a rational, or (p + q*sqrt(d))/r with d >= 2 free of
/// the square factors trial division can find, q != 0, r > 0, gcd(p,q,r) = 1.
class AlgebraicTime {
  public:
    enum class Kind { Rational, Quadratic };

    AlgebraicTime() = default;
    AlgebraicTime(Rational value);  // NOLINT(google-explicit-constructor)
    AlgebraicTime(long value) : AlgebraicTime(Rational(value)) {}  // NOLINT

    /// Canonicalizes: pulls square factors out of d, collapses to a rational
    /// when q = 0 or d is a perfect square, normalizes the sign of r and
    /// divides out gcd(p, q, r). Requires r != 0 and d >= 0.
    static AlgebraicTime quadratic(BigInt p, BigInt q, BigInt d, BigInt r,
                                   unsigned long trial_bound = kDefaultTrialBound);
    /// Requires a value whose radical part, if any, has a positive radicand.
    static AlgebraicTime from_number(const QuadraticNumber& value);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    /// Rational value; only valid for Kind::Rational.
    const Rational& value() const;
    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& d() const { return d_; }
    const BigInt& r() const { return r_; }
    /// False when the radicand could not be proven squarefree.
    bool certified() const { return certified_; }

    QuadraticNumber as_number() const;
    /// Non-authoritative float approximation.
    double approx() const;
    /// "p/q" for rationals, "(p+q*sqrt(d))/r" for quadratic times.
    std::string to_string() const;

    /// Field-by-field identity of canonical forms.
    friend bool operator==(const AlgebraicTime& lhs, const AlgebraicTime& rhs);

  private:
    Kind kind_ = Kind::Rational;
    Rational value_;
    BigInt p_, q_, d_, r_;
    bool certified_ = true;
};

/// Exact total order on the represented real numbers. Equality is decided
/// symbolically; strict order by refining dyadic enclosures from 64 fractional
/// bits, doubling each round.
std::strong_ordering compare_times(const AlgebraicTime& x, const AlgebraicTime& y);

/// True iff x and y denote the same real number.
bool same_time(const AlgebraicTime& x, const AlgebraicTime& y);

/// Strict weak ordering adapter for sorting and ordered containers.
struct TimeLess {
    bool operator()(const AlgebraicTime& x, const AlgebraicTime& y) const {
        return compare_times(x, y) < 0;
    }
};

struct RootReport {
    std::vector<AlgebraicTime> roots;  // ascending, each root once
    bool identically_zero = false;
    bool double_root = false;
};

struct SolveOptions {
    unsigned long trial_bound = kDefaultTrialBound;
    /// Throw UncertifiedRadicand instead of returning an uncertified root.
    bool require_certified = false;
};

/// Real roots of c2*t^2 + c1*t + c0.
RootReport solve_quadratic(const Rational& c2, const Rational& c1, const Rational& c0,
                           const SolveOptions& options = {});

struct Evaluation {
    int sign = 0;
    QuadraticNumber value;
};

/// Exact value of sum(coeffs[i] * t^i) (coefficients in ascending degree).
Evaluation evaluate_at_time(std::span<const Rational> coeffs, const AlgebraicTime& t);

}  // namespace kcol

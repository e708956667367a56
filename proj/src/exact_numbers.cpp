// SPDX-License-Identifier: Apache-2.0
#include "kcol/exact_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace kcol {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<unsigned long> sieve_primes(unsigned long bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

const std::vector<unsigned long>& default_primes() {
    static const std::vector<unsigned long> primes = sieve_primes(kDefaultTrialBound);
    return primes;
}

// Integer interval [lo, hi] enclosing value * 2^bits.
struct Enclosure {
    BigInt lo, hi;
};

Enclosure enclose(const AlgebraicTime& t, unsigned long bits) {
    Enclosure out;
    if (t.is_rational()) {
        BigInt scaled = t.value().get_num();
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
        mpz_fdiv_q(out.lo.get_mpz_t(), scaled.get_mpz_t(), t.value().get_den_mpz_t());
        mpz_cdiv_q(out.hi.get_mpz_t(), scaled.get_mpz_t(), t.value().get_den_mpz_t());
        return out;
    }
    // |q| sqrt(d) 2^bits lies strictly between s and s + 1.
    BigInt radicand = t.q() * t.q() * t.d();
    mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), 2 * bits);
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
    BigInt base = t.p();
    mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), bits);
    BigInt num_lo, num_hi;
    if (t.q() > 0) {
        num_lo = base + s;
        num_hi = base + s + 1;
    } else {
        num_lo = base - s - 1;
        num_hi = base - s;
    }
    mpz_fdiv_q(out.lo.get_mpz_t(), num_lo.get_mpz_t(), t.r().get_mpz_t());
    mpz_cdiv_q(out.hi.get_mpz_t(), num_hi.get_mpz_t(), t.r().get_mpz_t());
    return out;
}

}  // namespace

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
        num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    BigInt n{std::string(num_digits)};
    if (num.front() == '-') n = -n;
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational out(n, d);
    out.canonicalize();
    return out;
}

double to_double(const Rational& value) { return value.get_d(); }

SquareSplit split_square_factor(const BigInt& n, unsigned long trial_bound) {
    if (n <= 0) throw std::invalid_argument("split_square_factor requires a positive integer");
    SquareSplit out{1, 1, false};
    BigInt rest = n;
    const std::vector<unsigned long> custom =
        trial_bound > kDefaultTrialBound ? sieve_primes(trial_bound) : std::vector<unsigned long>{};
    const auto& primes = trial_bound > kDefaultTrialBound ? custom : default_primes();

    for (unsigned long p : primes) {
        if (p > trial_bound) break;
        if (rest == 1) break;
        if (BigInt(p) * p > rest) {
            // What is left is 1 or a prime.
            out.radicand *= rest;
            out.certified = true;
            return out;
        }
        unsigned exponent = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++exponent;
        }
        for (unsigned i = 0; i < exponent / 2; ++i) out.root *= p;
        if (exponent % 2 == 1) out.radicand *= p;
    }

    if (rest == 1) {
        out.certified = true;
    } else if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
        BigInt s;
        mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
        out.root *= s;
        out.certified = true;
    } else {
        // Every remaining prime factor exceeds the bound.
        BigInt cube = BigInt(trial_bound + 1) * (trial_bound + 1) * (trial_bound + 1);
        out.certified = rest < cube;
        out.radicand *= rest;
    }
    return out;
}

// ---------------------------------------------------------------------------
// QuadraticNumber

QuadraticNumber::QuadraticNumber(Rational value) : a_(std::move(value)) {}

QuadraticNumber::QuadraticNumber(Rational rational_part, Rational radical_coeff, BigInt radicand)
    : a_(std::move(rational_part)), b_(std::move(radical_coeff)), d_(std::move(radicand)) {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ <= 0) throw std::invalid_argument("quadratic radicand must be positive");
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

int QuadraticNumber::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 against b^2 d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    const int c = cmp(lhs, rhs);
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

double QuadraticNumber::to_double() const {
    if (b_ == 0) return a_.get_d();
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

const BigInt& QuadraticNumber::common_radicand(const QuadraticNumber& rhs) const {
    if (rhs.b_ == 0) return d_;
    if (b_ == 0) return rhs.d_;
    if (d_ != rhs.d_) throw std::domain_error("arithmetic across different quadratic fields");
    return d_;
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
    BigInt d = common_radicand(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    d_ = b_ == 0 ? BigInt(0) : std::move(d);
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
    BigInt d = common_radicand(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    d_ = b_ == 0 ? BigInt(0) : std::move(d);
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
    BigInt d = common_radicand(rhs);
    Rational a = a_ * rhs.a_;
    if (b_ != 0 && rhs.b_ != 0) a += b_ * rhs.b_ * Rational(d);
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = b_ == 0 ? BigInt(0) : std::move(d);
    return *this;
}

bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && (lhs.b_ == 0 || lhs.d_ == rhs.d_);
}

std::string QuadraticNumber::to_string() const {
    if (b_ == 0) return kcol::to_string(a_);
    return kcol::to_string(a_) + " + " + kcol::to_string(b_) + "*sqrt(" + d_.get_str() + ")";
}

// ---------------------------------------------------------------------------
// AlgebraicTime

AlgebraicTime::AlgebraicTime(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    p_ = value_.get_num();
    q_ = 0;
    d_ = 0;
    r_ = value_.get_den();
}

AlgebraicTime AlgebraicTime::quadratic(BigInt p, BigInt q, BigInt d, BigInt r, unsigned long trial_bound) {
    if (r == 0) throw std::invalid_argument("AlgebraicTime denominator must be nonzero");
    if (d < 0) throw std::invalid_argument("AlgebraicTime radicand must be nonnegative");
    if (q == 0 || d == 0) return AlgebraicTime(Rational(p, r));
    SquareSplit split = split_square_factor(d, trial_bound);
    q *= split.root;
    if (split.radicand == 1) return AlgebraicTime(Rational(p + q, r));
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
    AlgebraicTime out;
    out.kind_ = Kind::Quadratic;
    out.p_ = p / g;
    out.q_ = q / g;
    out.d_ = std::move(split.radicand);
    out.r_ = r / g;
    out.certified_ = split.certified;
    return out;
}

AlgebraicTime AlgebraicTime::from_number(const QuadraticNumber& value) {
    if (value.is_rational()) return AlgebraicTime(value.rational_part());
    BigInt r;
    mpz_lcm(r.get_mpz_t(), value.rational_part().get_den_mpz_t(), value.radical_coeff().get_den_mpz_t());
    BigInt p = value.rational_part().get_num() * (r / value.rational_part().get_den());
    BigInt q = value.radical_coeff().get_num() * (r / value.radical_coeff().get_den());
    return quadratic(std::move(p), std::move(q), value.radicand(), std::move(r));
}

const Rational& AlgebraicTime::value() const {
    if (kind_ != Kind::Rational) throw std::logic_error("AlgebraicTime::value() on a quadratic time");
    return value_;
}

QuadraticNumber AlgebraicTime::as_number() const {
    if (is_rational()) return QuadraticNumber(value_);
    return QuadraticNumber(Rational(p_, r_), Rational(q_, r_), d_);
}

double AlgebraicTime::approx() const {
    if (is_rational()) return value_.get_d();
    constexpr unsigned long bits = 64;
    Enclosure e = enclose(*this, bits);
    Rational mid(e.lo + e.hi, BigInt(2));
    mpz_mul_2exp(mid.get_den_mpz_t(), mid.get_den_mpz_t(), bits);
    mid.canonicalize();
    return mid.get_d();
}

std::string AlgebraicTime::to_string() const {
    if (is_rational()) return kcol::to_string(value_);
    std::string out = "(" + p_.get_str();
    out += q_ < 0 ? "-" : "+";
    BigInt mag = abs(q_);
    if (mag != 1) out += mag.get_str() + "*";
    out += "sqrt(" + d_.get_str() + "))/" + r_.get_str();
    return out;
}

bool operator==(const AlgebraicTime& lhs, const AlgebraicTime& rhs) {
    if (lhs.kind_ != rhs.kind_) return false;
    if (lhs.is_rational()) return lhs.value_ == rhs.value_;
    return lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_ && lhs.d_ == rhs.d_ && lhs.r_ == rhs.r_;
}

bool same_time(const AlgebraicTime& x, const AlgebraicTime& y) {
    if (x == y) return true;
    if (x.is_rational() || y.is_rational()) return false;  // sqrt(d) is irrational
    // (p1 + q1 sqrt d1)/r1 = (p2 + q2 sqrt d2)/r2 iff the rational parts agree
    // and the radical parts have equal squares and equal signs.
    if (sgn(x.q()) != sgn(y.q())) return false;
    if (Rational(x.p(), x.r()) != Rational(y.p(), y.r())) return false;
    return Rational(x.q() * x.q() * x.d(), x.r() * x.r()) == Rational(y.q() * y.q() * y.d(), y.r() * y.r());
}

std::strong_ordering compare_times(const AlgebraicTime& x, const AlgebraicTime& y) {
    if (x.is_rational() && y.is_rational()) {
        const int c = cmp(x.value(), y.value());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    if (same_time(x, y)) return std::strong_ordering::equal;
    for (unsigned long bits = 64;; bits *= 2) {
        Enclosure ex = enclose(x, bits);
        Enclosure ey = enclose(y, bits);
        if (ex.hi < ey.lo) return std::strong_ordering::less;
        if (ey.hi < ex.lo) return std::strong_ordering::greater;
    }
}

RootReport solve_quadratic(const Rational& c2, const Rational& c1, const Rational& c0,
                           const SolveOptions& options) {
    RootReport report;
    // Clear denominators and common factors: A t^2 + B t + C.
    BigInt lcm = c2.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c1.get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c0.get_den_mpz_t());
    BigInt a = c2.get_num() * (lcm / c2.get_den());
    BigInt b = c1.get_num() * (lcm / c1.get_den());
    BigInt c = c0.get_num() * (lcm / c0.get_den());
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) {
        report.identically_zero = true;
        return report;
    }
    a /= g;
    b /= g;
    c /= g;

    if (a == 0) {
        if (b != 0) report.roots.emplace_back(Rational(-c, b));
        return report;
    }
    const BigInt disc = b * b - 4 * a * c;
    if (disc < 0) return report;
    if (disc == 0) {
        report.double_root = true;
        report.roots.emplace_back(Rational(-b, 2 * a));
        return report;
    }
    SquareSplit split = split_square_factor(disc, options.trial_bound);
    if (options.require_certified && !split.certified) {
        throw UncertifiedRadicand("cannot certify squarefree part of discriminant " + disc.get_str());
    }
    if (split.radicand == 1) {
        Rational lo(-b - split.root, 2 * a);
        Rational hi(-b + split.root, 2 * a);
        lo.canonicalize();
        hi.canonicalize();
        if (lo > hi) std::swap(lo, hi);
        report.roots.emplace_back(std::move(lo));
        report.roots.emplace_back(std::move(hi));
        return report;
    }
    // split_square_factor is deterministic, so feeding the reduced radicand back
    // through the canonicalizer does not change it.
    AlgebraicTime minus = AlgebraicTime::quadratic(-b, -split.root, split.radicand, 2 * a, options.trial_bound);
    AlgebraicTime plus = AlgebraicTime::quadratic(-b, split.root, split.radicand, 2 * a, options.trial_bound);
    if (a > 0) {
        report.roots.push_back(std::move(minus));
        report.roots.push_back(std::move(plus));
    } else {
        report.roots.push_back(std::move(plus));
        report.roots.push_back(std::move(minus));
    }
    return report;
}

Evaluation evaluate_at_time(std::span<const Rational> coeffs, const AlgebraicTime& t) {
    const QuadraticNumber x = t.as_number();
    QuadraticNumber acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += QuadraticNumber(*it);
    }
    Evaluation out;
    out.sign = acc.sign();
    out.value = std::move(acc);
    return out;
}

}  // namespace kcol

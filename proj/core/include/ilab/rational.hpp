#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ilab/errors.hpp"

namespace ilab {

/// Arbitrary-precision integer. All exact counting and coefficient work
/// happens on this type; machine integers are used only for indices and
/// multiplicities that are provably small.
using Int = mpz_class;

std::size_t hash_int(const Int& z);
std::size_t hash_combine(std::size_t seed, std::size_t value);

inline Int to_int(long long v) { return Int(static_cast<signed long>(v)); }

/// Exact rational number.
///
/// Invariants: always reduced (gcd(|num|, den) == 1) and den > 0. Zero is
/// 0/1. Every constructor and operator preserves this, so two Rats are equal
/// iff their components are componentwise equal. Arithmetic never rounds.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(long long n) : q_(Int(std::to_string(n))) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (sgn(den) == 0) throw invalid_input("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    /// Parses "num", "num/den" or a plain decimal integer string.
    static Rat parse(std::string_view text);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw invalid_input("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

    /// Three-way compare, exact.
    int cmp_to(const Rat& o) const { return cmp(q_, o.q_); }

    Rat reciprocal() const {
        if (is_zero()) throw invalid_input("Rat: reciprocal of zero");
        return Rat(den(), num());
    }

    Rat squared() const { return *this * *this; }

    /// Largest integer <= value.
    Int floor() const;

    /// "3", "-1/2" — integers render without a denominator.
    std::string str() const;

    std::size_t hash() const;

    double to_double() const { return q_.get_d(); }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Binomial coefficient C(n, r) as an exact integer; zero when n < r or n < 0.
Int binom(const Int& n, unsigned r);
Int binom(long long n, unsigned r);

struct RatHash {
    std::size_t operator()(const Rat& r) const { return r.hash(); }
};

} // namespace ilab

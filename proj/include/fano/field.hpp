#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fano {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero in coefficient field") {}
};

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Element of the prime field F_p, canonical representative in [0, p).
/// The modulus travels with the element; mixing moduli is an error.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::uint32_t p) : p_(p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint32_t>(r);
    }

    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        if (s >= p_) s -= p_;
        return make(static_cast<std::uint32_t>(s), p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + p_ - o.v_;
        if (s >= p_) s -= p_;
        return make(static_cast<std::uint32_t>(s), p_);
    }
    Fp operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const {
        check(o);
        return make(static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_), p_);
    }
    Fp inverse() const {
        if (v_ == 0) throw DivisionByZero();
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        if (x0 < 0) x0 += p_;
        return make(static_cast<std::uint32_t>(x0), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

  private:
    static Fp make(std::uint32_t v, std::uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw FieldMismatch("mixed moduli " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (cpp_rational maintains that canonical form).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw DivisionByZero();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        v_ = BigRational(n, d);
    }
    explicit Rational(BigRational v) : v_(std::move(v)) {}

    static Rational zero(std::uint32_t = 0) { return Rational(0); }
    static Rational one(std::uint32_t = 0) { return Rational(1); }

    const BigRational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator-() const { return Rational(-v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(1 / v_);
    }
    Rational operator/(const Rational& o) const { return *this * o.inverse(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::string str() const { return v_.str(); }

  private:
    BigRational v_;
};

}  // namespace fano

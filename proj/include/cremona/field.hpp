#pragma once
#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "error.hpp"

namespace cremona {

/* A field is described by its characteristic: 0 for Q, an odd-or-2 prime
 * < 2^31 for F_p.  Elements carry the characteristic so that values from
 * different fields cannot be combined silently. */
struct FieldConfig {
    long long characteristic = 32003;

    bool is_rational() const { return characteristic == 0; }
};

inline bool is_prime_u64(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void validate_field(const FieldConfig& f) {
    if (f.characteristic == 0) return;
    require(f.characteristic > 1 && f.characteristic < (1LL << 31) && is_prime_u64(f.characteristic),
            ErrKind::OutOfRange, "field characteristic must be 0 or a prime < 2^31");
}

/* Prime-field element.  Value is kept canonical in [0, p). */
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long value, long long p) : p_(p) {
        require(p > 0, ErrKind::IncompatibleField, "F_p element needs a positive modulus");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    static Fp from_int(long long n, long long characteristic) { return Fp(n, characteristic); }
    static Fp zero(long long characteristic) { return Fp(0, characteristic); }
    static Fp one(long long characteristic) { return Fp(1, characteristic); }
    static constexpr long long default_characteristic = 32003;

    long long value() const { return v_; }
    long long characteristic() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return v_ == 0 ? *this : Fp(p_ - v_, p_); }

    Fp operator+(const Fp& o) const { return Fp(fix(o), (v_ + o.v_) % p_, p_); }
    Fp operator-(const Fp& o) const { return Fp(fix(o), (v_ - o.v_ + p_) % p_, p_); }
    Fp operator*(const Fp& o) const { return Fp(fix(o), mulmod(v_, o.v_, p_), p_); }
    Fp operator/(const Fp& o) const {
        require(!o.is_zero(), ErrKind::DivisionByZero, "division by zero in F_p");
        return *this * o.inv();
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inv() const {
        require(v_ != 0, ErrKind::DivisionByZero, "inverse of zero in F_p");
        // extended Euclid
        long long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b) {
            long long q = a / b;
            long long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }

    Fp pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        Fp r = one(p_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const { return std::to_string(v_); }

    /* true if the canonical representative exceeds p/2; used only for printing
     * small negatives like -1 instead of 32002 */
    bool prints_negative() const { return 2 * v_ > p_; }
    long long signed_value() const { return prints_negative() ? v_ - p_ : v_; }

private:
    struct checked {};
    Fp(checked, long long v, long long p) : v_(v), p_(p) {}
    checked fix(const Fp& o) const {
        require(p_ == o.p_, ErrKind::IncompatibleField,
                "mixed characteristics " + std::to_string(p_) + " and " + std::to_string(o.p_));
        return {};
    }
    static long long mulmod(long long a, long long b, long long p) {
        return (long long)((__int128)a * b % p);
    }

    long long v_;
    long long p_;
};

/* Rational element over GMP.  Always kept canonical by mpq. */
class Rat {
public:
    Rat() : v_(0) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rat(long long num, long long den) : v_(mpz_class((long)num), mpz_class((long)den)) {
        require(den != 0, ErrKind::DivisionByZero, "zero denominator");
        v_.canonicalize();
    }

    static Rat from_int(long long n, long long /*characteristic*/ = 0) { return Rat(n, 1); }
    static Rat zero(long long = 0) { return Rat(0, 1); }
    static Rat one(long long = 0) { return Rat(1, 1); }

    long long characteristic() const { return 0; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        require(!o.is_zero(), ErrKind::DivisionByZero, "division by zero in Q");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    Rat inv() const {
        require(!is_zero(), ErrKind::DivisionByZero, "inverse of zero in Q");
        return Rat(mpq_class(1 / v_));
    }

    Rat pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        Rat r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const { return v_.get_str(); }
    bool prints_negative() const { return sgn(v_) < 0; }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

private:
    mpq_class v_;
};

} // namespace cremona

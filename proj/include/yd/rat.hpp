#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace yd {

/// Exact rational number. Thin wrapper over GMP's mpq_class that keeps the
/// value canonical (lowest terms, positive denominator) on every path.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    static Rat from_string(const std::string& s) {
        Rat r;
        r.v_ = mpq_class(s);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        Rat r;
        r.v_ = 1 / v_;
        return r;
    }

    /// Integer power, negative exponents allowed for nonzero values.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        Rat base = e > 0 ? *this : inv();
        unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
        Rat acc(1);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Binomial coefficient C(a, k) for arbitrary (possibly negative) rational a
/// and k >= 0, via the falling-factorial product.
inline Rat binomial(const Rat& a, long k) {
    if (k < 0) return Rat(0);
    Rat acc(1);
    for (long j = 0; j < k; ++j) acc *= (a - Rat(j)) / Rat(j + 1);
    return acc;
}

} // namespace yd

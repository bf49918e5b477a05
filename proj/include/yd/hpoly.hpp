#pragma once

#include "yd/rat.hpp"
#include "yd/quad.hpp"

#include <climits>
#include <vector>
#include <algorithm>
#include <string>

namespace yd {

/// Polynomial in the formal deformation parameter hbar over the scalar
/// ring K (Rat, or Quad for the sqrt(2)-extension suites).
///
/// The `trunc` field records up to which hbar-degree the coefficients are
/// exactly known: degrees > trunc have been discarded and are unknown.
/// NO_TRUNC means the value is exact at every degree. All arithmetic
/// propagates the weakest knowledge (min of the operands).
template <class K>
class HPolyT {
public:
    static constexpr int NO_TRUNC = INT_MAX;

    HPolyT() = default;
    HPolyT(K c0) { c_.push_back(std::move(c0)); normalize(); }
    HPolyT(long n) : HPolyT(K(Rat(n))) {}

    /// c * hbar^deg
    static HPolyT term(K c, int deg) {
        HPolyT p;
        p.c_.assign(deg + 1, K(Rat(0)));
        p.c_[deg] = std::move(c);
        p.normalize();
        return p;
    }
    static HPolyT hbar() { return term(K(Rat(1)), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int trunc() const { return trunc_; }
    void set_trunc(int t) {
        trunc_ = t;
        normalize();
    }

    const K coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return K(Rat(0));
        return c_[d];
    }

    HPolyT operator-() const {
        HPolyT r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    HPolyT& operator+=(const HPolyT& o) {
        trunc_ = std::min(trunc_, o.trunc_);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(Rat(0)));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    HPolyT& operator-=(const HPolyT& o) {
        trunc_ = std::min(trunc_, o.trunc_);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(Rat(0)));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend HPolyT operator+(HPolyT a, const HPolyT& b) { a += b; return a; }
    friend HPolyT operator-(HPolyT a, const HPolyT& b) { a -= b; return a; }

    friend HPolyT operator*(const HPolyT& a, const HPolyT& b) {
        HPolyT r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        if (a.is_zero() || b.is_zero()) return r;
        size_t n = a.c_.size() + b.c_.size() - 1;
        r.c_.assign(n, K(Rat(0)));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }
    HPolyT& operator*=(const HPolyT& o) { *this = *this * o; return *this; }

    HPolyT& scale(const K& k) {
        for (auto& x : c_) x = x * k;
        normalize();
        return *this;
    }

    friend bool operator==(const HPolyT& a, const HPolyT& b) {
        // Structural equality: same known coefficients and same knowledge.
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

    /// Compare as far as both sides are known; returns the compared depth
    /// through `depth_out` (NO_TRUNC if both exact).
    bool equal_known(const HPolyT& o, int* depth_out = nullptr) const {
        int d = std::min(trunc_, o.trunc_);
        if (depth_out) *depth_out = d;
        int top = std::max(degree(), o.degree());
        for (int i = 0; i <= std::min(top, d == NO_TRUNC ? top : d); ++i)
            if (coeff(i) != o.coeff(i)) return false;
        return true;
    }

    /// Exact division by hbar; the constant term must vanish.
    HPolyT div_hbar() const {
        if (!c_.empty() && !c_[0].is_zero())
            throw std::domain_error("HPoly: not divisible by hbar");
        HPolyT r;
        if (trunc_ != NO_TRUNC) r.trunc_ = trunc_ - 1;
        if (c_.size() > 1) r.c_.assign(c_.begin() + 1, c_.end());
        r.normalize();
        return r;
    }

    /// Evaluate at a numeric value of hbar. Only valid for exact values.
    K eval(const Rat& h) const {
        K acc{Rat(0)};
        Rat p(1);
        for (size_t i = 0; i < c_.size(); ++i) {
            K t = c_[i];
            t = t * K(p);
            acc += t;
            p *= h;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].str() + ")";
            if (i == 1) s += "*h";
            else if (i > 1) s += "*h^" + std::to_string(i);
        }
        return s;
    }

private:
    void normalize() {
        if (trunc_ != NO_TRUNC) {
            if (trunc_ < 0) {
                c_.clear();
                return;
            }
            if (static_cast<int>(c_.size()) > trunc_ + 1) c_.resize(trunc_ + 1);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
    int trunc_ = NO_TRUNC;
};

using HPoly = HPolyT<Rat>;
using QHPoly = HPolyT<Quad>;

inline HPoly hp_rat(const Rat& r) { return HPoly(Rat(r)); }
inline HPoly hp_hbar_mult(const Rat& r, int deg = 1) { return HPoly::term(r, deg); }

} // namespace yd

#pragma once

#include "yd/rat.hpp"

namespace yd {

/// Element a + b*sqrt(2) of the quadratic extension Q(sqrt 2).
/// sqrt(2) stays formal; it is never evaluated numerically. The low-rank
/// image-table checks require every final identity to be sqrt(2)-free,
/// which is asserted by inspecting the b component.
struct Quad {
    Rat a, b;

    Quad() = default;
    Quad(Rat x) : a(std::move(x)), b(0) {}
    Quad(long x) : a(x), b(0) {}
    Quad(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

    static Quad sqrt2() { return Quad(Rat(0), Rat(1)); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    Quad operator-() const { return Quad(-a, -b); }
    Quad& operator+=(const Quad& o) { a += o.a; b += o.b; return *this; }
    Quad& operator-=(const Quad& o) { a -= o.a; b -= o.b; return *this; }
    Quad& operator*=(const Quad& o) {
        Rat na = a * o.a + Rat(2) * b * o.b;
        Rat nb = a * o.b + b * o.a;
        a = na;
        b = nb;
        return *this;
    }

    friend Quad operator+(Quad x, const Quad& y) { x += y; return x; }
    friend Quad operator-(Quad x, const Quad& y) { x -= y; return x; }
    friend Quad operator*(Quad x, const Quad& y) { x *= y; return x; }
    friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    Quad inv() const {
        Rat norm = a * a - Rat(2) * b * b;
        if (norm.is_zero()) throw std::domain_error("Quad: inverse of zero");
        return Quad(a / norm, -b / norm);
    }

    std::string str() const {
        if (b.is_zero()) return a.str();
        return a.str() + "+" + b.str() + "*r2";
    }
};

} // namespace yd

#pragma once

#include "yd/series.hpp"

namespace yd {

struct NonUnitConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inverse of an hbar-polynomial whose constant scalar is nonzero.
/// Exact when the polynomial is a pure constant; otherwise a finite Neumann
/// sum up to `cap` (the result is capped there, which the trunc field records
/// unless the input is nilpotent-free... callers pass the suite truncation).
template <class K>
HPolyT<K> hpoly_invert(const HPolyT<K>& p, int cap) {
    K c0 = p.coeff(0);
    if (c0.is_zero()) throw NonUnitConstantTerm("hbar-polynomial with zero constant term");
    K c0i = c0.inv();
    HPolyT<K> result(c0i);
    if (p.degree() <= 0) {
        if (p.trunc() != HPolyT<K>::NO_TRUNC) result.set_trunc(p.trunc());
        return result;
    }
    int limit = std::min(cap, p.trunc());
    HPolyT<K> y = p;
    y.scale(c0i);
    y -= HPolyT<K>(K(Rat(1)));       // y = p/c0 - 1, valuation >= 1
    HPolyT<K> pw(K(Rat(1))), acc(K(Rat(1)));
    for (int j = 1; j <= limit; ++j) {
        pw = pw * y;
        if (pw.is_zero()) break;
        if (j % 2 == 1) acc -= pw;
        else acc += pw;
    }
    acc.scale(c0i);
    if (limit < INT_MAX) acc.set_trunc(limit);
    return acc;
}

enum class Dir { Plus, Minus };  // Plus: powers of u^-1; Minus: powers of u

/// Infer the expansion direction of a one-variable series from its knowledge
/// intervals and support.
template <class C>
Dir series_direction(const SeriesT<C>& s) {
    bool lo_trunc = !s.known[0].unbounded_lo();
    bool hi_trunc = !s.known[0].unbounded_hi();
    if (lo_trunc && hi_trunc) throw WindowMismatch("two-sided series has no direction");
    if (lo_trunc) return Dir::Plus;
    if (hi_trunc) return Dir::Minus;
    auto sp = s.support(0);
    if (sp && sp->lo < 0) return Dir::Plus;
    return Dir::Minus;
}

/// Inverse of a one-variable series with invertible constant term, to `depth`
/// orders in the expansion direction.
template <class C>
SeriesT<C> series_invert(const SeriesT<C>& s, long depth, int hbar_cap = HPoly::NO_TRUNC) {
    if (s.arity != 1) throw std::logic_error("series_invert: arity 1 expected");
    Dir d = series_direction(s);
    int step = d == Dir::Plus ? -1 : 1;
    C c0 = s.coeff(ExpKey(0));
    std::vector<C> r(depth + 1);
    C c0i = hpoly_invert(c0, hbar_cap);
    r[0] = c0i;
    for (long k = 1; k <= depth; ++k) {
        C acc{};
        for (long j = 1; j <= k; ++j) {
            C sj = s.coeff(ExpKey(static_cast<int>(step * j)));
            if (sj.is_zero() || r[k - j].is_zero()) continue;
            acc += sj * r[k - j];
        }
        r[k] = -(c0i * acc);
    }
    SeriesT<C> out(1);
    out.known[0] = d == Dir::Plus ? Interval{-depth, EXP_INF} : Interval{-EXP_INF, depth};
    for (long k = 0; k <= depth; ++k) out.add_term(ExpKey(static_cast<int>(step * k)), r[k]);
    return out;
}

/// Square root of a one-variable scalar series with constant term 1.
template <class K>
SeriesT<HPolyT<K>> series_sqrt(const SeriesT<HPolyT<K>>& s, long depth) {
    using P = HPolyT<K>;
    if (s.arity != 1) throw std::logic_error("series_sqrt: arity 1 expected");
    P c0 = s.coeff(ExpKey(0));
    if (!(c0 == P(K(Rat(1)))))
        throw NonUnitConstantTerm("series_sqrt: constant term must be 1");
    Dir d = series_direction(s);
    int step = d == Dir::Plus ? -1 : 1;
    std::vector<P> r(depth + 1);
    r[0] = P(K(Rat(1)));
    P half(K(Rat(1, 2)));
    for (long k = 1; k <= depth; ++k) {
        P acc = s.coeff(ExpKey(static_cast<int>(step * k)));
        for (long j = 1; j < k; ++j) acc -= r[j] * r[k - j];
        r[k] = acc * half;
    }
    SeriesT<P> out(1);
    out.known[0] = d == Dir::Plus ? Interval{-depth, EXP_INF} : Interval{-EXP_INF, depth};
    for (long k = 0; k <= depth; ++k) out.add_term(ExpKey(static_cast<int>(step * k)), r[k]);
    return out;
}

/// Series expansion of 1/(u - a) in powers of u^{-1}: sum_{r>=1} a^{r-1} u^{-r}.
inline Laurent expand_inv_u_minus_a_plus(const Rat& a, long depth) {
    Laurent s(1);
    s.known[0] = Interval{-depth, EXP_INF};
    Rat p(1);
    for (long r = 1; r <= depth; ++r) {
        s.add_term(ExpKey(static_cast<int>(-r)), HPoly(Rat(p)));
        p *= a;
    }
    return s;
}

/// Series expansion of 1/(u - a) in powers of u: -sum_{r>=0} u^r / a^{r+1}.
inline Laurent expand_inv_u_minus_a_minus(const Rat& a, long depth) {
    if (a.is_zero()) throw std::domain_error("1/u has no expansion in positive powers");
    Laurent s(1);
    s.known[0] = Interval{-EXP_INF, depth};
    Rat c = -a.inv();
    for (long r = 0; r <= depth; ++r) {
        s.add_term(ExpKey(static_cast<int>(r)), HPoly(Rat(c)));
        c /= a;
    }
    return s;
}

/// Solve f(u-h) f(u)^2 f(u+h) = (u+h)/(u-h) for f = 1 + sum_{k>=1} f_k u^-k,
/// order by order to u^-D.  Each f_k comes out hbar-homogeneous of degree k;
/// the cleared residual f(u-h)f(u)^2 f(u+h)(u-h) - (u+h) vanishes at all
/// orders above u^-D.
inline Laurent solve_typeB_f(long D) {
    int cap = static_cast<int>(D) + 2;
    Laurent f = Laurent::constant(1, HPoly(Rat(1)));
    auto residual = [&](const Laurent& g) {
        Laurent um = Laurent::monomial(1, ExpKey(1), HPoly(Rat(1)));  // u
        Laurent h = Laurent::constant(1, HPoly::hbar());
        Laurent lhs = g.shift_var(0, Rat(-1), cap) * g * g * g.shift_var(0, Rat(1), cap) * (um - h);
        return lhs - (um + h);
    };
    for (long k = 1; k <= D; ++k) {
        Laurent res = residual(f);
        HPoly c = res.coeff(ExpKey(static_cast<int>(1 - k)));
        if (c.is_zero()) continue;
        HPoly fk = c;
        fk.scale(Rat(-1, 4));
        f.add_term(ExpKey(static_cast<int>(-k)), fk);
    }
    return f;
}

} // namespace yd

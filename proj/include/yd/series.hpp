#pragma once

#include "yd/hpoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace yd {

/// Thrown when a comparison or product would leave the region where the
/// operands are exactly known.
struct WindowMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long EXP_INF = LONG_MAX / 4;

/// Inclusive exponent interval, possibly unbounded on either side.
struct Interval {
    long lo = -EXP_INF;
    long hi = EXP_INF;

    static Interval all() { return {}; }
    static Interval box(long l, long h) { return {l, h}; }
    bool unbounded_lo() const { return lo <= -EXP_INF; }
    bool unbounded_hi() const { return hi >= EXP_INF; }
    bool contains(long e) const { return e >= lo && e <= hi; }
    bool empty() const { return lo > hi; }
    Interval intersect(const Interval& o) const {
        return {std::max(lo, o.lo), std::min(hi, o.hi)};
    }
    bool contains_iv(const Interval& o) const { return lo <= o.lo && hi >= o.hi; }
    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Exponent tuple of a Laurent term; unused variable slots stay zero.
struct ExpKey {
    std::array<int, 3> e{0, 0, 0};
    ExpKey() = default;
    ExpKey(int a) { e = {a, 0, 0}; }
    ExpKey(int a, int b) { e = {a, b, 0}; }
    ExpKey(int a, int b, int c) { e = {a, b, c}; }
    int operator[](int i) const { return e[i]; }
    int& operator[](int i) { return e[i]; }
    friend bool operator<(const ExpKey& a, const ExpKey& b) { return a.e < b.e; }
    friend bool operator==(const ExpKey& a, const ExpKey& b) { return a.e == b.e; }
    ExpKey operator+(const ExpKey& o) const {
        ExpKey r;
        for (int i = 0; i < 3; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    std::string str(int arity) const {
        std::string s = "(";
        for (int i = 0; i < arity; ++i) s += (i ? "," : "") + std::to_string(e[i]);
        return s + ")";
    }
};

/// Rectangular window of exponents used by comparisons.
struct WindowBox {
    int arity = 1;
    std::array<Interval, 3> iv{Interval::all(), Interval::all(), Interval::all()};

    static WindowBox sym(int arity, long radius) {
        WindowBox w;
        w.arity = arity;
        for (int i = 0; i < arity; ++i) w.iv[i] = Interval::box(-radius, radius);
        return w;
    }
    static WindowBox of(std::initializer_list<Interval> ivs) {
        WindowBox w;
        w.arity = static_cast<int>(ivs.size());
        int i = 0;
        for (auto& v : ivs) w.iv[i++] = v;
        return w;
    }
    bool contains(const ExpKey& k) const {
        for (int i = 0; i < arity; ++i)
            if (!iv[i].contains(k[i])) return false;
        return true;
    }
};

// Customization points so the series machinery works for scalar (HPoly)
// and operator-valued coefficients alike.
template <class K>
void scale_rat(HPolyT<K>& p, const Rat& r) { p.scale(K(r)); }
template <class K>
HPolyT<K> mul_hterm(const HPolyT<K>& p, const Rat& c, int deg) {
    return p * HPolyT<K>::term(K(c), deg);
}
template <class K>
void cap_hbar(HPolyT<K>& p, int cap) {
    if (cap < p.trunc()) p.set_trunc(cap);
}

/// Windowed Laurent polynomial in 1..3 formal variables with coefficients in
/// the ring C.  `known[v]` is the interval of exponents of variable v inside
/// which the stored coefficients are the exact ones; outside it the true
/// series may have further, unrecorded terms.  Every operation propagates
/// these intervals so a comparison can never silently consume a truncated
/// coefficient.
template <class C>
class SeriesT {
public:
    int arity = 1;
    std::array<Interval, 3> known{Interval::all(), Interval::all(), Interval::all()};
    std::map<ExpKey, C> terms;

    SeriesT() = default;
    explicit SeriesT(int ar) : arity(ar) {}

    static SeriesT zero(int arity) { return SeriesT(arity); }
    static SeriesT monomial(int arity, const ExpKey& k, C c) {
        SeriesT s(arity);
        if (!c.is_zero()) s.terms.emplace(k, std::move(c));
        return s;
    }
    static SeriesT constant(int arity, C c) { return monomial(arity, ExpKey(), std::move(c)); }

    bool known_everywhere() const {
        for (int i = 0; i < arity; ++i)
            if (!known[i].unbounded_lo() || !known[i].unbounded_hi()) return false;
        return true;
    }
    bool is_zero_known() const { return terms.empty(); }

    void add_term(const ExpKey& k, C c) {
        for (int i = 0; i < arity; ++i)
            if (!known[i].contains(k[i])) return; // outside knowledge: drop
        if (c.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) terms.emplace(k, std::move(c));
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    C coeff(const ExpKey& k) const {
        auto it = terms.find(k);
        return it == terms.end() ? C{} : it->second;
    }

    /// Stored support interval per variable (nullopt when no terms).
    std::optional<Interval> support(int v) const {
        if (terms.empty()) return std::nullopt;
        long lo = EXP_INF, hi = -EXP_INF;
        for (auto& [k, c] : terms) {
            lo = std::min<long>(lo, k[v]);
            hi = std::max<long>(hi, k[v]);
        }
        return Interval{lo, hi};
    }

    void restrict_known(int v, Interval iv) {
        known[v] = known[v].intersect(iv);
        prune();
    }

    SeriesT operator-() const {
        SeriesT r = *this;
        for (auto& [k, c] : r.terms) c = -c;
        return r;
    }

    friend SeriesT operator+(const SeriesT& a, const SeriesT& b) { return a.combine(b, false); }
    friend SeriesT operator-(const SeriesT& a, const SeriesT& b) { return a.combine(b, true); }
    SeriesT& operator+=(const SeriesT& o) { *this = *this + o; return *this; }
    SeriesT& operator-=(const SeriesT& o) { *this = *this - o; return *this; }

    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        return mul_general(a, b, [](const C& x, const C& y) { return x * y; });
    }
    SeriesT& operator*=(const SeriesT& o) { *this = *this * o; return *this; }

    SeriesT scaled(const C& c) const {
        SeriesT r(arity);
        r.known = known;
        for (auto& [k, x] : terms) {
            C y = x * c;
            if (!y.is_zero()) r.terms.emplace(k, std::move(y));
        }
        return r;
    }
    SeriesT scaled_rat(const Rat& q) const {
        SeriesT r = *this;
        for (auto& [k, x] : r.terms) scale_rat(x, q);
        r.prune();
        return r;
    }

    /// Substitute x_v -> x_v + a*hbar.  Exact; where the series is truncated
    /// above, affected coefficients get their hbar-knowledge capped instead
    /// of being dropped.  `cap` bounds the hbar-degree of the expansion and
    /// must be finite when negative exponents occur.
    SeriesT shift_var(int v, const Rat& a, int cap) const {
        if (a.is_zero()) return *this;
        SeriesT r(arity);
        r.known = known;
        bool has_negative = false;
        for (auto& [k, c] : terms)
            if (k[v] < 0) has_negative = true;
        if (has_negative && cap == HPoly::NO_TRUNC)
            throw std::logic_error("shift_var: negative exponents need a finite hbar cap");

        for (auto& [k, c] : terms) {
            long e = k[v];
            long jmax = (e >= 0) ? std::min<long>(e, cap) : cap;
            for (long j = 0; j <= jmax; ++j) {
                Rat coef = binomial(Rat(e), j) * a.pow(j);
                if (coef.is_zero()) continue;
                C add = mul_hterm(c, coef, static_cast<int>(j));
                ExpKey nk = k;
                nk[v] = static_cast<int>(e - j);
                r.add_term(nk, std::move(add));
            }
        }
        // Sources beyond the known interval (or beyond the cap) only affect
        // hbar-degrees above (known.hi - E) resp. cap.
        bool capped = has_negative || !known[v].unbounded_hi();
        if (capped) {
            long hi_known = known[v].hi;
            for (auto& [k, c] : r.terms) {
                long t = cap;
                if (!known[v].unbounded_hi()) t = std::min<long>(t, hi_known - k[v]);
                cap_hbar(c, t < 0 ? -1 : static_cast<int>(t));
            }
        }
        r.prune();
        return r;
    }

    /// Substitute x_v -> lambda * x_v (coefficient at exponent e scales by
    /// lambda^e).
    SeriesT rescale_var(int v, const Rat& lambda) const {
        SeriesT r(arity);
        r.known = known;
        for (auto& [k, c] : terms) {
            C y = c;
            scale_rat(y, lambda.pow(k[v]));
            if (!y.is_zero()) r.terms.emplace(k, std::move(y));
        }
        return r;
    }

    /// View this 1-variable series as an `new_arity`-variable series with the
    /// variable placed in `slot`.
    SeriesT retag(int new_arity, int slot) const {
        if (arity != 1) throw std::logic_error("retag: arity != 1");
        SeriesT r(new_arity);
        r.known[slot] = known[0];
        for (auto& [k, c] : terms) {
            ExpKey nk;
            nk[slot] = k[0];
            r.terms.emplace(nk, c);
        }
        return r;
    }

    bool window_known(const WindowBox& w) const {
        for (int i = 0; i < arity; ++i)
            if (!known[i].contains_iv(w.iv[i])) return false;
        return true;
    }

    void prune() {
        for (auto it = terms.begin(); it != terms.end();) {
            bool ok = !it->second.is_zero();
            for (int i = 0; ok && i < arity; ++i) ok = known[i].contains(it->first[i]);
            it = ok ? std::next(it) : terms.erase(it);
        }
    }

    std::string str() const {
        std::string s;
        for (auto& [k, c] : terms) {
            if (!s.empty()) s += "  +  ";
            s += "[" + k.str(arity) + "] " + c.str();
        }
        return s.empty() ? "0" : s;
    }

private:
    SeriesT combine(const SeriesT& o, bool sub) const {
        if (arity != o.arity) throw std::logic_error("series arity mismatch");
        SeriesT r(arity);
        for (int i = 0; i < arity; ++i) r.known[i] = known[i].intersect(o.known[i]);
        for (auto& [k, c] : terms) r.add_term(k, c);
        for (auto& [k, c] : o.terms) r.add_term(k, sub ? -c : c);
        return r;
    }
};

/// Product with per-variable soundness propagation.  The unknown tails of a
/// factor contaminate one end of the result; the surviving known interval is
/// computed from the known bounds and the stored support of the other factor.
/// A product whose truncation directions clash in one variable is known
/// nowhere and is rejected.
template <class A, class B, class F>
auto mul_general(const SeriesT<A>& a, const SeriesT<B>& b, F&& f)
    -> SeriesT<decltype(f(std::declval<const A&>(), std::declval<const B&>()))> {
    using R = decltype(f(std::declval<const A&>(), std::declval<const B&>()));
    if (a.arity != b.arity) throw std::logic_error("series arity mismatch");
    SeriesT<R> r(a.arity);

    if (a.terms.empty() && a.known_everywhere()) return r;
    if (b.terms.empty() && b.known_everywhere()) return r;

    for (int v = 0; v < a.arity; ++v) {
        const Interval& ka = a.known[v];
        const Interval& kb = b.known[v];
        auto sa = a.support(v), sb = b.support(v);
        bool alo = !ka.unbounded_lo(), ahi = !ka.unbounded_hi();
        bool blo = !kb.unbounded_lo(), bhi = !kb.unbounded_hi();

        if ((alo && bhi) || (ahi && blo))
            throw WindowMismatch("product of oppositely truncated series in one variable");

        long lo = -EXP_INF, hi = EXP_INF;
        auto bump_lo = [&](long top) { lo = std::max(lo, top + 1); };
        auto bump_hi = [&](long bot) { hi = std::min(hi, bot - 1); };
        if (alo && sb) bump_lo(ka.lo - 1 + sb->hi);
        if (blo && sa) bump_lo(kb.lo - 1 + sa->hi);
        if (alo && blo) bump_lo(ka.lo - 1 + kb.lo - 1);
        if (ahi && sb) bump_hi(ka.hi + 1 + sb->lo);
        if (bhi && sa) bump_hi(kb.hi + 1 + sa->lo);
        if (ahi && bhi) bump_hi(ka.hi + 1 + kb.hi + 1);
        r.known[v] = Interval{lo, hi};
    }

    for (auto& [ka, ca] : a.terms)
        for (auto& [kb, cb] : b.terms) {
            R prod = f(ca, cb);
            r.add_term(ka + kb, std::move(prod));
        }
    return r;
}

using Laurent = SeriesT<HPoly>;
using QLaurent = SeriesT<QHPoly>;

/// One entry of a window_compare failure list.
template <class C>
struct SeriesDiff {
    ExpKey at;
    C lhs, rhs;
};

/// Coefficientwise comparison on a window.  Errors out if the window leaves
/// the region where both operands are exactly known; otherwise returns the
/// differing exponent tuples (empty list = agreement).  Coefficients are
/// compared through the hbar-depth both sides know.
template <class C>
std::vector<SeriesDiff<C>> window_compare(const SeriesT<C>& a, const SeriesT<C>& b,
                                          const WindowBox& w) {
    if (!a.window_known(w) || !b.window_known(w))
        throw WindowMismatch("window exceeds soundness margin of an operand");
    std::vector<SeriesDiff<C>> diffs;
    std::map<ExpKey, char> keys;
    for (auto& [k, c] : a.terms)
        if (w.contains(k)) keys[k] = 1;
    for (auto& [k, c] : b.terms)
        if (w.contains(k)) keys[k] = 1;
    for (auto& [k, _] : keys) {
        C ca = a.coeff(k), cb = b.coeff(k);
        if (!coeffs_agree(ca, cb)) diffs.push_back({k, ca, cb});
    }
    return diffs;
}

template <class K>
bool coeffs_agree(const HPolyT<K>& a, const HPolyT<K>& b) {
    return a.equal_known(b);
}

} // namespace yd

#pragma once

#include "yd/series.hpp"
#include "yd/typedata.hpp"

#include <map>
#include <utility>
#include <vector>

namespace yd {

struct PositionOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct NotSingleFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact sparse linear operator with entries in the scalar ring S
/// (an hbar-polynomial ring).  Rows/columns are 0-based flattened
/// mixed-radix tuples with factor 1 as the most significant digit.
template <class S>
class SparseOpT {
public:
    long rows = 0, cols = 0;
    std::map<std::pair<long, long>, S> entries;

    SparseOpT() = default;
    SparseOpT(long r, long c) : rows(r), cols(c) {}

    static SparseOpT identity(long d) {
        SparseOpT op(d, d);
        for (long i = 0; i < d; ++i) op.entries[{i, i}] = S(1);
        return op;
    }
    static SparseOpT zero(long r, long c) { return SparseOpT(r, c); }
    static SparseOpT unit(long d, long i, long j, S v = S(1)) {
        SparseOpT op(d, d);
        if (!v.is_zero()) op.entries[{i, j}] = std::move(v);
        return op;
    }

    bool is_zero() const { return entries.empty(); }
    bool unsized() const { return rows == 0 && cols == 0; }

    S entry(long i, long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? S() : it->second;
    }
    void set(long i, long j, S v) {
        if (v.is_zero()) entries.erase({i, j});
        else entries[{i, j}] = std::move(v);
    }
    void add(long i, long j, const S& v) {
        if (v.is_zero()) return;
        auto it = entries.find({i, j});
        if (it == entries.end()) entries.emplace(std::make_pair(i, j), v);
        else {
            it->second += v;
            if (it->second.is_zero()) entries.erase(it);
        }
    }

    SparseOpT operator-() const {
        SparseOpT r = *this;
        for (auto& [k, v] : r.entries) v = -v;
        return r;
    }
    SparseOpT& operator+=(const SparseOpT& o) {
        if (unsized()) { *this = o; return *this; }
        if (o.unsized()) return *this;
        for (auto& [k, v] : o.entries) add(k.first, k.second, v);
        return *this;
    }
    SparseOpT& operator-=(const SparseOpT& o) {
        if (unsized()) { *this = -o; return *this; }
        if (o.unsized()) return *this;
        for (auto& [k, v] : o.entries) add(k.first, k.second, -v);
        return *this;
    }
    friend SparseOpT operator+(SparseOpT a, const SparseOpT& b) { a += b; return a; }
    friend SparseOpT operator-(SparseOpT a, const SparseOpT& b) { a -= b; return a; }

    /// Matrix product (composition).
    friend SparseOpT operator*(const SparseOpT& a, const SparseOpT& b) {
        if (a.unsized() || b.unsized()) return SparseOpT();
        if (a.cols != b.rows) throw std::logic_error("SparseOp: dimension mismatch in product");
        SparseOpT r(a.rows, b.cols);
        for (auto& [ka, va] : a.entries) {
            auto it = b.entries.lower_bound({ka.second, LONG_MIN});
            for (; it != b.entries.end() && it->first.first == ka.second; ++it) {
                S prod = va * it->second;
                r.add(ka.first, it->first.second, prod);
            }
        }
        return r;
    }

    SparseOpT scaled(const S& s) const {
        SparseOpT r(rows, cols);
        for (auto& [k, v] : entries) {
            S w = v * s;
            if (!w.is_zero()) r.entries.emplace(k, std::move(w));
        }
        return r;
    }

    friend bool operator==(const SparseOpT& a, const SparseOpT& b) {
        if (a.unsized() || b.unsized()) return a.is_zero() && b.is_zero();
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }

    S trace() const {
        S t{};
        for (auto& [k, v] : entries)
            if (k.first == k.second) t += v;
        return t;
    }

    /// If this operator equals c * Id for some scalar c, return c.
    std::optional<S> as_scalar() const {
        if (rows != cols) return std::nullopt;
        S c{};
        bool have = false;
        for (auto& [k, v] : entries) {
            if (k.first != k.second) return std::nullopt;
            if (!have) {
                c = v;
                have = true;
            } else if (!(v == c))
                return std::nullopt;
        }
        if (!have) return S();  // zero operator
        // every diagonal position must carry the same value
        if (static_cast<long>(entries.size()) != rows && !c.is_zero()) return std::nullopt;
        return c;
    }

    std::string str() const {
        std::string s;
        for (auto& [k, v] : entries) {
            if (!s.empty()) s += ", ";
            s += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " + v.str();
        }
        return s.empty() ? "0" : ("{" + s + "}");
    }
};

// --- customization points used by SeriesT ---------------------------------
template <class S>
void scale_rat(SparseOpT<S>& op, const Rat& r) {
    for (auto& [k, v] : op.entries) scale_rat(v, r);
    for (auto it = op.entries.begin(); it != op.entries.end();)
        it = it->second.is_zero() ? op.entries.erase(it) : std::next(it);
}
template <class S>
SparseOpT<S> mul_hterm(const SparseOpT<S>& op, const Rat& c, int deg) {
    SparseOpT<S> r(op.rows, op.cols);
    for (auto& [k, v] : op.entries) {
        S w = mul_hterm(v, c, deg);
        if (!w.is_zero()) r.entries.emplace(k, std::move(w));
    }
    return r;
}
template <class S>
void cap_hbar(SparseOpT<S>& op, int cap) {
    for (auto& [k, v] : op.entries) cap_hbar(v, cap);
    for (auto it = op.entries.begin(); it != op.entries.end();)
        it = it->second.is_zero() ? op.entries.erase(it) : std::next(it);
}
template <class S>
bool coeffs_agree(const SparseOpT<S>& a, const SparseOpT<S>& b) {
    if (a.unsized() || b.unsized()) return a.is_zero() == b.is_zero();
    if (a.rows != b.rows || a.cols != b.cols) return false;
    std::map<std::pair<long, long>, char> keys;
    for (auto& [k, v] : a.entries) keys[k] = 1;
    for (auto& [k, v] : b.entries) keys[k] = 1;
    for (auto& [k, _] : keys)
        if (!coeffs_agree(a.entry(k.first, k.second), b.entry(k.first, k.second))) return false;
    return true;
}

/// Kronecker product; factor 1 is the most significant digit.
template <class S>
SparseOpT<S> kron(const SparseOpT<S>& a, const SparseOpT<S>& b) {
    SparseOpT<S> r(a.rows * b.rows, a.cols * b.cols);
    for (auto& [ka, va] : a.entries)
        for (auto& [kb, vb] : b.entries) {
            S prod = va * vb;
            r.add(ka.first * b.rows + kb.first, ka.second * b.cols + kb.second, prod);
        }
    return r;
}

/// Embed a single-factor operator at position `pos` (1-based) of a tensor
/// product with the given factor dimensions.
template <class S>
SparseOpT<S> embed_one(const SparseOpT<S>& x, int pos, const std::vector<long>& dims) {
    int m = static_cast<int>(dims.size());
    if (pos < 1 || pos > m) throw PositionOutOfRange("embed position");
    if (x.rows != dims[pos - 1] || x.cols != dims[pos - 1])
        throw std::logic_error("embed_one: factor dimension mismatch");
    SparseOpT<S> r = (pos == 1) ? x : SparseOpT<S>::identity(dims[0]);
    for (int f = 1; f < m; ++f)
        r = kron(r, f == pos - 1 ? x : SparseOpT<S>::identity(dims[f]));
    return r;
}

/// Embed a two-factor operator at positions (a, b), a != b, of a tensor
/// product with the given factor dimensions (the C_ab convention).
template <class S>
SparseOpT<S> embed_two(const SparseOpT<S>& x2, int a, int b, const std::vector<long>& dims) {
    int m = static_cast<int>(dims.size());
    if (a < 1 || a > m || b < 1 || b > m || a == b) throw PositionOutOfRange("embed positions");
    long da = dims[a - 1], db = dims[b - 1];
    if (x2.rows != da * db || x2.cols != da * db)
        throw std::logic_error("embed_two: factor dimension mismatch");
    long total = 1;
    for (long d : dims) total *= d;
    std::vector<long> strides(m);
    long acc = 1;
    for (int f = m - 1; f >= 0; --f) {
        strides[f] = acc;
        acc *= dims[f];
    }
    long rest = total / (da * db);
    // enumerate the identity part over the remaining factors
    std::vector<int> others;
    for (int f = 0; f < m; ++f)
        if (f != a - 1 && f != b - 1) others.push_back(f);

    SparseOpT<S> r(total, total);
    for (auto& [k, v] : x2.entries) {
        long ra = k.first / db, rb = k.first % db;
        long ca = k.second / db, cb = k.second % db;
        for (long o = 0; o < rest; ++o) {
            long rem = o, base = 0;
            for (int idx = static_cast<int>(others.size()) - 1; idx >= 0; --idx) {
                long d = dims[others[idx]];
                base += (rem % d) * strides[others[idx]];
                rem /= d;
            }
            long row = base + ra * strides[a - 1] + rb * strides[b - 1];
            long col = base + ca * strides[a - 1] + cb * strides[b - 1];
            r.add(row, col, v);
        }
    }
    return r;
}

/// The transposition of Eq-level convention: (X^t)_ij = X_{j'i'} in the
/// orthogonal case and eps_i eps_j X_{j'i'} in the symplectic case.
template <class S>
SparseOpT<S> transpose_t(const SparseOpT<S>& x, const TypeData& td) {
    if (x.rows != td.N || x.cols != td.N)
        throw NotSingleFactor("transpose_t expects a single N x N factor");
    SparseOpT<S> r(td.N, td.N);
    for (auto& [k, v] : x.entries) {
        // source (j', i') -> target (i, j): i = prime(row)+..., work 1-based
        long jp = k.first + 1, ip = k.second + 1;
        long j = td.prime(static_cast<int>(jp));
        long i = td.prime(static_cast<int>(ip));
        S w = v;
        if (td.symplectic())
            scale_rat(w, Rat(td.sign_of(static_cast<int>(i)) * td.sign_of(static_cast<int>(j))));
        r.add(i - 1, j - 1, w);
    }
    return r;
}

using Op = SparseOpT<HPoly>;
using QOp = SparseOpT<QHPoly>;
using OpSeries = SeriesT<Op>;
using QOpSeries = SeriesT<QOp>;

} // namespace yd

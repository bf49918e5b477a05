#include "yd/evalrep.hpp"

namespace yd {

Op vector_rep_F(const TypeData& td, int i, int j) {
    td.check_index(i);
    td.check_index(j);
    Op F(td.N, td.N);
    F.add(i - 1, j - 1, HPoly(Rat(1)));
    if (!td.is_A())
        F.add(td.prime(j) - 1, td.prime(i) - 1, HPoly(Rat(-td.theta(i, j))));
    return F;
}

SeriesMatrix SeriesMatrix::make(int sign, int N, long dim, long depth) {
    SeriesMatrix T;
    T.sign = sign;
    T.N = N;
    T.dim = dim;
    T.depth = depth;
    Interval kn = sign > 0 ? Interval{-depth, EXP_INF} : Interval{-EXP_INF, depth};
    T.e.assign(N + 1, std::vector<OpSeries>(N + 1, OpSeries(1)));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) T.e[i][j].known[0] = kn;
    return T;
}

SeriesMatrix eval_T(const TypeData& td, const Rat& a, int sign, long depth) {
    if (a.is_zero()) throw ZeroEvaluationPoint("evaluation point a must be nonzero");
    SeriesMatrix T = SeriesMatrix::make(sign, td.N, td.N, depth);
    for (int i = 1; i <= td.N; ++i)
        for (int j = 1; j <= td.N; ++j) {
            OpSeries& s = T.at(i, j);
            if (i == j) s.add_term(ExpKey(0), Op::identity(td.N));
            Op F = vector_rep_F(td, i, j);
            if (F.is_zero()) continue;
            if (sign > 0) {
                // + hbar a^{r-1} F u^{-r}
                Rat p(1);
                for (long r = 1; r <= depth; ++r) {
                    s.add_term(ExpKey(static_cast<int>(-r)), mul_hterm(F, p, 1));
                    p *= a;
                }
            } else {
                // t^-: delta - hbar (-a^{-r}) F u^{r-1} = delta + hbar a^{-r} F u^{r-1}
                Rat p = a.inv();
                for (long r = 1; r - 1 <= depth; ++r) {
                    s.add_term(ExpKey(static_cast<int>(r - 1)), mul_hterm(F, p, 1));
                    p /= a;
                }
            }
        }
    return T;
}

SeriesMatrix trivial_T(const TypeData& td, int sign, long depth, long dim) {
    SeriesMatrix T = SeriesMatrix::make(sign, td.N, dim, depth);
    for (int i = 1; i <= td.N; ++i) T.at(i, i).add_term(ExpKey(0), Op::identity(dim));
    return T;
}

SeriesMatrix tensor_T(const SeriesMatrix& A, const SeriesMatrix& B) {
    if (A.N != B.N || A.sign != B.sign) throw std::logic_error("tensor_T: incompatible factors");
    SeriesMatrix T = SeriesMatrix::make(A.sign, A.N, A.dim * B.dim, std::min(A.depth, B.depth));
    for (int i = 1; i <= A.N; ++i)
        for (int j = 1; j <= A.N; ++j) {
            OpSeries acc = T.at(i, j);
            for (int k = 1; k <= A.N; ++k) {
                OpSeries term = mul_general(A.at(i, k), B.at(k, j),
                                            [](const Op& x, const Op& y) { return kron(x, y); });
                acc += term;
            }
            T.at(i, j) = std::move(acc);
        }
    return T;
}

SeriesMatrix grid_mul(const SeriesMatrix& A, const SeriesMatrix& B) {
    if (A.N != B.N || A.dim != B.dim) throw std::logic_error("grid_mul: incompatible grids");
    SeriesMatrix T = SeriesMatrix::make(A.sign, A.N, A.dim, std::min(A.depth, B.depth));
    for (int i = 1; i <= A.N; ++i)
        for (int j = 1; j <= A.N; ++j) {
            OpSeries acc(1);
            bool first = true;
            for (int k = 1; k <= A.N; ++k) {
                OpSeries term = A.at(i, k) * B.at(k, j);
                acc = first ? term : acc + term;
                first = false;
            }
            T.at(i, j) = std::move(acc);
        }
    return T;
}

OpSeries assemble_T(const SeriesMatrix& T, int aux_pos, int naux, int var_slot, int arity) {
    long N = T.N;
    std::vector<long> dims;
    for (int k = 0; k < naux; ++k) dims.push_back(N);
    OpSeries big(arity);
    big.known[var_slot] = T.at(1, 1).known[0];
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const OpSeries& s = T.at(i, j);
            Op eij = embed_one(Op::unit(N, i - 1, j - 1), aux_pos, dims);
            for (auto& [k, op] : s.terms) {
                ExpKey nk;
                nk[var_slot] = k[0];
                big.add_term(nk, kron(eij, op));
            }
        }
    return big;
}

OpSeries scalar_mul(const Laurent& s, const OpSeries& o) {
    return mul_general(s, o, [](const HPoly& p, const Op& op) { return op.scaled(p); });
}

namespace {

void compare_to_zero(CheckReport& c, const OpSeries& diff, const WindowBox& w) {
    if (!diff.window_known(w)) {
        c.skipped = true;
        c.note = "window exceeds soundness margin";
        c.pass = false;
        return;
    }
    for (auto& [k, op] : diff.terms) {
        if (!w.contains(k)) continue;
        for (auto& [ij, v] : op.entries) {
            if (v.is_zero()) continue;
            c.fail("matrix(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")",
                   k.str(diff.arity), v.str());
            if (c.failures.size() >= 32) return;
        }
    }
}

} // namespace

SuiteReport check_RTT(const SeriesMatrix& Tp, const SeriesMatrix& Tm, const RMatrix& R,
                      const Rat& c_val, long window, int hbar_cap) {
    (void)hbar_cap;
    SuiteReport rep;
    rep.suite = std::string("rtt[") + family_name(R.td.family) + std::to_string(R.td.n) + "]";
    long N = R.td.N;
    std::vector<long> dims{N, N, Tp.dim};
    WindowBox w = WindowBox::sym(2, window);

    auto run_same_sign = [&](const SeriesMatrix& T, const char* tag) {
        OpSeries T1 = assemble_T(T, 1, 2, 0, 2);
        OpSeries T2 = assemble_T(T, 2, 2, 1, 2);
        OpSeries r12 = R.num_at(Rat(1), Rat(-1), Rat(0), 1, 2, dims);
        CheckReport c;
        c.tag = tag;
        c.paper_eq = "YDrelation1";
        c.backend = rep.suite;
        OpSeries diff = r12 * T1 * T2 - T2 * T1 * r12;
        compare_to_zero(c, diff, w);
        rep.add(std::move(c));
    };
    run_same_sign(Tp, "RTT[++]");
    run_same_sign(Tm, "RTT[--]");

    // Mixed relation: R(u_+ - v_-) T1+ T2- = T2- T1+ R(u_- - v_+), cleared by
    // both denominators (x)(x - kappa hbar) at x = u_± - v_∓.
    {
        OpSeries T1 = assemble_T(Tp, 1, 2, 0, 2);
        OpSeries T2 = assemble_T(Tm, 2, 2, 1, 2);
        Rat cp = c_val / Rat(2);  // u_+ - v_- = u - v + (c/2) hbar
        OpSeries rp = R.num_at(Rat(1), Rat(-1), cp, 1, 2, dims);
        OpSeries rm = R.num_at(Rat(1), Rat(-1), -cp, 1, 2, dims);
        Laurent denp = linear_uv(Rat(1), Rat(-1), cp) * linear_uv(Rat(1), Rat(-1), cp - R.kappa);
        Laurent denm = linear_uv(Rat(1), Rat(-1), -cp) * linear_uv(Rat(1), Rat(-1), -cp - R.kappa);
        CheckReport c;
        c.tag = "RTT[+-]";
        c.paper_eq = "relationpm";
        c.backend = rep.suite;
        OpSeries lhs = scalar_mul(denm, rp * T1 * T2);
        OpSeries rhs = scalar_mul(denp, T2 * T1 * rm);
        compare_to_zero(c, lhs - rhs, w);
        rep.add(std::move(c));
    }
    return rep;
}

SeriesMatrix transpose_T(const SeriesMatrix& T, const TypeData& td) {
    SeriesMatrix R = SeriesMatrix::make(T.sign, T.N, T.dim, T.depth);
    for (int i = 1; i <= T.N; ++i)
        for (int j = 1; j <= T.N; ++j) {
            OpSeries s = T.at(td.prime(j), td.prime(i));
            if (td.symplectic()) s = s.scaled_rat(Rat(td.sign_of(i) * td.sign_of(j)));
            R.at(i, j) = std::move(s);
        }
    return R;
}

Laurent compute_z(const SeriesMatrix& T, const TypeData& td, long window, int hbar_cap) {
    // T(u + kappa hbar)^t T(u)
    SeriesMatrix Ts = T;
    for (int i = 1; i <= T.N; ++i)
        for (int j = 1; j <= T.N; ++j) Ts.at(i, j) = T.at(i, j).shift_var(0, td.kappa, hbar_cap);
    SeriesMatrix prod = grid_mul(transpose_T(Ts, td), T);

    Interval wiv = T.sign > 0 ? Interval::box(-window, 0) : Interval::box(0, window);
    WindowBox w;
    w.arity = 1;
    w.iv[0] = wiv;

    Laurent z(1);
    bool have = false;
    for (int i = 1; i <= T.N; ++i)
        for (int j = 1; j <= T.N; ++j) {
            const OpSeries& s = prod.at(i, j);
            if (!s.window_known(w)) throw WindowMismatch("compute_z: window too large");
            if (i != j) {
                for (auto& [k, op] : s.terms)
                    if (w.contains(k) && !op.is_zero())
                        throw NotScalar("off-diagonal entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") nonzero at " + k.str(1));
                continue;
            }
            Laurent zi(1);
            zi.known[0] = s.known[0];
            for (auto& [k, op] : s.terms) {
                auto sc = op.as_scalar();
                if (!sc)
                    throw NotScalar("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                                    ") is not a multiple of the identity at " + k.str(1));
                zi.add_term(k, *sc);
            }
            if (!have) {
                z = zi;
                have = true;
            } else if (!window_compare(z, zi, w).empty())
                throw NotScalar("diagonal entries disagree at i=" + std::to_string(i));
        }
    return z;
}

// ---------------------------------------------------------------------------

long rank_of(std::vector<std::vector<Rat>> m) {
    long rows = static_cast<long>(m.size());
    if (rows == 0) return 0;
    long cols = static_cast<long>(m[0].size());
    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = m[rank][c].inv();
        for (long cc = c; cc < cols; ++cc) m[rank][cc] *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rat f = m[r][c];
            for (long cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

namespace {

struct GenId {
    int r;  // nonzero signed mode index
    int i, j;
    bool operator<(const GenId& o) const {
        // t+ generators precede t-; within a sign, lexicographic by (i, j, |r|)
        bool an = r < 0, bn = o.r < 0;
        if (an != bn) return bn;
        int ra = std::abs(r), rb = std::abs(o.r);
        return std::tie(i, j, ra) < std::tie(o.i, o.j, rb);
    }
};

} // namespace

PBWReport pbw_independence(const TypeData& td, int degree_bound, int r_max,
                           const std::vector<Rat>& points, const std::vector<Rat>& hbar_samples,
                           bool include_unit) {
    PBWReport out;
    for (auto& p : points)
        if (p.is_zero()) throw ZeroEvaluationPoint("evaluation point must be nonzero");

    long depth = r_max + 1;
    SeriesMatrix Tp = eval_T(td, points[0], +1, depth);
    SeriesMatrix Tm = eval_T(td, points[0], -1, depth);
    for (size_t k = 1; k < points.size(); ++k) {
        Tp = tensor_T(Tp, eval_T(td, points[k], +1, depth));
        Tm = tensor_T(Tm, eval_T(td, points[k], -1, depth));
    }
    long dim = Tp.dim;

    // Image of a generator: coefficient extraction from the tensor T-series,
    // with one hbar stripped per Eq. tiju.
    auto gen_image = [&](const GenId& g) -> Op {
        Op c;
        if (g.r > 0) {
            c = Tp.at(g.i, g.j).coeff(ExpKey(-g.r));
        } else {
            c = Tm.at(g.i, g.j).coeff(ExpKey(-g.r - 1));
            if (g.i == g.j && g.r == -1) c -= Op::identity(dim);  // remove the delta term
            c = -c;  // t-(u) = delta - hbar sum t^(-r) u^{r-1}
        }
        Op img(dim, dim);
        for (auto& [k, v] : c.entries) {
            HPoly d = v.div_hbar();
            if (!d.is_zero()) img.entries.emplace(k, std::move(d));
        }
        return img;
    };

    std::vector<GenId> gens;
    for (int r = 1; r <= r_max; ++r)
        for (int i = 1; i <= td.N; ++i)
            for (int j = 1; j <= td.N; ++j) {
                gens.push_back({r, i, j});
                gens.push_back({-r, i, j});
            }
    std::sort(gens.begin(), gens.end());

    std::vector<std::vector<int>> monomials;
    if (include_unit) monomials.push_back({});
    std::vector<std::vector<int>> frontier{{}};
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<std::vector<int>> next;
        for (auto& m : frontier) {
            int start = m.empty() ? 0 : m.back();
            for (int g = start; g < static_cast<int>(gens.size()); ++g) {
                auto mm = m;
                mm.push_back(g);
                next.push_back(std::move(mm));
            }
        }
        for (auto& m : next) monomials.push_back(m);
        frontier = std::move(next);
    }
    out.monomial_count = static_cast<long>(monomials.size());

    std::vector<Op> images;
    images.reserve(gens.size());
    for (auto& g : gens) images.push_back(gen_image(g));

    std::vector<std::vector<Rat>> matrix(
        hbar_samples.size() * dim * dim,
        std::vector<Rat>(monomials.size(), Rat(0)));
    for (size_t mi = 0; mi < monomials.size(); ++mi) {
        Op prod = Op::identity(dim);
        for (int g : monomials[mi]) prod = prod * images[g];
        for (size_t hs = 0; hs < hbar_samples.size(); ++hs)
            for (auto& [k, v] : prod.entries) {
                Rat val = v.eval(hbar_samples[hs]);
                if (!val.is_zero())
                    matrix[hs * dim * dim + k.first * dim + k.second][mi] = val;
            }
    }
    out.rank = rank_of(std::move(matrix));
    if (!out.full_rank())
        out.note = "rank deficit: add evaluation points before concluding dependence "
                   "(an evaluation-rank deficit is not a dependence proof)";
    return out;
}

} // namespace yd

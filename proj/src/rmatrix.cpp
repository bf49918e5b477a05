#include "yd/rmatrix.hpp"

namespace yd {

Op build_P(const TypeData& td) {
    long N = td.N;
    Op P(N * N, N * N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            P.add(i * N + j, j * N + i, HPoly(Rat(1)));
    return P;
}

Op build_Q(const TypeData& td) {
    long N = td.N;
    Op Q(N * N, N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            long r = static_cast<long>(i - 1) * N + (td.prime(i) - 1);
            long c = static_cast<long>(j - 1) * N + (td.prime(j) - 1);
            Q.add(r, c, HPoly(Rat(td.sign_of(i) * td.sign_of(j))));
        }
    return Q;
}

SuiteReport check_PQ_identities(const TypeData& td) {
    SuiteReport rep;
    rep.suite = std::string("pq[") + family_name(td.family) + std::to_string(td.n) + "]";
    Op P = build_P(td), Q = build_Q(td);
    Op I = Op::identity(td.N * td.N);

    auto record = [&](const char* tag, const Op& lhs, const Op& rhs) {
        CheckReport c;
        c.tag = tag;
        c.paper_eq = "p";
        c.backend = rep.suite;
        Op diff = lhs - rhs;
        if (!diff.is_zero()) {
            for (auto& [k, v] : diff.entries)
                c.fail("entry", "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")",
                       v.str());
        }
        rep.add(std::move(c));
    };

    record("P^2 = 1", P * P, I);
    record("Q^2 = N Q", Q * Q, Q.scaled(HPoly(Rat(td.N))));
    record("PQ = eps Q", P * Q, Q.scaled(HPoly(Rat(td.eps))));
    record("QP = eps Q", Q * P, Q.scaled(HPoly(Rat(td.eps))));
    return rep;
}

Laurent linear_uv(const Rat& c_u, const Rat& c_v, const Rat& c_h) {
    Laurent s(2);
    s.add_term(ExpKey(1, 0), HPoly(Rat(c_u)));
    s.add_term(ExpKey(0, 1), HPoly(Rat(c_v)));
    s.add_term(ExpKey(0, 0), HPoly::term(c_h, 1));
    return s;
}

RMatrix build_R(const TypeData& td) {
    RMatrix R;
    R.td = td;
    R.P = build_P(td);
    R.Q = build_Q(td);
    R.kappa = td.kappa;
    return R;
}

OpSeries RMatrix::num_at(const Rat& c_u, const Rat& c_v, const Rat& c_h, int a, int b,
                         const std::vector<long>& dims) const {
    long total = 1;
    for (long d : dims) total *= d;
    Op Pe = embed_two(P, a, b, dims);
    Op Qe = embed_two(Q, a, b, dims);
    Op Ie = Op::identity(total);

    Laurent x = linear_uv(c_u, c_v, c_h);                       // argument
    Laurent xk = linear_uv(c_u, c_v, c_h - kappa);              // argument - kappa hbar
    Laurent h(2);
    h.add_term(ExpKey(0, 0), HPoly::hbar());

    auto lift = [&](const Laurent& s, const Op& op) {
        OpSeries r(2);
        for (auto& [k, c] : s.terms) {
            Op w(op.rows, op.cols);
            for (auto& [ij, v] : op.entries) {
                HPoly p = v * c;
                if (!p.is_zero()) w.entries.emplace(ij, std::move(p));
            }
            if (!w.is_zero()) r.add_term(k, std::move(w));
        }
        return r;
    };

    // x (x - kappa h) 1 - h (x - kappa h) P + h x Q
    OpSeries rnum = lift(x * xk, Ie) - lift(h * xk, Pe) + lift(h * x, Qe);
    return rnum;
}

CheckReport check_YBE(const RMatrix& R) {
    const TypeData& td = R.td;
    CheckReport c;
    c.tag = std::string("ybe[") + family_name(td.family) + std::to_string(td.n) + "]";
    c.paper_eq = "yberep";
    c.backend = "exact-polynomial";
    std::vector<long> dims{td.N, td.N, td.N};

    OpSeries r12 = R.num_at(Rat(1), Rat(-1), Rat(0), 1, 2, dims);
    OpSeries r13u = R.num_at(Rat(1), Rat(0), Rat(0), 1, 3, dims);
    OpSeries r23v = R.num_at(Rat(0), Rat(1), Rat(0), 2, 3, dims);

    OpSeries lhs = r12 * r13u * r23v;
    OpSeries rhs = r23v * r13u * r12;
    OpSeries diff = lhs - rhs;
    for (auto& [k, op] : diff.terms) {
        for (auto& [ij, v] : op.entries)
            c.fail("matrix(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")",
                   k.str(2), v.str());
        if (!c.pass && c.failures.size() >= 32) break;
    }
    return c;
}

} // namespace yd

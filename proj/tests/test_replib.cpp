#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yd/evalrep.hpp"

using namespace yd;

TEST_CASE("vector representation satisfies the g_N relations") {
    for (auto td : {make_type(Family::B, 1), make_type(Family::C, 2), make_type(Family::D, 2)}) {
        // F_ij + theta_ij F_j'i' = 0
        for (int i = 1; i <= td.N; ++i)
            for (int j = 1; j <= td.N; ++j) {
                Op lhs = vector_rep_F(td, i, j) +
                         vector_rep_F(td, td.prime(j), td.prime(i)).scaled(HPoly(Rat(td.theta(i, j))));
                CHECK(lhs.is_zero());
            }
        // [F_ij, F_kl] = d_kj F_il - d_il F_kj - d_ki' theta_ij F_j'l + d_lj' theta_ij F_ki'
        for (int i = 1; i <= td.N; ++i)
            for (int j = 1; j <= td.N; ++j)
                for (int k = 1; k <= td.N; ++k)
                    for (int l = 1; l <= td.N; ++l) {
                        Op lhs = vector_rep_F(td, i, j) * vector_rep_F(td, k, l) -
                                 vector_rep_F(td, k, l) * vector_rep_F(td, i, j);
                        Op rhs(td.N, td.N);
                        if (k == j) rhs += vector_rep_F(td, i, l);
                        if (i == l) rhs -= vector_rep_F(td, k, j);
                        if (k == td.prime(i))
                            rhs -= vector_rep_F(td, td.prime(j), l).scaled(HPoly(Rat(td.theta(i, j))));
                        if (l == td.prime(j))
                            rhs += vector_rep_F(td, k, td.prime(i)).scaled(HPoly(Rat(td.theta(i, j))));
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("specific vector-rep values") {
    TypeData b1 = make_type(Family::B, 1);
    // [rho F_12, rho F_21] = rho F_11 - rho F_22
    Op lhs = vector_rep_F(b1, 1, 2) * vector_rep_F(b1, 2, 1) -
             vector_rep_F(b1, 2, 1) * vector_rep_F(b1, 1, 2);
    CHECK(lhs == vector_rep_F(b1, 1, 1) - vector_rep_F(b1, 2, 2));

    TypeData c2 = make_type(Family::C, 2);
    CHECK(!vector_rep_F(c2, 1, c2.prime(1)).is_zero());  // symplectic symmetric generator
}

TEST_CASE("pi_a T-series coefficients match the closed form") {
    TypeData b1 = make_type(Family::B, 1);
    Rat a(2);
    SeriesMatrix Tp = eval_T(b1, a, +1, 6);
    // pi_2: t^(2) -> 2 rho(F); coefficient of hbar u^-2 is a^1 rho(F)
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Op c2 = Tp.at(i, j).coeff(ExpKey(-2));
            CHECK(c2 == mul_hterm(vector_rep_F(b1, i, j), Rat(2), 1));
            Op c3 = Tp.at(i, j).coeff(ExpKey(-3));
            CHECK(c3 == mul_hterm(vector_rep_F(b1, i, j), Rat(4), 1));  // a^2 rho(F)
        }
    // pi_2: t^(-1) -> -(1/2) rho(F): minus series coefficient at u^0 is
    // delta + hbar a^-1 rho(F)
    SeriesMatrix Tm = eval_T(b1, a, -1, 6);
    Op c0 = Tm.at(1, 2).coeff(ExpKey(0));
    CHECK(c0 == mul_hterm(vector_rep_F(b1, 1, 2), Rat(1, 2), 1));

    // closed form oracle: (u - a) T+(u) entry equals (u-a) delta + hbar rho(F)
    Laurent uma(2);  // use arity-1 actually
    Laurent um(1);
    um.add_term(ExpKey(1), HPoly(Rat(1)));
    um.add_term(ExpKey(0), HPoly(Rat(-2)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            OpSeries lhs = scalar_mul(um, Tp.at(i, j));
            OpSeries rhs(1);
            if (i == j) {
                rhs.add_term(ExpKey(1), Op::identity(3));
                rhs.add_term(ExpKey(0), Op::identity(3).scaled(HPoly(Rat(-2))));
            }
            rhs.add_term(ExpKey(0), mul_hterm(vector_rep_F(b1, i, j), Rat(1), 1));
            WindowBox w;
            w.arity = 1;
            w.iv[0] = Interval::box(-4, 1);
            CHECK(window_compare(lhs, rhs, w).empty());
        }
}

TEST_CASE("trivial image gives the identity T-series") {
    TypeData b1 = make_type(Family::B, 1);
    SeriesMatrix T = trivial_T(b1, +1, 5, 4);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) CHECK(T.at(i, j).coeff(ExpKey(0)) == Op::identity(4));
            else CHECK(T.at(i, j).terms.empty());
        }
}

TEST_CASE("RTT relations hold in pi_a (x) pi_b at c = 0") {
    for (auto td : {make_type(Family::B, 1), make_type(Family::C, 2)}) {
        RMatrix R = build_R(td);
        long depth = 8;
        SeriesMatrix Tp = tensor_T(eval_T(td, Rat(1), +1, depth), eval_T(td, Rat(3), +1, depth));
        SeriesMatrix Tm = tensor_T(eval_T(td, Rat(1), -1, depth), eval_T(td, Rat(3), -1, depth));
        SuiteReport rep = check_RTT(Tp, Tm, R, Rat(0), 4, 12);
        for (auto& c : rep.checks) {
            INFO(rep.suite, " ", c.tag, " failures=", c.failures.size(),
                 (c.failures.empty() ? "" : c.failures[0].residual));
            CHECK(c.pass);
        }
    }
}

TEST_CASE("kappa mutation localizes RTT failures with coordinates") {
    TypeData td = make_type(Family::B, 1);
    RMatrix R = build_R(td);
    R.kappa += Rat(1);
    long depth = 7;
    SeriesMatrix Tp = tensor_T(eval_T(td, Rat(1), +1, depth), eval_T(td, Rat(3), +1, depth));
    SeriesMatrix Tm = tensor_T(eval_T(td, Rat(1), -1, depth), eval_T(td, Rat(3), -1, depth));
    SuiteReport rep = check_RTT(Tp, Tm, R, Rat(0), 3, 12);
    CHECK(!rep.pass());
    bool has_coords = false;
    for (auto& c : rep.checks)
        for (auto& f : c.failures)
            if (!f.exponents.empty()) has_coords = true;
    CHECK(has_coords);
}

TEST_CASE("at c = 0 the mixed RTT relation uses equal R arguments") {
    // u_+ = u_- at c = 0: verified implicitly by the pass above; here check
    // the cleared prefactors coincide.
    Laurent denp = linear_uv(Rat(1), Rat(-1), Rat(0));
    Laurent denm = linear_uv(Rat(1), Rat(-1), Rat(0));
    CHECK(window_compare(denp, denm, WindowBox::sym(2, 2)).empty());
}

TEST_CASE("unitarity: T(u+kappa h)^t T(u) is scalar in pi_a") {
    for (auto td : {make_type(Family::B, 1), make_type(Family::C, 2)}) {
        for (int sign : {+1, -1}) {
            SeriesMatrix T = eval_T(td, Rat(1), sign, 14);
            Laurent z = compute_z(T, td, 6, 12);
            // z has constant term 1
            CHECK(z.coeff(ExpKey(0)).coeff(0) == Rat(1));
        }
    }
}

TEST_CASE("unitarity is scalar in tensor products too") {
    TypeData td = make_type(Family::B, 1);
    SeriesMatrix T = tensor_T(eval_T(td, Rat(1), +1, 14), eval_T(td, Rat(3), +1, 14));
    Laurent z = compute_z(T, td, 6, 12);
    CHECK(!z.is_zero_known());
}

TEST_CASE("trivial image: z = 1") {
    TypeData td = make_type(Family::B, 1);
    SeriesMatrix T = trivial_T(td, +1, 10, 3);
    Laurent z = compute_z(T, td, 5, 12);
    CHECK(window_compare(z, Laurent::constant(1, HPoly(Rat(1))),
                         WindowBox::of({Interval::box(-5, 0)})).empty());
}

TEST_CASE("rank_of: exact rational rank") {
    std::vector<std::vector<Rat>> m{
        {Rat(1), Rat(2), Rat(3)},
        {Rat(2), Rat(4), Rat(6)},
        {Rat(0), Rat(1), Rat(1)},
    };
    CHECK(rank_of(m) == 2);
}

TEST_CASE("pbw: degree 0 and single-family ranks") {
    TypeData b1 = make_type(Family::B, 1);
    PBWReport r0 = pbw_independence(b1, 0, 1, {Rat(1), Rat(3)}, {Rat(1)});
    CHECK(r0.monomial_count == 1);
    CHECK(r0.rank == 1);

    // In type A (gl_3) the 18-generator family is independent under
    // two-point evaluation.
    TypeData a3 = make_type(Family::A, 3);
    PBWReport ra = pbw_independence(a3, 1, 1, {Rat(1), Rat(3)}, {Rat(1), Rat(1, 2)}, false);
    CHECK(ra.monomial_count == 18);
    CHECK(ra.rank == 18);

    // In type B the images satisfy the linear equations fijfji, which cap the
    // evaluation rank at 2 dim(o_3) = 6 no matter how many points are used.
    PBWReport rb = pbw_independence(b1, 1, 1, {Rat(1), Rat(3)}, {Rat(1), Rat(1, 2)}, false);
    CHECK(rb.monomial_count == 18);
    CHECK(rb.rank == 6);
}

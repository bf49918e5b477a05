#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yd/solvers.hpp"

using namespace yd;

TEST_CASE("rational arithmetic stays canonical") {
    Rat a(2, 4);
    CHECK(a == Rat(1, 2));
    CHECK((a + Rat(1, 2)) == Rat(1));
    CHECK((Rat(1, 3) * Rat(3, 7)) == Rat(1, 7));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(5, 3).pow(-2) == Rat(9, 25));
    CHECK_THROWS_AS(Rat(1).operator/=(Rat(0)), std::domain_error);
}

TEST_CASE("hbar polynomials: ring laws and truncation") {
    HPoly x = HPoly::term(Rat(2), 1) + HPoly(Rat(3));       // 3 + 2h
    HPoly y = HPoly::term(Rat(1), 2) - HPoly(Rat(1));       // -1 + h^2
    CHECK((x * y) == (y * x));
    HPoly z = HPoly::term(Rat(5), 3);
    CHECK(((x + y) + z) == (x + (y + z)));

    HPoly t = x;
    t.set_trunc(1);
    HPoly p = t * y;  // knowledge capped at degree 1
    CHECK(p.trunc() == 1);
    CHECK(p.coeff(0) == Rat(-3));
    CHECK(p.coeff(1) == Rat(-2));
    CHECK(p.coeff(2) == Rat(0));  // dropped, beyond knowledge

    HPoly h1 = HPoly::term(Rat(7), 2);
    CHECK(h1.div_hbar() == HPoly::term(Rat(7), 1));
    CHECK_THROWS_AS(x.div_hbar(), std::domain_error);
}

TEST_CASE("series multiplication respects soundness margins") {
    // a = 1 + h u^-1 known on [-3, inf)
    Laurent a(1);
    a.known[0] = Interval::box(-3, EXP_INF);
    a.add_term(ExpKey(0), HPoly(Rat(1)));
    a.add_term(ExpKey(-1), HPoly::hbar());

    Laurent sq = a * a;
    CHECK(sq.coeff(ExpKey(-1)) == HPoly::term(Rat(2), 1));
    CHECK(sq.coeff(ExpKey(-2)) == HPoly::term(Rat(1), 2));
    // known floor: unknown tail of one factor against stored top of other
    CHECK(sq.known[0].lo == -3);

    // Opposite directions in one variable must refuse to multiply.
    Laurent b(1);
    b.known[0] = Interval::box(-EXP_INF, 3);
    b.add_term(ExpKey(0), HPoly(Rat(1)));
    b.add_term(ExpKey(1), HPoly::hbar());
    CHECK_THROWS_AS(a * b, WindowMismatch);

    // ...but in different variables they coexist.
    Laurent a2 = a.retag(2, 0), b2 = b.retag(2, 1);
    Laurent ab = a2 * b2;
    CHECK(ab.coeff(ExpKey(-1, 1)) == HPoly::term(Rat(1), 2));
    CHECK(ab.known[0].lo == -3);
    CHECK(ab.known[1].hi == 3);
}

TEST_CASE("window_compare basics") {
    Laurent one = Laurent::constant(1, HPoly(Rat(1)));
    CHECK(window_compare(one, one, WindowBox::sym(1, 4)).empty());

    Laurent s = one;
    s.add_term(ExpKey(-1), HPoly::hbar());
    auto d = window_compare(one, s, WindowBox::sym(1, 2));
    REQUIRE(d.size() == 1);
    CHECK(d[0].at == ExpKey(-1));

    Laurent t = s;
    t.known[0] = Interval::box(-1, EXP_INF);
    CHECK_THROWS_AS(window_compare(t, s, WindowBox::sym(1, 3)), WindowMismatch);
}

TEST_CASE("two expansions of 1/(u-v) in u^-1 agree") {
    // Route 1: geometric series sum_k u^-k-1 v^k.
    Laurent direct(2);
    long D = 8;
    direct.known[0] = Interval::box(-D - 1, EXP_INF);
    for (long k = 0; k + 1 <= D + 1; ++k)
        direct.add_term(ExpKey(static_cast<int>(-k - 1), static_cast<int>(k)), HPoly(Rat(1)));
    // Route 2: invert (u - v) against the same direction: (u-v) * direct = 1.
    Laurent uv(2);
    uv.add_term(ExpKey(1, 0), HPoly(Rat(1)));
    uv.add_term(ExpKey(0, 1), HPoly(Rat(-1)));
    Laurent prod = uv * direct;
    Laurent one = Laurent::constant(2, HPoly(Rat(1)));
    WindowBox w;
    w.arity = 2;
    w.iv[0] = Interval::box(-D, 0);
    w.iv[1] = Interval::box(0, D);
    CHECK(window_compare(prod, one, w).empty());
}

TEST_CASE("series_invert: identity, geometric, product-back oracle") {
    Laurent one = Laurent::constant(1, HPoly(Rat(1)));
    Laurent inv1 = series_invert(one, 6);
    CHECK(window_compare(inv1, one, WindowBox::sym(1, 5)).empty());

    // 1 + h u^-1 -> alternating geometric series
    Laurent s = one;
    s.add_term(ExpKey(-1), HPoly::hbar());
    Laurent r = series_invert(s, 6);
    CHECK(r.coeff(ExpKey(-1)) == HPoly::term(Rat(-1), 1));
    CHECK(r.coeff(ExpKey(-2)) == HPoly::term(Rat(1), 2));
    CHECK(r.coeff(ExpKey(-3)) == HPoly::term(Rat(-1), 3));

    // 1 + h(2u^-1 + u^-2): multiply back and compare against 1 to u^-8
    Laurent s2 = one;
    s2.add_term(ExpKey(-1), HPoly::term(Rat(2), 1));
    s2.add_term(ExpKey(-2), HPoly::hbar());
    Laurent r2 = series_invert(s2, 10);
    Laurent back = s2 * r2;
    WindowBox w;
    w.arity = 1;
    w.iv[0] = Interval::box(-8, 0);
    CHECK(window_compare(back, one, w).empty());

    Laurent bad(1);
    bad.add_term(ExpKey(-1), HPoly(Rat(1)));
    CHECK_THROWS_AS(series_invert(bad, 4), NonUnitConstantTerm);
}

TEST_CASE("series_invert is an involution on its domain") {
    Laurent s = Laurent::constant(1, HPoly(Rat(1)));
    s.add_term(ExpKey(-1), HPoly::term(Rat(3), 1));
    s.add_term(ExpKey(-2), HPoly::term(Rat(-5), 2));
    Laurent twice = series_invert(series_invert(s, 9), 9);
    WindowBox w;
    w.arity = 1;
    w.iv[0] = Interval::box(-7, 0);
    CHECK(window_compare(twice, s, w).empty());
}

TEST_CASE("series_sqrt: trivial, binomial expansion of u/(u-h), perfect square") {
    Laurent one = Laurent::constant(1, HPoly(Rat(1)));
    CHECK(window_compare(series_sqrt(one, 6), one, WindowBox::sym(1, 5)).empty());

    // u/(u-h) = (1 - h/u)^-1 expanded in u^-1
    Laurent s(1);
    s.known[0] = Interval::box(-10, EXP_INF);
    for (long k = 0; k <= 10; ++k)
        s.add_term(ExpKey(static_cast<int>(-k)), HPoly::term(Rat(1), static_cast<int>(k)));
    Laurent r = series_sqrt(s, 10);
    CHECK(r.coeff(ExpKey(-1)) == HPoly::term(Rat(1, 2), 1));
    CHECK(r.coeff(ExpKey(-2)) == HPoly::term(Rat(3, 8), 2));
    // square back
    Laurent back = r * r;
    WindowBox w;
    w.arity = 1;
    w.iv[0] = Interval::box(-8, 0);
    CHECK(window_compare(back, s, w).empty());

    // perfect square (1 + h u^-1)^2
    Laurent p = one;
    p.add_term(ExpKey(-1), HPoly::hbar());
    Laurent p2 = p * p;
    p2.known[0] = Interval::box(-9, EXP_INF);
    Laurent rt = series_sqrt(p2, 8);
    WindowBox w2;
    w2.arity = 1;
    w2.iv[0] = Interval::box(-6, 0);
    CHECK(window_compare(rt, p, w2).empty());
}

TEST_CASE("solve_typeB_f: first orders and residual oracle") {
    Laurent f0 = solve_typeB_f(0);
    CHECK(window_compare(f0, Laurent::constant(1, HPoly(Rat(1))), WindowBox::sym(1, 0)).empty());

    Laurent f1 = solve_typeB_f(1);
    CHECK(f1.coeff(ExpKey(-1)) == HPoly::term(Rat(1, 2), 1));

    long D = 9;
    Laurent f = solve_typeB_f(D);
    // substitution oracle: f(u-h) f(u)^2 f(u+h) (u-h) - (u+h) = 0 through u^-8
    int cap = static_cast<int>(D) + 2;
    Laurent um = Laurent::monomial(1, ExpKey(1), HPoly(Rat(1)));
    Laurent h = Laurent::constant(1, HPoly::hbar());
    Laurent res = f.shift_var(0, Rat(-1), cap) * f * f * f.shift_var(0, Rat(1), cap) * (um - h) - (um + h);
    for (long e = 1; e >= -8; --e) {
        HPoly c = res.coeff(ExpKey(static_cast<int>(e)));
        INFO("residual at u^", e, " = ", c.str());
        CHECK(c.is_zero());
    }
    // hbar-homogeneity: f_k is a rational multiple of h^k
    for (long k = 1; k <= D; ++k) {
        HPoly fk = f.coeff(ExpKey(static_cast<int>(-k)));
        for (int d = 0; d <= fk.degree(); ++d)
            if (d != k) CHECK(fk.coeff(d).is_zero());
    }
}

TEST_CASE("shift_var is exact on polynomials and tracks truncation") {
    // (u + 2h)^2 via shifting u^2
    Laurent u2 = Laurent::monomial(1, ExpKey(2), HPoly(Rat(1)));
    Laurent sh = u2.shift_var(0, Rat(2), HPoly::NO_TRUNC);
    CHECK(sh.coeff(ExpKey(2)) == HPoly(Rat(1)));
    CHECK(sh.coeff(ExpKey(1)) == HPoly::term(Rat(4), 1));
    CHECK(sh.coeff(ExpKey(0)) == HPoly::term(Rat(4), 2));

    // shifting a truncated minus-direction series caps hbar knowledge
    Laurent m(1);
    m.known[0] = Interval::box(-EXP_INF, 3);
    for (int e = 0; e <= 3; ++e) m.add_term(ExpKey(e), HPoly(Rat(1)));
    Laurent ms = m.shift_var(0, Rat(1), 12);
    CHECK(ms.coeff(ExpKey(3)).trunc() == 0);
    CHECK(ms.coeff(ExpKey(1)).trunc() == 2);
}

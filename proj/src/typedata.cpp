#include "yd/typedata.hpp"

namespace yd {

namespace {

// (alpha_i, alpha_j) in the epsilon-coordinate realization with long roots of
// squared length 2 (B: alpha_n = eps_n; C: alpha_n = 2 eps_n; D: alpha_n =
// eps_{n-1} + eps_n).
Rat root_inner(Family f, int n, int i, int j) {
    auto chain = [&](int a, int b) -> Rat {
        // alpha_a = eps_a - eps_{a+1}
        if (a == b) return Rat(2);
        if (std::abs(a - b) == 1) return Rat(-1);
        return Rat(0);
    };
    if (f == Family::A) return chain(i, j);
    int last = n;
    bool i_last = (i == last), j_last = (j == last);
    switch (f) {
        case Family::B:
            if (i_last && j_last) return Rat(1);
            if (i_last || j_last) {
                int other = i_last ? j : i;
                return other == n - 1 ? Rat(-1) : Rat(0);
            }
            return chain(i, j);
        case Family::C:
            if (i_last && j_last) return Rat(4);
            if (i_last || j_last) {
                int other = i_last ? j : i;
                return other == n - 1 ? Rat(-2) : Rat(0);
            }
            return chain(i, j);
        case Family::D:
            if (i_last && j_last) return Rat(2);
            if (i_last || j_last) {
                int other = i_last ? j : i;
                return other == n - 2 ? Rat(-1) : Rat(0);
            }
            return chain(i, j);
        default:
            return Rat(0);
    }
}

} // namespace

TypeData make_type(Family f, int n) {
    TypeData td;
    td.family = f;
    td.n = n;
    switch (f) {
        case Family::B:
            if (n < 1) throw RankTooSmall("type B needs n >= 1");
            td.N = 2 * n + 1;
            td.eps = 1;
            break;
        case Family::C:
            if (n < 2) throw RankTooSmall("type C needs n >= 2");
            td.N = 2 * n;
            td.eps = -1;
            break;
        case Family::D:
            if (n < 2) throw RankTooSmall("type D needs n >= 2");
            td.N = 2 * n;
            td.eps = 1;
            break;
        case Family::A:
            if (n < 1) throw RankTooSmall("type A needs n >= 1");
            td.N = n;
            td.eps = 1;
            break;
    }
    td.kappa = td.is_A() ? Rat(0) : Rat(td.N, 2) - Rat(td.eps);

    td.eps_i.assign(td.N + 1, 1);
    if (f == Family::C)
        for (int i = n + 1; i <= 2 * n; ++i) td.eps_i[i] = -1;

    int rank = td.is_A() ? std::max(1, n - 1) : n;
    td.Bij.assign(rank + 1, std::vector<Rat>(rank + 1, Rat(0)));
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            td.Bij[i][j] = root_inner(f, td.is_A() ? rank : n, i, j) / Rat(2);

    // Argument shifts of the current definitions: u + q*hbar with
    // q = -(i-1)/2 for i <= n-1 and a family-specific value at i = n.
    td.current_shift.assign(n + 1, Rat(0));
    for (int i = 1; i <= n; ++i) td.current_shift[i] = Rat(-(i - 1), 2);
    if (!td.is_A() && n >= 1) {
        switch (f) {
            case Family::B: td.current_shift[n] = Rat(-(n - 1), 2); break;
            case Family::C: td.current_shift[n] = Rat(-n, 2); break;
            case Family::D: td.current_shift[n] = Rat(-(n - 2), 2); break;
            default: break;
        }
    }
    return td;
}

} // namespace yd

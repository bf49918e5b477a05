#pragma once

#include "yd/rmatrix.hpp"

namespace yd {

struct ZeroEvaluationPoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotScalar : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The vector representation rho(F_ij) of g_N on C^N:
/// F_ij = E_ij - theta_ij E_j'i' (orthogonal uses theta = 1).
Op vector_rep_F(const TypeData& td, int i, int j);

/// Generator matrix T^{sign}(u) in a concrete representation: an N x N grid
/// of one-variable operator-valued series on a `dim`-dimensional space.
struct SeriesMatrix {
    int sign = +1;  // +1: series in u^-1, -1: series in u
    int N = 0;
    long dim = 0;
    long depth = 0;
    std::vector<std::vector<OpSeries>> e;  // 1-based [i][j]

    OpSeries& at(int i, int j) { return e[i][j]; }
    const OpSeries& at(int i, int j) const { return e[i][j]; }
    static SeriesMatrix make(int sign, int N, long dim, long depth);
};

/// T-series of the evaluation module pi_a (level 0):
/// t+_ij(u) = delta_ij + hbar sum_r a^{r-1} rho(F_ij) u^-r, and the matching
/// expansion in positive powers for t-, both truncated at `depth` orders.
SeriesMatrix eval_T(const TypeData& td, const Rat& a, int sign, long depth);

/// Identity T-series (trivial image; all generators -> 0).
SeriesMatrix trivial_T(const TypeData& td, int sign, long depth, long dim);

/// Tensor product of representations via the matrix-product coproduct:
/// t_ij(u) -> sum_k t_ik(u) (x) t_kj(u).
SeriesMatrix tensor_T(const SeriesMatrix& A, const SeriesMatrix& B);

/// Grid product (same representation space): (AB)_ij = sum_k A_ik B_kj.
SeriesMatrix grid_mul(const SeriesMatrix& A, const SeriesMatrix& B);

/// Assemble the auxiliary-space operator T_a(u) = sum e_ij (x) t_ij(u) acting
/// on (C^N)^(x)naux (x) rep, with the series variable placed in `var_slot` of
/// an `arity`-variable series.
OpSeries assemble_T(const SeriesMatrix& T, int aux_pos, int naux, int var_slot, int arity);

/// Scalar-by-operator series product.
OpSeries scalar_mul(const Laurent& s, const OpSeries& o);

/// Both RTT relations (same-sign and mixed, Eqs. YDrelation1/relationpm) in
/// cleared-denominator windowed form at central charge c_val.
SuiteReport check_RTT(const SeriesMatrix& Tp, const SeriesMatrix& Tm, const RMatrix& R,
                      const Rat& c_val, long window, int hbar_cap);

/// The unitarity product T(u+kappa hbar)^t T(u): checks it is scalar on the
/// window and returns the scalar series z(u).
Laurent compute_z(const SeriesMatrix& T, const TypeData& td, long window, int hbar_cap);

/// Grid-level transposition of Eq. transp applied to a SeriesMatrix.
SeriesMatrix transpose_T(const SeriesMatrix& T, const TypeData& td);

// ---------------------------------------------------------------------------
// PBW desk-scale experiment (Theorem 3.4 technique)

struct PBWReport {
    long monomial_count = 0;
    long rank = 0;
    bool full_rank() const { return rank == monomial_count; }
    std::string note;
};

/// Enumerate ordered monomials of length <= degree_bound in the generators
/// t^(r)_ij, |r| <= r_max, map them through the tensor evaluation module at
/// the given points with hbar specialized to each sample, and report the
/// exact rank of the assembled coefficient matrix over Q.
PBWReport pbw_independence(const TypeData& td, int degree_bound, int r_max,
                           const std::vector<Rat>& points, const std::vector<Rat>& hbar_samples,
                           bool include_unit = true);

/// Exact rank of a dense rational matrix (Gaussian elimination over Q).
long rank_of(std::vector<std::vector<Rat>> m);

} // namespace yd

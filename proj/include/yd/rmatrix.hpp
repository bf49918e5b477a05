#pragma once

#include "yd/sparseop.hpp"
#include "yd/report.hpp"

namespace yd {

/// P = sum e_ij (x) e_ji on C^N (x) C^N.
Op build_P(const TypeData& td);
/// Q = sum eps_i eps_j e_ij (x) e_i'j'.
Op build_Q(const TypeData& td);

/// Verifies P^2 = 1, Q^2 = N Q, PQ = QP = eps Q exactly.
SuiteReport check_PQ_identities(const TypeData& td);

/// The R-matrix R(u) = 1 - hbar P / u + hbar Q / (u - kappa hbar), stored in
/// pole-decomposed and cleared-numerator form.  The numerator is
///   R_num(x) = x (x - kappa hbar) - hbar (x - kappa hbar) P + hbar x Q
/// with scalar denominator x (x - kappa hbar).
struct RMatrix {
    TypeData td;
    Op P, Q;
    Rat kappa;  // kept separately so mutation tests can perturb it

    /// Numerator polynomial evaluated at argument c_u*u + c_v*v + c_h*hbar,
    /// as a 2-variable operator polynomial embedded at aux positions (a, b)
    /// of a tensor product with the given factor dimensions.
    OpSeries num_at(const Rat& c_u, const Rat& c_v, const Rat& c_h, int a, int b,
                    const std::vector<long>& dims) const;
};

RMatrix build_R(const TypeData& td);

/// Yang-Baxter equation R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v),
/// verified as a cleared-denominator polynomial identity in u, v, hbar.
CheckReport check_YBE(const RMatrix& R);

/// Scalar 2-variable polynomial c_u*u + c_v*v + c_h*hbar (degree-1 building
/// block for cleared prefactors).
Laurent linear_uv(const Rat& c_u, const Rat& c_v, const Rat& c_h);

} // namespace yd

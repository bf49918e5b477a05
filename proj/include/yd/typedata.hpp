#pragma once

#include "yd/rat.hpp"

#include <stdexcept>
#include <vector>

namespace yd {

struct RankTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

enum class Family { B, C, D, A };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        default: return "A";
    }
}

/// All classical-type combinatorics in one place: the matrix size N, the
/// orthogonal/symplectic sign eps, the index signs eps_i, the crossing
/// parameter kappa = N/2 - eps, the simple-root pairings B_ij = (a_i,a_j)/2,
/// and the spectral shifts entering the current definitions.
///
/// Type A is a degenerate carrier for the gl_n backends: prime/theta/kappa
/// have no meaning there.
struct TypeData {
    Family family = Family::B;
    int n = 1;        // rank
    int N = 3;        // matrix size
    int eps = 1;      // +1 orthogonal, -1 symplectic
    Rat kappa;        // N/2 - eps
    std::vector<int> eps_i;             // 1-based, size N
    std::vector<std::vector<Rat>> Bij;  // 1-based, n x n
    std::vector<Rat> current_shift;     // 1-based, size n; coefficient q in u + q*hbar

    bool orthogonal() const { return eps == 1; }
    bool symplectic() const { return eps == -1; }
    bool is_A() const { return family == Family::A; }

    int prime(int i) const {
        check_index(i);
        if (is_A()) return i;
        return N - i + 1;
    }
    int sign_of(int i) const {
        check_index(i);
        return eps_i[i];
    }
    int theta(int i, int j) const {
        check_index(i);
        check_index(j);
        return eps_i[i] * eps_i[j];
    }
    Rat root_pairing(int i, int j) const {
        if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange("root index");
        return Bij[i][j];
    }
    /// Cartan matrix entry a_ij = 2 B_ij / B_ii.
    Rat cartan(int i, int j) const { return Rat(2) * root_pairing(i, j) / root_pairing(i, i); }

    void check_index(int i) const {
        if (i < 1 || i > N) throw IndexOutOfRange("matrix index " + std::to_string(i));
    }
};

TypeData make_type(Family f, int n);

} // namespace yd

#pragma once

#include <array>
#include <string>

#include "superchsh/supernumber.hpp"

namespace superchsh {

// Superqubit basis, storage order (dot, 0, 1). |dot> is the odd basis vector;
// |0> and |1> are even. The odd row/column comes first so that the U block of
// a group element acts on the (0,1) pair.
enum class Basis : int { Dot = 0, Zero = 1, One = 2 };

inline constexpr std::array<Basis, 3> kBasis{Basis::Dot, Basis::Zero, Basis::One};

inline constexpr int parity_of(Basis b) { return b == Basis::Dot ? 1 : 0; }

// One superqubit: three supernumber components in basis order (dot, 0, 1).
struct SuperKet3 {
    std::array<Supernumber, 3> comp{};
    Party party = Party::A;

    const Supernumber& operator[](Basis b) const { return comp[static_cast<int>(b)]; }
    Supernumber& operator[](Basis b) { return comp[static_cast<int>(b)]; }
};

// Adjoint of a ket. Kept distinct so the double graded adjoint can restore
// the parity-dependent sign.
struct SuperBra3 {
    std::array<Supernumber, 3> comp{};
    Party party = Party::A;
};

// 3x3 supernumber matrix, rows/columns in basis order (dot, 0, 1).
struct SuperMatrix {
    std::array<std::array<Supernumber, 3>, 3> e{};

    static SuperMatrix identity();

    const Supernumber& at(Basis r, Basis c) const {
        return e[static_cast<int>(r)][static_cast<int>(c)];
    }
    Supernumber& at(Basis r, Basis c) { return e[static_cast<int>(r)][static_cast<int>(c)]; }
};

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
SuperKet3 operator*(const SuperMatrix& m, const SuperKet3& v);

// Entry (r, c) of an even supermatrix must be a supernumber of parity
// parity(r) + parity(c) mod 2 (or zero).
bool is_even_supermatrix(const SuperMatrix& m);

// S(2 r theta_party): the odd group element of the UOSp(1|2) decomposition
// Z = S U, specialized to one Grassmann generator per party.
SuperMatrix s_element(double r, Party party);

// U block with alpha = cos(angle), beta = sin(angle); alpha alpha# + beta beta# = 1
// holds identically in the real case.
SuperMatrix u_element(double angle);

// General superqubit state (1 - (r^2/2) t t#)(alpha|0> + beta|1>) + r(-alpha t + beta t#)|dot>.
// Requires |alpha|^2 + |beta|^2 = 1 within 1e-12.
SuperKet3 superqubit_state(const Complex& alpha, const Complex& beta, double r,
                           Party party = Party::A);

// Graded adjoint X -> (X^ST)#. Applying it twice gives +X for even arguments
// and -X for odd ones.
SuperMatrix graded_adjoint(const SuperMatrix& m);
SuperBra3 graded_adjoint(const SuperKet3& v);
SuperKet3 graded_adjoint(const SuperBra3& v);

// Two superqubits: nine supernumber coefficients indexed by (m_A, n_B) in
// basis order, canonical form with coefficients left of the ket.
struct SuperKet9 {
    std::array<Supernumber, 9> comp{};

    static constexpr int index(Basis m, Basis n) {
        return 3 * static_cast<int>(m) + static_cast<int>(n);
    }
    const Supernumber& at(Basis m, Basis n) const { return comp[index(m, n)]; }
    Supernumber& at(Basis m, Basis n) { return comp[index(m, n)]; }

    std::string to_string() const;
};

// Shared entangled state (1 + X/2 + 3X^2/8)[(|00>+|11>)/sqrt2
//   + (p/sqrt2) tA |dot 1> + (q/sqrt2) tB |1 dot>],
// X = -(p^2/2) tA tA# - (q^2/2) tB tB#. Reduces to the Bell state at p = q = 0.
SuperKet9 gamma_state(double p, double q);

// Apply Z_A (x) Z_B with the graded tensor sign convention. Both factors must
// be even supermatrices. See the implementation note on the frozen Koszul rule.
SuperKet9 apply_local(const SuperMatrix& z_a, const SuperMatrix& z_b, const SuperKet9& state);

// Grassmann-valued transition probability c (c)#, c the canonical coefficient.
Supernumber grassmann_prob(Basis m, Basis n, const SuperKet9& state);
Supernumber grassmann_prob(Basis m, const SuperKet3& state);

// The ten real game parameters: state deformation (p, q), S-element scales
// per referee bit (r0, r1 for Alice, s0, s1 for Bob) and U angles (a0, a1,
// b0, b1).
struct GameParameters {
    double p = 0, q = 0;
    double r0 = 0, r1 = 0, s0 = 0, s1 = 0;
    double a0 = 0, a1 = 0, b0 = 0, b1 = 0;

    std::array<double, 10> as_array() const { return {p, q, r0, r1, s0, s1, a0, a1, b0, b1}; }
    static GameParameters from_array(const std::array<double, 10>& v) {
        return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
    }
    bool finite() const;
};

}  // namespace superchsh

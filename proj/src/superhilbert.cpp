#include "superchsh/superhilbert.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace superchsh {

SuperMatrix SuperMatrix::identity() {
    SuperMatrix m;
    for (int i = 0; i < 3; ++i) m.e[i][i] = 1.0;
    return m;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Supernumber acc;
            for (int j = 0; j < 3; ++j) acc += a.e[i][j] * b.e[j][k];
            r.e[i][k] = acc;
        }
    return r;
}

// Matrix entries multiply from the left of the component supernumbers; this
// is the order under which S(eta2) S(eta1) |0> composes like S(eta1 + eta2) |0>
// and the Grassmann normalization is preserved exactly.
SuperKet3 operator*(const SuperMatrix& m, const SuperKet3& v) {
    SuperKet3 r;
    r.party = v.party;
    for (int i = 0; i < 3; ++i) {
        Supernumber acc;
        for (int j = 0; j < 3; ++j) acc += m.e[i][j] * v.comp[j];
        r.comp[i] = acc;
    }
    return r;
}

bool is_even_supermatrix(const SuperMatrix& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int want = (parity_of(kBasis[i]) + parity_of(kBasis[j])) & 1;
            const Parity p = m.e[i][j].parity();
            if (p == Parity::Zero) continue;
            if (want == 0 && p != Parity::Even) return false;
            if (want == 1 && p != Parity::Odd) return false;
        }
    return true;
}

SuperMatrix s_element(double r, Party party) {
    const Supernumber t = theta(party);
    const Supernumber th = theta_hash(party);
    const Supernumber pair = t * th;  // t t#

    SuperMatrix s;
    s.at(Basis::Dot, Basis::Dot) = Supernumber(1.0) + (r * r) * pair;
    s.at(Basis::Dot, Basis::Zero) = -r * t;
    s.at(Basis::Dot, Basis::One) = r * th;
    s.at(Basis::Zero, Basis::Dot) = -r * th;
    s.at(Basis::Zero, Basis::Zero) = Supernumber(1.0) - (r * r / 2.0) * pair;
    s.at(Basis::One, Basis::Dot) = -r * t;
    s.at(Basis::One, Basis::One) = Supernumber(1.0) - (r * r / 2.0) * pair;
    return s;
}

SuperMatrix u_element(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    SuperMatrix u;
    u.at(Basis::Dot, Basis::Dot) = 1.0;
    u.at(Basis::Zero, Basis::Zero) = c;
    u.at(Basis::Zero, Basis::One) = -s;
    u.at(Basis::One, Basis::Zero) = s;
    u.at(Basis::One, Basis::One) = c;
    return u;
}

SuperKet3 superqubit_state(const Complex& alpha, const Complex& beta, double r, Party party) {
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1.0) > 1e-12)
        throw std::invalid_argument("superqubit_state: |alpha|^2 + |beta|^2 must be 1");

    const Supernumber t = theta(party);
    const Supernumber th = theta_hash(party);
    const Supernumber shrink = Supernumber(1.0) - (r * r / 2.0) * (t * th);

    SuperKet3 psi;
    psi.party = party;
    psi[Basis::Dot] = (-r * alpha) * t + (r * beta) * th;
    psi[Basis::Zero] = alpha * shrink;
    psi[Basis::One] = beta * shrink;
    return psi;
}

namespace {

// Supertranspose sign for result entry (i, j): (-1)^{|i| (|i| + |j|)}.
double st_sign(int i, int j) {
    const int pi = parity_of(kBasis[i]), pj = parity_of(kBasis[j]);
    return (pi * (pi + pj)) & 1 ? -1.0 : 1.0;
}

}  // namespace

SuperMatrix graded_adjoint(const SuperMatrix& m) {
    SuperMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.e[i][j] = st_sign(i, j) * m.e[j][i].involution();
    return r;
}

SuperBra3 graded_adjoint(const SuperKet3& v) {
    SuperBra3 b;
    b.party = v.party;
    for (int i = 0; i < 3; ++i) b.comp[i] = v.comp[i].involution();
    return b;
}

SuperKet3 graded_adjoint(const SuperBra3& v) {
    SuperKet3 k;
    k.party = v.party;
    for (int i = 0; i < 3; ++i) {
        const double sign = parity_of(kBasis[i]) ? -1.0 : 1.0;
        k.comp[i] = sign * v.comp[i].involution();
    }
    return k;
}

std::string SuperKet9::to_string() const {
    static constexpr const char* label[3] = {".", "0", "1"};
    std::ostringstream out;
    for (auto m : kBasis)
        for (auto n : kBasis) {
            out << "|" << label[static_cast<int>(m)] << label[static_cast<int>(n)]
                << ">: " << at(m, n).to_string() << "\n";
        }
    return out.str();
}

SuperKet9 gamma_state(double p, double q) {
    const Supernumber t_a = theta(Party::A), th_a = theta_hash(Party::A);
    const Supernumber t_b = theta(Party::B), th_b = theta_hash(Party::B);
    const Supernumber x = (-p * p / 2.0) * (t_a * th_a) + (-q * q / 2.0) * (t_b * th_b);
    const Supernumber pre = Supernumber(1.0) + 0.5 * x + 0.375 * (x * x);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    SuperKet9 g;
    g.at(Basis::Zero, Basis::Zero) = pre * inv_sqrt2;
    g.at(Basis::One, Basis::One) = pre * inv_sqrt2;
    g.at(Basis::Dot, Basis::One) = pre * ((p * inv_sqrt2) * t_a);
    g.at(Basis::One, Basis::Dot) = pre * ((q * inv_sqrt2) * t_b);
    return g;
}

SuperKet9 apply_local(const SuperMatrix& z_a, const SuperMatrix& z_b, const SuperKet9& state) {
    if (!is_even_supermatrix(z_a) || !is_even_supermatrix(z_b))
        throw std::invalid_argument("apply_local: factors must be even supermatrices");

    // Frozen Koszul convention: the output coefficient of |m'n'> is
    //   sum_{m,n} (-1)^{|zB_{n'n}| |m|} zA_{m'm} zB_{n'n} c_{mn},
    // i.e. the B entry (parity |n'|+|n|) picks up a sign crossing the input
    // A ket, and entries multiply left of the state coefficient in A-then-B
    // order. Pinned empirically: exact bipartite normalization, composition
    // functoriality and the body-sector match with the ordinary two-qubit
    // simulator hold only for this rule and its behavioral equivalents.
    SuperKet9 out;
    for (int mp = 0; mp < 3; ++mp) {
        for (int np = 0; np < 3; ++np) {
            Supernumber acc;
            for (int m = 0; m < 3; ++m) {
                const Supernumber& za = z_a.e[mp][m];
                if (za.is_zero()) continue;
                const int pm_in = parity_of(kBasis[m]);
                for (int n = 0; n < 3; ++n) {
                    const Supernumber& zb = z_b.e[np][n];
                    if (zb.is_zero()) continue;
                    const Supernumber& c = state.comp[3 * m + n];
                    if (c.is_zero()) continue;
                    const int b_par = (parity_of(kBasis[np]) + parity_of(kBasis[n])) & 1;
                    const double sign = (b_par & pm_in) ? -1.0 : 1.0;
                    acc += sign * (za * zb * c);
                }
            }
            out.comp[3 * mp + np] = acc;
        }
    }
    return out;
}

// Bipartite cells carry the super-tensor Born sign (-1)^{|m||n|}: on a
// factorized coefficient c = a b the graded reordering gives
// c c# = (-1)^{|a||b|} (a a#)(b b#), so the doubly-odd cell needs the flip
// for p_G to be the product of the parties' probabilities. Without it the
// total probability is not conserved under local S rotations.
Supernumber grassmann_prob(Basis m, Basis n, const SuperKet9& state) {
    const Supernumber& c = state.at(m, n);
    const double sign = (parity_of(m) & parity_of(n)) ? -1.0 : 1.0;
    return sign * (c * c.involution());
}

Supernumber grassmann_prob(Basis m, const SuperKet3& state) {
    const Supernumber& c = state[m];
    return c * c.involution();
}

bool GameParameters::finite() const {
    for (double v : as_array())
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace superchsh

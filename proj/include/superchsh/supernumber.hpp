#pragma once

#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

namespace superchsh {

using Complex = std::complex<double>;

// Which superqubit a Grassmann generator belongs to.
enum class Party { A, B };

// The four odd generators, in canonical order:
//   0: tA   1: tA#   2: tB   3: tB#
// A monomial is a subset of these, encoded as a 4-bit mask with bit i set
// when generator i is a factor. Factors are always kept in ascending index
// order; products that need reordering pick up the permutation sign.
struct Generator {
    int index = 0;

    constexpr Party party() const { return index < 2 ? Party::A : Party::B; }
    constexpr bool hashed() const { return (index & 1) != 0; }
};

inline constexpr std::array<Generator, 4> kGenerators{{{0}, {1}, {2}, {3}}};

inline constexpr int generator_index(Party p, bool hashed) {
    return (p == Party::A ? 0 : 2) + (hashed ? 1 : 0);
}

enum class Parity { Zero, Even, Odd, Mixed };

// Sign of merging two ascending generator lists (bitmasks) into one ascending
// list: -1 raised to the number of transposed pairs (i in a, j in b, i > j).
inline int merge_sign(unsigned a, unsigned b) {
    int swaps = 0;
    unsigned hi = a >> 1;
    while (hi != 0) {
        swaps += std::popcount(hi & b);
        hi >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

// An element of the complex Grassmann algebra on tA, tA#, tB, tB#.
// Immutable value type; 16 dense complex coefficients indexed by monomial mask.
class Supernumber {
public:
    static constexpr int kSlots = 16;

    Supernumber() = default;
    Supernumber(double scalar) { c_[0] = scalar; }           // NOLINT(google-explicit-constructor)
    Supernumber(const Complex& scalar) { c_[0] = scalar; }   // NOLINT(google-explicit-constructor)

    static Supernumber monomial(unsigned mask, const Complex& coeff) {
        Supernumber s;
        s.c_[mask & 0xF] = coeff;
        return s;
    }

    static Supernumber generator(int index) { return monomial(1u << index, 1.0); }

    const Complex& coeff(unsigned mask) const { return c_[mask & 0xF]; }
    void set_coeff(unsigned mask, const Complex& v) { c_[mask & 0xF] = v; }

    Supernumber operator+(const Supernumber& o) const {
        Supernumber r;
        for (int i = 0; i < kSlots; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Supernumber operator-(const Supernumber& o) const {
        Supernumber r;
        for (int i = 0; i < kSlots; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Supernumber operator-() const {
        Supernumber r;
        for (int i = 0; i < kSlots; ++i) r.c_[i] = -c_[i];
        return r;
    }
    Supernumber& operator+=(const Supernumber& o) {
        for (int i = 0; i < kSlots; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Supernumber& operator-=(const Supernumber& o) {
        for (int i = 0; i < kSlots; ++i) c_[i] -= o.c_[i];
        return *this;
    }

    // Alternating product. Repeated generators annihilate; the merge sign
    // sorts the concatenated factor lists back into canonical order.
    Supernumber operator*(const Supernumber& o) const {
        Supernumber r;
        for (unsigned a = 0; a < kSlots; ++a) {
            if (c_[a] == 0.0) continue;
            for (unsigned b = 0; b < kSlots; ++b) {
                if (o.c_[b] == 0.0) continue;
                if ((a & b) != 0) continue;  // nilpotency
                const double sign = merge_sign(a, b);
                r.c_[a | b] += sign * c_[a] * o.c_[b];
            }
        }
        return r;
    }

    Supernumber operator*(const Complex& s) const {
        Supernumber r;
        for (int i = 0; i < kSlots; ++i) r.c_[i] = c_[i] * s;
        return r;
    }
    Supernumber operator*(double s) const { return *this * Complex(s); }
    friend Supernumber operator*(const Complex& s, const Supernumber& x) { return x * s; }
    friend Supernumber operator*(double s, const Supernumber& x) { return x * Complex(s); }

    // Graded involution (#): conjugates coefficients and substitutes
    // t -> t#, t# -> -t factor-by-factor, keeping factor order, then
    // re-sorts into canonical order. For a monomial this collapses to a
    // sign: one -1 per hashed factor, one -1 per fully present t t# pair
    // (the in-pair swap needed to restore canonical order).
    Supernumber involution() const {
        Supernumber r;
        for (unsigned m = 0; m < kSlots; ++m) {
            if (c_[m] == 0.0) continue;
            const unsigned swapped = ((m & 0b0101u) << 1) | ((m & 0b1010u) >> 1);
            const int hashed = std::popcount(m & 0b1010u);
            const int full_pairs = int((m & 0b0011u) == 0b0011u) + int((m & 0b1100u) == 0b1100u);
            const double sign = ((hashed + full_pairs) & 1) ? -1.0 : 1.0;
            r.c_[swapped] += sign * std::conj(c_[m]);
        }
        return r;
    }

    // Coefficient of the empty monomial.
    Complex body() const { return c_[0]; }

    // Modified Rogers map: Berezin integral of prod_i e^{t_i t_i#} times this,
    // with orientation tA tA# tB tB# -> 1. Closed form: the sum of the
    // coefficients of 1, tA tA#, tB tB# and tA tA# tB tB#.
    Complex rogers() const { return c_[0b0000] + c_[0b0011] + c_[0b1100] + c_[0b1111]; }

    Parity parity() const {
        bool even = false, odd = false;
        for (unsigned m = 0; m < kSlots; ++m) {
            if (c_[m] == 0.0) continue;
            (std::popcount(m) & 1 ? odd : even) = true;
        }
        if (even && odd) return Parity::Mixed;
        if (odd) return Parity::Odd;
        if (even) return Parity::Even;
        return Parity::Zero;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0.0) return false;
        return true;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const Supernumber& o) const { return c_ == o.c_; }

    std::string to_string() const;

private:
    std::array<Complex, kSlots> c_{};
};

// Spec-style free functions over the same operations.
inline Supernumber mul(const Supernumber& a, const Supernumber& b) { return a * b; }
inline Supernumber involution(const Supernumber& a) { return a.involution(); }
inline Complex body(const Supernumber& a) { return a.body(); }
inline Complex rogers(const Supernumber& a) { return a.rogers(); }
inline Parity parity(const Supernumber& a) { return a.parity(); }

inline Supernumber theta(Party p) { return Supernumber::generator(generator_index(p, false)); }
inline Supernumber theta_hash(Party p) { return Supernumber::generator(generator_index(p, true)); }

// Largest coefficient-wise distance; the test suites compare against this.
inline double max_coeff_dist(const Supernumber& a, const Supernumber& b) {
    return (a - b).max_abs_coeff();
}

inline std::string Supernumber::to_string() const {
    static constexpr const char* names[4] = {"tA", "tA#", "tB", "tB#"};
    std::ostringstream out;
    bool first = true;
    for (unsigned m = 0; m < kSlots; ++m) {
        if (c_[m] == 0.0) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c_[m].real() << (c_[m].imag() < 0 ? "" : "+") << c_[m].imag() << "i)";
        if (m != 0) {
            out << "·";
            for (int g = 0; g < 4; ++g)
                if (m & (1u << g)) out << names[g] << (m >> (g + 1) ? " " : "");
        }
    }
    if (first) out << "(0+0i)";
    return out.str();
}

}  // namespace superchsh

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "superchsh/supernumber.hpp"

namespace superchsh {

// The three Grassmann-to-real probability maps under study.
enum class MapKind { DeWitt, Trigonometric, ModifiedRogers };

std::string to_string(MapKind kind);
std::optional<MapKind> map_from_string(const std::string& name);

// Per-party substitution scales for the trigonometric map, r^2 tt# -> cos^2 r.
struct TrigContext {
    double rho_a = 0.0;
    double rho_b = 0.0;
};

// Raised when a Grassmann probability cannot be converted: imaginary residue
// above tolerance, or a trig substitution with zero scale against a nonzero
// soul coefficient. Cell indices are attached by extract_table.
class ExtractionError : public std::runtime_error {
public:
    explicit ExtractionError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kImagTolerance = 1e-9;

// Convert one Grassmann-valued probability to a real number.
// DeWitt keeps the body; ModifiedRogers applies the Berezin closed form;
// Trigonometric substitutes cos^2(rho_P) for rho_P^2 t_P t_P# on the paired
// monomials (unpaired soul monomials are annihilated, as in the Rogers map).
double extract(MapKind kind, const Supernumber& p_g,
               const std::optional<TrigContext>& ctx = std::nullopt);

using Table3 = std::array<std::array<double, 3>, 3>;
using GrassmannTable = std::array<std::array<Supernumber, 3>, 3>;

// Element-wise extract over a 3x3 outcome table, rows = Alice (dot, 0, 1),
// columns = Bob. Extraction errors are rethrown with the outcome cell attached.
Table3 extract_table(MapKind kind, const GrassmannTable& p_g,
                     const std::optional<TrigContext>& ctx = std::nullopt);

}  // namespace superchsh

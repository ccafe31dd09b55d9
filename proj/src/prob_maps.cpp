#include "superchsh/prob_maps.hpp"

#include <cmath>
#include <sstream>

namespace superchsh {

std::string to_string(MapKind kind) {
    switch (kind) {
        case MapKind::DeWitt: return "dewitt";
        case MapKind::Trigonometric: return "trig";
        case MapKind::ModifiedRogers: return "rogers";
    }
    return "?";
}

std::optional<MapKind> map_from_string(const std::string& name) {
    if (name == "dewitt") return MapKind::DeWitt;
    if (name == "trig" || name == "trigonometric") return MapKind::Trigonometric;
    if (name == "rogers" || name == "modified-rogers") return MapKind::ModifiedRogers;
    return std::nullopt;
}

namespace {

constexpr unsigned kPairA = 0b0011;
constexpr unsigned kPairB = 0b1100;
constexpr unsigned kFull = 0b1111;

double require_real(const Complex& v, const char* what) {
    if (std::abs(v.imag()) > kImagTolerance) {
        std::ostringstream msg;
        msg << "extract: " << what << " has imaginary residue " << v.imag();
        throw ExtractionError(msg.str());
    }
    return v.real();
}

// One party's cos^2 substitution b/rho^2 * cos^2(rho); zero coefficients
// contribute zero for any rho, zero rho against a live coefficient is
// undefined.
double trig_term(double coeff, double rho, const char* party) {
    if (std::abs(coeff) <= 1e-12) return 0.0;
    if (rho == 0.0) {
        std::ostringstream msg;
        msg << "extract: trigonometric map undefined, rho_" << party
            << " = 0 with nonzero soul coefficient " << coeff;
        throw ExtractionError(msg.str());
    }
    const double c = std::cos(rho);
    return coeff / (rho * rho) * (c * c);
}

}  // namespace

double extract(MapKind kind, const Supernumber& p_g, const std::optional<TrigContext>& ctx) {
    switch (kind) {
        case MapKind::DeWitt:
            return require_real(p_g.body(), "body");
        case MapKind::ModifiedRogers:
            return require_real(p_g.rogers(), "rogers value");
        case MapKind::Trigonometric: {
            if (!ctx)
                throw ExtractionError("extract: trigonometric map requires a TrigContext");
            const double a = require_real(p_g.coeff(0), "body");
            const double b_a = require_real(p_g.coeff(kPairA), "tA tA# coefficient");
            const double b_b = require_real(p_g.coeff(kPairB), "tB tB# coefficient");
            const double c = require_real(p_g.coeff(kFull), "tA tA# tB tB# coefficient");
            double out = a;
            out += trig_term(b_a, ctx->rho_a, "A");
            out += trig_term(b_b, ctx->rho_b, "B");
            if (std::abs(c) > 1e-12) {
                const double ca = std::cos(ctx->rho_a), cb = std::cos(ctx->rho_b);
                if (ctx->rho_a == 0.0 || ctx->rho_b == 0.0)
                    throw ExtractionError(
                        "extract: trigonometric map undefined, zero rho with nonzero "
                        "paired-pair coefficient");
                out += c / (ctx->rho_a * ctx->rho_a * ctx->rho_b * ctx->rho_b) * (ca * ca) *
                       (cb * cb);
            }
            return out;
        }
    }
    throw ExtractionError("extract: unknown map kind");
}

Table3 extract_table(MapKind kind, const GrassmannTable& p_g,
                     const std::optional<TrigContext>& ctx) {
    Table3 out{};
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            try {
                out[m][n] = extract(kind, p_g[m][n], ctx);
            } catch (const ExtractionError& e) {
                std::ostringstream msg;
                msg << e.what() << " (outcome cell " << m << "," << n << ")";
                throw ExtractionError(msg.str());
            }
        }
    return out;
}

}  // namespace superchsh

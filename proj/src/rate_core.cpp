#include "coopsec/rate_core.hpp"

#include <algorithm>
#include <numbers>

namespace coopsec {

RateBps capacity(SnrLinear gamma) {
    // log1p keeps full precision for small SNRs.
    return RateBps(std::log1p(gamma.value()) / std::numbers::ln2);
}

RateBps mac_residual_rate(SnrLinear gamma_u1v, SnrLinear gamma_u2v, RateBps r_u2) {
    const double g1 = gamma_u1v.value();
    const double g2 = gamma_u2v.value();
    const double r = r_u2.value();

    // Interferer decodable even with user 1 at full rate.
    if (r <= capacity(SnrLinear(g2 / (1.0 + g1))).value()) {
        return capacity(gamma_u1v);
    }
    // Interferer decodable only by trading off user 1's rate.
    if (r <= capacity(gamma_u2v).value()) {
        return RateBps(capacity(SnrLinear(g1 + g2)).value() - r);
    }
    // Interferer undecodable; treat it as noise.
    return capacity(SnrLinear(g1 / (1.0 + g2)));
}

double positive_part(double x) noexcept {
    return std::max(x, 0.0);
}

SnrLinear db_to_linear(double db) {
    if (!std::isfinite(db)) {
        throw std::invalid_argument("db_to_linear requires finite input");
    }
    return SnrLinear(std::pow(10.0, db / 10.0));
}

double linear_to_db(SnrLinear g) {
    if (g.value() <= 0.0) {
        throw std::domain_error("linear_to_db requires g > 0");
    }
    return 10.0 * std::log10(g.value());
}

}  // namespace coopsec

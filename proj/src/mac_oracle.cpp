#include "coopsec/mac_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace coopsec {

namespace {

struct Cov2 {
    double c11, c12, c22;
    double det() const { return c11 * c22 - c12 * c12; }
};

// Output covariance with the selected inputs active as unit-power signals;
// the rest contribute nothing (they are conditioned away).
Cov2 covariance(const VectorChannelSpec& s, bool with_xa, bool with_xc) {
    Cov2 cov{s.noise1, 0.0, s.noise2};
    if (with_xa) {
        cov.c11 += s.h11 * s.h11;
        cov.c12 += s.h11 * s.h21;
        cov.c22 += s.h21 * s.h21;
    }
    if (with_xc) {
        cov.c11 += s.h12 * s.h12;
        cov.c12 += s.h12 * s.h22;
        cov.c22 += s.h22 * s.h22;
    }
    return cov;
}

void validate(const VectorChannelSpec& s) {
    for (double h : {s.h11, s.h12, s.h21, s.h22}) {
        if (!std::isfinite(h)) {
            throw std::invalid_argument("gaussian_mi: channel gains must be finite");
        }
    }
    if (!(s.noise1 > 0.0) || !(s.noise2 > 0.0) || !std::isfinite(s.noise1) ||
        !std::isfinite(s.noise2)) {
        throw std::invalid_argument("gaussian_mi: singular covariance (noise powers must be > 0)");
    }
}

}  // namespace

VectorChannelSpec VectorChannelSpec::quantized(double gamma_ab, double gamma_cb, double gamma_q) {
    VectorChannelSpec s{};
    s.h11 = std::sqrt(gamma_ab);
    s.h12 = std::sqrt(gamma_cb);
    s.h21 = 0.0;
    s.noise1 = 1.0;
    if (gamma_q > 0.0) {
        s.h22 = 1.0;
        s.noise2 = 1.0 / gamma_q;  // unit-power X_C over quantization noise
    } else {
        s.h22 = 0.0;
        s.noise2 = 1.0;
    }
    return s;
}

VectorChannelSpec VectorChannelSpec::wireless_only(double gamma_a, double gamma_c) {
    VectorChannelSpec s{};
    s.h11 = std::sqrt(gamma_a);
    s.h12 = std::sqrt(gamma_c);
    s.h21 = 0.0;
    s.h22 = 0.0;
    s.noise1 = 1.0;
    s.noise2 = 1.0;
    return s;
}

RateBps gaussian_mi(const VectorChannelSpec& spec, MiConditioning conditioning) {
    validate(spec);
    const double noise_det = spec.noise1 * spec.noise2;
    double signal_det = 0.0;
    switch (conditioning) {
        case MiConditioning::None:
            signal_det = covariance(spec, true, true).det();
            break;
        case MiConditioning::GivenXC:
            signal_det = covariance(spec, true, false).det();
            break;
        case MiConditioning::GivenXA:
            signal_det = covariance(spec, false, true).det();
            break;
    }
    return RateBps(std::log2(signal_det / noise_det));
}

RateBps oracle_s_ab_quant(SnrLinear gamma_ab, SnrLinear gamma_cb, SnrLinear gamma_q,
                          RateBps r_c) {
    const VectorChannelSpec spec =
        VectorChannelSpec::quantized(gamma_ab.value(), gamma_cb.value(), gamma_q.value());
    const double i_a_given_c = gaussian_mi(spec, MiConditioning::GivenXC).value();
    const double i_c_given_a = gaussian_mi(spec, MiConditioning::GivenXA).value();
    const double i_sum = gaussian_mi(spec, MiConditioning::None).value();
    const double rc = r_c.value();

    // Chain rule: I(X_C; Y) with X_A as noise is the sum rate minus X_A's
    // conditional rate. Below it the interferer decodes at no cost; above
    // the region's top rate it cannot decode at all.
    const double corner = i_sum - i_a_given_c;
    if (rc <= corner) return RateBps(i_a_given_c);
    if (rc <= i_c_given_a) return RateBps(i_sum - rc);
    return RateBps(i_sum - i_c_given_a);
}

RateBps oracle_s_ab_sup(SupMessage variant, SnrLinear gamma_ab, SnrLinear gamma_cb,
                        const AlphaChoice& alpha, RateBps r_c, RateBps c_l) {
    if (variant == SupMessage::FullTransfer) {
        throw std::invalid_argument("oracle_s_ab_sup expects SendW_C1 or SendW_C2");
    }
    if (r_c.value() < c_l.value()) {
        throw std::invalid_argument("oracle_s_ab_sup requires r_c >= c_l");
    }
    const double residual_fraction =
        variant == SupMessage::SendW_C2 ? alpha.alpha2 : 1.0 - alpha.alpha1;
    const VectorChannelSpec spec = VectorChannelSpec::wireless_only(
        gamma_ab.value(), residual_fraction * gamma_cb.value());
    const double i_a_given_c = gaussian_mi(spec, MiConditioning::GivenXC).value();
    const double i_c_given_a = gaussian_mi(spec, MiConditioning::GivenXA).value();
    const double i_sum = gaussian_mi(spec, MiConditioning::None).value();
    const double r_residual = r_c.value() - c_l.value();

    if (r_residual < i_c_given_a) {
        return RateBps(std::min(i_a_given_c, i_sum - r_residual));
    }
    return RateBps(i_sum - i_c_given_a);
}

RateBps wz_rate_identity(RateBps c_l, SnrLinear gamma_ab, SnrLinear gamma_cb) {
    const double gq = gamma_q_wz(c_l, gamma_ab, gamma_cb).value();
    const VectorChannelSpec with_copy =
        VectorChannelSpec::quantized(gamma_ab.value(), gamma_cb.value(), gq);
    const VectorChannelSpec wireless =
        VectorChannelSpec::quantized(gamma_ab.value(), gamma_cb.value(), 0.0);

    // I(X_C; X_C_hat | Y_B) = I(X_C; Y_B, X_C_hat) - I(X_C; Y_B), each term
    // by chain rule with X_A treated as noise.
    const double i_pair = gaussian_mi(with_copy, MiConditioning::None).value() -
                          gaussian_mi(with_copy, MiConditioning::GivenXC).value();
    const double i_wireless = gaussian_mi(wireless, MiConditioning::None).value() -
                              gaussian_mi(wireless, MiConditioning::GivenXC).value();
    return RateBps(positive_part(i_pair - i_wireless));
}

}  // namespace coopsec

// Independent verification path for the strategy formulas. The receiving
// base station sees a two-output vector channel (wireless observation plus
// quantized backhaul copy); every mutual information here is computed as a
// ratio of 2x2 Gaussian covariance determinants, never from the simplified
// closed forms it is meant to check.

#pragma once

#include "coopsec/rate_core.hpp"
#include "coopsec/strategies.hpp"

namespace coopsec {

enum class MiConditioning {
    None,     // I(X_A, X_C; Y): both inputs jointly
    GivenXC,  // I(X_A; Y | X_C)
    GivenXA,  // I(X_C; Y | X_A)
};

/// Two-output Gaussian channel y_i = h_i1 x_A + h_i2 x_C + n_i with unit
/// power inputs and per-output noise powers. Covers both the
/// wireless-plus-quantized pair and plain scalar channels (second output
/// disconnected).
struct VectorChannelSpec {
    double h11, h12;
    double h21, h22;
    double noise1, noise2;

    /// Wireless output with SNRs (gamma_ab, gamma_cb) stacked over a
    /// quantized copy of X_C with quantization SNR gamma_q. gamma_q = 0
    /// disconnects the quantized output.
    static VectorChannelSpec quantized(double gamma_ab, double gamma_cb, double gamma_q);

    /// Single wireless output with SNRs (gamma_a, gamma_c); the second
    /// output is pure unit noise.
    static VectorChannelSpec wireless_only(double gamma_a, double gamma_c);
};

/// Mutual information of the requested input set with the channel output,
/// as log2 of a covariance determinant ratio. Rejects non-finite gains and
/// non-positive noise powers (singular covariance).
RateBps gaussian_mi(const VectorChannelSpec& spec, MiConditioning conditioning);

/// Maximum uplink rate consistent with the vector-MAC region for downlink
/// rate r_c, assembled only from gaussian_mi outputs.
RateBps oracle_s_ab_quant(SnrLinear gamma_ab, SnrLinear gamma_cb, SnrLinear gamma_q, RateBps r_c);

/// Same for the post-cancellation superposition MAC.
RateBps oracle_s_ab_sup(SupMessage variant, SnrLinear gamma_ab, SnrLinear gamma_cb,
                        const AlphaChoice& alpha, RateBps r_c, RateBps c_l);

/// Evaluates I(X_C; X_C_hat | Y_B) with the Wyner-Ziv quantization SNR via
/// determinants. Must come back as c_l: this closes the Wyner-Ziv rate
/// loop.
RateBps wz_rate_identity(RateBps c_l, SnrLinear gamma_ab, SnrLinear gamma_cb);

}  // namespace coopsec

// Monte Carlo estimation of secrecy-outage probability over Rayleigh block
// fading. Link SNRs are exponentially distributed around configured means;
// the inter-BS link is line-of-sight and stays constant. Per realization
// the downlink rate follows the instantaneous downlink capacity.

#pragma once

#include <cstdint>

#include "coopsec/rate_core.hpp"
#include "coopsec/sample_rng.hpp"
#include "coopsec/strategies.hpp"

namespace coopsec {

/// Mean SNRs of the Rayleigh-faded links plus the constant inter-BS SNR.
struct FadingAverages {
    SnrLinear mean_ab;
    SnrLinear mean_ae;
    SnrLinear mean_ce;
    SnrLinear mean_cd;
    SnrLinear gamma_cb_const;

    FadingAverages(SnrLinear ab, SnrLinear ae, SnrLinear ce, SnrLinear cd, SnrLinear cb_const);
};

struct OutageEstimate {
    double p_out = 0.0;
    double half_width_95 = 0.0;  // binomial 95% CI half-width
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// One fading realization. Draw order is fixed (ab, ae, ce, cd) so that a
/// given (seed, sample index) always produces the same gains.
ChannelGains sample_realization(const FadingAverages& avg, SampleRng& rng);

/// Fraction of realizations whose secrecy rate falls below the target
/// (strict inequality; ties have probability zero under continuous
/// fading). Per realization r_c = capacity(gamma_cd). Deterministic in
/// (seed, n) for any thread count; threads = 0 picks the hardware count.
OutageEstimate outage_probability(StrategyKind kind, RateBps target, const FadingAverages& avg,
                                  RateBps c_l, std::uint64_t n, std::uint64_t seed,
                                  unsigned threads = 0);

}  // namespace coopsec

#include "coopsec/fading_sim.hpp"

#include <cmath>

#include "block_runner.hpp"

namespace coopsec {

FadingAverages::FadingAverages(SnrLinear ab, SnrLinear ae, SnrLinear ce, SnrLinear cd,
                               SnrLinear cb_const)
    : mean_ab(ab), mean_ae(ae), mean_ce(ce), mean_cd(cd), gamma_cb_const(cb_const) {
    for (const SnrLinear* mean : {&mean_ab, &mean_ae, &mean_ce, &mean_cd}) {
        if (mean->value() <= 0.0) {
            throw std::invalid_argument("FadingAverages: fading means must be > 0");
        }
    }
}

ChannelGains sample_realization(const FadingAverages& avg, SampleRng& rng) {
    const double ab = rng.next_exponential(avg.mean_ab.value());
    const double ae = rng.next_exponential(avg.mean_ae.value());
    const double ce = rng.next_exponential(avg.mean_ce.value());
    const double cd = rng.next_exponential(avg.mean_cd.value());
    return ChannelGains::from_linear(ab, avg.gamma_cb_const.value(), ae, ce, cd);
}

OutageEstimate outage_probability(StrategyKind kind, RateBps target, const FadingAverages& avg,
                                  RateBps c_l, std::uint64_t n, std::uint64_t seed,
                                  unsigned threads) {
    if (n == 0) {
        throw std::invalid_argument("outage_probability: n >= 1 required");
    }
    // Validate the strategy up front so worker threads cannot throw.
    (void)strategy_name(kind);

    const double target_rate = target.value();
    const auto counts = detail::run_blocks<std::uint64_t>(
        n, threads, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t outages = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                SampleRng rng(seed, i);
                const ChannelGains gains = sample_realization(avg, rng);
                const RateBps r_c = capacity(gains.gamma_cd);
                const SecrecyEvaluation eval = secrecy_rate(kind, gains, r_c, c_l);
                if (eval.r_as.value() < target_rate) ++outages;
            }
            return outages;
        });

    std::uint64_t outages = 0;
    for (std::uint64_t c : counts) outages += c;

    OutageEstimate est;
    est.n_samples = n;
    est.seed = seed;
    est.p_out = static_cast<double>(outages) / static_cast<double>(n);
    est.half_width_95 = 1.96 * std::sqrt(est.p_out * (1.0 - est.p_out) / static_cast<double>(n));
    return est;
}

}  // namespace coopsec

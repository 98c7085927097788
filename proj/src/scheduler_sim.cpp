#include "coopsec/scheduler_sim.hpp"

#include <cmath>
#include <vector>

#include "block_runner.hpp"

namespace coopsec {

namespace {

// Secrecy rate the given transfer method realizes when downlink user j
// (SNR gcd) is scheduled: r_c follows the downlink capacity.
double downlink_secrecy(StrategyKind method, const ChannelGains& fixed, double gcd, RateBps c_l) {
    ChannelGains gains = fixed;
    gains.gamma_cd = SnrLinear(gcd);
    const RateBps r_c = capacity(gains.gamma_cd);
    return secrecy_rate(method, gains, r_c, c_l).r_as.value();
}

template <typename ScoreFn>
std::size_t argmax_index(std::size_t count, ScoreFn&& score) {
    std::size_t best = 0;
    double best_score = score(0);
    for (std::size_t j = 1; j < count; ++j) {
        const double s = score(j);
        if (s > best_score) {
            best = j;
            best_score = s;
        }
    }
    return best;
}

// MaxSec choice: highest secrecy, ties resolved toward the larger downlink
// SNR, then the smaller index. The secondary key matters: the secrecy rate
// plateaus in r_c once the eavesdropper's decodable rate saturates, so
// exact ties between candidates are common, and among equally secure users
// the scheduler should not give up downlink throughput.
template <typename ScoreFn>
std::size_t argmax_secrecy(std::size_t count, std::span<const double> gamma_cd,
                           ScoreFn&& score) {
    std::size_t best = 0;
    double best_score = score(0);
    for (std::size_t j = 1; j < count; ++j) {
        const double s = score(j);
        if (s > best_score || (s == best_score && gamma_cd[j] > gamma_cd[best])) {
            best = j;
            best_score = s;
        }
    }
    return best;
}

struct BlockSums {
    double rc_maxrc = 0.0;
    double ras_maxrc_wz = 0.0;
    double ras_maxrc_sup = 0.0;
    double rc_sec_wz = 0.0;
    double ras_sec_wz = 0.0;
    double rc_sec_sup = 0.0;
    double ras_sec_sup = 0.0;

    double d_rc_wz = 0.0, d2_rc_wz = 0.0;
    double d_rc_sup = 0.0, d2_rc_sup = 0.0;
    double d_ras_wz = 0.0, d2_ras_wz = 0.0;
    double d_ras_sup = 0.0, d2_ras_sup = 0.0;

    std::uint64_t mis_wz_sup = 0;
    std::uint64_t mis_rc_wz = 0;
    std::uint64_t mis_rc_sup = 0;

    void add(const BlockSums& o) {
        rc_maxrc += o.rc_maxrc;
        ras_maxrc_wz += o.ras_maxrc_wz;
        ras_maxrc_sup += o.ras_maxrc_sup;
        rc_sec_wz += o.rc_sec_wz;
        ras_sec_wz += o.ras_sec_wz;
        rc_sec_sup += o.rc_sec_sup;
        ras_sec_sup += o.ras_sec_sup;
        d_rc_wz += o.d_rc_wz;
        d2_rc_wz += o.d2_rc_wz;
        d_rc_sup += o.d_rc_sup;
        d2_rc_sup += o.d2_rc_sup;
        d_ras_wz += o.d_ras_wz;
        d2_ras_wz += o.d2_ras_wz;
        d_ras_sup += o.d_ras_sup;
        d2_ras_sup += o.d2_ras_sup;
        mis_wz_sup += o.mis_wz_sup;
        mis_rc_wz += o.mis_rc_wz;
        mis_rc_sup += o.mis_rc_sup;
    }
};

PairedDelta paired_delta(double sum, double sum_sq, std::uint64_t n) {
    PairedDelta d;
    d.mean = sum / static_cast<double>(n);
    if (n > 1) {
        const double var =
            std::max(0.0, (sum_sq - static_cast<double>(n) * d.mean * d.mean) /
                              static_cast<double>(n - 1));
        d.std_err = std::sqrt(var / static_cast<double>(n));
    }
    return d;
}

}  // namespace

MultiuserScenario::MultiuserScenario(std::uint32_t uplink_users, std::uint32_t downlink_users,
                                     FadingAverages averages)
    : m_u(uplink_users), m_d(downlink_users), avg(averages) {
    if (m_u < 1 || m_d < 1) {
        throw std::invalid_argument("MultiuserScenario: m_u >= 1 and m_d >= 1 required");
    }
}

std::size_t select_uplink(std::span<const UplinkUserGains> users) {
    if (users.empty()) {
        throw std::invalid_argument("select_uplink: empty user list");
    }
    return argmax_index(users.size(), [&](std::size_t i) { return users[i].gamma_ab; });
}

std::size_t select_downlink(SchedulerKind kind, StrategyKind method,
                            std::span<const double> gamma_cd_candidates,
                            const ChannelGains& fixed_gains, RateBps c_l) {
    if (gamma_cd_candidates.empty()) {
        throw std::invalid_argument("select_downlink: empty candidate list");
    }
    if (kind == SchedulerKind::MaxRC) {
        return argmax_index(gamma_cd_candidates.size(),
                            [&](std::size_t j) { return gamma_cd_candidates[j]; });
    }
    if (method != StrategyKind::WynerZiv && method != StrategyKind::Superposition) {
        throw std::invalid_argument("select_downlink: MaxSec method must be WynerZiv or Superposition");
    }
    return argmax_secrecy(gamma_cd_candidates.size(), gamma_cd_candidates, [&](std::size_t j) {
        return downlink_secrecy(method, fixed_gains, gamma_cd_candidates[j], c_l);
    });
}

SchedulerComparison simulate_schedulers(const MultiuserScenario& scenario, RateBps c_l,
                                        std::uint64_t n, std::uint64_t seed, unsigned threads) {
    if (n == 0) {
        throw std::invalid_argument("simulate_schedulers: n >= 1 required");
    }
    const FadingAverages& avg = scenario.avg;
    const std::uint32_t m_u = scenario.m_u;
    const std::uint32_t m_d = scenario.m_d;

    const auto blocks = detail::run_blocks<BlockSums>(n, threads, [&](std::uint64_t lo,
                                                                      std::uint64_t hi) {
        BlockSums sums;
        std::vector<UplinkUserGains> users(m_u);
        std::vector<double> gcd(m_d);
        std::vector<double> ras_wz(m_d);
        std::vector<double> ras_sup(m_d);

        for (std::uint64_t i = lo; i < hi; ++i) {
            SampleRng rng(seed, i);
            // Fixed draw order: per uplink user (ab, ae), then ce, then the
            // downlink candidates.
            for (std::uint32_t u = 0; u < m_u; ++u) {
                users[u].gamma_ab = rng.next_exponential(avg.mean_ab.value());
                users[u].gamma_ae = rng.next_exponential(avg.mean_ae.value());
            }
            const double gce = rng.next_exponential(avg.mean_ce.value());
            for (std::uint32_t d = 0; d < m_d; ++d) {
                gcd[d] = rng.next_exponential(avg.mean_cd.value());
            }

            const std::size_t up = select_uplink(users);
            const ChannelGains fixed = ChannelGains::from_linear(
                users[up].gamma_ab, avg.gamma_cb_const.value(), users[up].gamma_ae, gce);

            for (std::uint32_t d = 0; d < m_d; ++d) {
                ras_wz[d] = downlink_secrecy(StrategyKind::WynerZiv, fixed, gcd[d], c_l);
                ras_sup[d] = downlink_secrecy(StrategyKind::Superposition, fixed, gcd[d], c_l);
            }

            const std::size_t j_rc =
                argmax_index(m_d, [&](std::size_t j) { return gcd[j]; });
            const std::size_t j_wz =
                argmax_secrecy(m_d, gcd, [&](std::size_t j) { return ras_wz[j]; });
            const std::size_t j_sup =
                argmax_secrecy(m_d, gcd, [&](std::size_t j) { return ras_sup[j]; });

            const double rc_maxrc = capacity(SnrLinear(gcd[j_rc])).value();
            const double rc_wz = capacity(SnrLinear(gcd[j_wz])).value();
            const double rc_sup = capacity(SnrLinear(gcd[j_sup])).value();

            sums.rc_maxrc += rc_maxrc;
            sums.ras_maxrc_wz += ras_wz[j_rc];
            sums.ras_maxrc_sup += ras_sup[j_rc];
            sums.rc_sec_wz += rc_wz;
            sums.ras_sec_wz += ras_wz[j_wz];
            sums.rc_sec_sup += rc_sup;
            sums.ras_sec_sup += ras_sup[j_sup];

            const double d_rc_wz = rc_wz - rc_maxrc;
            const double d_rc_sup = rc_sup - rc_maxrc;
            const double d_ras_wz = ras_wz[j_wz] - ras_wz[j_rc];
            const double d_ras_sup = ras_sup[j_sup] - ras_sup[j_rc];
            sums.d_rc_wz += d_rc_wz;
            sums.d2_rc_wz += d_rc_wz * d_rc_wz;
            sums.d_rc_sup += d_rc_sup;
            sums.d2_rc_sup += d_rc_sup * d_rc_sup;
            sums.d_ras_wz += d_ras_wz;
            sums.d2_ras_wz += d_ras_wz * d_ras_wz;
            sums.d_ras_sup += d_ras_sup;
            sums.d2_ras_sup += d_ras_sup * d_ras_sup;

            sums.mis_wz_sup += j_wz != j_sup ? 1 : 0;
            sums.mis_rc_wz += j_rc != j_wz ? 1 : 0;
            sums.mis_rc_sup += j_rc != j_sup ? 1 : 0;
        }
        return sums;
    });

    BlockSums total;
    for (const BlockSums& b : blocks) total.add(b);
    const double dn = static_cast<double>(n);

    SchedulerComparison cmp;
    auto report = [&](SchedulerKind kind, double rc_sum, double ras_sum) {
        ScheduleReport r;
        r.scheduler = kind;
        r.mean_r_c = rc_sum / dn;
        r.mean_r_as = ras_sum / dn;
        r.n_samples = n;
        r.seed = seed;
        return r;
    };
    cmp.max_rc_wz = report(SchedulerKind::MaxRC, total.rc_maxrc, total.ras_maxrc_wz);
    cmp.max_rc_sup = report(SchedulerKind::MaxRC, total.rc_maxrc, total.ras_maxrc_sup);
    cmp.max_sec_wz = report(SchedulerKind::MaxSecWZ, total.rc_sec_wz, total.ras_sec_wz);
    cmp.max_sec_sup = report(SchedulerKind::MaxSecSUP, total.rc_sec_sup, total.ras_sec_sup);

    cmp.delta_r_c_wz = paired_delta(total.d_rc_wz, total.d2_rc_wz, n);
    cmp.delta_r_c_sup = paired_delta(total.d_rc_sup, total.d2_rc_sup, n);
    cmp.delta_r_as_wz = paired_delta(total.d_ras_wz, total.d2_ras_wz, n);
    cmp.delta_r_as_sup = paired_delta(total.d_ras_sup, total.d2_ras_sup, n);

    cmp.sel_mismatch_wz_sup = total.mis_wz_sup;
    cmp.sel_mismatch_rc_wz = total.mis_rc_wz;
    cmp.sel_mismatch_rc_sup = total.mis_rc_sup;
    return cmp;
}

}  // namespace coopsec

// Multiuser scheduling simulation under full channel state information:
// the uplink user with the best uplink SNR transmits while the downlink
// scheduler picks its user either for maximum downlink rate (MaxRC) or for
// maximum uplink secrecy rate (MaxSec, per transfer method). All
// schedulers are evaluated on common random numbers so that pathwise
// dominance and low-variance ratio estimates hold by construction.

#pragma once

#include <cstdint>
#include <span>

#include "coopsec/fading_sim.hpp"
#include "coopsec/rate_core.hpp"
#include "coopsec/strategies.hpp"

namespace coopsec {

struct MultiuserScenario {
    std::uint32_t m_u = 4;  // uplink users
    std::uint32_t m_d = 4;  // downlink users
    FadingAverages avg;

    MultiuserScenario(std::uint32_t uplink_users, std::uint32_t downlink_users,
                      FadingAverages averages);
};

enum class SchedulerKind { MaxRC, MaxSecWZ, MaxSecSUP };

struct ScheduleReport {
    double mean_r_c = 0.0;
    double mean_r_as = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    SchedulerKind scheduler = SchedulerKind::MaxRC;
};

/// Mean and standard error of a per-realization difference
/// (MaxSec value minus MaxRC value under the same transfer method).
struct PairedDelta {
    double mean = 0.0;
    double std_err = 0.0;
};

/// All schedulers on common random numbers. MaxRC appears twice because
/// its realized secrecy depends on the transfer method it is paired with;
/// its mean_r_c is the same in both reports.
struct SchedulerComparison {
    ScheduleReport max_rc_wz;
    ScheduleReport max_rc_sup;
    ScheduleReport max_sec_wz;
    ScheduleReport max_sec_sup;

    PairedDelta delta_r_c_wz;    // r_c(MaxSecWZ) - r_c(MaxRC)
    PairedDelta delta_r_c_sup;
    PairedDelta delta_r_as_wz;   // r_as(MaxSecWZ) - r_as(MaxRC, WZ)
    PairedDelta delta_r_as_sup;

    std::uint64_t sel_mismatch_wz_sup = 0;  // realizations where MaxSecWZ != MaxSecSUP
    std::uint64_t sel_mismatch_rc_wz = 0;   // realizations where MaxRC != MaxSecWZ
    std::uint64_t sel_mismatch_rc_sup = 0;
};

struct UplinkUserGains {
    double gamma_ab = 0.0;
    double gamma_ae = 0.0;
};

/// Index of the user with the best uplink SNR; ties go to the smallest
/// index. Rejects an empty list.
std::size_t select_uplink(std::span<const UplinkUserGains> users);

/// Downlink user choice. MaxRC maximizes gamma_cd (ties to the smallest
/// index); the MaxSec schedulers maximize the secrecy rate the given
/// transfer method would realize with candidate rate
/// r_c_j = capacity(gamma_cd_j) and the fixed remaining gains. Secrecy
/// ties resolve toward the larger gamma_cd, then the smaller index: the
/// secrecy rate plateaus in r_c once the eavesdropper saturates, and among
/// equally secure candidates the scheduler keeps downlink throughput.
std::size_t select_downlink(SchedulerKind kind, StrategyKind method,
                            std::span<const double> gamma_cd_candidates,
                            const ChannelGains& fixed_gains, RateBps c_l);

/// Runs every scheduler over n common-random-number realizations.
/// Deterministic in (seed, n, scenario) for any thread count.
SchedulerComparison simulate_schedulers(const MultiuserScenario& scenario, RateBps c_l,
                                        std::uint64_t n, std::uint64_t seed,
                                        unsigned threads = 0);

}  // namespace coopsec

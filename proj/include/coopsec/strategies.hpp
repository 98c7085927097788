// Achievable perfect-secrecy rates for the cooperation strategies of a
// two-cell uplink with a finite-capacity inter-BS backhaul. Every strategy
// evaluates to R_{A,s} = (S_AB - S_AE)^+ for one channel realization, a
// downlink rate r_c and a backhaul capacity c_l; they differ only in the
// S_AB they can sustain.

#pragma once

#include <optional>
#include <string_view>

#include "coopsec/rate_core.hpp"

namespace coopsec {

enum class StrategyKind {
    NoBackbone,     // noise forwarding, c_l = 0
    FullTransfer,   // whole downlink codeword over the backhaul (c_l >= r_c)
    ElemQuant,      // rate-c_l quantization of the downlink codeword
    WynerZiv,       // quantization with receiver side information
    Superposition,  // rate splitting; one sub-message over the backhaul
    NoiseJamBound,  // pure Gaussian noise downlink, infinite backhaul
    NoDownlink,     // no interfering transmission at all
};

/// Which sub-message the superposition strategy ships over the backhaul.
enum class SupMessage {
    SendW_C1,      // message decoded first by the downlink user
    SendW_C2,      // message decoded last by the downlink user
    FullTransfer,  // whole message fits on the backhaul (r_c <= c_l)
};

/// Power split of the superposition codeword. alpha1 pins the rate of the
/// first-decoded message to c_l, alpha2 pins the last-decoded one.
struct AlphaChoice {
    double alpha1 = 0.0;
    double alpha2 = 1.0;
    SupMessage selected = SupMessage::SendW_C2;
};

/// Full result of one analytic evaluation. `branch` names the active
/// piecewise branch for debugging; it is not part of the numeric contract.
struct SecrecyEvaluation {
    StrategyKind strategy;
    RateBps r_c;
    RateBps c_l;
    RateBps s_ab;
    RateBps s_ae;
    RateBps r_as;
    std::optional<SnrLinear> gamma_q;  // quantization strategies only
    std::optional<AlphaChoice> alpha;  // superposition only
    std::string_view branch;
};

/// Maximum rate decodable by the eavesdropper for downlink rate r_c.
/// Identical for every strategy: the eavesdropper sees a single-rate
/// Gaussian codebook either way.
RateBps s_ae(const ChannelGains& gains, RateBps r_c);

/// Noise forwarding (no backhaul): the downlink acts as plain interference
/// at both B and E.
SecrecyEvaluation nf_secrecy(const ChannelGains& gains, RateBps r_c);

/// Backhaul wide enough to carry the whole codeword: B cancels the
/// interference completely, so gamma_cb is irrelevant.
SecrecyEvaluation full_transfer_secrecy(const ChannelGains& gains, RateBps r_c);

/// Equivalent quantization SNR of a rate-c_l vector quantizer that ignores
/// receiver side information: 2^c_l - 1.
SnrLinear gamma_q_eq(RateBps c_l);

/// Equivalent quantization SNR when the wireless observation at B serves
/// as decoder side information. Reduces to gamma_q_eq at gamma_cb = 0.
SnrLinear gamma_q_wz(RateBps c_l, SnrLinear gamma_ab, SnrLinear gamma_cb);

/// Maximum A-to-B rate under a quantization strategy with equivalent
/// quantization SNR gamma_q. Reduces to mac_residual_rate at gamma_q = 0.
RateBps s_ab_quant(SnrLinear gamma_ab, SnrLinear gamma_cb, SnrLinear gamma_q, RateBps r_c);

/// Power splits that place rate c_l on the first- or last-decoded
/// sub-message. Requires gamma_cd >= 2^c_l - 1, i.e. the downlink can
/// carry at least c_l; below that full transfer applies instead
/// (signalled by std::domain_error).
AlphaChoice sup_alphas(RateBps c_l, SnrLinear gamma_cd);

/// Maximum A-to-B rate after B cancels the backhauled sub-message. The
/// residual interferer has SNR alpha2*gamma_cb (SendW_C2) or
/// (1-alpha1)*gamma_cb (SendW_C1) and rate r_c - c_l. Requires r_c >= c_l.
RateBps s_ab_sup(SupMessage variant, SnrLinear gamma_ab, SnrLinear gamma_cb,
                 const AlphaChoice& alpha, RateBps r_c, RateBps c_l);

/// Superposition strategy: best of the two sub-message choices. The
/// downlink SNR is derived from r_c via the capacity relation
/// (gamma_cd = 2^r_c - 1), which holds exactly in fading mode where the
/// caller sets r_c = capacity(gamma_cd). For r_c <= c_l this equals full
/// transfer.
SecrecyEvaluation sup_secrecy(const ChannelGains& gains, RateBps r_c, RateBps c_l);

/// Dispatcher over all strategies and reference baselines. ElemQuant,
/// WynerZiv and Superposition short-circuit to full transfer when
/// r_c <= c_l. NoiseJamBound and NoDownlink ignore r_c and c_l.
SecrecyEvaluation secrecy_rate(StrategyKind kind, const ChannelGains& gains, RateBps r_c,
                               RateBps c_l);

std::string_view strategy_name(StrategyKind kind);

}  // namespace coopsec

#include "coopsec/strategies.hpp"

#include <algorithm>
#include <cmath>

namespace coopsec {

namespace {

double cap(double gamma) {
    return capacity(SnrLinear(gamma)).value();
}

constexpr std::string_view kBranchInterfererDecoded = "interferer_decoded";
constexpr std::string_view kBranchSumLimited = "sum_limited";
constexpr std::string_view kBranchTreatAsNoise = "interference_as_noise";
constexpr std::string_view kBranchFullTransfer = "full_transfer";
constexpr std::string_view kBranchDecodable = "residual_decodable";
constexpr std::string_view kBranchWorstCaseNoise = "worst_case_noise";
constexpr std::string_view kBranchNoInterference = "no_interference";

std::string_view mac_branch(double g1, double g2, double r) {
    if (r <= cap(g2 / (1.0 + g1))) return kBranchInterfererDecoded;
    if (r <= cap(g2)) return kBranchSumLimited;
    return kBranchTreatAsNoise;
}

struct LabeledRate {
    double rate;
    std::string_view branch;
};

// Piecewise S_AB of the quantization strategies. The sum rate is the
// quantized-channel mutual information plus capacity(gamma_ab), which is
// valid for any quantization SNR (elementary or Wyner-Ziv).
LabeledRate s_ab_quant_labeled(double gab, double gcb, double gq, double rc) {
    const double corner = cap(gcb / (1.0 + gab) + gq);
    const double c_sum = corner + cap(gab);
    if (rc <= corner) return {cap(gab), kBranchInterfererDecoded};
    if (rc <= cap(gcb + gq)) return {c_sum - rc, kBranchSumLimited};
    return {c_sum - cap(gcb + gq), kBranchTreatAsNoise};
}

SecrecyEvaluation assemble(StrategyKind kind, RateBps r_c, RateBps c_l, double s_ab_value,
                           double s_ae_value, std::string_view branch) {
    SecrecyEvaluation eval;
    eval.strategy = kind;
    eval.r_c = r_c;
    eval.c_l = c_l;
    eval.s_ab = RateBps(s_ab_value);
    eval.s_ae = RateBps(s_ae_value);
    eval.r_as = RateBps(positive_part(s_ab_value - s_ae_value));
    eval.branch = branch;
    return eval;
}

// Full-transfer values re-tagged for a strategy whose r_c <= c_l
// short-circuit fired.
SecrecyEvaluation full_transfer_as(StrategyKind kind, const ChannelGains& gains, RateBps r_c,
                                   RateBps c_l) {
    SecrecyEvaluation eval = assemble(kind, r_c, c_l, cap(gains.gamma_ab.value()),
                                      s_ae(gains, r_c).value(), kBranchFullTransfer);
    if (kind == StrategyKind::Superposition) {
        eval.alpha = AlphaChoice{1.0, 0.0, SupMessage::FullTransfer};
    }
    return eval;
}

}  // namespace

RateBps s_ae(const ChannelGains& gains, RateBps r_c) {
    return mac_residual_rate(gains.gamma_ae, gains.gamma_ce, r_c);
}

SecrecyEvaluation nf_secrecy(const ChannelGains& gains, RateBps r_c) {
    const double gab = gains.gamma_ab.value();
    const double gcb = gains.gamma_cb.value();
    const double sab = mac_residual_rate(gains.gamma_ab, gains.gamma_cb, r_c).value();
    return assemble(StrategyKind::NoBackbone, r_c, RateBps(0.0), sab, s_ae(gains, r_c).value(),
                    mac_branch(gab, gcb, r_c.value()));
}

SecrecyEvaluation full_transfer_secrecy(const ChannelGains& gains, RateBps r_c) {
    return assemble(StrategyKind::FullTransfer, r_c, r_c, cap(gains.gamma_ab.value()),
                    s_ae(gains, r_c).value(), kBranchFullTransfer);
}

SnrLinear gamma_q_eq(RateBps c_l) {
    return SnrLinear(std::exp2(c_l.value()) - 1.0);
}

SnrLinear gamma_q_wz(RateBps c_l, SnrLinear gamma_ab, SnrLinear gamma_cb) {
    const double side_info_gain = 1.0 + gamma_cb.value() / (1.0 + gamma_ab.value());
    return SnrLinear((std::exp2(c_l.value()) - 1.0) * side_info_gain);
}

RateBps s_ab_quant(SnrLinear gamma_ab, SnrLinear gamma_cb, SnrLinear gamma_q, RateBps r_c) {
    return RateBps(
        s_ab_quant_labeled(gamma_ab.value(), gamma_cb.value(), gamma_q.value(), r_c.value()).rate);
}

AlphaChoice sup_alphas(RateBps c_l, SnrLinear gamma_cd) {
    const double cl = c_l.value();
    const double gcd = gamma_cd.value();
    const double quant_floor = std::exp2(cl) - 1.0;  // 2^c_l - 1
    if (gcd < quant_floor) {
        throw std::domain_error(
            "sup_alphas: downlink cannot carry rate c_l; full transfer applies instead");
    }
    AlphaChoice choice;
    if (quant_floor == 0.0) {
        choice.alpha1 = 0.0;
        choice.alpha2 = 1.0;
        return choice;
    }
    // Clamp away sub-ulp residue at the gcd == 2^c_l - 1 boundary.
    choice.alpha2 = std::clamp(1.0 - quant_floor / gcd, 0.0, 1.0);
    choice.alpha1 = std::clamp((1.0 - std::exp2(-cl)) / (1.0 - 1.0 / (1.0 + gcd)), 0.0, 1.0);
    return choice;
}

RateBps s_ab_sup(SupMessage variant, SnrLinear gamma_ab, SnrLinear gamma_cb,
                 const AlphaChoice& alpha, RateBps r_c, RateBps c_l) {
    if (variant == SupMessage::FullTransfer) {
        throw std::invalid_argument("s_ab_sup expects SendW_C1 or SendW_C2");
    }
    if (r_c.value() < c_l.value()) {
        throw std::invalid_argument("s_ab_sup requires r_c >= c_l");
    }
    const double gab = gamma_ab.value();
    const double residual_fraction =
        variant == SupMessage::SendW_C2 ? alpha.alpha2 : 1.0 - alpha.alpha1;
    const double g = residual_fraction * gamma_cb.value();
    const double r_residual = r_c.value() - c_l.value();
    if (r_residual < cap(g)) {
        return RateBps(std::min(cap(gab), cap(gab + g) - r_residual));
    }
    return RateBps(cap(gab / (1.0 + g)));
}

SecrecyEvaluation sup_secrecy(const ChannelGains& gains, RateBps r_c, RateBps c_l) {
    if (r_c.value() <= c_l.value()) {
        return full_transfer_as(StrategyKind::Superposition, gains, r_c, c_l);
    }
    const SnrLinear gamma_cd(std::exp2(r_c.value()) - 1.0);
    AlphaChoice alpha = sup_alphas(c_l, gamma_cd);
    const double via_w2 =
        s_ab_sup(SupMessage::SendW_C2, gains.gamma_ab, gains.gamma_cb, alpha, r_c, c_l).value();
    const double via_w1 =
        s_ab_sup(SupMessage::SendW_C1, gains.gamma_ab, gains.gamma_cb, alpha, r_c, c_l).value();
    alpha.selected = via_w2 >= via_w1 ? SupMessage::SendW_C2 : SupMessage::SendW_C1;

    const double residual_fraction =
        alpha.selected == SupMessage::SendW_C2 ? alpha.alpha2 : 1.0 - alpha.alpha1;
    const double g = residual_fraction * gains.gamma_cb.value();
    const bool decodable = r_c.value() - c_l.value() < cap(g);

    SecrecyEvaluation eval =
        assemble(StrategyKind::Superposition, r_c, c_l, std::max(via_w1, via_w2),
                 s_ae(gains, r_c).value(), decodable ? kBranchDecodable : kBranchTreatAsNoise);
    eval.alpha = alpha;
    return eval;
}

SecrecyEvaluation secrecy_rate(StrategyKind kind, const ChannelGains& gains, RateBps r_c,
                               RateBps c_l) {
    switch (kind) {
        case StrategyKind::NoBackbone:
            return nf_secrecy(gains, r_c);
        case StrategyKind::FullTransfer:
            return full_transfer_secrecy(gains, r_c);
        case StrategyKind::ElemQuant:
        case StrategyKind::WynerZiv: {
            if (r_c.value() <= c_l.value()) {
                return full_transfer_as(kind, gains, r_c, c_l);
            }
            const SnrLinear gq = kind == StrategyKind::ElemQuant
                                     ? gamma_q_eq(c_l)
                                     : gamma_q_wz(c_l, gains.gamma_ab, gains.gamma_cb);
            const LabeledRate sab = s_ab_quant_labeled(gains.gamma_ab.value(),
                                                       gains.gamma_cb.value(), gq.value(),
                                                       r_c.value());
            SecrecyEvaluation eval =
                assemble(kind, r_c, c_l, sab.rate, s_ae(gains, r_c).value(), sab.branch);
            eval.gamma_q = gq;
            return eval;
        }
        case StrategyKind::Superposition:
            return sup_secrecy(gains, r_c, c_l);
        case StrategyKind::NoiseJamBound: {
            // Worst-case jammer at E, perfectly cancelled at B: the
            // r_c -> inf, c_l -> inf limit of full transfer.
            const double sae =
                cap(gains.gamma_ae.value() / (1.0 + gains.gamma_ce.value()));
            return assemble(kind, r_c, c_l, cap(gains.gamma_ab.value()), sae,
                            kBranchWorstCaseNoise);
        }
        case StrategyKind::NoDownlink:
            return assemble(kind, r_c, c_l, cap(gains.gamma_ab.value()),
                            cap(gains.gamma_ae.value()), kBranchNoInterference);
    }
    throw std::invalid_argument("secrecy_rate: unknown strategy kind");
}

std::string_view strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::NoBackbone: return "nobackbone";
        case StrategyKind::FullTransfer: return "fulltransfer";
        case StrategyKind::ElemQuant: return "elemquant";
        case StrategyKind::WynerZiv: return "wynerziv";
        case StrategyKind::Superposition: return "superposition";
        case StrategyKind::NoiseJamBound: return "noisejambound";
        case StrategyKind::NoDownlink: return "nodownlink";
    }
    throw std::invalid_argument("strategy_name: unknown strategy kind");
}

}  // namespace coopsec

// Closed-form information-rate primitives shared by all cooperation
// strategies: Gaussian link capacity, the two-user MAC residual-rate
// function, and dB/linear SNR plumbing. All rates are base-2 (bits per
// symbol); all SNRs are dimensionless linear power ratios.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace coopsec {

/// Dimensionless linear SNR (received power over unit noise power).
class SnrLinear {
public:
    SnrLinear() = default;

    explicit SnrLinear(double value) : value_(value) {
        if (!std::isfinite(value) || value < 0.0) {
            throw std::invalid_argument("SnrLinear must be finite and >= 0, got " +
                                        std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

private:
    double value_ = 0.0;
};

/// Rate in bits per symbol (unit bandwidth, so equal to bits per second).
class RateBps {
public:
    RateBps() = default;

    explicit RateBps(double value) : value_(value) {
        if (!std::isfinite(value) || value < 0.0) {
            throw std::invalid_argument("RateBps must be finite and >= 0, got " +
                                        std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

private:
    double value_ = 0.0;
};

/// One realization of all link SNRs. gamma_cd is the downlink (serving)
/// link of the interfering base station; the others are named
/// transmitter-receiver: A = uplink terminal, C = interfering base
/// station, B = receiving base station, E = eavesdropper.
struct ChannelGains {
    SnrLinear gamma_ab;
    SnrLinear gamma_cb;
    SnrLinear gamma_ae;
    SnrLinear gamma_ce;
    SnrLinear gamma_cd;

    static ChannelGains from_linear(double ab, double cb, double ae, double ce, double cd = 0.0) {
        return ChannelGains{SnrLinear(ab), SnrLinear(cb), SnrLinear(ae), SnrLinear(ce),
                            SnrLinear(cd)};
    }
};

/// Capacity of a scalar complex Gaussian link: log2(1 + gamma).
RateBps capacity(SnrLinear gamma);

/// Supremum of the rate from user 1 to the receiver on a two-user Gaussian
/// MAC when user 2 transmits at rate r_u2. r_u2 is not restricted to the
/// MAC region: above capacity(gamma_u2v) the interferer is undecodable and
/// is treated as noise.
RateBps mac_residual_rate(SnrLinear gamma_u1v, SnrLinear gamma_u2v, RateBps r_u2);

/// max(x, 0). Input must be finite.
double positive_part(double x) noexcept;

SnrLinear db_to_linear(double db);

/// Inverse of db_to_linear; rejects g == 0.
double linear_to_db(SnrLinear g);

}  // namespace coopsec

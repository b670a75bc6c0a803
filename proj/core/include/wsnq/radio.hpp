#pragma once

#include <stdexcept>

namespace wsnq {

/// First-order radio transmitter model: E(l,d) = (alpha0 + beta1*d^2) * l.
///
/// The defaults are the usual first-order magnitudes; they are configuration
/// values, not measured constants.
struct RadioParams {
    double alpha0 = 5e-8;    // transmitter circuit energy, J/bit
    double beta1 = 1e-10;    // transmitter amplifier energy, J/(bit*m^2)
    double msg_bits = 1000;  // control message length l, bits

    void validate() const {
        if (!(alpha0 > 0.0)) throw std::domain_error("alpha0 must be > 0");
        if (beta1 < 0.0) throw std::domain_error("beta1 must be >= 0");
        if (msg_bits < 0.0) throw std::domain_error("msg_bits must be >= 0");
    }
};

/// Transmission cost of an l-bit message over distance d.
inline double energy_cost(double l, double d, const RadioParams& params) {
    if (l < 0.0) throw std::domain_error("energy_cost: negative message length");
    if (d < 0.0) throw std::domain_error("energy_cost: negative distance");
    return (params.alpha0 + params.beta1 * d * d) * l;
}

} // namespace wsnq

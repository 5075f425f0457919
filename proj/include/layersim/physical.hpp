#pragma once

#include <span>
#include <vector>

#include "layersim/core.hpp"

namespace layersim::physical {

/// The circuit as seen by the agents: N banks of identical resistors
/// R = N*R_0 in parallel, fed through the source resistor R_V by a source
/// scaled to V*sqrt(N). Only three numbers matter for the power law.
struct Circuit {
    int N = 1;
    double mu = 1.0;     // R_0 / R_V
    double P_typ = 1.0;  // V^2 / R_V, watts

    static Circuit from(const ValidatedParams& vp) { return {vp.N(), vp.mu, vp.P_typ}; }
};

/// Power drawn by an agent holding a_i of the n active resistors:
///   P_typ * a_i * mu / (n/N + mu)^2
/// Throws std::domain_error unless 1 <= a_i <= n.
double power_per_agent(long a_i, long n, const Circuit& c);

/// Sum of power over agents; a holds each agent's resistor count.
double total_power(std::span<const int> a, const Circuit& c);

/// Closed form of total_power for a given total n: P_typ*mu*N*a_avg/(a_avg+mu)^2.
double total_power_for(long n, const Circuit& c);

/// Per-agent powers for the resistor vector a (n is its sum).
std::vector<double> powers(std::span<const int> a, const Circuit& c);

/// Relative change (P_now - P_prev) / P_prev. Throws if P_prev <= 0.
double exact_gain(double P_now, double P_prev);

/// First-order gain estimate from the total derivative of the power law:
///   da/a_i - (2/N) * (dr + da) / (a_avg + mu)
/// where a_i and a_avg are the values after the change.
double approx_gain(long a_i, int delta_a, long delta_r, double a_avg, const Circuit& c);

/// Resistor count above which one more resistor no longer yields lambda_min
/// in the large-system limit: 1 / lambda_min.
double tipping_point(double lambda_min);

}  // namespace layersim::physical

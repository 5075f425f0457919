#include "layersim/physical.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace layersim::physical {

double power_per_agent(long a_i, long n, const Circuit& c) {
    if (a_i < 1) throw std::domain_error("power_per_agent: a_i must be >= 1, got " + std::to_string(a_i));
    if (n < a_i) throw std::domain_error("power_per_agent: n must be >= a_i");
    const double a_avg = static_cast<double>(n) / c.N;
    const double denom = a_avg + c.mu;
    return c.P_typ * static_cast<double>(a_i) * c.mu / (denom * denom);
}

double total_power(std::span<const int> a, const Circuit& c) {
    const long n = std::accumulate(a.begin(), a.end(), 0L);
    double sum = 0.0;
    for (int a_i : a) sum += power_per_agent(a_i, n, c);
    return sum;
}

double total_power_for(long n, const Circuit& c) {
    const double a_avg = static_cast<double>(n) / c.N;
    const double denom = a_avg + c.mu;
    return c.P_typ * c.mu * c.N * a_avg / (denom * denom);
}

std::vector<double> powers(std::span<const int> a, const Circuit& c) {
    const long n = std::accumulate(a.begin(), a.end(), 0L);
    std::vector<double> P;
    P.reserve(a.size());
    for (int a_i : a) P.push_back(power_per_agent(a_i, n, c));
    return P;
}

double exact_gain(double P_now, double P_prev) {
    if (!(P_prev > 0.0)) throw std::domain_error("exact_gain: previous power must be > 0");
    return (P_now - P_prev) / P_prev;
}

double approx_gain(long a_i, int delta_a, long delta_r, double a_avg, const Circuit& c) {
    const double own = static_cast<double>(delta_a) / static_cast<double>(a_i);
    const double feedback = 2.0 / c.N * static_cast<double>(delta_r + delta_a) / (a_avg + c.mu);
    return own - feedback;
}

double tipping_point(double lambda_min) {
    if (!(lambda_min > 0.0)) throw std::domain_error("tipping_point: lambda_min must be > 0");
    return 1.0 / lambda_min;
}

}  // namespace layersim::physical

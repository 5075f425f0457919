#include "layersim/core.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>
#include <vector>

namespace layersim {

AgentStrategy strategy_from_int(int value) {
    switch (value) {
        case -1: return AgentStrategy::Cooperate;
        case 0: return AgentStrategy::Ignore;
        case 1: return AgentStrategy::Defect;
        default: throw std::out_of_range("strategy value out of {-1,0,1}: " + std::to_string(value));
    }
}

std::string format_real(double value) {
    char buf[64];
    // Plain decimals for the everyday range, exponent form outside it.
    const double mag = std::fabs(value);
    const bool plain = mag == 0.0 || (mag >= 1e-6 && mag < 1e15);
    auto [end, ec] = plain ? std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed)
                           : std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific);
    if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, end);
}

double parse_real(const std::string& text, const std::string& field) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw ValidationError(field, "expected a real number, got '" + text + "'");
    return value;
}

long long parse_integer(const std::string& text, const std::string& field) {
    long long value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw ValidationError(field, "expected an integer, got '" + text + "'");
    return value;
}

uint64_t parse_seed(const std::string& text) {
    uint64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw ValidationError("seed", "expected an unsigned 64-bit integer, got '" + text + "'");
    return value;
}

std::string topology_label(const TopologySpec& topo) {
    switch (topo.kind) {
        case TopologyKind::Ring: return "ring";
        case TopologyKind::WattsStrogatz:
            return "ws:" + std::to_string(topo.ws_K) + ":" + format_real(topo.ws_beta);
        case TopologyKind::BarabasiAlbert: return "ba:" + std::to_string(topo.ba_m);
    }
    return "unknown";
}

TopologySpec parse_topology_label(const std::string& label) {
    std::vector<std::string> parts;
    std::stringstream ss(label);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);

    TopologySpec topo;
    if (parts.size() == 1 && parts[0] == "ring") {
        topo.kind = TopologyKind::Ring;
    } else if (parts.size() == 3 && parts[0] == "ws") {
        topo.kind = TopologyKind::WattsStrogatz;
        topo.ws_K = static_cast<int>(parse_integer(parts[1], "ws_K"));
        topo.ws_beta = parse_real(parts[2], "ws_beta");
    } else if (parts.size() == 2 && parts[0] == "ba") {
        topo.kind = TopologyKind::BarabasiAlbert;
        topo.ba_m = static_cast<int>(parse_integer(parts[1], "ba_m"));
    } else {
        throw ValidationError("topology", "unrecognised topology label '" + label +
                                              "' (expected ring, ws:K:beta or ba:m)");
    }
    return topo;
}

ValidatedParams validate_params(const SystemParams& p) {
    auto positive_finite = [](double x) { return std::isfinite(x) && x > 0.0; };

    if (p.N < 2) throw ValidationError("N", "must be >= 2, got " + std::to_string(p.N));
    if (!positive_finite(p.R_V)) throw ValidationError("R_V_ohm", "must be finite and > 0");
    if (!positive_finite(p.R_0)) throw ValidationError("R0_ohm", "must be finite and > 0");
    if (!positive_finite(p.V)) throw ValidationError("V_volt", "must be finite and > 0");
    if (!std::isfinite(p.lambda_min)) throw ValidationError("lambda_min", "must be finite");
    if (!(p.p_err >= 0.0 && p.p_err <= 1.0))
        throw ValidationError("p_err", "must lie in [0, 1], got " + format_real(p.p_err));
    if (p.steps < 1) throw ValidationError("steps", "must be >= 1");
    if (p.burn_in < 0 || p.burn_in >= p.steps)
        throw ValidationError("burn_in", "must satisfy 0 <= burn_in < steps");

    const TopologySpec& topo = p.topology;
    if (topo.kind == TopologyKind::WattsStrogatz) {
        if (topo.ws_K <= 0 || topo.ws_K % 2 != 0)
            throw ValidationError("ws_K", "must be a positive even integer");
        if (topo.ws_K >= p.N) throw ValidationError("ws_K", "must be < N");
        if (!(topo.ws_beta >= 0.0 && topo.ws_beta <= 1.0))
            throw ValidationError("ws_beta", "must lie in [0, 1]");
    } else if (topo.kind == TopologyKind::BarabasiAlbert) {
        if (topo.ba_m < 1) throw ValidationError("ba_m", "must be >= 1");
        if (topo.ba_m >= p.N) throw ValidationError("ba_m", "must be < N");
    }

    ValidatedParams v;
    v.params = p;
    v.mu = p.R_0 / p.R_V;
    if (!positive_finite(v.mu)) throw ValidationError("R0_ohm", "R0/R_V must be finite and > 0");
    v.R = p.N * p.R_0;
    v.V_scaled = p.V * std::sqrt(static_cast<double>(p.N));
    v.P_typ = p.V * p.V / p.R_V;
    return v;
}

}  // namespace layersim

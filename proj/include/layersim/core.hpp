#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace layersim {

/// Raised when a parameter set or a parsed value violates a model invariant.
/// The message always names the offending field.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(field) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Behaviour class of an agent at one time step. The integer values are part
/// of every external file format (raster, summary CSV).
enum class AgentStrategy : int8_t {
    Cooperate = -1,  // removed a resistor
    Ignore = 0,      // did nothing
    Defect = +1,     // added a resistor
};

constexpr int to_int(AgentStrategy s) noexcept { return static_cast<int>(s); }

/// Returns the strategy for -1/0/+1; throws std::out_of_range otherwise.
AgentStrategy strategy_from_int(int value);

enum class TopologyKind { Ring, WattsStrogatz, BarabasiAlbert };

struct TopologySpec {
    TopologyKind kind = TopologyKind::Ring;
    int ws_K = 4;          // mean degree, Watts-Strogatz only
    double ws_beta = 0.5;  // rewiring probability, Watts-Strogatz only
    int ba_m = 2;          // attachments per new node, Barabasi-Albert only

    bool operator==(const TopologySpec&) const = default;
};

/// Shortest decimal text that parses back to exactly the same double.
std::string format_real(double value);

/// Strict parse of a whole string as a double; throws ValidationError(field).
double parse_real(const std::string& text, const std::string& field);

/// Strict parse of a whole string as a signed integer.
long long parse_integer(const std::string& text, const std::string& field);

/// Strict parse of an unsigned 64-bit seed.
uint64_t parse_seed(const std::string& text);

/// Compact label used in CSV files and sweep axes: "ring", "ws:4:0.5", "ba:2".
std::string topology_label(const TopologySpec& topo);

/// Inverse of topology_label.
TopologySpec parse_topology_label(const std::string& label);

/// Raw, unvalidated parameters of one simulation run. Resistances in ohms,
/// voltage in volts. V is the base voltage; the source is driven at V*sqrt(N).
struct SystemParams {
    int N = 100;
    double R_V = 2.0;
    double R_0 = 200.0;
    double V = 1.0;
    double lambda_min = 0.0005;
    double p_err = 0.01;
    TopologySpec topology{};
    int steps = 1000;
    int burn_in = 0;
    uint64_t seed = 1;

    bool operator==(const SystemParams&) const = default;
};

/// Parameters that passed validation, with the derived circuit constants.
struct ValidatedParams {
    SystemParams params;
    double mu = 0.0;        // R_0 / R_V, the optimal average resistor count
    double R = 0.0;         // per-resistor resistance N * R_0
    double V_scaled = 0.0;  // V * sqrt(N)
    double P_typ = 0.0;     // V^2 / R_V

    int N() const noexcept { return params.N; }
};

/// Checks every invariant of SystemParams and attaches the derived constants.
/// Throws ValidationError naming the first offending field.
ValidatedParams validate_params(const SystemParams& params);

}  // namespace layersim

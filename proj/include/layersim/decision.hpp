#pragma once

#include <limits>
#include <vector>

#include "layersim/core.hpp"
#include "layersim/rng.hpp"

namespace layersim::decision {

/// Mutable per-agent state carried between steps.
struct AgentRecord {
    int id = 0;
    int a = 1;                                   // active resistors, never below 1
    AgentStrategy strategy = AgentStrategy::Ignore;
    double gene = 0.0;                           // selfishness in [0, 1), fixed per run
    double last_power = 0.0;                     // P_i at the latest completed step
    double last_gain = -std::numeric_limits<double>::infinity();  // gain realised at that step
};

/// N independent uniform draws in [0, 1).
std::vector<double> init_genes(int N, Rng& rng);

/// Chooses the agent's next strategy.
///
/// 1. A gain at or above lambda_min keeps the current strategy.
/// 2. Otherwise a strictly negative neighbour sum (cooperative majority) yields Cooperate.
/// 3. Otherwise xi1 > gene yields Cooperate.
/// 4. Otherwise xi2 < gene yields Defect, else Ignore.
///
/// Branches 1 and 2 draw nothing; branch 3 draws once; branch 4 twice.
AgentStrategy decide(const AgentRecord& record, int inbox_sum, double lambda_min, Rng& rng);

/// Applies a decision to the resistor count. Cooperate at a = 1 keeps the
/// floor of one resistor but still records Cooperate as the strategy.
AgentRecord apply_action(AgentRecord record, AgentStrategy decision);

}  // namespace layersim::decision

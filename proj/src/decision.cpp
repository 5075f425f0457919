#include "layersim/decision.hpp"

#include <algorithm>

namespace layersim::decision {

std::vector<double> init_genes(int N, Rng& rng) {
    std::vector<double> genes(static_cast<std::size_t>(std::max(N, 0)));
    for (auto& g : genes) g = rng.uniform01();
    return genes;
}

AgentStrategy decide(const AgentRecord& record, int inbox_sum, double lambda_min, Rng& rng) {
    if (record.last_gain >= lambda_min) return record.strategy;
    if (inbox_sum < 0) return AgentStrategy::Cooperate;
    if (rng.uniform01() > record.gene) return AgentStrategy::Cooperate;
    return rng.uniform01() < record.gene ? AgentStrategy::Defect : AgentStrategy::Ignore;
}

AgentRecord apply_action(AgentRecord record, AgentStrategy decision) {
    switch (decision) {
        case AgentStrategy::Defect: ++record.a; break;
        case AgentStrategy::Cooperate: record.a = std::max(record.a - 1, 1); break;
        case AgentStrategy::Ignore: break;
    }
    record.strategy = decision;
    return record;
}

}  // namespace layersim::decision

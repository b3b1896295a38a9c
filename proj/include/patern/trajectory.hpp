#pragma once

#include <vector>

#include "patern/geometry.hpp"

namespace patern {

// A candidate or executed state sequence. terrain_ids and utilities are
// filled in lazily: terrain_ids by execute(), utilities by the planner's
// preference-cost evaluation.
struct Trajectory {
    std::vector<RobotState> states;
    Action action;                    // generating action for rollouts
    std::vector<int> terrain_ids;     // per state, empty until annotated
    std::vector<double> utilities;    // per state, empty until evaluated

    std::size_t size() const { return states.size(); }
    bool empty() const { return states.empty(); }

    double arc_length() const {
        double len = 0.0;
        for (std::size_t i = 1; i < states.size(); ++i)
            len += distance(states[i - 1], states[i]);
        return len;
    }
};

}  // namespace patern

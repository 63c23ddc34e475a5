#include "ast/core/simulator.hpp"

#include <stdexcept>
#include <string>

namespace ast {

const std::vector<double>& require_continuous(const EnvironmentAction& action, int dimension) {
    if (action.is_seed()) {
        throw std::invalid_argument("action: seed payload given to a continuous-mode simulator");
    }
    const auto& values = action.values();
    if (static_cast<int>(values.size()) != dimension) {
        throw std::invalid_argument("action: expected " + std::to_string(dimension) +
                                    " components, got " + std::to_string(values.size()));
    }
    return values;
}

std::uint64_t require_seed(const EnvironmentAction& action) {
    if (!action.is_seed()) {
        throw std::invalid_argument("action: continuous payload given to a seed-mode simulator");
    }
    return action.seed_value();
}

} // namespace ast

#include "redqaoa/common.hpp"

#include <cstdlib>

namespace redqaoa {

int statevector_guard() {
    static const int guard = [] {
        if (const char* env = std::getenv("RED_QAOA_GUARD")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 24;
    }();
    return guard;
}

void check_statevector_guard(int node_count) {
    if (node_count > statevector_guard()) {
        throw GuardError("graph has " + std::to_string(node_count) +
                         " nodes, exceeding the statevector guard of " +
                         std::to_string(statevector_guard()) +
                         " qubits (set RED_QAOA_GUARD to override)");
    }
}

} // namespace redqaoa

#include "boundaryq/common.hpp"

#include <cstdio>
#include <cstdlib>

namespace boundaryq {

int dense_qubit_limit() {
    const char* env = std::getenv("BOUNDARYQ_DENSE_LIMIT");
    if (env == nullptr || *env == '\0') {
        return 14;
    }
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || value < 1 || value > 30) {
        return 14;
    }
    return static_cast<int>(value);
}

void check_dense_limit(int qubits, const std::string& what) {
    int limit = dense_qubit_limit();
    if (qubits > limit) {
        throw resource_limit_error(what + ": " + std::to_string(qubits) +
                                   " qubits exceeds dense limit " + std::to_string(limit));
    }
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace boundaryq

#include "lethargy/common.hpp"

#include <cstdlib>
#include <string>

namespace lethargy {

std::size_t thread_cap() {
    const char* env = std::getenv("LETHARGY_THREADS");
    if (!env || !*env) return 1;
    try {
        long v = std::stol(env);
        return v < 1 ? 1 : static_cast<std::size_t>(v);
    } catch (...) {
        return 1;
    }
}

}  // namespace lethargy

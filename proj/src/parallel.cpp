#include "bsc_exponents/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bsc {

int worker_count() {
    if (const char* env = std::getenv("BSC_EXPONENTS_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return std::min(n, 256);
        } catch (...) {
            // fall through to the hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace bsc

#include "algcomb/parallel.hpp"

#include <cstdlib>
#include <string>

namespace algcomb {

int thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ALGCOMB_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace algcomb

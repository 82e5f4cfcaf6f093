#include "seqcube/parallel.hpp"

#include <cstdlib>
#include <string>

namespace seqcube {

int default_workers() {
    if (const char* env = std::getenv("SEQCUBE_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace seqcube

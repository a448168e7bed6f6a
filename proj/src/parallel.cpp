#include "polyverify/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace polyverify {

int default_workers() {
    if (const char* env = std::getenv("POLYVERIFY_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

void set_workers(int n) {
    if (n > 0)
        omp_set_num_threads(n);
    else
        omp_set_num_threads(default_workers());
}

void apply_env_workers() { set_workers(default_workers()); }

}  // namespace polyverify

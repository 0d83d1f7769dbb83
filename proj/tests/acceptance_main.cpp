// Runs the full verification suite and prints one line per criterion.
#include "curveasym/acceptance.hpp"

#include <cstdio>

int main() {
    auto results = curveasym::run_acceptance();
    for (const auto& r : results) {
        std::printf("criterion %d [%s] %s (%.2f s)%s%s\n", r.id,
                    r.pass ? "pass" : "FAIL", r.name.c_str(), r.seconds,
                    r.pass ? "" : ": ", r.pass ? "" : r.detail.c_str());
    }
    return curveasym::all_passed(results) ? 0 : 1;
}

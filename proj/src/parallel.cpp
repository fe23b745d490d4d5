#include "zsf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zsf {

int default_jobs() {
    if (const char* env = std::getenv("ZSF_JOBS")) {
        try {
            const int jobs = std::stoi(env);
            if (jobs >= 1) return jobs;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace zsf

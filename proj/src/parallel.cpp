#include "onsager/parallel.hpp"

#include <cstdlib>
#include <string>

#include "onsager/error.hpp"

namespace onsager {

int thread_cap() {
    if (const char* env = std::getenv("ONSAGER_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        require(*end == '\0' && v >= 1 && v <= 4096,
                std::string("ONSAGER_THREADS must be a positive integer, got ") + env);
        return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace onsager

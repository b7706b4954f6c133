#include "qsig/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qsig {

namespace {

std::atomic<unsigned> configured{0};

unsigned default_threads() {
    if (const char* env = std::getenv("QSIG_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

void set_thread_count(unsigned n) { configured.store(n); }

unsigned thread_count() {
    const unsigned n = configured.load();
    return n ? n : default_threads();
}

}  // namespace qsig

#include "opmult/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace opmult {

namespace {

std::size_t initial_thread_count()
{
    if (const char* env = std::getenv("WORKBENCH_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::atomic<std::size_t>& threads()
{
    static std::atomic<std::size_t> n{initial_thread_count()};
    return n;
}

} // namespace

std::size_t thread_count() { return threads().load(); }

void set_thread_count(std::size_t n) { threads().store(n == 0 ? 1 : n); }

} // namespace opmult

#include "interference/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace interference {

unsigned thread_budget() {
    unsigned budget = 0;
    if (const char* env = std::getenv("INTERFERENCE_THREADS")) {
        budget = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    if (budget == 0) budget = std::thread::hardware_concurrency();
    return budget ? budget : 1;
}

void run_chunks(std::size_t count, const std::function<void(std::size_t)>& chunk) {
    if (count == 0) return;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(thread_budget(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) chunk(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                chunk(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace interference

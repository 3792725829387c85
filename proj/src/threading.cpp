#include "wlnn/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wlnn {

int thread_count() {
    if (const char* env = std::getenv("WLNN_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    int workers = thread_count();
    if (workers <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<int>(n);

    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};

    auto worker = [&]() {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                bool expect = false;
                if (failed.compare_exchange_strong(expect, true))
                    first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failed.load() && first_error) std::rethrow_exception(first_error);
}

} // namespace wlnn

#include "slspec/parallel.hpp"

#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

namespace slspec::par {

namespace {
std::atomic<int> g_max_threads{0};
}

int max_threads()
{
    int n = g_max_threads.load();
    if (n <= 0) n = (int)std::thread::hardware_concurrency();
    return n > 0 ? n : 1;
}

void set_max_threads(int n)
{
    g_max_threads.store(n);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body)
{
    if (n <= 0) return;
    const int nt = (int)std::min<std::int64_t>(max_threads(), n);
    if (nt <= 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt - 1);
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&](int t) {
        try {
            const std::int64_t lo = n * t / nt, hi = n * (t + 1) / nt;
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    for (int t = 1; t < nt; ++t) pool.emplace_back(run, t);
    run(0);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace slspec::par

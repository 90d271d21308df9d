#include "runtime.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace linideal {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int threads) { g_threads.store(threads < 1 ? 1 : threads); }
int thread_count() { return g_threads.load(); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int nt = thread_count();
    if (nt <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(nt), count);
    pool.reserve(nworkers);
    for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace linideal

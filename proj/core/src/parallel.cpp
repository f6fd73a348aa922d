#include <cohit/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cohit {

void serial_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

ParallelFor thread_pool_for(unsigned jobs) {
    if (jobs <= 1) return serial_for;
    return [jobs](std::size_t n, const std::function<void(std::size_t)>& body) {
        std::atomic<std::size_t> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!err) err = std::current_exception();
                    next = n;
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned t = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
        for (unsigned j = 1; j < t; ++j) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    };
}

}  // namespace cohit

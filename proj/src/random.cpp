#include "uwsa/random.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace uwsa {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t key, std::uint64_t id)
{
    return splitmix64(key ^ splitmix64(id + 0x632BE59BD9B4E019ULL));
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed) : key_(splitmix64(seed)) {}

RandomStream RandomStream::substream(std::uint64_t id) const
{
    return RandomStream(FromKey{}, combine(key_, id));
}

Engine RandomStream::engine(std::uint64_t chunk) const
{
    // Distinct salt so engine(i) never aliases substream(i).key().
    return Engine(combine(key_ ^ 0xD1B54A32D192ED03ULL, chunk));
}

unsigned Parallelism::resolved() const
{
    if (threads != 0) {
        return threads;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_chunk(std::size_t chunks, const Parallelism& par,
                    const std::function<void(std::size_t)>& body)
{
    const auto workers = static_cast<std::size_t>(
        std::min<std::size_t>(par.resolved(), std::max<std::size_t>(chunks, 1)));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            body(c);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks) {
                return;
            }
            try {
                body(c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(chunks);
                return;
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    pool.clear();

    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace uwsa

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace uwsa {

using Engine = std::mt19937_64;

/// Uniform double on the open interval (0, 1), built from the top 53 bits of
/// one engine output so the value sequence is identical on every platform.
inline double uniform_open01(Engine& engine)
{
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform index in [0, n). n must be positive.
inline std::size_t uniform_index(Engine& engine, std::size_t n)
{
    auto i = static_cast<std::size_t>(uniform_open01(engine) * static_cast<double>(n));
    return i < n ? i : n - 1;
}

/// Bernoulli(p) draw.
inline bool bernoulli(Engine& engine, double p)
{
    return uniform_open01(engine) < p;
}

/**
 * Hierarchical seed key.  A stream never produces numbers itself; it hands out
 * independent engines for numbered chunks of work, and derives child streams
 * for independent sub-experiments.  Because every chunk engine depends only on
 * (seed path, chunk index), results do not depend on how chunks are scheduled.
 */
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed);

    RandomStream substream(std::uint64_t id) const;
    Engine engine(std::uint64_t chunk) const;

    std::uint64_t key() const { return key_; }

private:
    struct FromKey {};
    RandomStream(FromKey, std::uint64_t key) : key_(key) {}

    std::uint64_t key_;
};

struct Parallelism
{
    /// Worker thread count; 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;

    unsigned resolved() const;
};

/// Number of Monte Carlo trials (or slots) per chunk.  Part of the
/// reproducibility contract: changing it changes every sampled value.
inline constexpr std::size_t kChunkSize = 4096;

/// Runs body(chunk_index) for every chunk in [0, chunks) on a pool of workers.
/// Each chunk is executed exactly once; the body must only write to state
/// owned by its chunk.  The first exception thrown by any chunk is rethrown.
void for_each_chunk(std::size_t chunks, const Parallelism& par,
                    const std::function<void(std::size_t)>& body);

inline std::size_t chunk_count(std::size_t items)
{
    return (items + kChunkSize - 1) / kChunkSize;
}

} // namespace uwsa

#include "uwsa/slotsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uwsa {

namespace {

double ratio(std::uint64_t num, std::uint64_t den)
{
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double bernoulli_se(double p, std::uint64_t n)
{
    return n == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

struct ChunkCounts
{
    std::uint64_t idle = 0;
    std::uint64_t successes = 0;
    std::vector<std::uint64_t> histogram;
};

} // namespace

double SlotSimResult::empirical_throughput() const
{
    return ratio(reference_successes, slots_total);
}

double SlotSimResult::empirical_outage() const
{
    return ratio(slots_active - reference_successes, slots_total);
}

double SlotSimResult::throughput_std_error() const
{
    return bernoulli_se(empirical_throughput(), slots_total);
}

double SlotSimResult::outage_std_error() const
{
    return bernoulli_se(empirical_outage(), slots_total);
}

SlotSimResult run_slots(std::uint64_t slots, const AccessParams& access, const Deployment& dep,
                        const WaterMedium& medium, const LinkParams& link,
                        const RandomStream& stream, const Parallelism& par)
{
    if (slots == 0) {
        throw std::invalid_argument("at least one slot is required");
    }
    const unsigned users = access.users();
    const double pa = access.activation_prob();

    std::vector<ChunkCounts> per_chunk(chunk_count(slots));
    for_each_chunk(per_chunk.size(), par, [&](std::size_t chunk) {
        Engine engine = stream.engine(chunk);
        ChunkCounts& counts = per_chunk[chunk];
        counts.histogram.assign(users + 1, 0);
        std::vector<double> gammas;
        gammas.reserve(users);

        const std::uint64_t begin = chunk * kChunkSize;
        const std::uint64_t end = std::min<std::uint64_t>(slots, begin + kChunkSize);
        for (std::uint64_t s = begin; s < end; ++s) {
            unsigned active = 0;
            for (unsigned u = 0; u < users; ++u) {
                active += bernoulli(engine, pa) ? 1u : 0u;
            }
            ++counts.histogram[active];
            if (active == 0) {
                ++counts.idle;
                continue;
            }

            gammas.resize(active);
            for (auto& g : gammas) {
                g = snr(link, gain(medium, distance_to_ap(sample_position(engine, dep))));
            }
            const std::size_t ref = uniform_index(engine, active);
            std::swap(gammas[0], gammas[ref]);
            const double value = sinr(gammas.front(), std::span(gammas).subspan(1));
            if (value >= link.capture_threshold()) {
                ++counts.successes;
            }
        }
    });

    SlotSimResult result;
    result.slots_total = slots;
    result.active_histogram.assign(users + 1, 0);
    for (const auto& c : per_chunk) {
        result.slots_idle += c.idle;
        result.reference_successes += c.successes;
        for (unsigned k = 0; k <= users; ++k) {
            result.active_histogram[k] += c.histogram[k];
        }
    }
    result.slots_active = result.slots_total - result.slots_idle;
    return result;
}

} // namespace uwsa

#pragma once

#include <cstdint>
#include <vector>

#include "uwsa/access.hpp"
#include "uwsa/channel.hpp"
#include "uwsa/geometry.hpp"
#include "uwsa/random.hpp"
#include "uwsa/sinr.hpp"

namespace uwsa {

/// Counters from a slot-by-slot run.  Ratios are per slot, idle slots included.
struct SlotSimResult
{
    std::uint64_t slots_total = 0;
    std::uint64_t slots_idle = 0;
    std::uint64_t slots_active = 0;
    std::uint64_t reference_successes = 0;
    /// active_histogram[k] = number of slots with exactly k active devices.
    std::vector<std::uint64_t> active_histogram;

    double empirical_throughput() const;
    double empirical_outage() const;
    double throughput_std_error() const;
    double outage_std_error() const;
};

/**
 * Simulates `slots` independent slots of slotted ALOHA with capture.
 *
 * Per slot every device flips its own activation coin; active devices get
 * fresh uniform positions, one of them is chosen uniformly as the reference
 * user, and the slot counts as a success iff its SINR >= gamma_th.
 * Deterministic in (stream, parameters) for any thread count.
 */
SlotSimResult run_slots(std::uint64_t slots, const AccessParams& access, const Deployment& dep,
                        const WaterMedium& medium, const LinkParams& link,
                        const RandomStream& stream, const Parallelism& par = {});

} // namespace uwsa

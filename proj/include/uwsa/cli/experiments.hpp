#pragma once

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "uwsa/cli/config.hpp"
#include "uwsa/random.hpp"
#include "uwsa/sinr.hpp"
#include "uwsa/slotsim.hpp"

namespace uwsa::cli {

enum class Command { SweepUsers, SweepPa, Outage, Optimize, SlotSim, SampleGeometry };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

// Sub-stream ids under the master seed.  Every command that needs an outage
// table draws it from the same sub-stream, so tables agree across commands.
inline constexpr std::uint64_t kTableStream = 1;
inline constexpr std::uint64_t kSlotStream = 2;
inline constexpr std::uint64_t kGeometryStream = 3;

/// Monte Carlo table for k = 1..max_k, or the all-zero table when
/// cfg.perfect_capture is set.
ConditionalOutageTable outage_table(const ExperimentConfig& cfg, unsigned max_k,
                                    const Parallelism& par);

struct UserSweepRow
{
    unsigned users;
    double pa;
    double c_per_m;
    double outage;
    double throughput;
    double outage_std_error;
    double throughput_std_error;
};

std::vector<UserSweepRow> sweep_users(const ExperimentConfig& cfg, const Parallelism& par);

struct PaSweepRow
{
    double pa;
    unsigned users;
    double c_per_m;
    double throughput;
    double throughput_std_error;
    bool is_argmax;
};

/// For each U in the configured range: p_a = 0 followed by the optimizer grid.
std::vector<PaSweepRow> sweep_pa(const ExperimentConfig& cfg, const Parallelism& par);

struct OptimizeRow
{
    unsigned users;
    double pa_star;
    double throughput_star;
};

std::vector<OptimizeRow> optimize(const ExperimentConfig& cfg, const Parallelism& par);

/// Requires a single user count.
SlotSimResult slot_sim(const ExperimentConfig& cfg, const Parallelism& par);

std::vector<Point3> sample_geometry(const ExperimentConfig& cfg);

/// Runs `command` and writes its CSV (comment line, header, rows) to `out`.
void run_command(Command command, const ExperimentConfig& cfg, std::ostream& out,
                 const Parallelism& par = {});

} // namespace uwsa::cli

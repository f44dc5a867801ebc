#include "uwsa/cli/experiments.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

#include "uwsa/access.hpp"

namespace uwsa::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 6> kCommands{{
    {Command::SweepUsers, "sweep-users"},
    {Command::SweepPa, "sweep-pa"},
    {Command::Outage, "outage"},
    {Command::Optimize, "optimize"},
    {Command::SlotSim, "slot-sim"},
    {Command::SampleGeometry, "sample-geometry"},
}};

std::string num(double v)
{
    return fmt::format("{:.9g}", v);
}

void write_line(std::ostream& out, const std::string& line)
{
    out << line << '\n';
}

} // namespace

std::optional<Command> parse_command(std::string_view name)
{
    for (const auto& [command, text] : kCommands) {
        if (text == name) {
            return command;
        }
    }
    return std::nullopt;
}

std::string_view command_name(Command command)
{
    for (const auto& [c, text] : kCommands) {
        if (c == command) {
            return text;
        }
    }
    return "unknown";
}

ConditionalOutageTable outage_table(const ExperimentConfig& cfg, unsigned max_k,
                                    const Parallelism& par)
{
    if (cfg.perfect_capture) {
        return ConditionalOutageTable::perfect_capture(max_k);
    }
    return estimate_outage_table(max_k, cfg.deployment(), cfg.medium(), cfg.link(), cfg.mc_trials,
                                 RandomStream(cfg.seed).substream(kTableStream), par);
}

std::vector<UserSweepRow> sweep_users(const ExperimentConfig& cfg, const Parallelism& par)
{
    const auto table = outage_table(cfg, cfg.users_max, par);
    const double c = cfg.medium().extinction_per_m();
    std::vector<UserSweepRow> rows;
    for (unsigned u = cfg.users_min; u <= cfg.users_max; ++u) {
        const AccessParams access(u, cfg.pa);
        const double se = mixture_std_error(access, table);
        rows.push_back({u, cfg.pa, c, unconditional_outage(access, table),
                        throughput(access, table), se, se});
    }
    return rows;
}

std::vector<PaSweepRow> sweep_pa(const ExperimentConfig& cfg, const Parallelism& par)
{
    const auto table = outage_table(cfg, cfg.users_max, par);
    const double c = cfg.medium().extinction_per_m();
    const auto grid = activation_grid(cfg.pa_step);
    std::vector<PaSweepRow> rows;
    for (unsigned u = cfg.users_min; u <= cfg.users_max; ++u) {
        const auto best = optimize_pa(u, table, cfg.pa_step);
        rows.push_back({0.0, u, c, 0.0, 0.0, false});
        for (double p : grid) {
            const AccessParams access(u, p);
            rows.push_back({p, u, c, throughput(access, table), mixture_std_error(access, table),
                            p == best.activation_prob});
        }
    }
    return rows;
}

std::vector<OptimizeRow> optimize(const ExperimentConfig& cfg, const Parallelism& par)
{
    const auto table = outage_table(cfg, cfg.users_max, par);
    std::vector<OptimizeRow> rows;
    for (unsigned u = cfg.users_min; u <= cfg.users_max; ++u) {
        const auto best = optimize_pa(u, table, cfg.pa_step);
        rows.push_back({u, best.activation_prob, best.throughput});
    }
    return rows;
}

SlotSimResult slot_sim(const ExperimentConfig& cfg, const Parallelism& par)
{
    if (cfg.users_is_range()) {
        throw ConfigError("users", "slot-sim needs a single user count, not a range");
    }
    return run_slots(cfg.slots, AccessParams(cfg.users_min, cfg.pa), cfg.deployment(),
                     cfg.medium(), cfg.link(), RandomStream(cfg.seed).substream(kSlotStream), par);
}

std::vector<Point3> sample_geometry(const ExperimentConfig& cfg)
{
    const auto dep = cfg.deployment();
    const auto stream = RandomStream(cfg.seed).substream(kGeometryStream);
    std::vector<Point3> points(cfg.points);
    // Sequential chunks so the point list matches the chunked samplers.
    for (std::size_t chunk = 0; chunk < chunk_count(points.size()); ++chunk) {
        Engine engine = stream.engine(chunk);
        const std::size_t end = std::min(points.size(), (chunk + 1) * kChunkSize);
        for (std::size_t i = chunk * kChunkSize; i < end; ++i) {
            points[i] = sample_position(engine, dep);
        }
    }
    return points;
}

void run_command(Command command, const ExperimentConfig& cfg, std::ostream& out,
                 const Parallelism& par)
{
    write_line(out, fmt::format("# uwsa {} {}", command_name(command), cfg.describe()));

    switch (command) {
    case Command::SweepUsers:
        write_line(out, "U,p_a,c_per_m,P_out,T,P_out_stderr,T_stderr");
        for (const auto& r : sweep_users(cfg, par)) {
            write_line(out, fmt::format("{},{},{},{},{},{},{}", r.users, num(r.pa), num(r.c_per_m),
                                        num(r.outage), num(r.throughput), num(r.outage_std_error),
                                        num(r.throughput_std_error)));
        }
        break;
    case Command::SweepPa:
        write_line(out, "p_a,U,c_per_m,T,T_stderr,is_argmax");
        for (const auto& r : sweep_pa(cfg, par)) {
            write_line(out, fmt::format("{},{},{},{},{},{}", num(r.pa), r.users, num(r.c_per_m),
                                        num(r.throughput), num(r.throughput_std_error),
                                        r.is_argmax ? 1 : 0));
        }
        break;
    case Command::Outage: {
        write_line(out, "k,P_out_k,P_out_k_stderr,trials");
        const auto table = outage_table(cfg, cfg.users_max, par);
        for (unsigned k = 1; k <= table.max_active_users(); ++k) {
            const auto& e = table.at(k);
            write_line(out, fmt::format("{},{},{},{}", k, num(e.value), num(e.std_error), e.trials));
        }
        break;
    }
    case Command::Optimize:
        write_line(out, "U,pa_star,T_star");
        for (const auto& r : optimize(cfg, par)) {
            write_line(out, fmt::format("{},{},{}", r.users, num(r.pa_star), num(r.throughput_star)));
        }
        break;
    case Command::SlotSim: {
        const auto r = slot_sim(cfg, par);
        write_line(out, "U,p_a,c_per_m,slots_total,slots_idle,slots_active,reference_successes,"
                        "throughput,throughput_stderr,outage,outage_stderr");
        write_line(out, fmt::format("{},{},{},{},{},{},{},{},{},{},{}", cfg.users_min, num(cfg.pa),
                                    num(cfg.medium().extinction_per_m()), r.slots_total,
                                    r.slots_idle, r.slots_active, r.reference_successes,
                                    num(r.empirical_throughput()), num(r.throughput_std_error()),
                                    num(r.empirical_outage()), num(r.outage_std_error())));
        break;
    }
    case Command::SampleGeometry:
        write_line(out, "x_m,y_m,z_m");
        for (const auto& p : sample_geometry(cfg)) {
            write_line(out, fmt::format("{},{},{}", num(p.x), num(p.y), num(p.z)));
        }
        break;
    }
}

} // namespace uwsa::cli

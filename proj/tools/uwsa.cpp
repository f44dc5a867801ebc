// Command-line front end: slotted ALOHA with capture in an underwater
// optical cell.  See README.md for the subcommands and config keys.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uwsa/cli/config.hpp"
#include "uwsa/cli/experiments.hpp"

namespace {

struct Flags
{
    std::string config_path;
    std::vector<std::string> sets;
    std::optional<std::string> seed, out, water, radius, users, pa, trials, slots, gamma_th_db;
    unsigned threads = 0;
};

void add_common_flags(CLI::App& sub, Flags& f)
{
    sub.add_option("--config", f.config_path, "key = value config file");
    sub.add_option("--set", f.sets, "override any config key (key=value), repeatable");
    sub.add_option("--seed", f.seed, "master seed (decimal or 0x hex)");
    sub.add_option("--out", f.out, "output CSV path (default stdout)");
    sub.add_option("--water", f.water, "pure_sea | clear_ocean | coastal_ocean | turbid_harbor");
    sub.add_option("--radius", f.radius, "half-sphere radius in meters");
    sub.add_option("--users", f.users, "user count N or inclusive range A:B");
    sub.add_option("--pa", f.pa, "activation probability");
    sub.add_option("--trials", f.trials, "Monte Carlo trials per active-user count");
    sub.add_option("--slots", f.slots, "slots for slot-sim");
    sub.add_option("--gamma-th-db", f.gamma_th_db, "capture threshold in dB");
    sub.add_option("--threads", f.threads, "worker threads (0 = all cores)");
}

uwsa::cli::RawConfig collect(const Flags& f)
{
    uwsa::cli::RawConfig raw;
    if (!f.config_path.empty()) {
        raw = uwsa::cli::read_config_file(f.config_path);
    }
    auto push = [&](const char* key, const std::optional<std::string>& v) {
        if (v) {
            raw.emplace_back(key, *v);
        }
    };
    for (const auto& s : f.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw uwsa::cli::ConfigError("set", "expected key=value, got '" + s + "'");
        }
        raw.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    push("seed", f.seed);
    push("out", f.out);
    push("water", f.water);
    push("radius_m", f.radius);
    push("users", f.users);
    push("pa", f.pa);
    push("mc_trials", f.trials);
    push("slots", f.slots);
    push("gamma_th_db", f.gamma_th_db);
    return raw;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Slotted ALOHA with capture for underwater optical IoT cells"};
    app.require_subcommand(1);

    Flags flags;
    using uwsa::cli::Command;
    const std::pair<Command, const char*> commands[] = {
        {Command::SweepUsers, "outage and throughput for each U in --users"},
        {Command::SweepPa, "throughput over the p_a grid, argmax marked"},
        {Command::Outage, "conditional outage table P_out(k), k = 1..U"},
        {Command::Optimize, "throughput-maximizing p_a for each U"},
        {Command::SlotSim, "slot-by-slot simulation summary"},
        {Command::SampleGeometry, "sampled device positions"},
    };
    for (const auto& [command, help] : commands) {
        auto* sub = app.add_subcommand(std::string(uwsa::cli::command_name(command)), help);
        add_common_flags(*sub, flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const auto command = *uwsa::cli::parse_command(app.get_subcommands().front()->get_name());
        const auto cfg = uwsa::cli::parse_config(collect(flags));
        const uwsa::Parallelism par{flags.threads};

        if (cfg.out.empty()) {
            uwsa::cli::run_command(command, cfg, std::cout, par);
            std::cout.flush();
            if (!std::cout) {
                throw uwsa::cli::ConfigError("out", "write to stdout failed");
            }
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) {
                throw uwsa::cli::ConfigError("out", "cannot open '" + cfg.out + "' for writing");
            }
            uwsa::cli::run_command(command, cfg, file, par);
            file.close();
            if (!file) {
                throw uwsa::cli::ConfigError("out", "write to '" + cfg.out + "' failed");
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "uwsa: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "uwsa/cli/experiments.hpp"

using namespace uwsa;
using namespace uwsa::cli;

namespace {

ExperimentConfig config(RawConfig raw)
{
    raw.insert(raw.begin(), {"mc_trials", "4000"});
    return parse_config(raw);
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::string run(Command c, const ExperimentConfig& cfg, unsigned threads = 1)
{
    std::ostringstream out;
    run_command(c, cfg, out, Parallelism{threads});
    return out.str();
}

} // namespace

TEST(Commands, NamesRoundTrip)
{
    for (auto c : {Command::SweepUsers, Command::SweepPa, Command::Outage, Command::Optimize,
                   Command::SlotSim, Command::SampleGeometry}) {
        EXPECT_EQ(parse_command(command_name(c)), c);
    }
    EXPECT_FALSE(parse_command("plot"));
}

TEST(SweepUsers, CsvLayout)
{
    const auto out = lines(run(Command::SweepUsers, config({{"users", "1:5"}})));
    ASSERT_EQ(out.size(), 2u + 5u);
    EXPECT_EQ(out[0].rfind("# uwsa sweep-users ", 0), 0u);
    EXPECT_NE(out[0].find("seed=41226"), std::string::npos);
    EXPECT_EQ(out[1], "U,p_a,c_per_m,P_out,T,P_out_stderr,T_stderr");
    EXPECT_EQ(out[2].rfind("1,0.1,0.056,0,0.1,", 0), 0u);
}

TEST(SweepUsers, PerfectCaptureThroughputIsActivity)
{
    const auto rows = sweep_users(config({{"users", "1:30"}, {"pa", "0.07"},
                                          {"perfect_capture", "true"}}),
                                  {});
    for (const auto& r : rows) {
        EXPECT_NEAR(r.throughput, 1.0 - std::pow(1.0 - 0.07, r.users), 1e-12);
        EXPECT_EQ(r.outage, 0.0);
    }
}

TEST(SweepUsers, TurbidWorseThanPureAndHigherPaWorse)
{
    const auto pure = sweep_users(config({{"users", "8"}, {"pa", "0.05"}}), {});
    const auto turbid = sweep_users(config({{"users", "8"}, {"pa", "0.05"},
                                            {"water", "turbid_harbor"}}),
                                    {});
    const auto busy = sweep_users(config({{"users", "8"}, {"pa", "0.15"}}), {});
    EXPECT_GT(turbid[0].outage, pure[0].outage);
    EXPECT_GT(busy[0].outage, pure[0].outage);
}

TEST(SweepPa, ZeroRowAndSingleArgmaxPerUser)
{
    const auto rows = sweep_pa(config({{"users", "10:12"}, {"pa_step", "0.05"}}), {});
    ASSERT_EQ(rows.size(), 3u * 21u);
    for (unsigned block = 0; block < 3; ++block) {
        const auto* b = &rows[block * 21];
        EXPECT_EQ(b[0].pa, 0.0);
        EXPECT_EQ(b[0].throughput, 0.0);
        EXPECT_EQ(b[20].pa, 1.0);
        int marks = 0;
        double best = -1.0;
        for (int i = 0; i < 21; ++i) {
            marks += b[i].is_argmax ? 1 : 0;
            best = std::max(best, b[i].throughput);
        }
        EXPECT_EQ(marks, 1);
        for (int i = 0; i < 21; ++i) {
            if (b[i].is_argmax) {
                EXPECT_EQ(b[i].throughput, best);
            }
        }
    }
    const auto text = lines(run(Command::SweepPa, config({{"users", "10"}})));
    EXPECT_EQ(text[1], "p_a,U,c_per_m,T,T_stderr,is_argmax");
    EXPECT_EQ(text[2], "0,10,0.056,0,0,0");
    EXPECT_EQ(text.size(), 2u + 101u);
}

TEST(Optimize, PerfectCaptureGivesOne)
{
    const auto rows = optimize(config({{"users", "5"}, {"perfect_capture", "true"}}), {});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].pa_star, 1.0);
    const auto text = lines(run(Command::Optimize, config({{"users", "5"},
                                                           {"perfect_capture", "true"}})));
    EXPECT_EQ(text[1], "U,pa_star,T_star");
    EXPECT_EQ(text[2], "5,1,1");
    for (const auto& r : optimize(config({{"users", "10:50"}, {"perfect_capture", "true"}}), {})) {
        EXPECT_EQ(r.pa_star, 1.0) << "U=" << r.users;
    }
}

TEST(Optimize, MoreUsersSmallerOptimum)
{
    const auto rows = optimize(config({{"users", "10:30"}, {"mc_trials", "20000"}}), {});
    EXPECT_GT(rows.front().pa_star, rows.back().pa_star);
}

TEST(Outage, TableRows)
{
    const auto out = lines(run(Command::Outage, config({{"users", "3"}})));
    ASSERT_EQ(out.size(), 5u);
    EXPECT_EQ(out[1], "k,P_out_k,P_out_k_stderr,trials");
    EXPECT_EQ(out[2], "1,0,0,4000");
}

TEST(SlotSimCommand, IdleChannelAndRangeRejected)
{
    const auto r = slot_sim(config({{"pa", "0"}, {"slots", "1000"}}), {});
    EXPECT_EQ(r.empirical_throughput(), 0.0);
    const auto out = lines(run(Command::SlotSim, config({{"pa", "0"}, {"slots", "1000"}})));
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[2], "10,0,0.056,1000,1000,0,0,0,0,0,0");
    EXPECT_THROW(slot_sim(config({{"users", "2:5"}}), {}), ConfigError);
}

TEST(SampleGeometry, PointCsv)
{
    const auto cfg = config({{"points", "5000"}, {"radius_m", "3"}});
    const auto pts = sample_geometry(cfg);
    ASSERT_EQ(pts.size(), 5000u);
    for (const auto& p : pts) {
        EXPECT_LE(distance_to_ap(p), 3.0 * (1 + 1e-15));
        EXPECT_LT(p.z, 0.0);
    }
    const auto out = lines(run(Command::SampleGeometry, cfg));
    EXPECT_EQ(out[1], "x_m,y_m,z_m");
    EXPECT_EQ(out.size(), 5002u);
}

TEST(Reproducibility, ByteIdenticalAcrossRunsAndThreads)
{
    const auto cfg = config({{"users", "1:12"}, {"water", "coastal_ocean"}, {"slots", "20000"}});
    for (auto c : {Command::SweepUsers, Command::SweepPa, Command::Outage, Command::Optimize,
                   Command::SampleGeometry}) {
        const auto a = run(c, cfg, 1);
        EXPECT_EQ(a, run(c, cfg, 1));
        EXPECT_EQ(a, run(c, cfg, 4));
    }
    const auto single = config({{"users", "12"}, {"slots", "20000"}, {"pa", "0.2"}});
    EXPECT_EQ(run(Command::SlotSim, single, 1), run(Command::SlotSim, single, 4));

    const auto other = config({{"users", "1:12"}, {"water", "coastal_ocean"}, {"seed", "7"}});
    EXPECT_NE(run(Command::Outage, cfg), run(Command::Outage, other));
}

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include <boost/math/distributions/binomial.hpp>

#include "uwsa/access.hpp"

using namespace uwsa;

namespace {

ConditionalOutageTable constant_table(unsigned k_max, double value)
{
    return ConditionalOutageTable(
        std::vector<ProportionEstimate>(k_max, ProportionEstimate{value, 100, 0.0}));
}

// Random non-decreasing table with MC-like standard errors.
ConditionalOutageTable random_table(Engine& e, unsigned k_max)
{
    std::vector<ProportionEstimate> rows;
    double p = 0.0;
    for (unsigned k = 1; k <= k_max; ++k) {
        p = std::min(1.0, p + (1.0 - p) * uniform_open01(e) * 0.5);
        rows.push_back({p, 1000, std::sqrt(p * (1 - p) / 1000)});
    }
    return ConditionalOutageTable(rows);
}

} // namespace

TEST(AccessParams, Validation)
{
    EXPECT_THROW(AccessParams(0, 0.1), std::invalid_argument);
    EXPECT_THROW(AccessParams(5, -0.1), std::invalid_argument);
    EXPECT_THROW(AccessParams(5, 1.1), std::invalid_argument);
    EXPECT_NO_THROW(AccessParams(5, 0.0));
    EXPECT_NO_THROW(AccessParams(5, 1.0));
}

TEST(ActivityPmf, Examples)
{
    const AccessParams p(10, 0.1);
    EXPECT_NEAR(activity_pmf(p, 0), 0.34867844009999993, 1e-12);
    EXPECT_NEAR(activity_pmf(p, 1), 0.38742048899999965, 1e-12);
    EXPECT_NEAR(activity_pmf(AccessParams(7, 0.3), 0), std::pow(0.7, 7), 1e-14);
    EXPECT_THROW(activity_pmf(p, -1), std::domain_error);
    EXPECT_THROW(activity_pmf(p, 11), std::domain_error);
}

TEST(ActivityPmf, MatchesBoostBinomial)
{
    for (unsigned u : {1u, 5u, 20u, 50u, 300u}) {
        for (double pa : {0.01, 0.05, 0.15, 0.5, 0.93}) {
            boost::math::binomial_distribution<double> ref(u, pa);
            for (unsigned k = 0; k <= u; ++k) {
                const double want = boost::math::pdf(ref, k);
                EXPECT_NEAR(activity_pmf(AccessParams(u, pa), k), want, 1e-12 + 1e-10 * want);
            }
        }
    }
}

TEST(ActivityPmf, NormalizesIncludingExtremes)
{
    Engine e(21);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned u = 1 + static_cast<unsigned>(uniform_index(e, 200));
        const double pa = trial % 20 == 0 ? (trial % 40 == 0 ? 0.0 : 1.0) : uniform_open01(e);
        const AccessParams p(u, pa);
        double total = 0.0;
        for (unsigned k = 0; k <= u; ++k) {
            total += activity_pmf(p, k);
        }
        EXPECT_NEAR(total, 1.0, 1e-12) << "U=" << u << " pa=" << pa;
    }
    // Log-space evaluation survives very large U.
    const AccessParams big(10000, 0.5);
    EXPECT_GT(activity_pmf(big, 5000), 0.0);
    EXPECT_TRUE(std::isfinite(activity_pmf(big, 5000)));
}

TEST(UnconditionalOutage, Examples)
{
    const AccessParams p(8, 0.2);
    EXPECT_EQ(unconditional_outage(p, constant_table(8, 0.0)), 0.0);
    EXPECT_NEAR(unconditional_outage(p, constant_table(8, 1.0)), 1.0 - std::pow(0.8, 8), 1e-12);

    const ConditionalOutageTable hand({{0.1, 100, 0.0}, {0.4, 100, 0.0}});
    EXPECT_NEAR(unconditional_outage(AccessParams(2, 0.5), hand), 0.15, 1e-15);
    EXPECT_NEAR(reliability(unconditional_outage(AccessParams(2, 0.5), hand)), 0.85, 1e-15);
}

TEST(UnconditionalOutage, MissingRowsIsDomainError)
{
    EXPECT_THROW(unconditional_outage(AccessParams(5, 0.1), constant_table(4, 0.1)),
                 std::domain_error);
    EXPECT_THROW(throughput(AccessParams(5, 0.1), constant_table(4, 0.1)), std::domain_error);
}

TEST(Reliability, Examples)
{
    EXPECT_EQ(reliability(0.0), 1.0);
    EXPECT_EQ(reliability(1.0), 0.0);
}

TEST(Throughput, Examples)
{
    const AccessParams p(6, 0.3);
    EXPECT_NEAR(throughput(p, constant_table(6, 0.0)), 1.0 - std::pow(0.7, 6), 1e-12);
    EXPECT_EQ(throughput(AccessParams(6, 0.0), constant_table(6, 0.3)), 0.0);
    EXPECT_NEAR(throughput(p, constant_table(6, 1.0)), 0.0, 1e-15);
}

TEST(Throughput, IdentityAndBounds)
{
    Engine e(22);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned u = 1 + static_cast<unsigned>(uniform_index(e, 60));
        const double pa = uniform_open01(e);
        const auto table = random_table(e, u);
        const AccessParams p(u, pa);
        const double out = unconditional_outage(p, table);
        const double t = throughput(p, table);
        const double active = prob_any_active(p);
        double summed = 0.0;
        for (unsigned k = 1; k <= u; ++k) {
            summed += (1.0 - table.at(k).value) * activity_pmf(p, k);
        }
        EXPECT_NEAR(t, summed, 1e-12);
        EXPECT_NEAR(summed + out, active, 1e-12);
        EXPECT_GE(out, 0.0);
        EXPECT_LE(out, active + 1e-15);
        EXPECT_LE(t, active + 1e-15);
        EXPECT_GE(t, -1e-15);
        EXPECT_NEAR(outage_given_active(p, table) * active, out, 1e-12);
    }
    EXPECT_EQ(outage_given_active(AccessParams(3, 0.0), constant_table(3, 0.5)), 0.0);
}

TEST(MixtureStdError, WeightsRowErrors)
{
    const ConditionalOutageTable t({{0.1, 100, 0.03}, {0.4, 100, 0.04}});
    // Weights 0.5 and 0.25 for U = 2, p_a = 0.5.
    EXPECT_NEAR(mixture_std_error(AccessParams(2, 0.5), t),
                std::sqrt(0.25 * 0.0009 + 0.0625 * 0.0016), 1e-15);
}

TEST(ActivationGrid, EndsAtOne)
{
    const auto g = activation_grid(0.01);
    ASSERT_EQ(g.size(), 100u);
    EXPECT_NEAR(g.front(), 0.01, 1e-15);
    EXPECT_EQ(g.back(), 1.0);
    const auto odd = activation_grid(0.3);
    EXPECT_EQ(odd.size(), 4u);
    EXPECT_EQ(odd.back(), 1.0);
    EXPECT_THROW(activation_grid(0.0), std::invalid_argument);
    EXPECT_THROW(activation_grid(0.6), std::invalid_argument);
}

TEST(OptimizePa, PerfectCaptureGoesToOne)
{
    const auto best = optimize_pa(10, ConditionalOutageTable::perfect_capture(10));
    EXPECT_EQ(best.activation_prob, 1.0);
    EXPECT_NEAR(best.throughput, 1.0, 1e-15);

    const auto single = optimize_pa(1, ConditionalOutageTable::perfect_capture(1));
    EXPECT_EQ(single.activation_prob, 1.0);
    EXPECT_NEAR(single.throughput, 1.0, 1e-15);
}

TEST(OptimizePa, CollisionChannelPeaksAtOneOverU)
{
    // Classical collision channel: only lone transmissions succeed.
    std::vector<ProportionEstimate> rows{{0.0, 1, 0.0}};
    for (int k = 2; k <= 20; ++k) {
        rows.push_back({1.0, 1, 0.0});
    }
    const ConditionalOutageTable collision(rows);
    const auto best = optimize_pa(20, collision, 0.01);
    EXPECT_NEAR(best.activation_prob, 0.05, 1e-12);
    EXPECT_NEAR(best.throughput, std::pow(0.95, 19), 1e-12);
}

TEST(OptimizePa, TiesGoToSmallerPa)
{
    const auto best = optimize_pa(3, [](double) { return 0.5; }, 0.1);
    EXPECT_NEAR(best.activation_prob, 0.1, 1e-15);
}

TEST(OptimizePa, HalvingStepMovesArgmaxByAtMostOneStep)
{
    Engine e(23);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned u = 2 + static_cast<unsigned>(uniform_index(e, 40));
        const auto table = random_table(e, u);
        const double step = 0.02;
        const auto coarse = optimize_pa(u, table, step);
        const auto fine = optimize_pa(u, table, step / 2);
        EXPECT_LE(std::abs(coarse.activation_prob - fine.activation_prob), step + 1e-12);
        EXPECT_GE(fine.throughput, coarse.throughput - 1e-15);
    }
}

#include "uwsa/access.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uwsa {

AccessParams::AccessParams(unsigned users, double activation_prob)
    : users_(users), activation_prob_(activation_prob)
{
    if (users == 0) {
        throw std::invalid_argument("at least one user is required");
    }
    if (!(activation_prob >= 0.0 && activation_prob <= 1.0)) {
        throw std::invalid_argument("activation probability must lie in [0, 1]");
    }
}

double activity_pmf(const AccessParams& params, long k)
{
    const long n = params.users();
    if (k < 0 || k > n) {
        throw std::domain_error("active-user count outside [0, U]");
    }
    const double p = params.activation_prob();
    if (p == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    if (p == 1.0) {
        return k == n ? 1.0 : 0.0;
    }
    const double log_choose = std::lgamma(static_cast<double>(n) + 1.0) -
                              std::lgamma(static_cast<double>(k) + 1.0) -
                              std::lgamma(static_cast<double>(n - k) + 1.0);
    return std::exp(log_choose + static_cast<double>(k) * std::log(p) +
                    static_cast<double>(n - k) * std::log1p(-p));
}

double prob_any_active(const AccessParams& params)
{
    return -std::expm1(static_cast<double>(params.users()) *
                       std::log1p(-params.activation_prob()));
}

namespace {

void require_coverage(const AccessParams& params, const ConditionalOutageTable& table)
{
    if (!table.covers(params.users())) {
        throw std::domain_error("outage table covers k <= " +
                                std::to_string(table.max_active_users()) + " but U = " +
                                std::to_string(params.users()));
    }
}

} // namespace

double unconditional_outage(const AccessParams& params, const ConditionalOutageTable& table)
{
    require_coverage(params, table);
    double total = 0.0;
    for (unsigned k = 1; k <= params.users(); ++k) {
        total += table.at(k).value * activity_pmf(params, k);
    }
    return total;
}

double outage_given_active(const AccessParams& params, const ConditionalOutageTable& table)
{
    const double active = prob_any_active(params);
    if (active == 0.0) {
        return 0.0;
    }
    return unconditional_outage(params, table) / active;
}

double reliability(double outage)
{
    return 1.0 - outage;
}

double throughput(const AccessParams& params, const ConditionalOutageTable& table)
{
    // P[U_a > 0] - P_out equals sum_k (1 - P_out(k)) P[U_a = k] exactly, but
    // is evaluated through expm1 so it does not saturate above 1.
    return std::max(0.0, prob_any_active(params) - unconditional_outage(params, table));
}

double mixture_std_error(const AccessParams& params, const ConditionalOutageTable& table)
{
    require_coverage(params, table);
    double var = 0.0;
    for (unsigned k = 1; k <= params.users(); ++k) {
        const double w = activity_pmf(params, k);
        const double se = table.at(k).std_error;
        var += w * w * se * se;
    }
    return std::sqrt(var);
}

std::vector<double> activation_grid(double grid_step)
{
    if (!(grid_step > 0.0 && grid_step <= 0.5)) {
        throw std::invalid_argument("grid step must lie in (0, 0.5]");
    }
    std::vector<double> grid;
    for (long i = 1;; ++i) {
        const double p = static_cast<double>(i) * grid_step;
        if (p >= 1.0 - 1e-9) {
            break;
        }
        grid.push_back(p);
    }
    grid.push_back(1.0);
    return grid;
}

namespace {

// Scores compare by throughput first; an exact tie is broken by the smaller
// directly-evaluated loss 1 - T (which keeps its precision when T rounds to
// 1), and then by the smaller p_a.
struct Score
{
    double throughput;
    double loss;
};

ActivationOptimum grid_argmax(unsigned users, double grid_step,
                              const std::function<Score(double)>& score_at)
{
    if (users == 0) {
        throw std::invalid_argument("at least one user is required");
    }
    ActivationOptimum best{0.0, 0.0};
    Score best_score{-1.0, 2.0};
    for (double p : activation_grid(grid_step)) {
        const Score s = score_at(p);
        if (s.throughput > best_score.throughput ||
            (s.throughput == best_score.throughput && s.loss < best_score.loss)) {
            best_score = s;
            best = {p, s.throughput};
        }
    }
    return best;
}

} // namespace

ActivationOptimum optimize_pa(unsigned users, const std::function<double(double)>& throughput_at,
                              double grid_step)
{
    return grid_argmax(users, grid_step, [&](double p) { return Score{throughput_at(p), 0.0}; });
}

ActivationOptimum optimize_pa(unsigned users, const ConditionalOutageTable& table,
                              double grid_step)
{
    return grid_argmax(users, grid_step, [&](double p) {
        const AccessParams access(users, p);
        return Score{throughput(access, table),
                     activity_pmf(access, 0) + unconditional_outage(access, table)};
    });
}

} // namespace uwsa

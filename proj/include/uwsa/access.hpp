#pragma once

#include <functional>

#include "uwsa/sinr.hpp"

namespace uwsa {

/// U devices, each independently active in a slot with probability p_a.
class AccessParams
{
public:
    /// Throws std::invalid_argument unless users >= 1 and 0 <= p_a <= 1.
    AccessParams(unsigned users, double activation_prob);

    unsigned users() const { return users_; }
    double activation_prob() const { return activation_prob_; }

private:
    unsigned users_;
    double activation_prob_;
};

/// P[U_a = k] for U_a ~ Binomial(U, p_a), evaluated in log space.
/// Throws std::domain_error for k < 0 or k > U.
double activity_pmf(const AccessParams& params, long k);

/// P[U_a > 0] = 1 - (1 - p_a)^U.
double prob_any_active(const AccessParams& params);

/// sum_{k=1..U} P_out(k) P[U_a = k].  Idle slots contribute nothing, so this
/// is bounded by prob_any_active().  Throws std::domain_error if the table does
/// not cover k = 1..U.
double unconditional_outage(const AccessParams& params, const ConditionalOutageTable& table);

/// Outage conditioned on at least one active device; 0 when p_a = 0.
double outage_given_active(const AccessParams& params, const ConditionalOutageTable& table);

double reliability(double outage);

/// Expected successful reference-user receptions per slot,
/// sum_{k=1..U} (1 - P_out(k)) P[U_a = k].
double throughput(const AccessParams& params, const ConditionalOutageTable& table);

/// Standard error shared by unconditional_outage() and throughput(), treating
/// table rows as independent estimates: sqrt(sum_k P[U_a = k]^2 se_k^2).
double mixture_std_error(const AccessParams& params, const ConditionalOutageTable& table);

struct ActivationOptimum
{
    double activation_prob = 0.0;
    double throughput = 0.0;
};

/// Grid argmax of `throughput_at` over p_a in {step, 2 step, ..., 1}; the
/// grid always ends at exactly 1.  Ties go to the smaller p_a.
/// Throws std::invalid_argument unless 0 < grid_step <= 0.5.
ActivationOptimum optimize_pa(unsigned users, const std::function<double(double)>& throughput_at,
                              double grid_step = 0.01);

/// Evaluates throughput() on a fixed table.  Exact throughput ties (e.g. T
/// rounding to 1 near p_a = 1) are resolved by the smaller loss
/// P[U_a = 0] + P_out before falling back to the smaller p_a.
ActivationOptimum optimize_pa(unsigned users, const ConditionalOutageTable& table,
                              double grid_step = 0.01);

/// The p_a grid used by optimize_pa().
std::vector<double> activation_grid(double grid_step);

} // namespace uwsa

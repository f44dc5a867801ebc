#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "uwsa/channel.hpp"
#include "uwsa/geometry.hpp"
#include "uwsa/random.hpp"

namespace uwsa {

/// Physical-layer link budget shared by all devices.  The capture threshold
/// is a linear power ratio; dB conversion happens at the CLI boundary.
class LinkParams
{
public:
    /// Throws std::invalid_argument on any invariant violation
    /// (P_t > 0, 0 < eta <= 1, N0 > 0, B > 0, gamma_th > 0).
    LinkParams(double tx_power_w, double conversion_eff, double noise_density_w_per_hz,
               double bandwidth_hz, double capture_threshold_linear);

    /// P_t = 100 mW, eta = 0.8, N0 = 1e-21 W/Hz, B = 200 kHz, gamma_th = 1 (0 dB).
    static LinkParams reference();

    double tx_power_w() const { return tx_power_w_; }
    double conversion_eff() const { return conversion_eff_; }
    double noise_density_w_per_hz() const { return noise_density_; }
    double bandwidth_hz() const { return bandwidth_hz_; }
    double capture_threshold() const { return capture_threshold_; }

    double noise_power() const { return noise_density_ * bandwidth_hz_; }

    /// SNR of a device at zero distance (h = 1).
    double peak_snr() const;

private:
    double tx_power_w_;
    double conversion_eff_;
    double noise_density_;
    double bandwidth_hz_;
    double capture_threshold_;
};

/// Electrical SNR P_t^2 eta^2 h^2 / (N0 B).  Requires 0 <= h <= 1.
double snr(const LinkParams& link, double h);

/// Reference-user SINR gamma_ref / (sum(interferers) + 1).
double sinr(double gamma_ref, std::span<const double> gamma_interferers);

/// Equal-width histogram over log10(SINR).  Zero-valued samples, which have
/// no logarithm, are counted in the first bin.
struct Log10Histogram
{
    std::vector<double> log10_edges;   // bins + 1 entries
    std::vector<std::uint64_t> counts; // bins entries

    std::uint64_t total() const;
};

Log10Histogram make_log10_histogram(std::span<const double> samples, std::size_t bins);

struct SinrSampleSet
{
    unsigned active_users = 0;
    std::vector<double> samples;
    Log10Histogram histogram;
};

inline constexpr std::size_t kDefaultHistogramBins = 200;

/**
 * Monte Carlo draw of the reference-user SINR given `active_users` concurrent
 * transmitters.  Each trial places every active device independently and
 * uniformly in the deployment; the first device drawn is the reference user.
 *
 * Trials are split into chunks of kChunkSize, chunk i using stream.engine(i),
 * so the returned samples are identical for any thread count.
 *
 * Throws std::domain_error if active_users == 0 or n_trials == 0.
 */
SinrSampleSet sample_conditional_sinr(unsigned active_users, const Deployment& dep,
                                      const WaterMedium& medium, const LinkParams& link,
                                      std::size_t n_trials, const RandomStream& stream,
                                      const Parallelism& par = {},
                                      std::size_t histogram_bins = kDefaultHistogramBins);

/// Binomial proportion estimate with its standard error sqrt(p(1-p)/n).
struct ProportionEstimate
{
    double value = 0.0;
    std::uint64_t trials = 0;
    double std_error = 0.0;
};

ProportionEstimate make_proportion(std::uint64_t hits, std::uint64_t trials);

/// Fraction of samples strictly below gamma_th.  Throws std::domain_error on
/// an empty sample set.
ProportionEstimate conditional_outage(const SinrSampleSet& set, double gamma_th);

/// Empirical P[SINR < gamma].  Throws std::domain_error on an empty set.
double empirical_cdf(const SinrSampleSet& set, double gamma);

/// P_out(U_a = k) for k = 1..max_active_users.
class ConditionalOutageTable
{
public:
    /// entries[i] holds k = i + 1.  Throws std::invalid_argument if any
    /// estimate lies outside [0, 1].
    explicit ConditionalOutageTable(std::vector<ProportionEstimate> entries);

    /// Every P_out(k) = 0 with zero standard error (ideal capture).
    static ConditionalOutageTable perfect_capture(unsigned max_active_users);

    unsigned max_active_users() const { return static_cast<unsigned>(entries_.size()); }
    bool covers(unsigned users) const { return users <= max_active_users(); }

    /// Throws std::domain_error unless 1 <= k <= max_active_users().
    const ProportionEstimate& at(unsigned k) const;

    std::span<const ProportionEstimate> entries() const { return entries_; }

private:
    std::vector<ProportionEstimate> entries_;
};

/// Builds the table with `trials_per_k` trials for each k.  Entry k draws from
/// stream.substream(k), so tables built for different max_active_users agree
/// on their common rows.
ConditionalOutageTable estimate_outage_table(unsigned max_active_users, const Deployment& dep,
                                             const WaterMedium& medium, const LinkParams& link,
                                             std::size_t trials_per_k, const RandomStream& stream,
                                             const Parallelism& par = {});

} // namespace uwsa

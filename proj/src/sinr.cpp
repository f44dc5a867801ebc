#include "uwsa/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uwsa {

LinkParams::LinkParams(double tx_power_w, double conversion_eff, double noise_density_w_per_hz,
                       double bandwidth_hz, double capture_threshold_linear)
    : tx_power_w_(tx_power_w),
      conversion_eff_(conversion_eff),
      noise_density_(noise_density_w_per_hz),
      bandwidth_hz_(bandwidth_hz),
      capture_threshold_(capture_threshold_linear)
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(tx_power_w)) {
        throw std::invalid_argument("transmit power must be positive");
    }
    if (!positive(conversion_eff) || conversion_eff > 1.0) {
        throw std::invalid_argument("conversion efficiency must lie in (0, 1]");
    }
    if (!positive(noise_density_w_per_hz)) {
        throw std::invalid_argument("noise spectral density must be positive");
    }
    if (!positive(bandwidth_hz)) {
        throw std::invalid_argument("bandwidth must be positive");
    }
    if (!positive(capture_threshold_linear)) {
        throw std::invalid_argument("capture threshold must be positive");
    }
}

LinkParams LinkParams::reference()
{
    return LinkParams(0.1, 0.8, 1e-21, 200e3, 1.0);
}

double LinkParams::peak_snr() const
{
    const double amplitude = tx_power_w_ * conversion_eff_;
    return amplitude * amplitude / noise_power();
}

double snr(const LinkParams& link, double h)
{
    if (!(h >= 0.0 && h <= 1.0)) {
        throw std::domain_error("channel gain must lie in [0, 1]");
    }
    const double amplitude = link.tx_power_w() * link.conversion_eff() * h;
    return amplitude * amplitude / link.noise_power();
}

double sinr(double gamma_ref, std::span<const double> gamma_interferers)
{
    const double interference =
        std::accumulate(gamma_interferers.begin(), gamma_interferers.end(), 0.0);
    return gamma_ref / (interference + 1.0);
}

std::uint64_t Log10Histogram::total() const
{
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Log10Histogram make_log10_histogram(std::span<const double> samples, std::size_t bins)
{
    if (bins == 0) {
        throw std::invalid_argument("histogram needs at least one bin");
    }
    Log10Histogram hist;
    hist.counts.assign(bins, 0);

    double lo = 0.0;
    double hi = 0.0;
    bool any_positive = false;
    for (double s : samples) {
        if (s > 0.0) {
            const double l = std::log10(s);
            if (!any_positive) {
                lo = hi = l;
                any_positive = true;
            } else {
                lo = std::min(lo, l);
                hi = std::max(hi, l);
            }
        }
    }

    hist.log10_edges.resize(bins + 1);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i) {
        hist.log10_edges[i] = lo + width * static_cast<double>(i);
    }
    hist.log10_edges[bins] = hi;

    for (double s : samples) {
        std::size_t bin = 0;
        if (s > 0.0 && width > 0.0) {
            const double pos = (std::log10(s) - lo) / width;
            bin = std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, pos)));
        }
        ++hist.counts[bin];
    }
    return hist;
}

SinrSampleSet sample_conditional_sinr(unsigned active_users, const Deployment& dep,
                                      const WaterMedium& medium, const LinkParams& link,
                                      std::size_t n_trials, const RandomStream& stream,
                                      const Parallelism& par, std::size_t histogram_bins)
{
    if (active_users == 0) {
        throw std::domain_error("SINR is undefined without an active user");
    }
    if (n_trials == 0) {
        throw std::domain_error("at least one trial is required");
    }

    SinrSampleSet set;
    set.active_users = active_users;
    set.samples.resize(n_trials);

    for_each_chunk(chunk_count(n_trials), par, [&](std::size_t chunk) {
        Engine engine = stream.engine(chunk);
        std::vector<double> gammas(active_users);
        const std::size_t begin = chunk * kChunkSize;
        const std::size_t end = std::min(n_trials, begin + kChunkSize);
        for (std::size_t t = begin; t < end; ++t) {
            for (auto& g : gammas) {
                const double d = distance_to_ap(sample_position(engine, dep));
                g = snr(link, gain(medium, d));
            }
            set.samples[t] = sinr(gammas.front(), std::span(gammas).subspan(1));
        }
    });

    set.histogram = make_log10_histogram(set.samples, histogram_bins);
    return set;
}

ProportionEstimate make_proportion(std::uint64_t hits, std::uint64_t trials)
{
    if (trials == 0) {
        throw std::domain_error("proportion over zero trials");
    }
    if (hits > trials) {
        throw std::invalid_argument("hits exceed trials");
    }
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    return {p, trials, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

ProportionEstimate conditional_outage(const SinrSampleSet& set, double gamma_th)
{
    if (set.samples.empty()) {
        throw std::domain_error("empty SINR sample set");
    }
    const auto below = std::count_if(set.samples.begin(), set.samples.end(),
                                     [&](double s) { return s < gamma_th; });
    return make_proportion(static_cast<std::uint64_t>(below), set.samples.size());
}

double empirical_cdf(const SinrSampleSet& set, double gamma)
{
    return conditional_outage(set, gamma).value;
}

ConditionalOutageTable::ConditionalOutageTable(std::vector<ProportionEstimate> entries)
    : entries_(std::move(entries))
{
    for (const auto& e : entries_) {
        if (!(e.value >= 0.0 && e.value <= 1.0)) {
            throw std::invalid_argument("outage estimate outside [0, 1]");
        }
    }
}

ConditionalOutageTable ConditionalOutageTable::perfect_capture(unsigned max_active_users)
{
    return ConditionalOutageTable(
        std::vector<ProportionEstimate>(max_active_users, ProportionEstimate{0.0, 0, 0.0}));
}

const ProportionEstimate& ConditionalOutageTable::at(unsigned k) const
{
    if (k == 0 || k > entries_.size()) {
        throw std::domain_error("outage table has no entry for k = " + std::to_string(k));
    }
    return entries_[k - 1];
}

ConditionalOutageTable estimate_outage_table(unsigned max_active_users, const Deployment& dep,
                                             const WaterMedium& medium, const LinkParams& link,
                                             std::size_t trials_per_k, const RandomStream& stream,
                                             const Parallelism& par)
{
    std::vector<ProportionEstimate> entries;
    entries.reserve(max_active_users);
    for (unsigned k = 1; k <= max_active_users; ++k) {
        const auto set = sample_conditional_sinr(k, dep, medium, link, trials_per_k,
                                                 stream.substream(k), par, 1);
        entries.push_back(conditional_outage(set, link.capture_threshold()));
    }
    return ConditionalOutageTable(std::move(entries));
}

} // namespace uwsa

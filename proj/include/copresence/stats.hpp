// Distribution estimation, tail fitting, dependence coefficients, and the
// two de-seasoning procedures.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "copresence/types.hpp"

namespace copresence {

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BinScheme { linear, logarithmic };

struct BinnedDistribution {
    BinScheme scheme = BinScheme::linear;
    std::vector<double> edges;        // size bins+1, strictly increasing
    std::vector<double> densities;    // per-bin probability density
    std::vector<std::int64_t> counts;
    std::int64_t sample_count = 0;
};

// Probability density on logarithmic bins anchored at the smallest sample.
// Throws std::domain_error on non-positive samples.
BinnedDistribution log_binned_pdf(std::span<const double> samples, int bins_per_decade);

// (x, P(X >= x)) over the distinct sample values, ascending in x.
std::vector<std::pair<double, double>> ccdf(std::span<const double> samples);

struct PowerLawFit {
    double exponent = 0.0;          // alpha of the x^-alpha part
    double x_min = 0.0;             // tail start, KS-minimizing
    std::optional<double> cutoff;   // exponential scale, when preferred
    double ks = 0.0;                // KS distance of the chosen model
    std::int64_t n_tail = 0;        // samples at or above x_min
};

// Maximum-likelihood tail fit; an exponential cutoff is kept when it beats
// the pure power law by more than 3 in log-likelihood. Throws FitError on
// fewer than 50 samples or a degenerate (all-equal) tail.
PowerLawFit fit_truncated_power_law(std::span<const double> samples);

// Throw std::domain_error on zero variance, std::invalid_argument on
// size mismatch or fewer than 2 points.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Correlation of paired coordinates with separate first/second moments;
// equals pearson of the coordinate lists.
double memory_coefficient(std::span<const std::pair<double, double>> pairs);

// Histogram of whole days spent by each duration (floor(delta / day)).
BinnedDistribution integral_days(std::span<const Duration> deltas, const DayClock& clock);

// Transmission durations whose source and sink begin on the same calendar
// day; every retained value is below one day.
std::vector<Duration> natural_deseason(std::span<const TransmissionEdge> edges,
                                       std::span<const EventInteraction> eis,
                                       const DayClock& clock);

struct ShuffleResult {
    std::vector<EventInteraction> eis;
    std::int64_t attempted = 0;
    std::int64_t accepted = 0;
};

// Repeatedly swap two interactions' begin times (each keeps its duration),
// rejecting swaps that would overlap another interaction in the same
// exclusive group (the location, or the (location, members) identity for
// pair-derived data). Destroys diurnal order, preserves the duration
// multiset and exclusivity. Deterministic per seed.
ShuffleResult time_shuffled_null(std::span<const EventInteraction> eis, std::uint64_t seed,
                                 int n_swaps_factor, Exclusivity scope = Exclusivity::per_wap);

}  // namespace copresence

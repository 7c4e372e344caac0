// CSV / DOT / JSON emission. All writers are deterministic: fixed column
// orders, %.12g floats, newline-only line ends, and a leading comment that
// names the figure a file backs.
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>

#include "copresence/dyad_graph.hpp"
#include "copresence/event_graph.hpp"
#include "copresence/stats.hpp"

namespace copresence {

std::string format_double(double v);

void write_eis_csv(const std::filesystem::path& path, std::span<const EventInteraction> eis,
                   const std::string& figure);
void write_edges_csv(const std::filesystem::path& path, std::span<const TransmissionEdge> edges,
                     const std::string& figure);
void write_tis_csv(const std::filesystem::path& path, std::span<const TemporalInteraction> tis,
                   const std::string& figure);
void write_dyads_csv(const std::filesystem::path& path, std::span<const DyadSeries> series,
                     const std::string& figure);
void write_degree_rank_csv(const std::filesystem::path& path, const LeafHubReport& report,
                           const std::string& figure);
void write_distribution_csv(const std::filesystem::path& path, const BinnedDistribution& dist,
                            const std::string& figure);
void write_ccdf_csv(const std::filesystem::path& path,
                    std::span<const std::pair<double, double>> points, const std::string& figure);
void write_entropy_curve_csv(const std::filesystem::path& path,
                             std::span<const EntropyCurvePoint> curve, const std::string& figure);

void write_fit_json(const std::filesystem::path& path, const PowerLawFit& fit,
                    const std::string& figure);
void write_shuffle_meta_json(const std::filesystem::path& path, const ShuffleResult& result,
                             std::uint64_t seed, int n_swaps_factor);

struct CoefficientRow {
    std::string label;
    double pearson = 0.0;
    double memory = 0.0;
    std::int64_t n = 0;
};
void write_coefficients_json(const std::filesystem::path& path,
                             std::span<const CoefficientRow> rows, const std::string& figure);

void write_atg_dot(const std::filesystem::path& path, const AggregatedTransmissionGraph& atg,
                   const std::string& figure);
void write_atg_json(const std::filesystem::path& path, const AggregatedTransmissionGraph& atg,
                    const std::string& figure);

}  // namespace copresence

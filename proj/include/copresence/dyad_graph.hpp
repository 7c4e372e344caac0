// Pairwise temporal interactions, per-dyad series with inter-event gaps and
// spatial entropy, and the aggregated contact network.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "copresence/types.hpp"

namespace copresence {

// Per WAP and unordered device pair, the maximal intervals of simultaneous
// presence. Different pairs' interactions may coexist. Output sorted by
// (u, v, t_started, t_finished, wap_id).
std::vector<TemporalInteraction> build_temporal_interactions(std::span<const Session> sessions);

struct DyadSeries {
    std::string u, v;                       // u < v
    std::vector<TemporalInteraction> tis;   // ordered by t_started
    std::vector<Duration> inter_event;      // start-to-start gaps, size n_ti()-1
    std::optional<double> entropy;          // set iff n_ti() >= 2

    int n_ti() const { return static_cast<int>(tis.size()); }
};

std::vector<DyadSeries> build_dyad_series(std::span<const TemporalInteraction> tis);

// Shannon entropy (natural log) of the series' location frequencies.
// Throws std::domain_error below two interactions.
double spatial_entropy(const DyadSeries& series);

struct EntropyCurvePoint {
    int n_ti = 0;
    double mean_entropy = 0.0;
    int n_dyads = 0;  // dyads averaged at this frequency
};

// Average entropy over the dyads sharing each frequency value (>= 2 only).
std::vector<EntropyCurvePoint> mean_entropy_curve(std::span<const DyadSeries> series);

// Start-to-start gaps split by whether the two interactions began on the
// same calendar day.
struct InterEventSplit {
    std::vector<Duration> same_day;
    std::vector<Duration> cross_day;
};

InterEventSplit split_inter_event_by_day(std::span<const DyadSeries> series,
                                         const DayClock& clock);

struct ContactNetwork {
    struct Edge {
        int u = 0, v = 0;  // vertex indices, u < v
        int weight = 0;   // the dyad's interaction count
    };
    std::vector<std::string> vertices;  // sorted device ids
    std::vector<Edge> edges;            // sorted by (u, v)
    std::vector<int> degree;            // distinct neighbours per vertex
};

ContactNetwork aggregate_contact_network(std::span<const TemporalInteraction> tis);

struct LeafHubReport {
    struct Row {
        int rank = 0;  // 1-based, degree descending
        std::string device_id;
        int degree = 0;
        bool is_super_member = false;
    };
    std::vector<Row> rows;
    int n_flagged = 0;
    double median_all = 0.0;      // NaN when the network is empty
    double median_flagged = 0.0;  // NaN when nothing is flagged
};

LeafHubReport leaf_hub_report(const ContactNetwork& cn,
                              std::span<const std::string> super_members);

// Structural checks (pair ordering, positive length, per-pair-per-WAP
// disjointness); the overload with sessions also proves maximality against
// the normalized traces. Throw InvariantViolation on failure.
void check_temporal_interactions(std::span<const TemporalInteraction> tis);
void check_temporal_interactions(std::span<const TemporalInteraction> tis,
                                 std::span<const Session> sessions);

}  // namespace copresence

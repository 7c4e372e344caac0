// Event interactions, the transmission graph built from them by the three
// linking rules, and the whole-window aggregation.
#pragma once

#include <span>
#include <vector>

#include "copresence/types.hpp"

namespace copresence {

// Per access point, a sweep over connect/disconnect events partitions time
// into maximal constant-membership intervals; every interval with >= 2
// devices becomes one event interaction. Output sorted by (wap_id, t_begin),
// ids sequential in that order.
std::vector<EventInteraction> build_event_interactions(std::span<const Session> sessions);

// Same contract, driven by pairwise interactions instead of sessions: per
// location, the member sets are the connected components of the
// simultaneously-active pair graph. On session-shaped input this coincides
// with the sweep above (co-present sets form complete pair graphs).
std::vector<EventInteraction> build_event_interactions(
    std::span<const TemporalInteraction> interactions);

// For each sink member, the latest event interaction containing that member
// and ending at or before the sink's begin is its source (rule 1: closest
// prior; rule 2: shared member). Members are grouped by located source, so the
// shared sets of a sink's incoming edges are disjoint by construction (rule 3).
// Edges sorted by (sink, source).
std::vector<TransmissionEdge> build_transmission_graph(std::span<const EventInteraction> eis);

struct AggregatedTransmissionGraph {
    struct Vertex {
        std::string wap_id;
        std::vector<std::string> members;
        int n_ei = 0;   // occurrences of this identity
        int k_in = 0;   // distinct in-edges
        int k_out = 0;  // distinct out-edges
    };
    struct Edge {
        int source = 0;  // vertex indices
        int sink = 0;
        int n_tp = 0;  // repeated transmission paths
    };

    std::vector<Vertex> vertices;  // sorted by (wap_id, members)
    std::vector<Edge> edges;       // distinct, sorted by (source, sink)
    std::vector<int> vertex_of_ei;  // EI id -> vertex index
};

AggregatedTransmissionGraph aggregate_transmission_graph(std::span<const TransmissionEdge> edges,
                                                         std::span<const EventInteraction> eis);

struct SuperConnectingGroups {
    struct Entry {
        int vertex = 0;
        int k_in = 0;
        int k_out = 0;
    };
    std::vector<Entry> entries;        // k_in and k_out >= k_min, by k_in+k_out desc
    std::vector<std::string> members;  // union over entries, sorted
};

SuperConnectingGroups find_super_connecting(const AggregatedTransmissionGraph& atg, int k_min);

// Invariant checks; throw InvariantViolation on the first failure.
void check_event_interactions(std::span<const EventInteraction> eis,
                              Exclusivity scope = Exclusivity::per_wap);
void check_transmission_edges(std::span<const TransmissionEdge> edges,
                              std::span<const EventInteraction> eis);

}  // namespace copresence

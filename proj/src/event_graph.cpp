#include "copresence/event_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace copresence {

namespace {

struct BoundaryEvent {
    Timestamp t;
    int delta;  // +1 connect, -1 disconnect
    const std::string* device;
};

void sort_and_assign_ids(std::vector<EventInteraction>& out) {
    std::sort(out.begin(), out.end(), [](const EventInteraction& a, const EventInteraction& b) {
        return std::tie(a.wap_id, a.t_begin, a.members) < std::tie(b.wap_id, b.t_begin, b.members);
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
}

// Disjoint sets over dense indices.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

}  // namespace

std::vector<EventInteraction> build_event_interactions(std::span<const Session> sessions) {
    std::unordered_map<std::string, std::vector<BoundaryEvent>> per_wap;
    for (const Session& s : sessions) {
        auto& evs = per_wap[s.wap_id];
        evs.push_back({s.t_on, +1, &s.device_id});
        evs.push_back({s.t_off, -1, &s.device_id});
    }

    std::vector<EventInteraction> out;
    for (auto& [wap, evs] : per_wap) {
        // Connects sort before disconnects at equal times so an instantaneous
        // reconnect never dips through zero and splits its run.
        std::sort(evs.begin(), evs.end(), [](const BoundaryEvent& a, const BoundaryEvent& b) {
            return std::tie(a.t, b.delta) < std::tie(b.t, a.delta);
        });

        std::unordered_map<std::string, int> count;
        std::vector<std::string> members;  // sorted, counts > 0
        Timestamp run_start = 0;
        std::size_t i = 0;
        while (i < evs.size()) {
            const Timestamp t = evs[i].t;
            bool changed = false;
            for (; i < evs.size() && evs[i].t == t; ++i) {
                int& c = count[*evs[i].device];
                c += evs[i].delta;
                if ((evs[i].delta > 0 && c == 1) || (evs[i].delta < 0 && c == 0)) changed = true;
            }
            if (!changed) continue;  // e.g. instantaneous reconnect
            if (members.size() >= 2) out.push_back({0, wap, members, run_start, t});
            members.clear();
            for (const auto& [dev, c] : count)
                if (c > 0) members.push_back(dev);
            std::sort(members.begin(), members.end());
            run_start = t;
        }
    }
    sort_and_assign_ids(out);
    return out;
}

std::vector<EventInteraction> build_event_interactions(
    std::span<const TemporalInteraction> interactions) {
    std::unordered_map<std::string, std::vector<const TemporalInteraction*>> per_wap;
    for (const TemporalInteraction& ti : interactions) per_wap[ti.wap_id].push_back(&ti);

    std::vector<EventInteraction> out;
    for (auto& [wap, tis] : per_wap) {
        std::sort(tis.begin(), tis.end(),
                  [](const TemporalInteraction* a, const TemporalInteraction* b) {
                      return a->t_started < b->t_started;
                  });
        std::vector<Timestamp> bounds;
        bounds.reserve(tis.size() * 2);
        for (const auto* ti : tis) {
            bounds.push_back(ti->t_started);
            bounds.push_back(ti->t_finished);
        }
        std::sort(bounds.begin(), bounds.end());
        bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

        std::unordered_map<std::string, int> dev_index;
        std::vector<const std::string*> dev_name;
        auto index_of = [&](const std::string& d) {
            auto [it, fresh] = dev_index.emplace(d, static_cast<int>(dev_name.size()));
            if (fresh) dev_name.push_back(&it->first);
            return it->second;
        };

        // Active on the slice [bounds[k], bounds[k+1]] means covering it.
        std::multimap<Timestamp, const TemporalInteraction*> active;  // keyed by t_finished
        std::size_t next_ti = 0;
        std::map<std::vector<std::string>, Timestamp> open_runs;  // members -> run start
        for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
            const Timestamp lo = bounds[k];
            while (next_ti < tis.size() && tis[next_ti]->t_started <= lo) {
                active.emplace(tis[next_ti]->t_finished, tis[next_ti]);
                ++next_ti;
            }
            active.erase(active.begin(), active.upper_bound(lo));

            // index_of can mint at most two fresh devices per active pair.
            UnionFind uf(static_cast<int>(dev_index.size() + 2 * active.size()));
            std::vector<int> touched;
            for (const auto& [fin, ti] : active) {
                int a = index_of(ti->u);
                int b = index_of(ti->v);
                uf.unite(a, b);
                touched.push_back(a);
                touched.push_back(b);
            }
            std::map<int, std::vector<std::string>> comps;
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (int d : touched) comps[uf.find(d)].push_back(*dev_name[d]);

            std::map<std::vector<std::string>, Timestamp> next_runs;
            for (auto& [root, members] : comps) {
                std::sort(members.begin(), members.end());
                auto prev = open_runs.find(members);
                next_runs.emplace(std::move(members),
                                  prev != open_runs.end() ? prev->second : lo);
            }
            for (auto& [members, start] : open_runs)
                if (!next_runs.count(members)) out.push_back({0, wap, members, start, lo});
            open_runs = std::move(next_runs);
        }
        for (auto& [members, start] : open_runs)
            out.push_back({0, wap, members, start, bounds.back()});
    }
    sort_and_assign_ids(out);
    return out;
}

std::vector<TransmissionEdge> build_transmission_graph(std::span<const EventInteraction> eis) {
    std::vector<const EventInteraction*> by_id(eis.size());
    for (const EventInteraction& ei : eis) {
        if (ei.id < 0 || static_cast<std::size_t>(ei.id) >= eis.size() || by_id[ei.id])
            throw InvariantViolation("event interaction ids are not a dense unique range");
        by_id[ei.id] = &ei;
    }

    struct Appearance {
        Timestamp t_end;
        Timestamp t_begin;
        int id;
        bool operator<(const Appearance& o) const {
            return std::tie(t_end, t_begin, o.id) < std::tie(o.t_end, o.t_begin, id);
        }
    };
    std::unordered_map<std::string, std::vector<Appearance>> history;
    for (const EventInteraction& ei : eis)
        for (const std::string& m : ei.members) history[m].push_back({ei.t_end, ei.t_begin, ei.id});
    for (auto& [dev, apps] : history) std::sort(apps.begin(), apps.end());

    std::vector<TransmissionEdge> edges;
    for (const EventInteraction* sink : by_id) {
        std::map<int, std::vector<std::string>> shared_by_source;
        for (const std::string& m : sink->members) {
            const auto& apps = history[m];
            // Last appearance finishing no later than the sink begins.
            Appearance probe{sink->t_begin, std::numeric_limits<Timestamp>::max(),
                             std::numeric_limits<int>::min()};
            auto it = std::upper_bound(apps.begin(), apps.end(), probe);
            if (it == apps.begin()) continue;
            shared_by_source[std::prev(it)->id].push_back(m);
        }
        for (auto& [source_id, shared] : shared_by_source) {
            std::sort(shared.begin(), shared.end());
            const EventInteraction* src = by_id[source_id];
            edges.push_back({source_id, sink->id, std::move(shared),
                             sink->t_begin - src->t_begin, src->t_begin});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const TransmissionEdge& a, const TransmissionEdge& b) {
        return std::tie(a.sink, a.source) < std::tie(b.sink, b.source);
    });
    return edges;
}

AggregatedTransmissionGraph aggregate_transmission_graph(std::span<const TransmissionEdge> edges,
                                                         std::span<const EventInteraction> eis) {
    AggregatedTransmissionGraph atg;
    int max_id = -1;
    for (const EventInteraction& ei : eis) max_id = std::max(max_id, ei.id);
    atg.vertex_of_ei.assign(static_cast<std::size_t>(max_id + 1), -1);

    std::map<std::pair<std::string, std::vector<std::string>>, int> index;
    for (const EventInteraction& ei : eis) index.emplace(std::make_pair(ei.wap_id, ei.members), 0);
    int next = 0;
    for (auto& [identity, v] : index) {
        v = next++;
        atg.vertices.push_back({identity.first, identity.second, 0, 0, 0});
    }
    for (const EventInteraction& ei : eis) {
        int v = index.at({ei.wap_id, ei.members});
        atg.vertex_of_ei[ei.id] = v;
        ++atg.vertices[v].n_ei;
    }

    std::map<std::pair<int, int>, int> multiplicity;  // (source vertex, sink vertex) -> n_tp
    for (const TransmissionEdge& e : edges)
        ++multiplicity[{atg.vertex_of_ei.at(e.source), atg.vertex_of_ei.at(e.sink)}];
    for (const auto& [key, n_tp] : multiplicity) {
        atg.edges.push_back({key.first, key.second, n_tp});
        ++atg.vertices[key.first].k_out;
        ++atg.vertices[key.second].k_in;
    }
    return atg;
}

SuperConnectingGroups find_super_connecting(const AggregatedTransmissionGraph& atg, int k_min) {
    if (k_min < 1) throw ConfigError("k_min must be >= 1");
    SuperConnectingGroups groups;
    std::set<std::string> member_union;
    for (std::size_t v = 0; v < atg.vertices.size(); ++v) {
        const auto& vert = atg.vertices[v];
        if (vert.k_in >= k_min && vert.k_out >= k_min) {
            groups.entries.push_back({static_cast<int>(v), vert.k_in, vert.k_out});
            member_union.insert(vert.members.begin(), vert.members.end());
        }
    }
    std::sort(groups.entries.begin(), groups.entries.end(),
              [](const SuperConnectingGroups::Entry& a, const SuperConnectingGroups::Entry& b) {
                  int da = a.k_in + a.k_out, db = b.k_in + b.k_out;
                  return std::tie(db, a.vertex) < std::tie(da, b.vertex);
              });
    groups.members.assign(member_union.begin(), member_union.end());
    return groups;
}

void check_event_interactions(std::span<const EventInteraction> eis, Exclusivity scope) {
    std::set<int> ids;
    std::map<std::pair<std::string, std::vector<std::string>>,
             std::vector<std::pair<Timestamp, Timestamp>>>
        groups;
    for (const EventInteraction& ei : eis) {
        if (!ids.insert(ei.id).second) throw InvariantViolation("duplicate event interaction id");
        if (ei.wap_id.empty()) throw InvariantViolation("event interaction without a location");
        if (ei.size() < 2) throw InvariantViolation("event interaction with fewer than 2 members");
        if (ei.t_end <= ei.t_begin) throw InvariantViolation("event interaction with empty interval");
        if (!std::is_sorted(ei.members.begin(), ei.members.end()) ||
            std::adjacent_find(ei.members.begin(), ei.members.end()) != ei.members.end())
            throw InvariantViolation("event interaction members not sorted and unique");
        auto key = scope == Exclusivity::per_wap
                       ? std::make_pair(ei.wap_id, std::vector<std::string>{})
                       : std::make_pair(ei.wap_id, ei.members);
        groups[std::move(key)].push_back({ei.t_begin, ei.t_end});
    }
    for (auto& [key, spans] : groups) {
        std::sort(spans.begin(), spans.end());
        for (std::size_t i = 1; i < spans.size(); ++i)
            if (spans[i - 1].second > spans[i].first)
                throw InvariantViolation("overlapping event interactions in one exclusive group");
    }
}

void check_transmission_edges(std::span<const TransmissionEdge> edges,
                              std::span<const EventInteraction> eis) {
    std::unordered_map<int, const EventInteraction*> by_id;
    for (const EventInteraction& ei : eis) by_id[ei.id] = &ei;
    auto ei_of = [&](int id) -> const EventInteraction& {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw InvariantViolation("edge references unknown event interaction");
        return *it->second;
    };
    auto contains = [](const EventInteraction& ei, const std::string& m) {
        return std::binary_search(ei.members.begin(), ei.members.end(), m);
    };

    std::unordered_map<int, std::set<std::string>> claimed;  // sink -> union of shared sets
    for (const TransmissionEdge& e : edges) {
        const EventInteraction& src = ei_of(e.source);
        const EventInteraction& snk = ei_of(e.sink);
        if (e.shared.empty()) throw InvariantViolation("edge with empty shared set");
        if (src.t_end > snk.t_begin)
            throw InvariantViolation("source does not finish before the sink begins");
        if (e.delta != snk.t_begin - src.t_begin) throw InvariantViolation("edge delta mismatch");
        if (e.delta < src.active_duration())
            throw InvariantViolation("delta below the source's active duration");
        if (e.t_observed != src.t_begin) throw InvariantViolation("edge t_observed mismatch");
        auto& seen = claimed[e.sink];
        for (const std::string& m : e.shared) {
            if (!contains(src, m) || !contains(snk, m))
                throw InvariantViolation("shared member missing from source or sink");
            if (!seen.insert(m).second)
                throw InvariantViolation("member shared with two sources of one sink");
        }
    }

    // Closest-prior rule, and completeness: whenever a sink member appeared
    // before, exactly one edge of that sink must carry it from the latest
    // such appearance.
    struct Appearance {
        Timestamp t_end, t_begin;
        int id;
    };
    std::unordered_map<std::string, std::vector<Appearance>> history;
    for (const EventInteraction& ei : eis)
        for (const std::string& m : ei.members) history[m].push_back({ei.t_end, ei.t_begin, ei.id});
    for (auto& [dev, apps] : history)
        std::sort(apps.begin(), apps.end(), [](const Appearance& a, const Appearance& b) {
            return std::tie(a.t_end, a.t_begin, b.id) < std::tie(b.t_end, b.t_begin, a.id);
        });

    std::map<std::pair<int, std::string>, int> carried;  // (sink, member) -> source
    for (const TransmissionEdge& e : edges)
        for (const std::string& m : e.shared) carried[{e.sink, m}] = e.source;
    for (const EventInteraction& ei : eis) {
        for (const std::string& m : ei.members) {
            const auto& apps = history[m];
            const Appearance* latest = nullptr;
            for (const Appearance& a : apps) {
                if (a.t_end > ei.t_begin) break;
                latest = &a;
            }
            auto it = carried.find({ei.id, m});
            if (!latest) {
                if (it != carried.end())
                    throw InvariantViolation("edge carries a member with no prior appearance");
            } else if (it == carried.end() || it->second != latest->id) {
                throw InvariantViolation("member not linked to its closest prior appearance");
            }
        }
    }
}

}  // namespace copresence

#include "copresence/dyad_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace copresence {

namespace {

double median(std::vector<int> values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

std::vector<TemporalInteraction> build_temporal_interactions(std::span<const Session> sessions) {
    std::unordered_map<std::string, std::vector<const Session*>> per_wap;
    for (const Session& s : sessions) per_wap[s.wap_id].push_back(&s);

    std::vector<TemporalInteraction> out;
    for (auto& [wap, group] : per_wap) {
        std::sort(group.begin(), group.end(), [](const Session* a, const Session* b) {
            return std::tie(a->t_on, a->t_off, a->device_id) <
                   std::tie(b->t_on, b->t_off, b->device_id);
        });
        // Overlap intervals per pair arrive with non-decreasing starts, so a
        // single merge pass turns them into maximal co-presence intervals.
        std::map<std::pair<std::string, std::string>, std::vector<std::pair<Timestamp, Timestamp>>>
            runs;
        std::vector<const Session*> active;
        for (const Session* s : group) {
            std::erase_if(active, [&](const Session* a) { return a->t_off <= s->t_on; });
            for (const Session* a : active) {
                if (a->device_id == s->device_id) continue;
                auto key = a->device_id < s->device_id
                               ? std::make_pair(a->device_id, s->device_id)
                               : std::make_pair(s->device_id, a->device_id);
                const Timestamp lo = s->t_on;
                const Timestamp hi = std::min(a->t_off, s->t_off);
                auto& iv = runs[std::move(key)];
                if (!iv.empty() && lo <= iv.back().second)
                    iv.back().second = std::max(iv.back().second, hi);
                else
                    iv.push_back({lo, hi});
            }
            active.push_back(s);
        }
        for (auto& [pair, intervals] : runs)
            for (auto& [lo, hi] : intervals) out.push_back({pair.first, pair.second, wap, lo, hi});
    }
    std::sort(out.begin(), out.end(),
              [](const TemporalInteraction& a, const TemporalInteraction& b) {
                  return std::tie(a.u, a.v, a.t_started, a.t_finished, a.wap_id) <
                         std::tie(b.u, b.v, b.t_started, b.t_finished, b.wap_id);
              });
    return out;
}

std::vector<DyadSeries> build_dyad_series(std::span<const TemporalInteraction> tis) {
    std::map<std::pair<std::string, std::string>, std::vector<TemporalInteraction>> groups;
    for (const TemporalInteraction& ti : tis) {
        auto key = ti.u < ti.v ? std::make_pair(ti.u, ti.v) : std::make_pair(ti.v, ti.u);
        groups[std::move(key)].push_back(ti);
    }
    std::vector<DyadSeries> out;
    out.reserve(groups.size());
    for (auto& [pair, list] : groups) {
        std::sort(list.begin(), list.end(),
                  [](const TemporalInteraction& a, const TemporalInteraction& b) {
                      return std::tie(a.t_started, a.t_finished, a.wap_id) <
                             std::tie(b.t_started, b.t_finished, b.wap_id);
                  });
        DyadSeries series;
        series.u = pair.first;
        series.v = pair.second;
        series.tis = std::move(list);
        for (std::size_t k = 1; k < series.tis.size(); ++k)
            series.inter_event.push_back(series.tis[k].t_started - series.tis[k - 1].t_started);
        if (series.tis.size() >= 2) series.entropy = spatial_entropy(series);
        out.push_back(std::move(series));
    }
    return out;
}

double spatial_entropy(const DyadSeries& series) {
    if (series.n_ti() < 2) throw std::domain_error("spatial entropy needs at least 2 interactions");
    std::map<std::string, int> counts;
    for (const TemporalInteraction& ti : series.tis) ++counts[ti.wap_id];
    double h = 0.0;
    const double n = series.n_ti();
    for (const auto& [wap, c] : counts) {
        const double p = c / n;
        h -= p * std::log(p);
    }
    return h + 0.0;  // avoid returning -0.0 for the single-location case
}

std::vector<EntropyCurvePoint> mean_entropy_curve(std::span<const DyadSeries> series) {
    std::map<int, std::pair<double, int>> acc;  // n_ti -> (entropy sum, dyad count)
    for (const DyadSeries& s : series) {
        if (!s.entropy) continue;
        auto& [sum, n] = acc[s.n_ti()];
        sum += *s.entropy;
        ++n;
    }
    std::vector<EntropyCurvePoint> out;
    out.reserve(acc.size());
    for (const auto& [n_ti, sum_n] : acc)
        out.push_back({n_ti, sum_n.first / sum_n.second, sum_n.second});
    return out;
}

InterEventSplit split_inter_event_by_day(std::span<const DyadSeries> series,
                                         const DayClock& clock) {
    InterEventSplit split;
    for (const DyadSeries& s : series) {
        for (std::size_t k = 1; k < s.tis.size(); ++k) {
            const Duration gap = s.inter_event[k - 1];
            if (clock.day_index(s.tis[k - 1].t_started) == clock.day_index(s.tis[k].t_started))
                split.same_day.push_back(gap);
            else
                split.cross_day.push_back(gap);
        }
    }
    return split;
}

ContactNetwork aggregate_contact_network(std::span<const TemporalInteraction> tis) {
    ContactNetwork cn;
    std::map<std::pair<std::string, std::string>, int> weight;
    std::set<std::string> devices;
    for (const TemporalInteraction& ti : tis) {
        auto key = ti.u < ti.v ? std::make_pair(ti.u, ti.v) : std::make_pair(ti.v, ti.u);
        ++weight[std::move(key)];
        devices.insert(ti.u);
        devices.insert(ti.v);
    }
    cn.vertices.assign(devices.begin(), devices.end());
    cn.degree.assign(cn.vertices.size(), 0);
    auto index_of = [&](const std::string& d) {
        return static_cast<int>(std::lower_bound(cn.vertices.begin(), cn.vertices.end(), d) -
                                cn.vertices.begin());
    };
    for (const auto& [pair, w] : weight) {
        const int u = index_of(pair.first);
        const int v = index_of(pair.second);
        cn.edges.push_back({u, v, w});
        ++cn.degree[u];
        ++cn.degree[v];
    }
    return cn;
}

LeafHubReport leaf_hub_report(const ContactNetwork& cn,
                              std::span<const std::string> super_members) {
    std::set<std::string> flagged(super_members.begin(), super_members.end());
    LeafHubReport report;
    std::vector<int> order(cn.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(cn.degree[b], cn.vertices[a]) < std::tie(cn.degree[a], cn.vertices[b]);
    });

    std::vector<int> flagged_degrees;
    for (std::size_t r = 0; r < order.size(); ++r) {
        const int v = order[r];
        const bool is_super = flagged.count(cn.vertices[v]) > 0;
        report.rows.push_back({static_cast<int>(r + 1), cn.vertices[v], cn.degree[v], is_super});
        if (is_super) flagged_degrees.push_back(cn.degree[v]);
    }
    report.n_flagged = static_cast<int>(flagged_degrees.size());
    report.median_all = median(cn.degree);
    report.median_flagged = median(std::move(flagged_degrees));
    return report;
}

void check_temporal_interactions(std::span<const TemporalInteraction> tis) {
    std::map<std::tuple<std::string, std::string, std::string>,
             std::vector<std::pair<Timestamp, Timestamp>>>
        per_pair_wap;
    for (const TemporalInteraction& ti : tis) {
        if (ti.u >= ti.v) throw InvariantViolation("interaction pair not canonically ordered");
        if (ti.t_started >= ti.t_finished)
            throw InvariantViolation("temporal interaction with empty interval");
        per_pair_wap[{ti.u, ti.v, ti.wap_id}].push_back({ti.t_started, ti.t_finished});
    }
    for (auto& [key, spans] : per_pair_wap) {
        std::sort(spans.begin(), spans.end());
        for (std::size_t i = 1; i < spans.size(); ++i)
            if (spans[i - 1].second >= spans[i].first)
                throw InvariantViolation("pair interactions at one location overlap or touch");
    }
}

void check_temporal_interactions(std::span<const TemporalInteraction> tis,
                                 std::span<const Session> sessions) {
    check_temporal_interactions(tis);
    // With normalized traces a co-presence interval fits inside single
    // sessions of both members; maximality pins its ends to theirs.
    std::map<std::pair<std::string, std::string>, std::vector<const Session*>> by_dev_wap;
    for (const Session& s : sessions) by_dev_wap[{s.device_id, s.wap_id}].push_back(&s);
    auto covering = [&](const std::string& dev, const std::string& wap, Timestamp lo,
                        Timestamp hi) -> const Session* {
        auto it = by_dev_wap.find({dev, wap});
        if (it == by_dev_wap.end()) return nullptr;
        for (const Session* s : it->second)
            if (s->t_on <= lo && s->t_off >= hi) return s;
        return nullptr;
    };
    for (const TemporalInteraction& ti : tis) {
        const Session* su = covering(ti.u, ti.wap_id, ti.t_started, ti.t_finished);
        const Session* sv = covering(ti.v, ti.wap_id, ti.t_started, ti.t_finished);
        if (!su || !sv)
            throw InvariantViolation("interaction not covered by one session per member");
        if (std::max(su->t_on, sv->t_on) != ti.t_started ||
            std::min(su->t_off, sv->t_off) != ti.t_finished)
            throw InvariantViolation("temporal interaction is not maximal");
    }
}

}  // namespace copresence

#include "copresence/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "copresence/rng.hpp"

namespace copresence {

std::vector<Session> generate_synthetic_log(const SynthParams& params) {
    if (params.n_devices < 1 || params.n_waps < 1 || params.horizon < 1)
        throw std::invalid_argument("synthetic parameters must be positive");
    std::vector<Session> out;
    if (params.session_rate <= 0.0) return out;
    const double mean_gap = 60.0 / params.session_rate;
    const double mean_len = std::max(params.mean_session_len, 1.0);
    std::mt19937_64 rng(params.seed);
    for (int d = 0; d < params.n_devices; ++d) {
        const std::string device = "d" + std::to_string(d);
        Timestamp t = 0;
        while (true) {
            const Timestamp t_on =
                t + 1 + static_cast<Timestamp>(std::floor(exponential_draw(rng, mean_gap)));
            if (t_on >= params.horizon) break;
            const Timestamp len =
                1 + static_cast<Timestamp>(std::floor(exponential_draw(rng, mean_len)));
            const Timestamp t_off = std::min(t_on + len, params.horizon);
            const std::string wap = "w" + std::to_string(uniform_below(rng, params.n_waps));
            out.push_back({device, wap, t_on, t_off});
            t = t_off;
        }
    }
    return out;
}

OracleResult brute_force_oracle(std::span<const Session> sessions) {
    constexpr Timestamp kMaxTime = 1000;
    std::set<std::string> device_set, wap_set;
    for (const Session& s : sessions) {
        if (s.t_on < 0 || s.t_off > kMaxTime)
            throw std::invalid_argument("oracle refuses times outside [0, 1000]");
        device_set.insert(s.device_id);
        wap_set.insert(s.wap_id);
    }
    if (device_set.size() > 10) throw std::invalid_argument("oracle refuses more than 10 devices");

    const std::vector<std::string> devices(device_set.begin(), device_set.end());
    std::map<std::string, int> device_index;
    for (std::size_t i = 0; i < devices.size(); ++i) device_index[devices[i]] = static_cast<int>(i);
    auto members_of = [&](unsigned mask) {
        std::vector<std::string> m;
        for (std::size_t i = 0; i < devices.size(); ++i)
            if (mask & (1u << i)) m.push_back(devices[i]);
        return m;  // device order is sorted, so members come out sorted
    };

    OracleResult res;
    for (const std::string& wap : wap_set) {
        // Who is present during step [t, t+1] at this WAP.
        std::vector<unsigned> present(kMaxTime, 0);
        for (const Session& s : sessions) {
            if (s.wap_id != wap) continue;
            for (Timestamp t = s.t_on; t < s.t_off; ++t)
                present[t] |= 1u << device_index[s.device_id];
        }
        unsigned prev = 0;
        Timestamp run_start = 0;
        for (Timestamp t = 0; t <= kMaxTime; ++t) {
            const unsigned cur = t < kMaxTime ? present[t] : 0;
            if (cur == prev) continue;
            if (std::popcount(prev) >= 2) res.eis.push_back({0, wap, members_of(prev), run_start, t});
            prev = cur;
            run_start = t;
        }
        for (std::size_t a = 0; a < devices.size(); ++a) {
            for (std::size_t b = a + 1; b < devices.size(); ++b) {
                const unsigned need = (1u << a) | (1u << b);
                Timestamp pair_start = -1;
                for (Timestamp t = 0; t <= kMaxTime; ++t) {
                    const bool both = t < kMaxTime && (present[t] & need) == need;
                    if (both && pair_start < 0) pair_start = t;
                    if (!both && pair_start >= 0) {
                        res.tis.push_back({devices[a], devices[b], wap, pair_start, t});
                        pair_start = -1;
                    }
                }
            }
        }
    }

    std::sort(res.eis.begin(), res.eis.end(),
              [](const EventInteraction& a, const EventInteraction& b) {
                  return std::tie(a.wap_id, a.t_begin, a.members) <
                         std::tie(b.wap_id, b.t_begin, b.members);
              });
    for (std::size_t i = 0; i < res.eis.size(); ++i) res.eis[i].id = static_cast<int>(i);
    std::sort(res.tis.begin(), res.tis.end(),
              [](const TemporalInteraction& a, const TemporalInteraction& b) {
                  return std::tie(a.u, a.v, a.t_started, a.t_finished, a.wap_id) <
                         std::tie(b.u, b.v, b.t_started, b.t_finished, b.wap_id);
              });

    for (const EventInteraction& sink : res.eis) {
        std::map<int, std::vector<std::string>> by_source;
        for (const std::string& m : sink.members) {
            const EventInteraction* latest = nullptr;
            for (const EventInteraction& cand : res.eis) {
                if (cand.t_end > sink.t_begin) continue;
                if (!std::binary_search(cand.members.begin(), cand.members.end(), m)) continue;
                if (!latest || cand.t_end > latest->t_end ||
                    (cand.t_end == latest->t_end && cand.t_begin > latest->t_begin))
                    latest = &cand;
            }
            if (latest) by_source[latest->id].push_back(m);
        }
        for (auto& [source_id, shared] : by_source) {
            const EventInteraction& src = res.eis[source_id];
            res.edges.push_back(
                {source_id, sink.id, std::move(shared), sink.t_begin - src.t_begin, src.t_begin});
        }
    }
    std::sort(res.edges.begin(), res.edges.end(),
              [](const TransmissionEdge& a, const TransmissionEdge& b) {
                  return std::tie(a.sink, a.source) < std::tie(b.sink, b.source);
              });
    return res;
}

}  // namespace copresence

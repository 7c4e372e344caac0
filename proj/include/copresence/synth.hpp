// Seeded synthetic session logs plus a deliberately naive oracle that
// re-derives interactions by stepping through integer time.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "copresence/types.hpp"

namespace copresence {

struct SynthParams {
    int n_devices = 8;
    int n_waps = 3;
    std::int64_t horizon = 100;       // minutes
    double session_rate = 1.0;        // sessions per device-hour
    double mean_session_len = 10.0;   // minutes
    std::uint64_t seed = 1;
};

// Per device, alternating exponential gaps and session lengths (whole
// minutes, >= 1), each session at a uniformly random WAP, clipped to the
// horizon. Gaps >= 1 keep one WAP at a time by construction.
std::vector<Session> generate_synthetic_log(const SynthParams& params);

struct OracleResult {
    std::vector<EventInteraction> eis;
    std::vector<TransmissionEdge> edges;
    std::vector<TemporalInteraction> tis;
};

// Evaluates co-presence at every integer step, extracts constant-membership
// and pair runs, and links edges by scanning all interactions backwards.
// Refuses more than 10 devices or times outside [0, 1000].
OracleResult brute_force_oracle(std::span<const Session> sessions);

}  // namespace copresence

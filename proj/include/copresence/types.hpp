// Domain types shared by the co-presence pipeline.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace copresence {

// Whole minutes (WiFi logs) or whole seconds (RFID triples) since the epoch.
using Timestamp = std::int64_t;
using Duration = std::int64_t;

enum class TimeUnit { minutes, seconds };

constexpr std::int64_t units_per_day(TimeUnit u)
{
    return u == TimeUnit::minutes ? 1440 : 86400;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    std::int64_t r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// Calendar-day bucketing; `offset` shifts midnight (same unit as the timestamps).
struct DayClock {
    std::int64_t day_length = 1440;
    std::int64_t offset = 0;

    std::int64_t day_index(Timestamp t) const { return floor_div(t - offset, day_length); }
};

// One device's contiguous online interval at one access point, [t_on, t_off).
struct Session {
    std::string device_id;
    std::string wap_id;
    Timestamp t_on = 0;
    Timestamp t_off = 0;

    Duration online_duration() const { return t_off - t_on; }
    auto operator<=>(const Session&) const = default;
};

// One 20-second proximity slot: contact between i and j active during [t-20, t].
struct ContactRecord {
    Timestamp t = 0;
    std::string i;
    std::string j;

    auto operator<=>(const ContactRecord&) const = default;
};

// Maximal interval of constant co-present membership (>= 2 devices) at one
// access point, [t_begin, t_end). Identity for frequency counting is
// (wap_id, members); `id` numbers the occurrence.
struct EventInteraction {
    int id = 0;
    std::string wap_id;
    std::vector<std::string> members;  // sorted, unique
    Timestamp t_begin = 0;
    Timestamp t_end = 0;

    Duration active_duration() const { return t_end - t_begin; }
    int size() const { return static_cast<int>(members.size()); }
    auto operator<=>(const EventInteraction&) const = default;
};

// Directed source -> sink link between event interactions. delta is measured
// begin-to-begin and is bounded below by the source's active duration.
struct TransmissionEdge {
    int source = 0;
    int sink = 0;
    std::vector<std::string> shared;  // sorted, non-empty
    Duration delta = 0;
    Timestamp t_observed = 0;  // t_begin of the source

    auto operator<=>(const TransmissionEdge&) const = default;
};

// Maximal pairwise co-presence interval at one location, [t_started, t_finished).
// The pair is stored canonically ordered (u < v).
struct TemporalInteraction {
    std::string u;
    std::string v;
    std::string wap_id;
    Timestamp t_started = 0;
    Timestamp t_finished = 0;

    Duration active_duration() const { return t_finished - t_started; }
    auto operator<=>(const TemporalInteraction&) const = default;
};

// How far interval exclusivity reaches. Session data pins one group per
// access point at a time; pair data collapsed onto a single synthetic
// location can host coexisting groups, so only a given (location, members)
// identity owns its intervals exclusively.
enum class Exclusivity { per_wap, per_identity };

// Parse-level problem on one input line; collected, never silently dropped.
struct LineError {
    std::size_t line = 0;
    std::string reason;
    std::string content;
};

// Error categories; the CLI maps them to exit codes 1/2/3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace copresence

// Raw-log ingestion: WiFi session CSV and 20-second proximity triples, plus
// the normalization that makes session traces conflict-free.
#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "copresence/types.hpp"

namespace copresence {

struct SessionCsvFormat {
    enum class Stamp { integer_minutes, datetime };

    int device_col = 0;
    int wap_col = 1;
    int on_col = 2;
    int off_col = 3;
    bool header = true;
    Stamp stamp = Stamp::integer_minutes;
    char separator = ',';
};

struct SessionParse {
    std::vector<Session> sessions;  // input order
    std::vector<LineError> errors;
};

SessionParse parse_session_log(std::istream& in, const SessionCsvFormat& format = {});

// "YYYY-MM-DD HH:MM[:SS]" (or with 'T'), floored to whole minutes since epoch.
Timestamp parse_datetime_minutes(std::string_view text);

struct NormalizeResult {
    std::vector<Session> sessions;  // sorted by (device_id, t_on)
    std::vector<Session> dropped;   // sessions lost to truncation, as they were
};

// Per device: sort by t_on, resolve overlaps by truncating the earlier session
// at the later session's t_on (later connect wins), merge same-WAP sessions
// that abut with zero gap. Idempotent; total online time never increases.
NormalizeResult normalize_sessions(std::vector<Session> sessions);

// Canonical integer-minute CSV; re-parsing yields an identical session list.
void write_sessions_csv(std::ostream& out, std::span<const Session> sessions);

struct ContactParse {
    std::vector<ContactRecord> records;  // input order
    std::vector<LineError> errors;
};

// Tab-separated "t i j" lines; each record's contact is active on [t-20, t].
ContactParse parse_triple_stream(std::istream& in);

inline constexpr Duration contact_slot_seconds = 20;

// The triple format carries no location; everything maps to this one.
inline constexpr const char* rfid_location = "l0";

// Per unordered pair, slots whose active windows abut or overlap
// (next t - prev t <= 20 s) merge into one interaction [first t-20, last t].
std::vector<TemporalInteraction> coalesce_contacts(std::vector<ContactRecord> records);

void write_line_errors(std::ostream& out, std::span<const LineError> errors);

}  // namespace copresence

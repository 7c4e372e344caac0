#include "copresence/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <utility>

namespace copresence {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, std::int64_t& out)
{
    s = trim(s);
    if (s.empty())
        return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

// Proleptic Gregorian day count relative to 1970-01-01 (Hinnant's civil-days).
std::int64_t days_from_civil(int y, int m, int d)
{
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u
                         + static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool getline_crlf(std::istream& in, std::string& line)
{
    if (!std::getline(in, line))
        return false;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return true;
}

}  // namespace

Timestamp parse_datetime_minutes(std::string_view text)
{
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    std::string buf(trim(text));
    int n = std::sscanf(buf.c_str(), "%d-%d-%d%*1[T ]%d:%d:%d", &y, &mo, &d, &h, &mi, &s);
    if (n < 5)
        throw InputError("unparseable datetime: " + buf);
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0
        || s > 60)
        throw InputError("datetime field out of range: " + buf);
    return days_from_civil(y, mo, d) * 1440 + h * 60 + mi;
}

SessionParse parse_session_log(std::istream& in, const SessionCsvFormat& format)
{
    SessionParse out;
    const int max_col =
        std::max({format.device_col, format.wap_col, format.on_col, format.off_col});
    std::string line;
    std::size_t line_no = 0;
    while (getline_crlf(in, line)) {
        ++line_no;
        if (format.header && line_no == 1)
            continue;
        if (trim(line).empty())
            continue;
        auto fields = split(line, format.separator);
        if (static_cast<int>(fields.size()) <= max_col) {
            out.errors.push_back({line_no, "too few fields", line});
            continue;
        }
        Session s;
        s.device_id = std::string(trim(fields[static_cast<std::size_t>(format.device_col)]));
        s.wap_id = std::string(trim(fields[static_cast<std::size_t>(format.wap_col)]));
        if (s.device_id.empty() || s.wap_id.empty()) {
            out.errors.push_back({line_no, "empty identifier field", line});
            continue;
        }
        bool ok = true;
        if (format.stamp == SessionCsvFormat::Stamp::integer_minutes) {
            ok = parse_int(fields[static_cast<std::size_t>(format.on_col)], s.t_on)
                 && parse_int(fields[static_cast<std::size_t>(format.off_col)], s.t_off);
            if (!ok)
                out.errors.push_back({line_no, "unparseable timestamp", line});
        } else {
            try {
                s.t_on = parse_datetime_minutes(fields[static_cast<std::size_t>(format.on_col)]);
                s.t_off = parse_datetime_minutes(fields[static_cast<std::size_t>(format.off_col)]);
            } catch (const InputError&) {
                out.errors.push_back({line_no, "unparseable timestamp", line});
                ok = false;
            }
        }
        if (!ok)
            continue;
        if (s.t_on >= s.t_off) {
            out.errors.push_back({line_no, "reversed or empty interval", line});
            continue;
        }
        out.sessions.push_back(std::move(s));
    }
    return out;
}

NormalizeResult normalize_sessions(std::vector<Session> sessions)
{
    NormalizeResult out;
    std::sort(sessions.begin(), sessions.end(), [](const Session& a, const Session& b) {
        return std::tie(a.device_id, a.t_on, a.t_off, a.wap_id)
               < std::tie(b.device_id, b.t_on, b.t_off, b.wap_id);
    });
    for (Session& s : sessions) {
        if (s.t_on >= s.t_off) {
            out.dropped.push_back(std::move(s));
            continue;
        }
        while (!out.sessions.empty() && out.sessions.back().device_id == s.device_id
               && s.t_on < out.sessions.back().t_off) {
            Session& last = out.sessions.back();
            const Session before = last;
            last.t_off = s.t_on;  // later connect wins
            if (last.t_on >= last.t_off) {
                out.dropped.push_back(before);
                out.sessions.pop_back();
            } else {
                break;
            }
        }
        if (!out.sessions.empty() && out.sessions.back().device_id == s.device_id
            && out.sessions.back().wap_id == s.wap_id && out.sessions.back().t_off == s.t_on) {
            out.sessions.back().t_off = s.t_off;
        } else {
            out.sessions.push_back(std::move(s));
        }
    }
    return out;
}

void write_sessions_csv(std::ostream& out, std::span<const Session> sessions)
{
    out << "device_id,wap_id,t_on,t_off\n";
    for (const Session& s : sessions)
        out << s.device_id << ',' << s.wap_id << ',' << s.t_on << ',' << s.t_off << '\n';
}

ContactParse parse_triple_stream(std::istream& in)
{
    ContactParse out;
    std::string line;
    std::size_t line_no = 0;
    while (getline_crlf(in, line)) {
        ++line_no;
        std::string_view v = trim(line);
        if (v.empty())
            continue;
        // tab-separated, but stray spaces occur in the wild
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < v.size()) {
            while (i < v.size() && (v[i] == '\t' || v[i] == ' '))
                ++i;
            std::size_t start = i;
            while (i < v.size() && v[i] != '\t' && v[i] != ' ')
                ++i;
            if (i > start)
                tokens.push_back(v.substr(start, i - start));
        }
        if (tokens.size() != 3) {
            out.errors.push_back({line_no, "expected 3 fields", line});
            continue;
        }
        ContactRecord r;
        if (!parse_int(tokens[0], r.t)) {
            out.errors.push_back({line_no, "non-integer timestamp", line});
            continue;
        }
        r.i = std::string(tokens[1]);
        r.j = std::string(tokens[2]);
        if (r.i == r.j) {
            out.errors.push_back({line_no, "self-contact", line});
            continue;
        }
        out.records.push_back(std::move(r));
    }
    return out;
}

std::vector<TemporalInteraction> coalesce_contacts(std::vector<ContactRecord> records)
{
    std::map<std::pair<std::string, std::string>, std::vector<Timestamp>> by_pair;
    for (ContactRecord& r : records) {
        auto key = r.i < r.j ? std::make_pair(std::move(r.i), std::move(r.j))
                             : std::make_pair(std::move(r.j), std::move(r.i));
        by_pair[std::move(key)].push_back(r.t);
    }
    std::vector<TemporalInteraction> tis;
    for (auto& [pair, times] : by_pair) {
        std::sort(times.begin(), times.end());
        Timestamp run_first = times.front();
        Timestamp run_last = times.front();
        auto emit = [&] {
            tis.push_back({pair.first, pair.second, rfid_location,
                           run_first - contact_slot_seconds, run_last});
        };
        for (std::size_t k = 1; k < times.size(); ++k) {
            if (times[k] - run_last <= contact_slot_seconds) {
                run_last = times[k];
            } else {
                emit();
                run_first = run_last = times[k];
            }
        }
        emit();
    }
    std::sort(tis.begin(), tis.end());
    return tis;
}

void write_line_errors(std::ostream& out, std::span<const LineError> errors)
{
    for (const LineError& e : errors)
        out << "line " << e.line << ": " << e.reason << ": " << e.content << '\n';
}

}  // namespace copresence

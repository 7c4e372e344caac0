// Command-line front end: ingest raw logs into a store, run the full
// analysis into per-figure tables, spot-check the pipeline against the
// brute-force oracle, or emit a time-shuffled null model.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copresence/dyad_graph.hpp"
#include "copresence/event_graph.hpp"
#include "copresence/ingest.hpp"
#include "copresence/report.hpp"
#include "copresence/stats.hpp"
#include "copresence/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace copresence;

namespace {

constexpr const char* kToolVersion = "copresence 1.0.0";

struct RunConfig {
    std::string input;
    std::string format = "wifi-csv";  // or "sociopatterns"
    std::string stamp = "int";        // or "datetime"
    std::string store = "store";
    std::string out = "out";
    std::string config_file;
    std::uint64_t seed = 42;
    int k_min = 2;
    int bins_per_decade = 10;
    int swap_factor = 20;
    std::int64_t tz_offset = 0;  // same unit as the dataset's timestamps
    std::vector<std::string> targets;
    // oracle-check knobs
    int instances = 1000;
    int max_devices = 8;
    int max_waps = 3;
    std::int64_t horizon = 100;
};

void apply_config_file(RunConfig& cfg) {
    if (cfg.config_file.empty()) return;
    std::ifstream in(cfg.config_file);
    if (!in) throw ConfigError("cannot read config file " + cfg.config_file);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config file: ") + e.what());
    }
    auto grab = [&](const char* key, auto& slot) {
        if (j.contains(key)) j.at(key).get_to(slot);
    };
    grab("input", cfg.input);
    grab("format", cfg.format);
    grab("stamp", cfg.stamp);
    grab("store", cfg.store);
    grab("out", cfg.out);
    grab("seed", cfg.seed);
    grab("k_min", cfg.k_min);
    grab("bins_per_decade", cfg.bins_per_decade);
    grab("swap_factor", cfg.swap_factor);
    grab("tz_offset", cfg.tz_offset);
    grab("targets", cfg.targets);
    grab("instances", cfg.instances);
    grab("max_devices", cfg.max_devices);
    grab("max_waps", cfg.max_waps);
    grab("horizon", cfg.horizon);
}

void validate(const RunConfig& cfg) {
    if (cfg.format != "wifi-csv" && cfg.format != "sociopatterns")
        throw ConfigError("format must be wifi-csv or sociopatterns");
    if (cfg.stamp != "int" && cfg.stamp != "datetime")
        throw ConfigError("stamp must be int or datetime");
    if (cfg.k_min < 1) throw ConfigError("k_min must be >= 1");
    if (cfg.bins_per_decade < 1) throw ConfigError("bins_per_decade must be >= 1");
    if (cfg.swap_factor < 0) throw ConfigError("swap_factor must be >= 0");
    static const std::set<std::string> known{"ei", "tg", "ti", "contact", "entropy", "deseason"};
    for (const auto& t : cfg.targets)
        if (!known.count(t)) throw ConfigError("unknown analysis target: " + t);
}

std::ofstream open_out_file(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    return out;
}

std::string plural(std::int64_t n, const char* word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

// ---- store ----------------------------------------------------------------

struct Store {
    TimeUnit unit = TimeUnit::minutes;
    std::string format;
    std::vector<Session> sessions;           // wifi-csv stores
    std::vector<TemporalInteraction> tis;    // sociopatterns stores
};

void cmd_ingest(const RunConfig& cfg) {
    if (cfg.input.empty()) throw ConfigError("ingest needs --input");
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) throw InputError("cannot read " + cfg.input);
    fs::create_directories(cfg.store);

    json meta;
    meta["format"] = cfg.format;
    meta["tool"] = kToolVersion;
    std::vector<LineError> errors;
    if (cfg.format == "wifi-csv") {
        SessionCsvFormat fmt;
        fmt.stamp = cfg.stamp == "datetime" ? SessionCsvFormat::Stamp::datetime
                                            : SessionCsvFormat::Stamp::integer_minutes;
        SessionParse parsed = parse_session_log(in, fmt);
        errors = std::move(parsed.errors);
        std::set<std::string> devices, waps;
        for (const Session& s : parsed.sessions) {
            devices.insert(s.device_id);
            waps.insert(s.wap_id);
        }
        std::cout << plural(devices.size(), "device") << ", "
                  << plural(parsed.sessions.size(), "session") << ", "
                  << plural(waps.size(), "WAP") << "\n";
        const std::size_t n_parsed = parsed.sessions.size();
        NormalizeResult norm = normalize_sessions(std::move(parsed.sessions));
        auto out = open_out_file(fs::path(cfg.store) / "sessions.csv");
        write_sessions_csv(out, norm.sessions);
        meta["time_unit"] = "minutes";
        meta["devices"] = devices.size();
        meta["waps"] = waps.size();
        meta["sessions_parsed"] = n_parsed;
        meta["sessions"] = norm.sessions.size();
        meta["sessions_dropped"] = norm.dropped.size();
        meta["overlap_rule"] = "later connect wins; earlier session truncated at the new t_on";
    } else {
        ContactParse parsed = parse_triple_stream(in);
        errors = std::move(parsed.errors);
        std::set<std::string> devices;
        for (const ContactRecord& r : parsed.records) {
            devices.insert(r.i);
            devices.insert(r.j);
        }
        const std::size_t n_records = parsed.records.size();
        auto tis = coalesce_contacts(std::move(parsed.records));
        std::cout << plural(devices.size(), "device") << ", " << plural(n_records, "contact")
                  << ", " << plural(tis.size(), "interaction") << "\n";
        write_tis_csv(fs::path(cfg.store) / "tis.csv", tis, "1c");
        meta["time_unit"] = "seconds";
        meta["devices"] = devices.size();
        meta["contacts"] = n_records;
        meta["interactions"] = tis.size();
    }
    meta["line_errors"] = errors.size();
    {
        auto err_out = open_out_file(fs::path(cfg.store) / "ingest.errors.txt");
        write_line_errors(err_out, errors);
    }
    auto meta_out = open_out_file(fs::path(cfg.store) / "store.json");
    meta_out << meta.dump(2) << "\n";
}

std::vector<TemporalInteraction> read_tis_csv(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::vector<TemporalInteraction> tis;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {  // u,v,wap_id,t_started,t_finished
            header_seen = true;
            continue;
        }
        TemporalInteraction ti;
        std::size_t pos = 0;
        auto next = [&]() {
            const std::size_t comma = line.find(',', pos);
            std::string field = line.substr(pos, comma - pos);
            pos = comma == std::string::npos ? line.size() : comma + 1;
            return field;
        };
        ti.u = next();
        ti.v = next();
        ti.wap_id = next();
        ti.t_started = std::stoll(next());
        ti.t_finished = std::stoll(next());
        tis.push_back(std::move(ti));
    }
    return tis;
}

Store load_store(const RunConfig& cfg) {
    const fs::path meta_path = fs::path(cfg.store) / "store.json";
    std::ifstream meta_in(meta_path);
    if (!meta_in)
        throw InputError("no ingested store at " + cfg.store + " (run `copresence ingest` first)");
    json meta;
    try {
        meta_in >> meta;
    } catch (const json::exception& e) {
        throw InputError(std::string("corrupt store.json: ") + e.what());
    }
    Store store;
    store.format = meta.value("format", "wifi-csv");
    store.unit = meta.value("time_unit", "minutes") == "seconds" ? TimeUnit::seconds
                                                                 : TimeUnit::minutes;
    if (store.format == "wifi-csv") {
        std::ifstream in(fs::path(cfg.store) / "sessions.csv", std::ios::binary);
        if (!in) throw InputError("store has no sessions.csv");
        SessionParse parsed = parse_session_log(in);
        if (!parsed.errors.empty()) throw InputError("corrupt sessions.csv in store");
        store.sessions = std::move(parsed.sessions);
    } else {
        store.tis = read_tis_csv(fs::path(cfg.store) / "tis.csv");
    }
    return store;
}

// ---- analyze ---------------------------------------------------------------

std::vector<double> positive_doubles(std::span<const Duration> xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (Duration x : xs)
        if (x > 0) out.push_back(static_cast<double>(x));
    return out;
}

void emit_pdf(const fs::path& path, const std::vector<double>& samples, int bins_per_decade,
              const std::string& figure) {
    if (samples.empty()) {
        write_distribution_csv(path, BinnedDistribution{}, figure);
        return;
    }
    write_distribution_csv(path, log_binned_pdf(samples, bins_per_decade), figure);
}

void maybe_fit(const fs::path& path, const std::vector<double>& samples,
               const std::string& figure) {
    if (samples.size() < 50) return;  // below the fit's precondition
    try {
        write_fit_json(path, fit_truncated_power_law(samples), figure);
    } catch (const FitError&) {
        // degenerate tail: no fit report for this table
    }
}

void cmd_analyze(const RunConfig& cfg) {
    Store store = load_store(cfg);
    const DayClock clock{units_per_day(store.unit), cfg.tz_offset};
    const fs::path out_dir(cfg.out);
    fs::create_directories(out_dir);

    std::set<std::string> targets(cfg.targets.begin(), cfg.targets.end());
    if (targets.empty()) targets = {"ei", "tg", "ti", "contact", "entropy", "deseason"};

    // Build everything once; emission is per target.  Session stores get
    // location-wide exclusive intervals; contact-derived stores only
    // guarantee that one group never overlaps itself.
    std::vector<EventInteraction> eis;
    std::vector<TemporalInteraction> tis;
    Exclusivity scope = Exclusivity::per_wap;
    if (store.format == "wifi-csv") {
        eis = build_event_interactions(std::span<const Session>(store.sessions));
        tis = build_temporal_interactions(store.sessions);
        check_temporal_interactions(tis, store.sessions);
    } else {
        scope = Exclusivity::per_identity;
        tis = std::move(store.tis);
        eis = build_event_interactions(std::span<const TemporalInteraction>(tis));
        check_temporal_interactions(std::span<const TemporalInteraction>(tis));
    }
    check_event_interactions(eis, scope);
    std::vector<TransmissionEdge> edges = build_transmission_graph(eis);
    check_transmission_edges(edges, eis);
    AggregatedTransmissionGraph atg = aggregate_transmission_graph(edges, eis);
    std::vector<DyadSeries> dyads = build_dyad_series(tis);
    ContactNetwork contacts = aggregate_contact_network(tis);

    if (targets.count("ei")) {
        write_eis_csv(out_dir / "eis.csv", eis, "1b");
        std::vector<Duration> durations;
        for (const auto& ei : eis) durations.push_back(ei.active_duration());
        const auto dur = positive_doubles(durations);
        emit_pdf(out_dir / "ei_durations.csv", dur, cfg.bins_per_decade, "2a");
        maybe_fit(out_dir / "ei_durations_fit.json", dur, "2a");
        // sizes on unit-wide integer bins
        BinnedDistribution size_dist;
        if (!eis.empty()) {
            std::vector<Duration> sizes;
            for (const auto& ei : eis) sizes.push_back(ei.size());
            size_dist = integral_days(sizes, DayClock{1, 0});
        }
        write_distribution_csv(out_dir / "ei_size.csv", size_dist, "2b");
        for (int s = 2; s <= 11; ++s) {
            std::vector<double> by_size;
            for (const auto& ei : eis)
                if (ei.size() == s && ei.active_duration() > 0)
                    by_size.push_back(static_cast<double>(ei.active_duration()));
            if (by_size.empty()) continue;
            const std::string fig = s <= 5 ? "2c" : "2d";
            emit_pdf(out_dir / ("ei_durations_s" + std::to_string(s) + ".csv"), by_size,
                     cfg.bins_per_decade, fig);
        }
    }

    if (targets.count("tg")) {
        write_edges_csv(out_dir / "edges.csv", edges, "1b");
        std::vector<Duration> deltas;
        for (const auto& e : edges) deltas.push_back(e.delta);
        const auto ds = positive_doubles(deltas);
        emit_pdf(out_dir / "delta.csv", ds, cfg.bins_per_decade, "3a");
        maybe_fit(out_dir / "delta_fit.json", ds, "3a");
        write_distribution_csv(out_dir / "delta_days.csv", integral_days(deltas, clock), "3b");
        write_atg_dot(out_dir / "atg.dot", atg, "4a");
        write_atg_json(out_dir / "atg.json", atg, "4a");

        std::unordered_map<int, const EventInteraction*> by_id;
        for (const auto& ei : eis) by_id[ei.id] = &ei;
        std::vector<std::pair<double, double>> src_snk, src_delta;
        for (const auto& e : edges) {
            const double sd = static_cast<double>(by_id.at(e.source)->active_duration());
            src_snk.push_back({sd, static_cast<double>(by_id.at(e.sink)->active_duration())});
            src_delta.push_back({sd, static_cast<double>(e.delta)});
        }
        std::vector<CoefficientRow> rows;
        auto add_row = [&](const char* label,
                           const std::vector<std::pair<double, double>>& pairs) {
            if (pairs.size() < 2) return;
            std::vector<double> xs, ys;
            for (const auto& [x, y] : pairs) {
                xs.push_back(x);
                ys.push_back(y);
            }
            try {
                rows.push_back({label, pearson(xs, ys), memory_coefficient(pairs),
                                static_cast<std::int64_t>(pairs.size())});
            } catch (const std::domain_error&) {
                // constant marginal: the coefficient is undefined for this data
            }
        };
        add_row("source duration vs sink duration", src_snk);
        add_row("source duration vs transmission duration", src_delta);
        write_coefficients_json(out_dir / "coefficients.json", rows, "Table 1");
    }

    if (targets.count("ti")) {
        write_tis_csv(out_dir / "tis.csv", tis, "1c");
        std::vector<Duration> durations;
        for (const auto& ti : tis) durations.push_back(ti.active_duration());
        const auto dur = positive_doubles(durations);
        emit_pdf(out_dir / "ti_durations.csv", dur, cfg.bins_per_decade, "5a");
        maybe_fit(out_dir / "ti_durations_fit.json", dur, "5a");
        std::vector<double> freqs;
        for (const auto& d : dyads) freqs.push_back(d.n_ti());
        emit_pdf(out_dir / "ti_frequency.csv", freqs, cfg.bins_per_decade, "5b");
        maybe_fit(out_dir / "ti_frequency_fit.json", freqs, "5b");

        const InterEventSplit split = split_inter_event_by_day(dyads, clock);
        const auto same_day = positive_doubles(split.same_day);
        const auto cross_day = positive_doubles(split.cross_day);
        emit_pdf(out_dir / "interevent_sameday.csv", same_day, cfg.bins_per_decade, "5c");
        maybe_fit(out_dir / "interevent_sameday_fit.json", same_day, "5c");
        emit_pdf(out_dir / "interevent_crossday.csv", cross_day, cfg.bins_per_decade, "5d");
        maybe_fit(out_dir / "interevent_crossday_fit.json", cross_day, "5d");

        std::vector<double> gaps = same_day;
        gaps.insert(gaps.end(), cross_day.begin(), cross_day.end());
        if (!gaps.empty())
            write_ccdf_csv(out_dir / "dyad_cpd.csv", ccdf(gaps), "6b");
        else
            write_ccdf_csv(out_dir / "dyad_cpd.csv", {}, "6b");
    }

    if (targets.count("contact")) {
        const SuperConnectingGroups groups = find_super_connecting(atg, cfg.k_min);
        const LeafHubReport report = leaf_hub_report(contacts, groups.members);
        write_degree_rank_csv(out_dir / "degree_rank.csv", report, "4");
        json j{{"figure", "4"},
               {"k_min", cfg.k_min},
               {"super_vertices", groups.entries.size()},
               {"flagged_members", report.n_flagged},
               {"median_degree_all",
                std::isnan(report.median_all) ? json(nullptr) : json(report.median_all)},
               {"median_degree_flagged",
                std::isnan(report.median_flagged) ? json(nullptr) : json(report.median_flagged)}};
        auto out = open_out_file(out_dir / "leafhub.json");
        out << j.dump(2) << "\n";
    }

    if (targets.count("entropy")) {
        write_dyads_csv(out_dir / "dyads.csv", dyads, "6");
        const auto curve = mean_entropy_curve(dyads);
        write_entropy_curve_csv(out_dir / "entropy_curve.csv", curve, "S4");
    }

    if (targets.count("deseason")) {
        const std::vector<Duration> natural = natural_deseason(edges, eis, clock);
        emit_pdf(out_dir / "deseason_natural.csv", positive_doubles(natural),
                 cfg.bins_per_decade, "3c");
        const ShuffleResult shuffled = time_shuffled_null(eis, cfg.seed, cfg.swap_factor, scope);
        check_event_interactions(shuffled.eis, scope);
        const auto null_edges = build_transmission_graph(shuffled.eis);
        check_transmission_edges(null_edges, shuffled.eis);
        std::vector<Duration> null_deltas;
        for (const auto& e : null_edges) null_deltas.push_back(e.delta);
        emit_pdf(out_dir / "deseason_shuffled.csv", positive_doubles(null_deltas),
                 cfg.bins_per_decade, "3c");
        write_shuffle_meta_json(out_dir / "shuffle_meta.json", shuffled, cfg.seed,
                                cfg.swap_factor);
    }

    json echo{{"tool", kToolVersion},
              {"store", cfg.store},
              {"out", cfg.out},
              {"format", store.format},
              {"time_unit", store.unit == TimeUnit::seconds ? "seconds" : "minutes"},
              {"seed", cfg.seed},
              {"k_min", cfg.k_min},
              {"bins_per_decade", cfg.bins_per_decade},
              {"swap_factor", cfg.swap_factor},
              {"tz_offset", cfg.tz_offset},
              {"targets", std::vector<std::string>(targets.begin(), targets.end())}};
    auto out = open_out_file(out_dir / "run_config.json");
    out << echo.dump(2) << "\n";
}

// ---- oracle-check ----------------------------------------------------------

void cmd_oracle_check(const RunConfig& cfg) {
    if (cfg.instances < 1) throw ConfigError("need at least one instance");
    if (cfg.max_devices > 10 || cfg.horizon > 1000)
        throw ConfigError("oracle refuses more than 10 devices or horizons beyond 1000");
    for (int k = 0; k < cfg.instances; ++k) {
        SynthParams params;
        params.seed = cfg.seed + static_cast<std::uint64_t>(k);
        params.n_devices =
            2 + static_cast<int>(params.seed % std::max(1, cfg.max_devices - 1));
        params.n_waps = 1 + static_cast<int>(params.seed % cfg.max_waps);
        params.horizon = cfg.horizon;
        params.session_rate = 20.0 + static_cast<double>(params.seed % 40);
        params.mean_session_len = 4.0 + static_cast<double>(params.seed % 12);
        const auto sessions = generate_synthetic_log(params);

        const OracleResult expect = brute_force_oracle(sessions);
        const auto eis = build_event_interactions(std::span<const Session>(sessions));
        const auto edges = build_transmission_graph(eis);
        const auto tis = build_temporal_interactions(sessions);
        check_event_interactions(eis);
        check_transmission_edges(edges, eis);
        check_temporal_interactions(tis, sessions);
        if (eis != expect.eis || edges != expect.edges || tis != expect.tis)
            throw InvariantViolation("pipeline disagrees with the oracle at seed " +
                                     std::to_string(params.seed));
    }
    std::cout << cfg.instances << " instances checked: pipeline matches the oracle\n";
}

// ---- shuffle ---------------------------------------------------------------

void cmd_shuffle(const RunConfig& cfg) {
    Store store = load_store(cfg);
    std::vector<EventInteraction> eis;
    Exclusivity scope = Exclusivity::per_wap;
    if (store.format == "wifi-csv") {
        eis = build_event_interactions(std::span<const Session>(store.sessions));
    } else {
        scope = Exclusivity::per_identity;
        eis = build_event_interactions(std::span<const TemporalInteraction>(store.tis));
    }
    const ShuffleResult shuffled = time_shuffled_null(eis, cfg.seed, cfg.swap_factor, scope);
    check_event_interactions(shuffled.eis, scope);
    const auto edges = build_transmission_graph(shuffled.eis);
    check_transmission_edges(edges, shuffled.eis);
    const fs::path out_dir(cfg.out);
    write_eis_csv(out_dir / "shuffled_eis.csv", shuffled.eis, "3c");
    write_edges_csv(out_dir / "shuffled_edges.csv", edges, "3c");
    write_shuffle_meta_json(out_dir / "shuffle_meta.json", shuffled, cfg.seed, cfg.swap_factor);
    std::cout << "accepted " << shuffled.accepted << " of " << shuffled.attempted
              << " attempted swaps\n";
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"co-presence log analytics"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.add_option("--config", cfg.config_file,
                   "JSON config; its values override command-line flags");

    auto add_store_opts = [&](CLI::App* sub) {
        sub->add_option("--store", cfg.store, "ingested store directory");
        sub->add_option("--seed", cfg.seed, "seed for all randomized steps");
    };

    CLI::App* ingest = app.add_subcommand("ingest", "parse and normalize a raw log");
    ingest->add_option("--input", cfg.input, "raw log file");
    ingest->add_option("--format", cfg.format, "wifi-csv | sociopatterns");
    ingest->add_option("--stamp", cfg.stamp, "int | datetime (wifi-csv timestamps)");
    add_store_opts(ingest);

    CLI::App* analyze = app.add_subcommand("analyze", "emit per-figure tables from a store");
    add_store_opts(analyze);
    analyze->add_option("--out", cfg.out, "output directory");
    analyze->add_option("--targets", cfg.targets,
                        "subset of ei,tg,ti,contact,entropy,deseason (default: all)")
        ->delimiter(',');
    analyze->add_option("--k-min", cfg.k_min, "degree floor for super-connecting groups");
    analyze->add_option("--bins-per-decade", cfg.bins_per_decade, "log-binning resolution");
    analyze->add_option("--swap-factor", cfg.swap_factor, "shuffle attempts per interaction");
    analyze->add_option("--tz-offset", cfg.tz_offset, "midnight shift, dataset time units");

    CLI::App* oracle = app.add_subcommand("oracle-check", "compare pipeline with the naive oracle");
    oracle->add_option("--instances", cfg.instances, "random instances to check");
    oracle->add_option("--max-devices", cfg.max_devices, "devices per instance (<= 10)");
    oracle->add_option("--max-waps", cfg.max_waps, "locations per instance");
    oracle->add_option("--horizon", cfg.horizon, "minutes per instance (<= 1000)");
    oracle->add_option("--seed", cfg.seed, "base seed");

    CLI::App* shuffle = app.add_subcommand("shuffle", "emit a time-shuffled null model");
    add_store_opts(shuffle);
    shuffle->add_option("--out", cfg.out, "output directory");
    shuffle->add_option("--swap-factor", cfg.swap_factor, "shuffle attempts per interaction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        apply_config_file(cfg);
        validate(cfg);
        if (ingest->parsed()) cmd_ingest(cfg);
        if (analyze->parsed()) cmd_analyze(cfg);
        if (oracle->parsed()) cmd_oracle_check(cfg);
        if (shuffle->parsed()) cmd_shuffle(cfg);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

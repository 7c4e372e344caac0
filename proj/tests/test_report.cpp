#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "copresence/dyad_graph.hpp"
#include "copresence/event_graph.hpp"
#include "copresence/ingest.hpp"
#include "copresence/report.hpp"
#include "copresence/synth.hpp"
#include "helpers.hpp"

using namespace copresence;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    static const fs::path dir =
        fs::temp_directory_path() / ("copresence_tests_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

nlohmann::json parse_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("format_double prints significant digits without noise") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(12345.0) == "12345");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1e-9) == "1e-09");
}

TEST_CASE("interaction and edge tables are byte-exact") {
    const fs::path p = tmp_dir() / "eis.csv";
    write_eis_csv(p,
                  std::vector<EventInteraction>{{0, "w1", {"A", "B"}, 10, 20},
                                                {1, "w1", {"A", "B", "C"}, 20, 30}},
                  "1b");
    CHECK(testutil::slurp(p) ==
          "# figure: 1b\n"
          "ei_id,wap_id,members,t_begin,t_end\n"
          "0,w1,A|B,10,20\n"
          "1,w1,A|B|C,20,30\n");

    const fs::path q = tmp_dir() / "edges.csv";
    write_edges_csv(q, std::vector<TransmissionEdge>{{0, 1, {"A", "B"}, 10, 10}}, "1b");
    CHECK(testutil::slurp(q) ==
          "# figure: 1b\n"
          "source_ei,sink_ei,shared,delta,t_observed\n"
          "0,1,A|B,10,10\n");

    const fs::path r = tmp_dir() / "tis.csv";
    write_tis_csv(r, std::vector<TemporalInteraction>{{"A", "B", "w1", 10, 40}}, "1c");
    CHECK(testutil::slurp(r) ==
          "# figure: 1c\n"
          "u,v,wap_id,t_started,t_finished\n"
          "A,B,w1,10,40\n");
}

TEST_CASE("the dyad table leaves entropy blank below two interactions") {
    DyadSeries lone;
    lone.u = "a";
    lone.v = "b";
    lone.tis = {{"a", "b", "w1", 10, 15}};
    DyadSeries repeat;
    repeat.u = "a";
    repeat.v = "c";
    repeat.tis = {{"a", "c", "w1", 5, 9}, {"a", "c", "w1", 25, 30}};
    repeat.inter_event = {20};
    repeat.entropy = 0.0;

    const fs::path p = tmp_dir() / "dyads.csv";
    write_dyads_csv(p, std::vector<DyadSeries>{lone, repeat}, "6");
    CHECK(testutil::slurp(p) ==
          "# figure: 6\n"
          "u,v,n_ti,entropy,first_start,last_start\n"
          "a,b,1,,10,10\n"
          "a,c,2,0,5,25\n");
}

TEST_CASE("the degree-rank table flags super members") {
    LeafHubReport report;
    report.rows = {{1, "h", 3, true}, {2, "a", 2, false}};
    const fs::path p = tmp_dir() / "rank.csv";
    write_degree_rank_csv(p, report, "4");
    CHECK(testutil::slurp(p) ==
          "# figure: 4\n"
          "rank,device_id,degree,is_super_member\n"
          "1,h,3,1\n"
          "2,a,2,0\n");
}

TEST_CASE("distribution, ccdf, and entropy-curve tables carry the documented columns") {
    BinnedDistribution dist;
    dist.scheme = BinScheme::logarithmic;
    dist.edges = {1.0, 2.0, 4.0};
    dist.densities = {0.5, 0.25};
    dist.counts = {1, 1};
    dist.sample_count = 2;
    const fs::path p = tmp_dir() / "dist.csv";
    write_distribution_csv(p, dist, "2a");
    CHECK(testutil::slurp(p) ==
          "# figure: 2a\n"
          "bin_lo,bin_hi,density,count\n"
          "1,2,0.5,1\n"
          "2,4,0.25,1\n");

    const fs::path q = tmp_dir() / "ccdf.csv";
    write_ccdf_csv(q, std::vector<std::pair<double, double>>{{1.0, 1.0}, {2.0, 0.5}}, "6b");
    CHECK(testutil::slurp(q) ==
          "# figure: 6b\n"
          "x,p_geq\n"
          "1,1\n"
          "2,0.5\n");

    const fs::path r = tmp_dir() / "curve.csv";
    write_entropy_curve_csv(r, std::vector<EntropyCurvePoint>{{2, 0.5, 3}}, "S4");
    CHECK(testutil::slurp(r) ==
          "# figure: S4\n"
          "n_ti,mean_entropy,n_dyads\n"
          "2,0.5,3\n");
}

TEST_CASE("fit and shuffle reports round-trip through json") {
    PowerLawFit fit;
    fit.exponent = 1.5;
    fit.x_min = 2.0;
    fit.ks = 0.05;
    fit.n_tail = 100;
    const fs::path p = tmp_dir() / "fit.json";
    write_fit_json(p, fit, "2a");
    auto j = parse_file(p);
    CHECK(j["figure"] == "2a");
    CHECK(j["exponent"] == 1.5);
    CHECK(j["x_min"] == 2.0);
    CHECK(j["cutoff"].is_null());
    CHECK(j["ks"] == 0.05);
    CHECK(j["n"] == 100);

    fit.cutoff = 600.0;
    write_fit_json(p, fit, "2a");
    CHECK(parse_file(p)["cutoff"] == 600.0);

    ShuffleResult shuffled;
    shuffled.attempted = 10;
    shuffled.accepted = 5;
    const fs::path q = tmp_dir() / "meta.json";
    write_shuffle_meta_json(q, shuffled, 42, 20);
    auto meta = parse_file(q);
    CHECK(meta["seed"] == 42);
    CHECK(meta["n_swaps_factor"] == 20);
    CHECK(meta["attempted"] == 10);
    CHECK(meta["accepted"] == 5);
    CHECK(meta["acceptance_rate"] == 0.5);
    CHECK(meta["method"].is_string());
}

TEST_CASE("coefficient rows serialize with their labels") {
    const std::vector<CoefficientRow> rows = {{"source duration vs sink duration", 0.1, 0.2, 99}};
    const fs::path p = tmp_dir() / "coef.json";
    write_coefficients_json(p, rows, "t1");
    auto j = parse_file(p);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["label"] == "source duration vs sink duration");
    CHECK(j["rows"][0]["pearson"] == 0.1);
    CHECK(j["rows"][0]["memory"] == 0.2);
    CHECK(j["rows"][0]["n"] == 99);
}

TEST_CASE("the aggregated graph serializes to dot and json") {
    AggregatedTransmissionGraph atg;
    atg.vertices = {{"w1", {"A", "B"}, 2, 1, 1}, {"w1", {"A", "B", "C"}, 1, 1, 1}};
    atg.edges = {{0, 1, 3}};
    atg.vertex_of_ei = {0, 0, 1};

    const fs::path p = tmp_dir() / "atg.dot";
    write_atg_dot(p, atg, "4a");
    CHECK(testutil::slurp(p) == R"(# figure: 4a
digraph atg {
  v0 [label="w1:A|B\nn_ei=2"];
  v1 [label="w1:A|B|C\nn_ei=1"];
  v0 -> v1 [label="3"];
}
)");

    const fs::path q = tmp_dir() / "atg.json";
    write_atg_json(q, atg, "4a");
    auto j = parse_file(q);
    REQUIRE(j["vertices"].size() == 2);
    CHECK(j["vertices"][0]["members"] == nlohmann::json::array({"A", "B"}));
    CHECK(j["vertices"][0]["n_ei"] == 2);
    REQUIRE(j["edges"].size() == 1);
    CHECK(j["edges"][0]["n_tp"] == 3);
}

TEST_CASE("frozen synthetic fixtures stay byte-identical") {
    for (int seed = 101; seed <= 105; ++seed) {
        const fs::path dir = testutil::fixtures_dir() / ("synth" + std::to_string(seed));
        INFO("fixture " << dir.string());
        std::ifstream in(dir / "sessions.csv", std::ios::binary);
        REQUIRE_MESSAGE(in.good(), "fixture missing; rebuild with gen_fixtures");
        SessionParse parsed = parse_session_log(in);
        REQUIRE(parsed.errors.empty());

        const fs::path out = tmp_dir() / ("synth" + std::to_string(seed));
        std::ofstream slog_out;
        fs::create_directories(out);
        slog_out.open(out / "sessions.csv", std::ios::binary);
        write_sessions_csv(slog_out, parsed.sessions);
        slog_out.close();
        CHECK(testutil::slurp(out / "sessions.csv") == testutil::slurp(dir / "sessions.csv"));

        const auto eis = build_event_interactions(std::span<const Session>(parsed.sessions));
        const auto edges = build_transmission_graph(eis);
        const auto tis = build_temporal_interactions(parsed.sessions);
        write_eis_csv(out / "eis.csv", eis, "1b");
        write_edges_csv(out / "edges.csv", edges, "1b");
        write_tis_csv(out / "tis.csv", tis, "1c");
        CHECK(testutil::slurp(out / "eis.csv") == testutil::slurp(dir / "eis.csv"));
        CHECK(testutil::slurp(out / "edges.csv") == testutil::slurp(dir / "edges.csv"));
        CHECK(testutil::slurp(out / "tis.csv") == testutil::slurp(dir / "tis.csv"));
    }
}

#include "copresence/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace copresence {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);  // binary: no CRLF translation anywhere
    if (!out) throw InputError("cannot write " + path.string());
    return out;
}

void figure_header(std::ofstream& out, const std::string& figure) {
    if (!figure.empty()) out << "# figure: " << figure << "\n";
}

std::string join_members(std::span<const std::string> members) {
    std::string s;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += '|';
        s += members[i];
    }
    return s;
}

void dump_json(const std::filesystem::path& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_eis_csv(const std::filesystem::path& path, std::span<const EventInteraction> eis,
                   const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "ei_id,wap_id,members,t_begin,t_end\n";
    for (const EventInteraction& ei : eis)
        out << ei.id << ',' << ei.wap_id << ',' << join_members(ei.members) << ',' << ei.t_begin
            << ',' << ei.t_end << "\n";
}

void write_edges_csv(const std::filesystem::path& path, std::span<const TransmissionEdge> edges,
                     const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "source_ei,sink_ei,shared,delta,t_observed\n";
    for (const TransmissionEdge& e : edges)
        out << e.source << ',' << e.sink << ',' << join_members(e.shared) << ',' << e.delta << ','
            << e.t_observed << "\n";
}

void write_tis_csv(const std::filesystem::path& path, std::span<const TemporalInteraction> tis,
                   const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "u,v,wap_id,t_started,t_finished\n";
    for (const TemporalInteraction& ti : tis)
        out << ti.u << ',' << ti.v << ',' << ti.wap_id << ',' << ti.t_started << ','
            << ti.t_finished << "\n";
}

void write_dyads_csv(const std::filesystem::path& path, std::span<const DyadSeries> series,
                     const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "u,v,n_ti,entropy,first_start,last_start\n";
    for (const DyadSeries& s : series) {
        out << s.u << ',' << s.v << ',' << s.n_ti() << ',';
        if (s.entropy) out << format_double(*s.entropy);
        out << ',' << s.tis.front().t_started << ',' << s.tis.back().t_started << "\n";
    }
}

void write_degree_rank_csv(const std::filesystem::path& path, const LeafHubReport& report,
                           const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "rank,device_id,degree,is_super_member\n";
    for (const auto& row : report.rows)
        out << row.rank << ',' << row.device_id << ',' << row.degree << ','
            << (row.is_super_member ? 1 : 0) << "\n";
}

void write_distribution_csv(const std::filesystem::path& path, const BinnedDistribution& dist,
                            const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "bin_lo,bin_hi,density,count\n";
    for (std::size_t k = 0; k + 1 < dist.edges.size(); ++k)
        out << format_double(dist.edges[k]) << ',' << format_double(dist.edges[k + 1]) << ','
            << format_double(dist.densities[k]) << ',' << dist.counts[k] << "\n";
}

void write_ccdf_csv(const std::filesystem::path& path,
                    std::span<const std::pair<double, double>> points, const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "x,p_geq\n";
    for (const auto& [x, p] : points) out << format_double(x) << ',' << format_double(p) << "\n";
}

void write_entropy_curve_csv(const std::filesystem::path& path,
                             std::span<const EntropyCurvePoint> curve, const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "n_ti,mean_entropy,n_dyads\n";
    for (const EntropyCurvePoint& p : curve)
        out << p.n_ti << ',' << format_double(p.mean_entropy) << ',' << p.n_dyads << "\n";
}

void write_fit_json(const std::filesystem::path& path, const PowerLawFit& fit,
                    const std::string& figure) {
    nlohmann::json j{{"figure", figure},
                     {"exponent", fit.exponent},
                     {"x_min", fit.x_min},
                     {"ks", fit.ks},
                     {"n", fit.n_tail}};
    if (fit.cutoff)
        j["cutoff"] = *fit.cutoff;
    else
        j["cutoff"] = nullptr;
    dump_json(path, j);
}

void write_shuffle_meta_json(const std::filesystem::path& path, const ShuffleResult& result,
                             std::uint64_t seed, int n_swaps_factor) {
    nlohmann::json j{
        {"seed", seed},
        {"n_swaps_factor", n_swaps_factor},
        {"attempted", result.attempted},
        {"accepted", result.accepted},
        {"acceptance_rate",
         result.attempted ? static_cast<double>(result.accepted) / result.attempted : 0.0},
        {"method", "pairwise begin-time swaps, rejected on exclusive-group overlap"}};
    dump_json(path, j);
}

void write_coefficients_json(const std::filesystem::path& path,
                             std::span<const CoefficientRow> rows, const std::string& figure) {
    nlohmann::json j;
    j["figure"] = figure;
    j["rows"] = nlohmann::json::array();
    for (const CoefficientRow& r : rows)
        j["rows"].push_back(
            {{"label", r.label}, {"pearson", r.pearson}, {"memory", r.memory}, {"n", r.n}});
    dump_json(path, j);
}

void write_atg_dot(const std::filesystem::path& path, const AggregatedTransmissionGraph& atg,
                   const std::string& figure) {
    auto out = open_out(path);
    figure_header(out, figure);
    out << "digraph atg {\n";
    for (std::size_t v = 0; v < atg.vertices.size(); ++v) {
        const auto& vert = atg.vertices[v];
        out << "  v" << v << " [label=\"" << vert.wap_id << ':' << join_members(vert.members)
            << "\\nn_ei=" << vert.n_ei << "\"];\n";
    }
    for (const auto& e : atg.edges)
        out << "  v" << e.source << " -> v" << e.sink << " [label=\"" << e.n_tp << "\"];\n";
    out << "}\n";
}

void write_atg_json(const std::filesystem::path& path, const AggregatedTransmissionGraph& atg,
                    const std::string& figure) {
    nlohmann::json j;
    j["figure"] = figure;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : atg.vertices)
        j["vertices"].push_back({{"wap_id", v.wap_id},
                                 {"members", v.members},
                                 {"n_ei", v.n_ei},
                                 {"k_in", v.k_in},
                                 {"k_out", v.k_out}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : atg.edges)
        j["edges"].push_back({{"source", e.source}, {"sink", e.sink}, {"n_tp", e.n_tp}});
    dump_json(path, j);
}

}  // namespace copresence

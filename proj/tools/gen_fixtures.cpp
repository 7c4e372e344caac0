// Regenerates the frozen synthetic fixtures under data/fixtures/. Each
// synth<seed> directory holds a generated session log plus the brute-force
// oracle's event interactions, transmission edges, and temporal interactions,
// written with the standard report writers. Committed outputs act as byte
// regression anchors; rerun this tool only when the formats change on purpose.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "copresence/ingest.hpp"
#include "copresence/report.hpp"
#include "copresence/synth.hpp"

namespace fs = std::filesystem;
using namespace copresence;

int main(int argc, char** argv) {
    const fs::path out_root = argc > 1 ? argv[1] : "data/fixtures";
    for (std::uint64_t seed = 101; seed <= 105; ++seed) {
        SynthParams params;
        params.seed = seed;
        params.n_devices = 5 + static_cast<int>(seed % 4);  // 6..9, oracle-safe
        params.n_waps = 1 + static_cast<int>(seed % 3);
        params.horizon = 400;
        params.session_rate = 25.0 + static_cast<double>(seed % 20);
        params.mean_session_len = 6.0 + static_cast<double>(seed % 7);
        const auto sessions = generate_synthetic_log(params);
        const OracleResult oracle = brute_force_oracle(sessions);

        const fs::path dir = out_root / ("synth" + std::to_string(seed));
        fs::create_directories(dir);
        std::ofstream slog(dir / "sessions.csv", std::ios::binary);
        if (!slog) {
            std::cerr << "cannot write under " << dir << "\n";
            return 1;
        }
        write_sessions_csv(slog, sessions);
        write_eis_csv(dir / "eis.csv", oracle.eis, "1b");
        write_edges_csv(dir / "edges.csv", oracle.edges, "1b");
        write_tis_csv(dir / "tis.csv", oracle.tis, "1c");
        std::cout << dir.string() << ": " << sessions.size() << " sessions, "
                  << oracle.eis.size() << " interactions, " << oracle.edges.size() << " edges\n";
    }
    return 0;
}

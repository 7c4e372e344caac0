#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "copresence/event_graph.hpp"
#include "copresence/stats.hpp"
#include "helpers.hpp"

using namespace copresence;

namespace {

// least-squares slope of log10(density) against log10(bin center)
double loglog_slope(const BinnedDistribution& d, std::int64_t min_count) {
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k + 1 < d.edges.size(); ++k) {
        if (d.counts[k] < min_count) continue;
        xs.push_back(std::log10(std::sqrt(d.edges[k] * d.edges[k + 1])));
        ys.push_back(std::log10(d.densities[k]));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

std::vector<double> pareto_sample(double alpha, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> xs(n);
    for (double& x : xs) {
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        x = std::pow(1.0 - u, -1.0 / (alpha - 1.0));
    }
    return xs;
}

}  // namespace

TEST_CASE("log binned pdf matches the worked example") {
    const std::vector<double> samples = {1.0, 10.0, 100.0};
    const auto d = log_binned_pdf(samples, 1);
    REQUIRE(d.edges.size() == 4);
    CHECK(d.edges[0] == 1.0);
    CHECK(d.edges[1] == doctest::Approx(10.0));
    CHECK(d.edges[2] == doctest::Approx(100.0));
    CHECK(d.counts == std::vector<std::int64_t>{1, 1, 1});
    CHECK(d.densities[0] == doctest::Approx(1.0 / 27.0).epsilon(1e-12));
    CHECK(d.densities[1] == doctest::Approx(1.0 / 270.0).epsilon(1e-12));
    CHECK(d.densities[2] == doctest::Approx(1.0 / 2700.0).epsilon(1e-12));
    CHECK(d.sample_count == 3);
    CHECK(d.scheme == BinScheme::logarithmic);
}

TEST_CASE("a single value occupies one bin integrating to one") {
    const auto d = log_binned_pdf(std::vector<double>{7.0}, 10);
    REQUIRE(d.counts.size() == 1);
    CHECK(d.counts[0] == 1);
    CHECK(d.densities[0] * (d.edges[1] - d.edges[0]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log bins refuse bad input") {
    CHECK_THROWS_AS(log_binned_pdf({}, 10), std::invalid_argument);
    CHECK_THROWS_AS(log_binned_pdf(std::vector<double>{1.0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(log_binned_pdf(std::vector<double>{1.0, 0.0}, 10), std::domain_error);
    CHECK_THROWS_AS(log_binned_pdf(std::vector<double>{-2.0}, 10), std::domain_error);
}

TEST_CASE("binning recovers a known pareto slope") {
    const auto xs = pareto_sample(2.0, 1'000'000, 42);
    const auto d = log_binned_pdf(xs, 10);
    const double slope = loglog_slope(d, 100);
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("ccdf steps through the distinct values") {
    const auto points = ccdf(std::vector<double>{1.0, 2.0, 3.0});
    REQUIRE(points.size() == 3);
    CHECK(points[0] == std::pair{1.0, 1.0});
    CHECK(points[1].second == doctest::Approx(2.0 / 3.0));
    CHECK(points[2].second == doctest::Approx(1.0 / 3.0));

    const auto flat = ccdf(std::vector<double>{5.0, 5.0, 5.0});
    REQUIRE(flat.size() == 1);
    CHECK(flat[0] == std::pair{5.0, 1.0});

    CHECK_THROWS_AS(ccdf({}), std::invalid_argument);

    const auto xs = pareto_sample(2.0, 10'000, 9);
    const auto curve = ccdf(xs);
    CHECK(curve.front().second == 1.0);
    for (std::size_t i = 1; i < curve.size(); ++i) {
        CHECK(curve[i].first > curve[i - 1].first);
        CHECK(curve[i].second <= curve[i - 1].second);
    }
}

TEST_CASE("pearson endpoints and failure modes") {
    const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys = xs;
    CHECK(pearson(xs, ys) == 1.0);
    for (double& y : ys) y = -y;
    CHECK(pearson(xs, ys) == -1.0);
    CHECK_THROWS_AS(pearson(xs, std::vector<double>{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(pearson(std::vector<double>{1.0}, std::vector<double>{1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pearson(xs, std::vector<double>{5.0, 5.0, 5.0, 5.0}), std::domain_error);
}

TEST_CASE("the memory coefficient is pearson over the pair coordinates") {
    std::mt19937_64 rng(11);
    std::vector<std::pair<double, double>> pairs(500);
    std::vector<double> xs, ys;
    for (auto& [x, y] : pairs) {
        x = static_cast<double>(rng() % 1000) / 7.0;
        y = static_cast<double>(rng() % 1000) / 3.0;
        xs.push_back(x);
        ys.push_back(y);
    }
    CHECK(memory_coefficient(pairs) == pearson(xs, ys));

    // consecutive values of an equal-step sequence are perfectly ordered
    const std::vector<std::pair<double, double>> steps = {{1, 2}, {2, 3}, {3, 4}};
    CHECK(memory_coefficient(steps) == 1.0);

    CHECK_THROWS_AS(memory_coefficient(std::vector<std::pair<double, double>>{{1, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        memory_coefficient(std::vector<std::pair<double, double>>{{1, 2}, {1, 3}, {1, 4}}),
        std::domain_error);
}

TEST_CASE("shuffled iid sequences have near-zero memory") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<double> value(10'000);
        for (double& v : value) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::vector<std::pair<double, double>> pairs;
        for (std::size_t i = 1; i < value.size(); ++i) pairs.push_back({value[i - 1], value[i]});
        CHECK(std::abs(memory_coefficient(pairs)) < 0.05);
    }
}

TEST_CASE("integral days floors durations into unit bins") {
    const std::vector<Duration> deltas = {100, 1500, 10080};
    const auto d = integral_days(deltas, DayClock{1440, 0});
    REQUIRE(d.counts.size() == 8);  // days 0 through 7
    CHECK(d.edges.front() == 0.0);
    CHECK(d.edges.back() == 8.0);
    CHECK(d.counts[0] == 1);  // delta 100 is same-day
    CHECK(d.counts[1] == 1);  // delta 1500 is one day out
    CHECK(d.counts[7] == 1);  // exactly one week
    CHECK(d.counts[2] + d.counts[3] + d.counts[4] + d.counts[5] + d.counts[6] == 0);
    CHECK(d.scheme == BinScheme::linear);

    CHECK(integral_days({}, DayClock{1440, 0}).counts.empty());
    CHECK_THROWS_AS(integral_days(std::vector<Duration>{-5}, DayClock{1440, 0}),
                    std::invalid_argument);

    const auto seconds = integral_days(std::vector<Duration>{100'000}, DayClock{86400, 0});
    REQUIRE(seconds.counts.size() == 2);
    CHECK(seconds.counts[1] == 1);
}

TEST_CASE("natural de-seasoning keeps only same-day transmissions") {
    const std::vector<EventInteraction> eis = {{0, "w", {"a", "b"}, 10, 20},
                                               {1, "w", {"a", "b"}, 100, 110},
                                               {2, "w", {"a", "b"}, 1500, 1510}};
    const std::vector<TransmissionEdge> edges = {
        {0, 1, {"a"}, 90, 10}, {1, 2, {"a"}, 1400, 100}, {0, 2, {"b"}, 1490, 10}};

    const auto kept = natural_deseason(edges, eis, DayClock{1440, 0});
    CHECK(kept == std::vector<Duration>{90});
    for (Duration d : kept) CHECK(d < 1440);

    // midnight between the first two begins: only the overnight pair stays same-day
    const auto shifted = natural_deseason(edges, eis, DayClock{1440, 100});
    CHECK(shifted == std::vector<Duration>{1400});
}

TEST_CASE("the canonical trace is a single day, so nothing is dropped") {
    const auto eis = build_event_interactions(std::span<const Session>(testutil::f1_sessions()));
    const auto edges = build_transmission_graph(eis);
    const auto kept = natural_deseason(edges, eis, DayClock{1440, 0});
    std::vector<Duration> all;
    for (const auto& e : edges) all.push_back(e.delta);
    CHECK(kept == all);
    CHECK(all == std::vector<Duration>{10, 10, 40, 30});
}

TEST_CASE("the time shuffle is deterministic and preserves its invariants") {
    const auto eis = build_event_interactions(std::span<const Session>(testutil::f1_sessions()));
    const auto a = time_shuffled_null(eis, 7, 50);
    const auto b = time_shuffled_null(eis, 7, 50);
    CHECK(a.eis == b.eis);
    CHECK(a.attempted == 50 * 4);
    CHECK(a.accepted <= a.attempted);

    REQUIRE(a.eis.size() == eis.size());
    std::vector<Duration> before, after;
    for (std::size_t i = 0; i < eis.size(); ++i) {
        CHECK(a.eis[i].id == eis[i].id);
        CHECK(a.eis[i].members == eis[i].members);  // only begins move
        before.push_back(eis[i].active_duration());
        after.push_back(a.eis[i].active_duration());
    }
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    CHECK(before == after);
    CHECK_NOTHROW(check_event_interactions(a.eis));

    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK_NOTHROW(check_event_interactions(time_shuffled_null(eis, seed, 20).eis));
}

TEST_CASE("impossible swaps leave the input untouched") {
    // the long interaction cannot trade places with the short one
    const std::vector<EventInteraction> eis = {{0, "w", {"a", "b"}, 0, 10},
                                               {1, "w", {"c", "d"}, 10, 30}};
    const auto res = time_shuffled_null(eis, 3, 100);
    CHECK(res.eis == eis);
    CHECK(res.attempted == 200);
    CHECK(res.accepted < res.attempted);  // only identity draws pass
}

TEST_CASE("interactions in different groups swap freely") {
    const std::vector<EventInteraction> eis = {{0, "w1", {"a", "b"}, 0, 10},
                                               {1, "w2", {"c", "d"}, 100, 110}};
    const auto res = time_shuffled_null(eis, 3, 50);
    CHECK(res.accepted == res.attempted);
    CHECK_NOTHROW(check_event_interactions(res.eis));
}

TEST_CASE("the shuffle honours the exclusivity scope") {
    // two groups talk at the same spot at the same moment
    const std::vector<EventInteraction> eis = {{0, "l0", {"a", "b"}, 0, 10},
                                               {1, "l0", {"c", "d"}, 0, 10}};
    CHECK_THROWS_AS(time_shuffled_null(eis, 1, 10, Exclusivity::per_wap), InvariantViolation);
    const auto res = time_shuffled_null(eis, 1, 10, Exclusivity::per_identity);
    CHECK(res.accepted == res.attempted);
    CHECK_NOTHROW(check_event_interactions(res.eis, Exclusivity::per_identity));
}

TEST_CASE("shuffle edge cases") {
    const std::vector<EventInteraction> one = {{0, "w", {"a", "b"}, 0, 10}};
    const auto tiny = time_shuffled_null(one, 1, 10);
    CHECK(tiny.eis == one);
    CHECK(tiny.attempted == 0);

    const auto eis = build_event_interactions(std::span<const Session>(testutil::f1_sessions()));
    const auto still = time_shuffled_null(eis, 1, 0);
    CHECK(still.eis == eis);
    CHECK(still.attempted == 0);

    CHECK_THROWS_AS(time_shuffled_null(eis, 1, -1), std::invalid_argument);
}

TEST_CASE("the tail fit recovers a pure power-law exponent") {
    const auto xs = pareto_sample(2.5, 20'000, 5);
    const auto fit = fit_truncated_power_law(xs);
    CHECK(fit.exponent == doctest::Approx(2.5).epsilon(0.03));
    CHECK(fit.x_min >= 1.0);
    CHECK(fit.n_tail >= 25);
    CHECK(fit.ks < 0.05);
}

TEST_CASE("exponential samples force the cutoff term") {
    std::mt19937_64 rng(8);
    std::vector<double> xs(5000);
    for (double& x : xs)
        x = 1.0 - 50.0 * std::log1p(-(static_cast<double>(rng() >> 11) * 0x1.0p-53));
    const auto fit = fit_truncated_power_law(xs);
    REQUIRE(fit.cutoff.has_value());
    CHECK(*fit.cutoff > 0.0);
    CHECK(fit.exponent < 1.5);  // the power-law part carries little of the mass
}

TEST_CASE("the fit refuses hopeless input") {
    CHECK_THROWS_AS(fit_truncated_power_law(std::vector<double>(49, 2.0)), FitError);
    CHECK_THROWS_AS(fit_truncated_power_law(std::vector<double>(100, 2.0)), FitError);
    std::vector<double> bad(60, 1.0);
    bad[0] = -1.0;
    CHECK_THROWS_AS(fit_truncated_power_law(bad), FitError);
}

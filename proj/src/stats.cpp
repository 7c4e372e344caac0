#include "copresence/stats.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <utility>

#include "copresence/rng.hpp"

namespace copresence {

namespace {

void verify_normalization(const BinnedDistribution& d) {
    if (d.edges.empty()) return;
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < d.edges.size(); ++k)
        integral += d.densities[k] * (d.edges[k + 1] - d.edges[k]);
    if (std::abs(integral - 1.0) > 1e-9)
        throw InvariantViolation("binned density does not integrate to 1");
}

}  // namespace

BinnedDistribution log_binned_pdf(std::span<const double> samples, int bins_per_decade) {
    if (samples.empty()) throw std::invalid_argument("no samples to bin");
    if (bins_per_decade < 1) throw std::invalid_argument("bins_per_decade must be positive");
    double lo = samples[0], hi = samples[0];
    for (double x : samples) {
        if (!(x > 0.0)) throw std::domain_error("log bins need positive samples");
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    // Index and bin count share one formula so boundary values stay inside.
    auto bin_of = [&](double x) {
        return static_cast<int>(std::floor(bins_per_decade * std::log10(x / lo)));
    };
    const int n_bins = bin_of(hi) + 1;

    BinnedDistribution dist;
    dist.scheme = BinScheme::logarithmic;
    dist.edges.resize(n_bins + 1);
    for (int k = 0; k <= n_bins; ++k)
        dist.edges[k] = lo * std::pow(10.0, static_cast<double>(k) / bins_per_decade);
    dist.counts.assign(n_bins, 0);
    for (double x : samples) ++dist.counts[std::clamp(bin_of(x), 0, n_bins - 1)];
    dist.sample_count = static_cast<std::int64_t>(samples.size());
    dist.densities.resize(n_bins);
    for (int k = 0; k < n_bins; ++k)
        dist.densities[k] =
            dist.counts[k] / (dist.sample_count * (dist.edges[k + 1] - dist.edges[k]));
    verify_normalization(dist);
    return dist;
}

std::vector<std::pair<double, double>> ccdf(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    std::vector<double> xs(samples.begin(), samples.end());
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<double, double>> out;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i == 0 || xs[i] != xs[i - 1]) out.push_back({xs[i], (xs.size() - i) / n});
    }
    return out;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("need at least 2 points");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx <= 0.0 || syy <= 0.0) throw std::domain_error("zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double memory_coefficient(std::span<const std::pair<double, double>> pairs) {
    if (pairs.size() < 2) throw std::invalid_argument("need at least 2 pairs");
    const double n = static_cast<double>(pairs.size());
    double m1 = 0.0, m2 = 0.0;
    for (const auto& [x, y] : pairs) {
        m1 += x;
        m2 += y;
    }
    m1 /= n;
    m2 /= n;
    double s12 = 0.0, s11 = 0.0, s22 = 0.0;
    for (const auto& [x, y] : pairs) {
        s12 += (x - m1) * (y - m2);
        s11 += (x - m1) * (x - m1);
        s22 += (y - m2) * (y - m2);
    }
    if (s11 <= 0.0 || s22 <= 0.0) throw std::domain_error("degenerate marginal");
    return std::clamp(s12 / std::sqrt(s11 * s22), -1.0, 1.0);
}

BinnedDistribution integral_days(std::span<const Duration> deltas, const DayClock& clock) {
    BinnedDistribution dist;
    dist.scheme = BinScheme::linear;
    if (deltas.empty()) return dist;
    std::int64_t max_day = 0;
    for (Duration d : deltas) {
        if (d < 0) throw std::invalid_argument("negative duration");
        max_day = std::max(max_day, d / clock.day_length);
    }
    const int n_bins = static_cast<int>(max_day) + 1;
    dist.edges.resize(n_bins + 1);
    for (int k = 0; k <= n_bins; ++k) dist.edges[k] = k;
    dist.counts.assign(n_bins, 0);
    for (Duration d : deltas) ++dist.counts[d / clock.day_length];
    dist.sample_count = static_cast<std::int64_t>(deltas.size());
    dist.densities.resize(n_bins);
    for (int k = 0; k < n_bins; ++k)
        dist.densities[k] = static_cast<double>(dist.counts[k]) / dist.sample_count;
    verify_normalization(dist);
    return dist;
}

std::vector<Duration> natural_deseason(std::span<const TransmissionEdge> edges,
                                       std::span<const EventInteraction> eis,
                                       const DayClock& clock) {
    std::unordered_map<int, Timestamp> begin_of;
    for (const EventInteraction& ei : eis) begin_of[ei.id] = ei.t_begin;
    std::vector<Duration> kept;
    for (const TransmissionEdge& e : edges)
        if (clock.day_index(begin_of.at(e.source)) == clock.day_index(begin_of.at(e.sink)))
            kept.push_back(e.delta);
    return kept;
}

ShuffleResult time_shuffled_null(std::span<const EventInteraction> eis, std::uint64_t seed,
                                 int n_swaps_factor, Exclusivity scope) {
    if (n_swaps_factor < 0) throw std::invalid_argument("negative swap factor");
    ShuffleResult res;
    res.eis.assign(eis.begin(), eis.end());
    const std::size_t n = res.eis.size();
    if (n < 2) return res;

    // One slot map per exclusive group; members never move, so each
    // interaction stays in its group across swaps.
    std::map<std::pair<std::string, std::vector<std::string>>, std::map<Timestamp, std::size_t>>
        slot_groups;
    std::vector<std::map<Timestamp, std::size_t>*> slot_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto key = scope == Exclusivity::per_wap
                       ? std::make_pair(res.eis[i].wap_id, std::vector<std::string>{})
                       : std::make_pair(res.eis[i].wap_id, res.eis[i].members);
        slot_of[i] = &slot_groups[std::move(key)];
        if (!slot_of[i]->emplace(res.eis[i].t_begin, i).second)
            throw InvariantViolation("input interactions already overlap in an exclusive group");
    }

    auto fits = [&](const std::map<Timestamp, std::size_t>& m, Timestamp b, Timestamp e) {
        auto next = m.lower_bound(b);
        if (next != m.end() && e > next->first) return false;
        if (next != m.begin() && res.eis[std::prev(next)->second].t_end > b) return false;
        return true;
    };

    std::mt19937_64 rng(seed);
    const std::int64_t attempts = static_cast<std::int64_t>(n_swaps_factor) * n;
    for (std::int64_t k = 0; k < attempts; ++k) {
        ++res.attempted;
        const std::size_t i = uniform_below(rng, n);
        const std::size_t j = uniform_below(rng, n);
        if (i == j) {  // identity swap, trivially valid
            ++res.accepted;
            continue;
        }
        EventInteraction& a = res.eis[i];
        EventInteraction& b = res.eis[j];
        auto& ma = *slot_of[i];
        auto& mb = *slot_of[j];
        ma.erase(a.t_begin);
        mb.erase(b.t_begin);
        const Timestamp a_begin = b.t_begin, a_end = b.t_begin + a.active_duration();
        const Timestamp b_begin = a.t_begin, b_end = a.t_begin + b.active_duration();
        bool ok = fits(ma, a_begin, a_end) && fits(mb, b_begin, b_end);
        if (ok && &ma == &mb) ok = !(a_begin < b_end && b_begin < a_end);
        if (ok) {
            a.t_begin = a_begin;
            a.t_end = a_end;
            b.t_begin = b_begin;
            b.t_end = b_end;
            ++res.accepted;
        }
        ma.emplace(a.t_begin, i);
        mb.emplace(b.t_begin, j);
    }
    return res;
}

namespace {

struct TailContext {
    double x_min = 0.0;
    double n = 0.0;
    double sum_ln = 0.0;  // sum of ln(x) over the tail
    double sum_x = 0.0;
    double ln_tau_lo = 0.0;
    double ln_tau_hi = 0.0;
};

// ln Gamma(a, x) for a <= 1, x > 0. gsl_sf_gamma_inc_e is unusable here: for
// negative non-integer a with small x it can be off by orders of magnitude
// (e.g. a = -0.4995, x = 1e-10: 1.0e5 where the true value is 2.0e5), and the
// cutoff likelihood lives exactly in that corner when tau runs past the sample
// maximum. Small-x series and a Lentz continued fraction cover the domain in
// log space instead.
double log_upper_gamma(double a, double x) {
    if (x >= 2.0) {
        double b = x + 1.0 - a;
        double c = 1e300;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i <= 10000; ++i) {
            const double an = -i * (i - a);
            b += 2.0;
            d = an * d + b;
            if (std::fabs(d) < 1e-300) d = 1e-300;
            c = b + an / c;
            if (std::fabs(c) < 1e-300) c = 1e-300;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::fabs(del - 1.0) < 1e-16) break;
        }
        return -x + a * std::log(x) + std::log(h);
    }
    // Gamma(a) - x^a sum_k (-x)^k / (k! (a+k)), rearranged so overflow cannot
    // bite; a is kept off the poles shared by tgamma and the k = -a term.
    const double near = std::round(a);
    if (near <= 0.0 && std::fabs(a - near) < 1e-8) a = near + (a < near ? -1e-8 : 1e-8);
    double sum = 1.0 / a;
    double term = 1.0;
    for (int k = 1; k <= 80; ++k) {
        term *= -x / k;
        const double next = term / (a + k);
        sum += next;
        if (std::fabs(next) < 1e-17 * std::fabs(sum)) break;
    }
    const double v = std::tgamma(a) * std::pow(x, -a) - sum;
    return a * std::log(x) + std::log(v);
}

// -log L of p(x) = x^-alpha exp(-x/tau) / Z on [x_min, inf),
// Z = tau^(1-alpha) * Gamma(1-alpha, x_min/tau).
double trunc_nll(const gsl_vector* v, void* params) {
    const auto& ctx = *static_cast<const TailContext*>(params);
    const double alpha = gsl_vector_get(v, 0);
    const double ln_tau = gsl_vector_get(v, 1);
    if (alpha < 0.01 || alpha > 20.0) return 1e30;
    if (ln_tau < ctx.ln_tau_lo || ln_tau > ctx.ln_tau_hi) return 1e30;
    const double tau = std::exp(ln_tau);
    const double lg = log_upper_gamma(1.0 - alpha, ctx.x_min / tau);
    if (!std::isfinite(lg)) return 1e30;
    const double ln_z = (1.0 - alpha) * ln_tau + lg;
    const double nll = ctx.n * ln_z + alpha * ctx.sum_ln + ctx.sum_x / tau;
    return std::isfinite(nll) ? nll : 1e30;
}

double trunc_cdf(double x, double alpha, double tau, double x_min) {
    const double ln_num = log_upper_gamma(1.0 - alpha, x / tau);
    const double ln_den = log_upper_gamma(1.0 - alpha, x_min / tau);
    if (!std::isfinite(ln_num) || !std::isfinite(ln_den))
        return std::numeric_limits<double>::quiet_NaN();
    return 1.0 - std::exp(ln_num - ln_den);
}

double ks_distance(std::span<const double> tail, auto cdf) {
    const double n = static_cast<double>(tail.size());
    double d = 0.0;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        const double f = cdf(tail[i]);
        if (std::isnan(f)) return std::numeric_limits<double>::quiet_NaN();
        d = std::max(d, std::max(f - i / n, (i + 1) / n - f));
    }
    return d;
}

// KS probed at up to 256 order statistics: a deterministic lower bound that
// is cheap enough to rank every candidate tail; the winner gets the exact one.
double ks_scan(std::span<const double> tail, auto cdf) {
    const double n = static_cast<double>(tail.size());
    const std::size_t stride = std::max<std::size_t>(1, tail.size() / 256);
    double d = 0.0;
    for (std::size_t i = 0; i < tail.size(); i += stride) {
        const double f = cdf(tail[i]);
        if (std::isnan(f)) return std::numeric_limits<double>::quiet_NaN();
        d = std::max(d, std::max(f - i / n, (i + 1) / n - f));
    }
    return d;
}

struct SimplexFit {
    double alpha = 0.0;
    double ln_tau = 0.0;
    double nll = 1e30;
};

SimplexFit minimize_trunc(TailContext& ctx, double alpha0, double ln_tau0, double tol,
                          std::span<const std::pair<double, double>> step_rounds) {
    gsl_multimin_function target{&trunc_nll, 2, &ctx};
    gsl_vector* point = gsl_vector_alloc(2);
    gsl_vector* step = gsl_vector_alloc(2);
    SimplexFit out;
    out.alpha = std::clamp(alpha0, 0.05, 19.0);
    out.ln_tau = std::clamp(ln_tau0, ctx.ln_tau_lo, ctx.ln_tau_hi);
    gsl_vector_set(point, 0, out.alpha);
    gsl_vector_set(point, 1, out.ln_tau);
    for (const auto& [alpha_step, tau_step] : step_rounds) {
        gsl_vector_set(step, 0, alpha_step);
        gsl_vector_set(step, 1, tau_step);
        gsl_multimin_fminimizer* mini =
            gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
        gsl_multimin_fminimizer_set(mini, &target, point, step);
        for (int it = 0; it < 500; ++it) {
            if (gsl_multimin_fminimizer_iterate(mini) != GSL_SUCCESS) break;
            if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(mini), tol) == GSL_SUCCESS)
                break;
        }
        if (mini->fval < out.nll) {
            out.nll = mini->fval;
            out.alpha = gsl_vector_get(mini->x, 0);
            out.ln_tau = gsl_vector_get(mini->x, 1);
        }
        gsl_vector_set(point, 0, out.alpha);
        gsl_vector_set(point, 1, out.ln_tau);
        gsl_multimin_fminimizer_free(mini);
    }
    gsl_vector_free(point);
    gsl_vector_free(step);
    return out;
}

TailContext tail_context(std::span<const double> tail, double x_min, double x_max) {
    TailContext ctx;
    ctx.x_min = x_min;
    ctx.n = static_cast<double>(tail.size());
    for (double x : tail) {
        ctx.sum_ln += std::log(x);
        ctx.sum_x += x;
    }
    ctx.ln_tau_lo = std::log(x_min / 600.0);
    ctx.ln_tau_hi = std::log(x_max * 1e6);
    return ctx;
}

}  // namespace

PowerLawFit fit_truncated_power_law(std::span<const double> samples) {
    static const bool gsl_quiet = (gsl_set_error_handler_off(), true);
    (void)gsl_quiet;
    if (samples.size() < 50) throw FitError("too few samples to fit");
    std::vector<double> xs(samples.begin(), samples.end());
    for (double x : xs)
        if (!(x > 0.0)) throw FitError("non-positive sample");
    std::sort(xs.begin(), xs.end());
    if (xs.front() == xs.back()) throw FitError("degenerate sample: all values equal");

    std::vector<double> uniq(xs);
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    // KS scan over at most 128 candidate tail starts, each keeping >= 25
    // points and at least two distinct values.
    std::vector<double> candidates;
    const std::size_t stride = std::max<std::size_t>(1, uniq.size() / 128);
    for (std::size_t i = 0; i < uniq.size(); i += stride) candidates.push_back(uniq[i]);

    // Every candidate tail gets both models: the closed-form pure MLE and a
    // coarse, warm-started simplex pass over the truncated likelihood. The
    // likelihood ratio picks each candidate's model and that winner's KS
    // distance picks the tail start, so data whose whole tail is only ever
    // explained by the cutoff is not beaten by a short pure-looking stretch.
    struct Scored {
        double x_min, alpha_pure, lnl_pure, alpha_t, ln_tau_t, ks;
        std::size_t tail_begin;
    };
    std::optional<Scored> best;
    double warm_alpha = 2.0;
    double warm_ln_tau = std::log(xs.back() * 10.0);
    constexpr std::pair<double, double> coarse[] = {{0.5, 2.0}};
    for (double x_min : candidates) {
        const auto first = std::lower_bound(xs.begin(), xs.end(), x_min);
        const std::size_t n_tail = static_cast<std::size_t>(xs.end() - first);
        if (n_tail < 25) continue;
        std::span<const double> tail(&*first, n_tail);
        TailContext ctx = tail_context(tail, x_min, xs.back());
        const double sum_ln_ratio = ctx.sum_ln - ctx.n * std::log(x_min);
        if (sum_ln_ratio <= 0.0) continue;  // tail collapsed onto x_min

        Scored s;
        s.x_min = x_min;
        s.tail_begin = static_cast<std::size_t>(first - xs.begin());
        s.alpha_pure = 1.0 + n_tail / sum_ln_ratio;
        s.lnl_pure = ctx.n * std::log(s.alpha_pure - 1.0) +
                     ctx.n * (s.alpha_pure - 1.0) * std::log(x_min) -
                     s.alpha_pure * ctx.sum_ln;

        const SimplexFit t = minimize_trunc(ctx, warm_alpha, warm_ln_tau, 1e-6, coarse);
        s.alpha_t = warm_alpha = t.alpha;
        s.ln_tau_t = warm_ln_tau = t.ln_tau;
        s.ks = ks_scan(
            tail, [&](double x) { return 1.0 - std::pow(x / x_min, 1.0 - s.alpha_pure); });
        if (-t.nll - s.lnl_pure > 3.0) {
            const double trunc_ks = ks_scan(tail, [&](double x) {
                return trunc_cdf(x, t.alpha, std::exp(t.ln_tau), x_min);
            });
            if (!std::isnan(trunc_ks)) s.ks = trunc_ks;
        }
        if (!best || s.ks < best->ks) best = s;
    }
    if (!best) throw FitError("no viable tail for fitting");

    std::span<const double> tail(xs.data() + best->tail_begin, xs.size() - best->tail_begin);
    TailContext ctx = tail_context(tail, best->x_min, xs.back());
    constexpr std::pair<double, double> fine[] = {{0.5, 2.0}, {0.05, 0.2}};
    const SimplexFit t = minimize_trunc(ctx, best->alpha_t, best->ln_tau_t, 1e-8, fine);

    PowerLawFit fit;
    fit.x_min = best->x_min;
    fit.n_tail = static_cast<std::int64_t>(tail.size());
    const double pure_ks = ks_distance(tail, [&](double x) {
        return 1.0 - std::pow(x / best->x_min, 1.0 - best->alpha_pure);
    });
    if (-t.nll - best->lnl_pure > 3.0) {  // cutoff earns its extra parameter
        fit.exponent = t.alpha;
        fit.cutoff = std::exp(t.ln_tau);
        fit.ks = ks_distance(
            tail, [&](double x) { return trunc_cdf(x, t.alpha, *fit.cutoff, best->x_min); });
        if (std::isnan(fit.ks)) fit.ks = pure_ks;
    } else {
        fit.exponent = best->alpha_pure;
        fit.ks = pure_ks;
    }
    return fit;
}

}  // namespace copresence

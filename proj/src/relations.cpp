#include "saw/relations.hpp"

#include "saw/errors.hpp"

#include <cmath>
#include <string>

namespace saw {

const char* provenance_name(MuProvenance p) {
    switch (p) {
        case MuProvenance::ExactClosedForm: return "exact_closed_form";
        case MuProvenance::RootOfRelation: return "root_of_relation";
        case MuProvenance::SeriesEstimate: return "series_estimate";
    }
    return "unknown";
}

MuValue MuValue::exact(double v, std::string detail) {
    return MuValue{v, MuProvenance::ExactClosedForm, std::move(detail)};
}

namespace {

void require_gadget_series(const CountPolynomial& g) {
    if (g == CountPolynomial::identity()) return;   // trivial transformation
    if (g.is_zero() || g.coefficient(0) != 0 || g.coefficient(1) != 0) {
        throw SawError(ErrorCode::BadInput,
                       "gadget series must vanish at degrees 0 and 1 (or be the identity x)");
    }
}

} // namespace

MuValue predict_mu_transformed(const MuValue& mu, const CountPolynomial& g, double tol) {
    if (!(mu.value > 1.0)) {
        throw SawError(ErrorCode::BadInput, "connective constant must exceed 1");
    }
    require_gadget_series(g);
    double x = monotone_solve(g, 1.0 / mu.value, tol);
    return MuValue{1.0 / x, MuProvenance::RootOfRelation, "g(x) = 1/mu"};
}

MuValue predict_mu_bipartite(const MuValue& mu, const CountPolynomial& g1,
                             const std::optional<CountPolynomial>& g2, double tol) {
    if (!(mu.value > 1.0)) {
        throw SawError(ErrorCode::BadInput, "connective constant must exceed 1");
    }
    require_gadget_series(g1);
    CountPolynomial h;
    if (g2) {
        require_gadget_series(*g2);
        h = g1 * *g2;
    } else {
        h = CountPolynomial::identity() * g1;
    }
    double x = monotone_solve(h, 1.0 / (mu.value * mu.value), tol);
    return MuValue{1.0 / x, MuProvenance::RootOfRelation,
                   g2 ? "g1(x)g2(x) = 1/mu^2" : "x g(x) = 1/mu^2"};
}

CountPolynomial compose_chain(const std::vector<CountPolynomial>& gs) {
    if (gs.empty()) throw SawError(ErrorCode::EmptyChain, "composition chain is empty");
    CountPolynomial acc = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) acc = acc.compose(gs[i]);
    return acc;
}

double fixed_point(const CountPolynomial& g, double tol) {
    if (g.is_zero() || g.coefficient(0) != 0 || g.coefficient(1) != 0) {
        throw SawError(ErrorCode::BadInput, "fixed point needs g(0) = g'(0) = 0");
    }
    if (g.evaluate(1.0) < 1.0) {
        throw SawError(ErrorCode::NoFixedPointInUnitInterval, "g(1) < 1: no fixed point in (0,1]");
    }
    // g(x) - x is negative for small x > 0 and nonnegative at 1.
    double lo = 0.5;
    while (g.evaluate(lo) - lo >= 0.0) {
        lo *= 0.5;
        if (lo < 1e-300) return 0.0;
    }
    double hi = 1.0;
    for (int iter = 0; iter < 2000; ++iter) {
        double mid = 0.5 * (lo + hi);
        double f = g.evaluate(mid) - mid;
        if (std::fabs(f) <= tol) return mid;
        if (f < 0.0) lo = mid; else hi = mid;
        if (hi - lo < 1e-16) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> iterate_mu(double x0, const CountPolynomial& g, int steps, double tol) {
    if (!(x0 > 0.0) || !(x0 < 1.0)) {
        throw SawError(ErrorCode::BadInput, "iteration start must lie in (0,1)");
    }
    if (steps < 0) throw SawError(ErrorCode::BadInput, "steps must be >= 0");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    double x = x0;
    for (int k = 0; k < steps; ++k) {
        x = monotone_solve(g, x, tol);
        out.push_back(x);
    }
    return out;
}

SeriesEstimate estimate_mu_from_series(const SawSeries& s) {
    if (s.convention != LengthConvention::EdgeSteps) {
        throw SawError(ErrorCode::ConventionMismatch, "mu estimation needs an EdgeSteps series");
    }
    if (s.counts.size() < 3) {
        throw SawError(ErrorCode::SeriesTooShort, "need counts through n >= 2");
    }
    SeriesEstimate est;
    for (std::size_t n = 1; n < s.counts.size(); ++n) {
        double c = to_double(s.counts[n]);
        est.nth_roots.push_back(std::pow(c, 1.0 / static_cast<double>(n)));
        double prev = to_double(s.counts[n - 1]);
        est.ratios.push_back(prev > 0.0 ? c / prev : 0.0);
    }
    est.headline = MuValue{est.ratios.back(), MuProvenance::SeriesEstimate,
                           "last ratio through n = " + std::to_string(s.counts.size() - 1)};
    return est;
}

namespace {

VerificationReport compare_series(CountPolynomial composed, CountPolynomial enumerated, int nmax) {
    VerificationReport report;
    report.nmax = nmax;
    report.composed = composed.truncated(static_cast<std::size_t>(nmax));
    report.enumerated = enumerated.truncated(static_cast<std::size_t>(nmax));
    report.pass = true;
    for (int d = 0; d <= nmax; ++d) {
        if (report.composed.coefficient(static_cast<std::size_t>(d)) !=
            report.enumerated.coefficient(static_cast<std::size_t>(d))) {
            report.pass = false;
            report.first_mismatch_degree = d;
            break;
        }
    }
    return report;
}

} // namespace

VerificationReport verify_substitution(const FinitePatch& patch, const Gadget& gadget, int nmax,
                                       const EnumerationOptions& opts) {
    return verify_substitution_against(patch, gadget, gadget_genfun(gadget, opts), nmax, opts);
}

VerificationReport verify_substitution_against(const FinitePatch& patch, const Gadget& gadget,
                                               const CountPolynomial& g, int nmax,
                                               const EnumerationOptions& opts) {
    // Degree <= nmax of Z0(g(x)) only consumes Z0 terms of degree <= nmax/2
    // because g has minimum degree 2; enumerating further would leave the
    // dependency cone and could consume unsafe coefficients.
    if (g.min_degree() < 2) {
        throw SawError(ErrorCode::InvalidGadget, "gadget series has terms below degree 2");
    }
    int base_n = nmax / 2;
    std::vector<EdgeId> starts = origin_incident_edges(patch);

    SawSeries base = count_midedge_saws(patch, starts, std::nullopt, base_n, opts);

    TransformedPatch tp = transform_all(patch, gadget);
    std::vector<EdgeId> tstarts;
    tstarts.reserve(starts.size());
    for (EdgeId e : starts) tstarts.push_back(tp.original_edge_map[static_cast<std::size_t>(e)]);
    SawSeries direct = count_midedge_saws(tp.patch, tstarts, tp.surviving_edge_filter(), nmax, opts);

    CountPolynomial composed;
    CountPolynomial gpow = CountPolynomial::monomial(0, 1);
    for (std::size_t k = 0; k < base.counts.size(); ++k) {
        if (base.counts[k] != 0) {
            composed = composed + (gpow * CountPolynomial::monomial(0, base.counts[k]))
                                      .truncated(static_cast<std::size_t>(nmax));
        }
        gpow = (gpow * g).truncated(static_cast<std::size_t>(nmax));
    }

    return compare_series(composed, CountPolynomial(direct.counts), nmax);
}

VerificationReport verify_bipartite_substitution(const FinitePatch& patch, const Gadget& gadget_black,
                                                 const std::optional<Gadget>& gadget_white, int nmax,
                                                 const EnumerationOptions& opts) {
    CountPolynomial g1 = gadget_genfun(gadget_black, opts);
    CountPolynomial g2 = gadget_white ? gadget_genfun(*gadget_white, opts) : CountPolynomial::identity();
    if (g1.min_degree() < 2) {
        throw SawError(ErrorCode::InvalidGadget, "gadget series has terms below degree 2");
    }

    std::vector<EdgeId> starts = origin_incident_edges(patch);
    // Substituted degree of a (black, white) cell is at least
    // 2*black + min_degree(g2)*white >= black + white, so refining to total
    // length nmax covers every contributing cell.
    ColourRefinedSeries refined = count_colour_refined(patch, starts, nmax, opts);

    TransformedPatch tp = transform_colour_class(patch, gadget_black, gadget_white);
    std::vector<EdgeId> tstarts;
    tstarts.reserve(starts.size());
    for (EdgeId e : starts) tstarts.push_back(tp.original_edge_map[static_cast<std::size_t>(e)]);
    SawSeries direct = count_midedge_saws(tp.patch, tstarts, tp.surviving_edge_filter(), nmax, opts);

    std::vector<CountPolynomial> pow1(static_cast<std::size_t>(nmax) + 1);
    std::vector<CountPolynomial> pow2(static_cast<std::size_t>(nmax) + 1);
    pow1[0] = CountPolynomial::monomial(0, 1);
    pow2[0] = pow1[0];
    for (int k = 1; k <= nmax; ++k) {
        pow1[static_cast<std::size_t>(k)] =
            (pow1[static_cast<std::size_t>(k - 1)] * g1).truncated(static_cast<std::size_t>(nmax));
        pow2[static_cast<std::size_t>(k)] =
            (pow2[static_cast<std::size_t>(k - 1)] * g2).truncated(static_cast<std::size_t>(nmax));
    }
    CountPolynomial composed;
    for (int b = 0; b <= nmax; ++b) {
        for (int w = 0; w + b <= nmax; ++w) {
            const BigInt& c = refined.counts[static_cast<std::size_t>(b)][static_cast<std::size_t>(w)];
            if (c == 0) continue;
            composed = composed + (pow1[static_cast<std::size_t>(b)] * pow2[static_cast<std::size_t>(w)] *
                                   CountPolynomial::monomial(0, c))
                                      .truncated(static_cast<std::size_t>(nmax));
        }
    }

    return compare_series(composed, CountPolynomial(direct.counts), nmax);
}

} // namespace saw

#ifndef SAW_RELATIONS_HPP
#define SAW_RELATIONS_HPP

#include "saw/enumerate.hpp"
#include "saw/gadget.hpp"
#include "saw/patch.hpp"
#include "saw/polynomial.hpp"
#include "saw/transform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace saw {

enum class MuProvenance { ExactClosedForm, RootOfRelation, SeriesEstimate };

const char* provenance_name(MuProvenance p);

// A connective-constant value together with how it was obtained.
struct MuValue {
    double value = 0.0;
    MuProvenance provenance = MuProvenance::ExactClosedForm;
    std::string detail;    // estimator / n-range for series estimates

    static MuValue exact(double v, std::string detail = {});
};

// mu of the transformed graph: solves g(x) = 1/mu and returns 1/x*.
MuValue predict_mu_transformed(const MuValue& mu, const CountPolynomial& g, double tol = 1e-12);

// Bipartite relation mu^-2 = h(mu_e^-1) with h = x*g1 when only one colour
// class is transformed and h = g1*g2 when both are.
MuValue predict_mu_bipartite(const MuValue& mu, const CountPolynomial& g1,
                             const std::optional<CountPolynomial>& g2 = std::nullopt,
                             double tol = 1e-12);

// Left-to-right composition g1 o g2 o ... o gr of a transformation chain.
CountPolynomial compose_chain(const std::vector<CountPolynomial>& gs);

// Unique x* in (0,1] with g(x*) = x*, for g with no constant or linear term
// and g(1) >= 1. Throws NoFixedPointInUnitInterval otherwise.
double fixed_point(const CountPolynomial& g, double tol = 1e-12);

// x_k = g^{-1}(x_{k-1}) for k = 1..steps; monotone toward the fixed point
// under the usual convexity hypotheses.
std::vector<double> iterate_mu(double x0, const CountPolynomial& g, int steps, double tol = 1e-12);

// Classical finite-series diagnostics: n-th roots and successive ratios of
// an EdgeSteps series; the headline value is the last ratio. No
// extrapolation.
struct SeriesEstimate {
    std::vector<double> nth_roots;     // counts[n]^(1/n), n >= 1
    std::vector<double> ratios;        // counts[n]/counts[n-1], n >= 1
    MuValue headline;
};

SeriesEstimate estimate_mu_from_series(const SawSeries& s);

// Result of an exact substitution check: both truncated series in full for
// audit, plus the first mismatching degree on failure.
struct VerificationReport {
    bool pass = false;
    int nmax = 0;
    CountPolynomial composed;      // walk series of the base patch with g substituted
    CountPolynomial enumerated;    // direct mid-edge series on the transformed patch
    std::optional<int> first_mismatch_degree;
};

// Exact coefficient check of Z0(g(x)) = Z1*(x) through degree nmax:
// the base-patch mid-edge series composed with the gadget series must
// match the transformed-patch series restricted to surviving original
// mid-edges. Throws BoundaryUnsafe when either enumeration would leave its
// safe horizon.
VerificationReport verify_substitution(const FinitePatch& patch, const Gadget& gadget, int nmax,
                                       const EnumerationOptions& opts = {});

// Audit variant taking the gadget series from the caller instead of
// enumerating it; a deliberately corrupted series reports its first bad
// degree.
VerificationReport verify_substitution_against(const FinitePatch& patch, const Gadget& gadget,
                                               const CountPolynomial& gadget_series, int nmax,
                                               const EnumerationOptions& opts = {});

// Bipartite analogue: the colour-refined series Z(x,y) with x -> g1(x) and
// y -> g2(x) (y -> x when no white gadget) against the directly enumerated
// series on the colour-class transform.
VerificationReport verify_bipartite_substitution(const FinitePatch& patch, const Gadget& gadget_black,
                                                 const std::optional<Gadget>& gadget_white, int nmax,
                                                 const EnumerationOptions& opts = {});

} // namespace saw

#endif

#include "saw/enumerate.hpp"
#include "saw/errors.hpp"
#include "saw/gadget.hpp"
#include "saw/lattice.hpp"
#include "saw/relations.hpp"
#include "saw/transform.hpp"

#include <doctest.h>

#include <cmath>

using namespace saw;

namespace {

const double kMuHex = std::sqrt(2.0 + std::sqrt(2.0));

FinitePatch star_patch() {
    // one cubic vertex with three pendant neighbours; the leaves are the
    // incomplete boundary
    FinitePatch p = build_patch(4, {{0, 1}, {0, 2}, {0, 3}});
    return with_boundary_depth(std::move(p), {1, 0, 0, 0});
}

} // namespace

TEST_CASE("mu prediction for the Fisher transform of the hexagonal lattice") {
    CountPolynomial g{0, 0, 1, 1};
    MuValue mu1 = predict_mu_transformed(MuValue::exact(kMuHex), g);
    CHECK(mu1.provenance == MuProvenance::RootOfRelation);
    CHECK(std::fabs(g.evaluate(1.0 / mu1.value) - 1.0 / kMuHex) <= 1e-12);
    CHECK(mu1.value == doctest::Approx(1.71104).epsilon(2e-5));
}

TEST_CASE("trivial and constructed predictions") {
    CountPolynomial g{0, 0, 1, 1};
    MuValue same = predict_mu_transformed(MuValue::exact(kMuHex), CountPolynomial::identity());
    CHECK(same.value == doctest::Approx(kMuHex).epsilon(1e-13));

    double mu_in = 1.0 / g.evaluate(0.5);   // so that the root is exactly 1/2
    MuValue two = predict_mu_transformed(MuValue::exact(mu_in), g);
    CHECK(two.value == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(predict_mu_transformed(MuValue::exact(0.9), g), SawError);
}

TEST_CASE("bipartite predictions") {
    CountPolynomial g{0, 0, 1, 1};
    MuValue one_class = predict_mu_bipartite(MuValue::exact(kMuHex), g);
    CountPolynomial h = CountPolynomial::identity() * g;
    CHECK(std::fabs(h.evaluate(1.0 / one_class.value) - 1.0 / (kMuHex * kMuHex)) <= 1e-12);
    CHECK(one_class.value == doctest::Approx(1.7506).epsilon(2e-4));

    // both classes with the same gadget agree with the cubic relation
    MuValue both = predict_mu_bipartite(MuValue::exact(kMuHex), g, g);
    MuValue direct = predict_mu_transformed(MuValue::exact(kMuHex), g);
    CHECK(std::fabs(both.value - direct.value) <= 1e-10);
}

TEST_CASE("composition chains") {
    CountPolynomial g{0, 0, 1, 1};
    CHECK(compose_chain({g, g}) == CountPolynomial{0, 0, 0, 0, 1, 2, 2, 3, 3, 1});
    CHECK(compose_chain({g}) == g);
    CHECK_THROWS_AS(compose_chain({}), SawError);

    MuValue chained = predict_mu_transformed(MuValue::exact(kMuHex), compose_chain({g, g}));
    MuValue stepwise =
        predict_mu_transformed(predict_mu_transformed(MuValue::exact(kMuHex), g), g);
    CHECK(std::fabs(chained.value - stepwise.value) <= 1e-10);
}

TEST_CASE("fixed point of the Fisher series is the inverse golden ratio") {
    CountPolynomial g{0, 0, 1, 1};
    double x = fixed_point(g);
    CHECK(std::fabs(x - (std::sqrt(5.0) - 1.0) / 2.0) <= 1e-12);

    CHECK(fixed_point(CountPolynomial{0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(fixed_point(CountPolynomial{0, 1, 1}), SawError);   // linear term
}

TEST_CASE("inverse iteration is monotone toward the fixed point") {
    CountPolynomial g{0, 0, 1, 1};
    double x_star = (std::sqrt(5.0) - 1.0) / 2.0;

    std::vector<double> up = iterate_mu(1.0 / kMuHex, g, 20);
    REQUIRE(up.size() == 20);
    double prev = 1.0 / kMuHex;
    for (double x : up) {
        CHECK(x > prev);
        prev = x;
    }
    CHECK(std::fabs(up.back() - x_star) < 1e-6);

    std::vector<double> down = iterate_mu(0.9, g, 20);
    prev = 0.9;
    for (double x : down) {
        CHECK(x < prev);
        prev = x;
    }
    CHECK(std::fabs(down.back() - x_star) < 1e-6);

    std::vector<double> flat = iterate_mu(x_star, g, 5);
    for (double x : flat) CHECK(std::fabs(x - x_star) < 1e-9);
}

TEST_CASE("prediction iterates consistently with inverse iteration") {
    CountPolynomial g{0, 0, 1, 1};
    std::vector<double> xs = iterate_mu(1.0 / kMuHex, g, 4);
    MuValue mu = MuValue::exact(kMuHex);
    for (double x : xs) {
        mu = predict_mu_transformed(mu, g);
        CHECK(std::fabs(mu.value - 1.0 / x) <= 1e-10);
    }
}

TEST_CASE("series estimates report roots and ratios without extrapolation") {
    FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 8);
    SawSeries s = count_saws_from_vertex(hex, hex.origin(), 5);
    SeriesEstimate est = estimate_mu_from_series(s);
    REQUIRE(est.nth_roots.size() == 5);
    CHECK(est.nth_roots[0] == doctest::Approx(3.0));
    CHECK(est.nth_roots[1] == doctest::Approx(std::sqrt(6.0)));
    for (std::size_t i = 0; i + 1 < est.nth_roots.size(); ++i) {
        CHECK(est.nth_roots[i] >= est.nth_roots[i + 1]);    // nonincreasing
    }
    for (double r : est.nth_roots) CHECK(r >= kMuHex);      // submultiplicative upper bound

    SawSeries tiny;
    tiny.convention = LengthConvention::EdgeSteps;
    tiny.counts = {BigInt(1), BigInt(3), BigInt(6)};
    CHECK(estimate_mu_from_series(tiny).headline.value == doctest::Approx(2.0));

    SawSeries too_short;
    too_short.convention = LengthConvention::EdgeSteps;
    too_short.counts = {BigInt(1)};
    CHECK_THROWS_AS(estimate_mu_from_series(too_short), SawError);

    SawSeries wrong;
    wrong.convention = LengthConvention::VerticesVisited;
    wrong.counts = {BigInt(1), BigInt(3), BigInt(6)};
    CHECK_THROWS_AS(estimate_mu_from_series(wrong), SawError);
}

TEST_CASE("substitution identity on the hexagonal lattice") {
    FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 8);
    VerificationReport r = verify_substitution(hex, fisher(), 12);
    CHECK(r.pass);
    CHECK(!r.first_mismatch_degree.has_value());
    CHECK(r.composed == r.enumerated);
    CHECK(r.composed.coefficient(0) == 3);   // one empty walk per origin edge
}

TEST_CASE("corrupted gadget series is caught at its first bad degree") {
    FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 8);
    CountPolynomial corrupted{0, 0, 1};   // x^2 only: the x^3 term dropped
    VerificationReport r = verify_substitution_against(hex, fisher(), corrupted, 8);
    CHECK(!r.pass);
    REQUIRE(r.first_mismatch_degree.has_value());
    CHECK(*r.first_mismatch_degree == 3);
}

TEST_CASE("single-site star patch: both sides reduce to gadget terms") {
    FinitePatch star = star_patch();
    EnumerationOptions opts;
    opts.allow_boundary = true;   // the star is the whole graph
    VerificationReport r = verify_substitution(star, fisher(), 3, opts);
    CHECK(r.pass);
    // per start edge: the empty walk, then one gadget traversal to each
    // other port: 3 * (1 + 2x^2 + 2x^3)
    CHECK(r.enumerated == CountPolynomial{3, 0, 6, 6});
}

TEST_CASE("bipartite substitution identity on the hexagonal lattice") {
    FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 13);
    VerificationReport one = verify_bipartite_substitution(hex, fisher(), std::nullopt, 12);
    CHECK(one.pass);
    VerificationReport both = verify_bipartite_substitution(hex, fisher(), fisher(), 12);
    CHECK(both.pass);
    VerificationReport plain = verify_substitution(hex, fisher(), 12);
    CHECK(both.enumerated == plain.enumerated);
}

TEST_CASE("boundary-unsafe verification requests are refused") {
    FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 3);
    CHECK_THROWS_AS(verify_substitution(hex, fisher(), 40), SawError);
}

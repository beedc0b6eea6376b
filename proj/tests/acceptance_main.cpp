// Acceptance suite: one line per criterion, exact identities at pinned
// tolerances, hard runtime budgets. Exits nonzero if anything fails.

#include "saw/enumerate.hpp"
#include "saw/gadget.hpp"
#include "saw/lattice.hpp"
#include "saw/patch.hpp"
#include "saw/polynomial.hpp"
#include "saw/relations.hpp"
#include "saw/transform.hpp"

#include "reference_oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace saw;
using saw::testing::cycle_graph;
using saw::testing::path_graph;
using saw::testing::petersen_graph;

namespace {

struct Harness {
    int failures = 0;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail << "    FAILED: " << what << "\n";
        }
    }
};

bool run_criterion(int id, const char* label, double budget_seconds,
                   const std::function<void(Harness&)>& body) {
    Harness h;
    auto start = std::chrono::steady_clock::now();
    try {
        body(h);
    } catch (const std::exception& e) {
        h.require(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        h.require(false, "runtime " + std::to_string(elapsed) + "s exceeds budget " +
                             std::to_string(budget_seconds) + "s");
    }
    std::printf("criterion %d: %s (%.2fs)  %s\n", id, h.failures == 0 ? "PASS" : "FAIL", elapsed,
                label);
    std::fputs(h.detail.str().c_str(), stdout);
    return h.failures == 0;
}

const double kMuHex = std::sqrt(2.0 + std::sqrt(2.0));

std::vector<std::pair<FinitePatch, int>> cycle_templates() {
    std::vector<std::pair<FinitePatch, int>> out;
    for (int n = 5; n <= 8; ++n) {
        for (int k = 1; 2 * k <= n; ++k) out.emplace_back(cycle_graph(n), k);
    }
    return out;
}

} // namespace

int main() {
    int failed = 0;

    failed += !run_criterion(1, "complete-gadget series match the closed form", 1.0, [](Harness& h) {
        CountPolynomial figure3{0, 0, 1, 5, 20, 60, 120, 120};
        h.require(gadget_genfun(complete_gadget(7)) == figure3, "K7 series != published polynomial");
        for (int n = 3; n <= 9; ++n) {
            h.require(gadget_genfun(complete_gadget(n)) == kn_genfun_closed_form(n),
                      "K" + std::to_string(n) + " enumeration != closed form");
        }
    });

    failed += !run_criterion(2, "triple-copy gadgets obey g = f + f^2/x", 5.0, [](Harness& h) {
        for (int n = 2; n <= 6; ++n) {
            FinitePatch p = path_graph(n);
            CountPolynomial f = two_terminal_series(p, 0, n - 1);
            h.require(f == CountPolynomial::monomial(static_cast<std::size_t>(n)),
                      "path f != x^" + std::to_string(n));
            CountPolynomial g = gadget_genfun(generalized_fisher(p, 0, n - 1));
            h.require(g == f + (f * f).shifted_down(1), "path gadget law fails, N=" + std::to_string(n));
        }
        for (const auto& [c, k] : cycle_templates()) {
            int n = c.vertex_count();
            CountPolynomial f = two_terminal_series(c, 0, k);
            CountPolynomial expect = CountPolynomial::monomial(static_cast<std::size_t>(k + 1)) +
                                     CountPolynomial::monomial(static_cast<std::size_t>(n - k + 1));
            h.require(f == expect, "cycle f mismatch, N=" + std::to_string(n) + " k=" + std::to_string(k));
            CountPolynomial g = gadget_genfun(generalized_fisher(c, 0, k));
            h.require(g == f + (f * f).shifted_down(1),
                      "cycle gadget law fails, N=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    });

    failed += !run_criterion(3, "substitution identity on three lattices x four gadgets", 60.0,
                             [](Harness& h) {
        std::vector<std::pair<std::string, FinitePatch>> lattices;
        lattices.emplace_back("hexagonal", generate_lattice(TypeVector::of(6, 6, 6), 12));
        lattices.emplace_back("square-octagon", generate_lattice(TypeVector::of(4, 8, 8), 8));
        lattices.emplace_back("ladder", generate_lattice(TypeVector::of(4, 4, kInfiniteFaceSize), 12));
        std::vector<std::pair<std::string, Gadget>> gadgets;
        gadgets.emplace_back("K3", complete_gadget(3));
        gadgets.emplace_back("K4", complete_gadget(4));
        gadgets.emplace_back("path3", generalized_fisher(path_graph(3), 0, 2));
        gadgets.emplace_back("C7k2", generalized_fisher(cycle_graph(7), 0, 2));
        for (const auto& [lname, patch] : lattices) {
            for (const auto& [gname, gadget] : gadgets) {
                VerificationReport r = verify_substitution(patch, gadget, 10);
                h.require(r.pass, lname + " x " + gname + " mismatch at degree " +
                                      std::to_string(r.first_mismatch_degree.value_or(-1)));
            }
        }
    });

    failed += !run_criterion(4, "bipartite substitution identity on the hexagonal lattice", 60.0,
                             [](Harness& h) {
        FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 12);
        VerificationReport one = verify_bipartite_substitution(hex, fisher(), std::nullopt, 10);
        h.require(one.pass, "one-class identity mismatch at degree " +
                                std::to_string(one.first_mismatch_degree.value_or(-1)));
        VerificationReport both = verify_bipartite_substitution(hex, fisher(), fisher(), 10);
        h.require(both.pass, "both-class identity mismatch at degree " +
                                 std::to_string(both.first_mismatch_degree.value_or(-1)));
        VerificationReport plain = verify_substitution(hex, fisher(), 10);
        h.require(both.enumerated == plain.enumerated,
                  "both-class enumerated series differs from the full-transform series");
    });

    failed += !run_criterion(5, "mu prediction and the submultiplicative root bound", 300.0,
                             [](Harness& h) {
        CountPolynomial g{0, 0, 1, 1};
        MuValue mu1 = predict_mu_transformed(MuValue::exact(kMuHex), g);
        h.require(std::fabs(g.evaluate(1.0 / mu1.value) - 1.0 / kMuHex) <= 1e-12,
                  "relation residual above 1e-12");

        FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 10);
        TransformedPatch tp = transform_all(hex, fisher());
        h.require(tp.patch.safe_walk_length() >= 16, "transformed safe horizon below 16");
        SawSeries s = count_saws_from_vertex(tp.patch, tp.patch.origin(), 16);
        SeriesEstimate est = estimate_mu_from_series(s);
        for (std::size_t i = 0; i + 1 < est.nth_roots.size(); ++i) {
            h.require(est.nth_roots[i] >= est.nth_roots[i + 1] - 1e-12,
                      "root sequence not nonincreasing at n=" + std::to_string(i + 1));
        }
        for (std::size_t i = 0; i < est.nth_roots.size(); ++i) {
            h.require(est.nth_roots[i] >= mu1.value - 1e-9,
                      "root below predicted mu at n=" + std::to_string(i + 1));
        }
    });

    failed += !run_criterion(6, "fixed point and monotone inverse iteration", 1.0, [](Harness& h) {
        CountPolynomial g{0, 0, 1, 1};
        double x_star = fixed_point(g, 1e-12);
        h.require(std::fabs(x_star - (std::sqrt(5.0) - 1.0) / 2.0) <= 1e-12,
                  "fixed point differs from (sqrt(5)-1)/2");

        std::vector<double> up = iterate_mu(1.0 / kMuHex, g, 20);
        double prev = 1.0 / kMuHex;
        bool increasing = true;
        for (double x : up) {
            increasing = increasing && x > prev;
            prev = x;
        }
        h.require(increasing, "iteration from 1/mu_hex not strictly increasing");
        h.require(std::fabs(up.back() - x_star) < 1e-6, "x_20 not within 1e-6 of the fixed point");

        std::vector<double> down = iterate_mu(0.9, g, 20);
        prev = 0.9;
        bool decreasing = true;
        for (double x : down) {
            decreasing = decreasing && x < prev;
            prev = x;
        }
        h.require(decreasing, "iteration from 0.9 not strictly decreasing");
        h.require(std::fabs(down.back() - x_star) < 1e-6, "descending limit differs");
    });

    failed += !run_criterion(7, "composition law for the nine-vertex double Fisher gadget", 5.0,
                             [](Harness& h) {
        Gadget composite = compose_gadget(fisher(), fisher());
        h.require(composite.vertex_count() == 9, "composite gadget is not nine vertices");
        CountPolynomial g{0, 0, 1, 1};
        h.require(gadget_genfun(composite) == g.compose(g), "composite series != g o g");

        MuValue chained = predict_mu_transformed(MuValue::exact(kMuHex), compose_chain({g, g}));
        MuValue stepwise = predict_mu_transformed(predict_mu_transformed(MuValue::exact(kMuHex), g), g);
        h.require(std::fabs(chained.value - stepwise.value) <= 1e-10,
                  "chain prediction differs from sequential prediction");
    });

    failed += !run_criterion(8, "validation gate and port-pair invariance", 30.0, [](Harness& h) {
        std::vector<std::pair<std::string, Gadget>> family;
        for (int n = 3; n <= 9; ++n) {
            family.emplace_back("K" + std::to_string(n), complete_gadget(n));
        }
        for (int n = 2; n <= 6; ++n) {
            family.emplace_back("path" + std::to_string(n),
                                generalized_fisher(path_graph(n), 0, n - 1));
        }
        for (const auto& [c, k] : cycle_templates()) {
            family.emplace_back("C" + std::to_string(c.vertex_count()) + "k" + std::to_string(k),
                                generalized_fisher(c, 0, k));
        }
        for (const auto& [name, g] : family) {
            h.require(validate_gadget(g).port_transitive, name + " not accepted");
            CountPolynomial p01 = gadget_genfun_pair(g, 0, 1);
            h.require(p01 == gadget_genfun_pair(g, 0, 2) && p01 == gadget_genfun_pair(g, 1, 2),
                      name + " series depends on the port pair");
        }
        Gadget bad;
        bad.graph = path_graph(3);
        bad.ports = {0, 1, 2};
        h.require(!validate_gadget(bad).port_transitive, "path counterexample wrongly accepted");
    });

    failed += !run_criterion(9, "parallel engine equals the naive reference", 30.0, [](Harness& h) {
        EnumerationOptions opts;
        opts.allow_boundary = true;
        opts.threads = 4;
        opts.split_depth = 2;

        std::vector<FinitePatch> suite;
        suite.push_back(path_graph(6));
        suite.push_back(cycle_graph(8));
        suite.push_back(petersen_graph());
        suite.push_back(complete_gadget(5).graph);
        suite.push_back(generate_lattice(TypeVector::of(4, 4, kInfiniteFaceSize), 3));
        suite.push_back(build_patch(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}}));
        std::mt19937 rng(97);
        while (suite.size() < 16) {
            VertexId n = 6 + static_cast<VertexId>(rng() % 9);
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            for (VertexId a = 0; a < n; ++a) {
                for (VertexId b = a + 2; b < n; ++b) {
                    if (rng() % 4 == 0) edges.emplace_back(a, b);
                }
            }
            suite.push_back(build_patch(n, edges));
        }

        for (std::size_t idx = 0; idx < suite.size(); ++idx) {
            const FinitePatch& p = suite[idx];
            int nmax = p.vertex_count();
            SawSeries s = count_saws_from_vertex(p, 0, nmax, opts);
            std::vector<long> expect = saw::testing::NaiveVertexCounter(p).run(0, nmax);
            bool same = s.counts.size() == expect.size();
            for (std::size_t i = 0; same && i < expect.size(); ++i) same = s.counts[i] == expect[i];
            h.require(same, "vertex counts diverge on suite graph " + std::to_string(idx));

            std::optional<std::vector<bool>> no_filter;
            std::vector<EdgeId> starts{0};
            SawSeries m = count_midedge_saws(p, starts, no_filter, nmax, opts);
            std::vector<long> mexpect = saw::testing::NaiveMidEdgeCounter(p, no_filter).run(starts, nmax);
            bool msame = true;
            for (std::size_t i = 0; msame && i < mexpect.size(); ++i) msame = m.counts[i] == mexpect[i];
            h.require(msame, "mid-edge counts diverge on suite graph " + std::to_string(idx));
        }

        FinitePatch hex = generate_lattice(TypeVector::of(6, 6, 6), 8);
        SawSeries s = count_saws_from_vertex(hex, hex.origin(), 6);
        std::vector<long> expect{1, 3, 6, 12, 24, 48, 90};
        bool same = s.counts.size() == expect.size();
        for (std::size_t i = 0; same && i < expect.size(); ++i) same = s.counts[i] == expect[i];
        h.require(same, "hexagonal sigma_1..sigma_6 differ from 3,6,12,24,48,90");
    });

    if (failed == 0) {
        std::printf("all %d acceptance criteria passed\n", 9);
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failed);
    return 1;
}

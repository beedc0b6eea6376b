// sawtool: lattice patches, three-port gadgets, exact SAW series, local
// transformations, and the connective-constant relations between them.

#include "saw/enumerate.hpp"
#include "saw/errors.hpp"
#include "saw/gadget.hpp"
#include "saw/json_io.hpp"
#include "saw/lattice.hpp"
#include "saw/muexpr.hpp"
#include "saw/polynomial.hpp"
#include "saw/relations.hpp"
#include "saw/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw saw::SawError(saw::ErrorCode::BadInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

// Run metadata written beside every output file; the payload itself stays
// byte-stable across reruns.
class Manifest {
public:
    Manifest(std::string subcommand) : start_(std::chrono::steady_clock::now()) {
        j_["subcommand"] = std::move(subcommand);
        j_["tool_version"] = kToolVersion;
        j_["inputs"] = json::object();
        j_["parameters"] = json::object();
    }

    void input(const std::string& label, const std::string& path) {
        j_["inputs"][label] = {{"path", path}, {"sha256", sha256_hex(read_file(path))}};
    }

    template <typename T>
    void param(const std::string& key, const T& value) {
        j_["parameters"][key] = value;
    }

    void write_for(const std::string& out_path) {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        j_["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        saw::save_json_file(out_path + ".manifest.json", j_);
    }

private:
    json j_;
    std::chrono::steady_clock::time_point start_;
};

void emit(const json& j, const std::optional<std::string>& out_path, Manifest* manifest = nullptr) {
    if (out_path) {
        saw::save_json_file(*out_path, j);
        if (manifest) manifest->write_for(*out_path);
    } else {
        std::cout << saw::dump_canonical(j);
    }
}

json gadget_json_from_source(const std::optional<std::string>& path) {
    if (path) return saw::load_json_file(*path);
    json j;
    try {
        std::cin >> j;
    } catch (const json::parse_error& e) {
        throw saw::SawError(saw::ErrorCode::BadInput, std::string("bad gadget JSON on stdin: ") + e.what());
    }
    return j;
}

saw::FinitePatch flipped_colours(const saw::FinitePatch& patch) {
    std::vector<saw::Colour> flipped;
    flipped.reserve(static_cast<std::size_t>(patch.vertex_count()));
    for (saw::Colour c : patch.colours()) {
        flipped.push_back(c == saw::Colour::Black ? saw::Colour::White : saw::Colour::Black);
    }
    saw::FinitePatch out = saw::build_patch(patch.vertex_count(), patch.edges(), flipped, patch.origin());
    return saw::with_boundary_depth(std::move(out), patch.boundary_depths());
}

struct CommonEnumFlags {
    int threads = 0;
    bool allow_boundary = false;

    saw::EnumerationOptions options() const {
        saw::EnumerationOptions opts;
        opts.threads = threads;
        opts.allow_boundary = allow_boundary;
        return opts;
    }
};

int run_cli(int argc, char** argv) {
    CLI::App app{"two-port SAW generating polynomials, local transformations, and "
                 "connective-constant relations on cubic lattices"};
    app.require_subcommand(1);

    // ---- lattice ----
    auto* lattice = app.add_subcommand("lattice", "lattice patch generation and classification");
    lattice->require_subcommand(1);

    std::string lat_type;
    int lat_radius = 4;
    std::string lat_out;
    auto* lat_build = lattice->add_subcommand("build", "generate a finite ball of a cubic lattice");
    lat_build->add_option("--type", lat_type, "type-vector a,b,c (infinity spelled inf)")->required();
    lat_build->add_option("--radius", lat_radius, "graph radius of the ball")->required();
    lat_build->add_option("--out", lat_out, "output patch JSON path")->required();
    lat_build->callback([&] {
        Manifest manifest("lattice build");
        manifest.param("type", lat_type);
        manifest.param("radius", lat_radius);
        saw::TypeVector tv = saw::TypeVector::parse(lat_type);
        saw::FinitePatch patch = saw::generate_lattice(tv, lat_radius);
        emit(saw::patch_to_json(patch), lat_out, &manifest);
    });

    std::string cls_type;
    auto* lat_classify = lattice->add_subcommand("classify", "geometry of a type-vector");
    lat_classify->add_option("--type", cls_type, "type-vector a,b,c")->required();
    lat_classify->callback([&] {
        saw::TypeVector tv = saw::TypeVector::parse(cls_type);
        json j;
        j["type"] = tv.to_string();
        j["geometry"] = saw::geometry_name(saw::classify(tv));
        emit(j, std::nullopt);
    });

    // ---- gadget ----
    auto* gadget = app.add_subcommand("gadget", "three-port gadget construction and checks");
    gadget->require_subcommand(1);

    std::string check_file;
    auto* g_check = gadget->add_subcommand("check", "validate ports and port transitivity");
    g_check->add_option("file", check_file, "gadget JSON path")->required();
    g_check->callback([&] {
        saw::Gadget g = saw::gadget_from_json(saw::load_json_file(check_file));
        emit(saw::validation_to_json(saw::validate_gadget(g)), std::nullopt);
    });

    int kn_n = 3;
    std::string kn_out;
    auto* g_kn = gadget->add_subcommand("kn", "complete-graph gadget K_N");
    g_kn->add_option("--n", kn_n, "number of vertices, N >= 3")->required();
    g_kn->add_option("--out", kn_out, "output gadget JSON path (default stdout)");
    g_kn->callback([&] {
        Manifest manifest("gadget kn");
        manifest.param("n", kn_n);
        saw::Gadget g = saw::complete_gadget(kn_n);
        emit(saw::gadget_to_json(g), kn_out.empty() ? std::nullopt : std::optional(kn_out),
             kn_out.empty() ? nullptr : &manifest);
    });

    std::string gf_h;
    int gf_v1 = 0, gf_v2 = 1;
    std::string gf_out;
    auto* g_gf = gadget->add_subcommand("gfisher", "cyclic triple-copy gadget built from a template graph");
    g_gf->set_help_flag("--help", "print help");   // frees -h / --h for the template graph
    g_gf->add_option("--h", gf_h, "template graph JSON (patch format)")->required();
    g_gf->add_option("--v1", gf_v1, "first terminal vertex")->required();
    g_gf->add_option("--v2", gf_v2, "second terminal vertex")->required();
    g_gf->add_option("--out", gf_out, "output gadget JSON path (default stdout)");
    g_gf->callback([&] {
        Manifest manifest("gadget gfisher");
        manifest.input("h", gf_h);
        manifest.param("v1", gf_v1);
        manifest.param("v2", gf_v2);
        saw::FinitePatch h = saw::patch_from_json(saw::load_json_file(gf_h));
        saw::Gadget g = saw::generalized_fisher(h, gf_v1, gf_v2);
        emit(saw::gadget_to_json(g), gf_out.empty() ? std::nullopt : std::optional(gf_out),
             gf_out.empty() ? nullptr : &manifest);
    });

    std::string genfun_file;
    int genfun_kn = 0;
    CommonEnumFlags genfun_flags;
    auto* g_genfun = gadget->add_subcommand("genfun", "two-port SAW generating polynomial");
    g_genfun->add_option("file", genfun_file, "gadget JSON path (default stdin)");
    g_genfun->add_option("--kn", genfun_kn, "use the K_N gadget instead of a file");
    g_genfun->add_option("--threads", genfun_flags.threads, "enumeration threads (0 = auto)");
    g_genfun->callback([&] {
        saw::Gadget g = genfun_kn > 0
                            ? saw::complete_gadget(genfun_kn)
                            : saw::gadget_from_json(gadget_json_from_source(
                                  genfun_file.empty() ? std::nullopt : std::optional(genfun_file)));
        saw::CountPolynomial p = saw::gadget_genfun(g, genfun_flags.options());
        json j = saw::polynomial_to_json(p);
        j["pretty"] = p.to_pretty_string();
        emit(j, std::nullopt);
    });

    // ---- enumerate ----
    std::string enum_patch;
    int enum_origin = -1;
    int enum_nmax = 10;
    bool enum_moments = false;
    std::string enum_out;
    CommonEnumFlags enum_flags;
    auto* enumerate = app.add_subcommand("enumerate", "exact SAW counts from a vertex");
    enumerate->add_option("--patch", enum_patch, "patch JSON path")->required();
    enumerate->add_option("--origin", enum_origin, "start vertex (default: patch origin)");
    enumerate->add_option("--nmax", enum_nmax, "maximum walk length in edge steps")->required();
    enumerate->add_flag("--moments", enum_moments, "accumulate endpoint-distance second moments");
    enumerate->add_flag("--allow-boundary", enum_flags.allow_boundary,
                        "count on the finite patch as-is, ignoring the safe horizon");
    enumerate->add_option("--threads", enum_flags.threads, "enumeration threads (0 = auto)");
    enumerate->add_option("--out", enum_out, "output series JSON path")->required();
    enumerate->callback([&] {
        Manifest manifest("enumerate");
        manifest.input("patch", enum_patch);
        manifest.param("nmax", enum_nmax);
        manifest.param("moments", enum_moments);
        saw::FinitePatch patch = saw::patch_from_json(saw::load_json_file(enum_patch));
        saw::VertexId origin = enum_origin >= 0 ? enum_origin : patch.origin();
        manifest.param("origin", origin);
        saw::SawSeries s = enum_moments
                               ? saw::endpoint_moments(patch, origin, enum_nmax, enum_flags.options())
                               : saw::count_saws_from_vertex(patch, origin, enum_nmax, enum_flags.options());
        emit(saw::series_to_json(s), enum_out, &manifest);
    });

    // ---- transform ----
    std::string tr_patch, tr_gadget, tr_gadget2, tr_class = "all", tr_out;
    auto* transform = app.add_subcommand("transform", "replace degree-3 vertices by gadget copies");
    transform->add_option("--patch", tr_patch, "patch JSON path")->required();
    transform->add_option("--gadget", tr_gadget, "gadget JSON path")->required();
    transform->add_option("--class", tr_class, "all | black | white | both (default all)")
        ->check(CLI::IsMember({"all", "black", "white", "both"}));
    transform->add_option("--gadget2", tr_gadget2, "white-class gadget for --class both");
    transform->add_option("--out", tr_out, "output JSON path")->required();
    transform->callback([&] {
        Manifest manifest("transform");
        manifest.input("patch", tr_patch);
        manifest.input("gadget", tr_gadget);
        manifest.param("class", tr_class);
        saw::FinitePatch patch = saw::patch_from_json(saw::load_json_file(tr_patch));
        saw::Gadget g = saw::gadget_from_json(saw::load_json_file(tr_gadget));
        saw::TransformedPatch tp;
        if (tr_class == "all") {
            tp = saw::transform_all(patch, g);
        } else if (tr_class == "black") {
            tp = saw::transform_colour_class(patch, g);
        } else if (tr_class == "white") {
            if (!patch.has_colours()) {
                throw saw::SawError(saw::ErrorCode::NotBipartite, "patch carries no colouring");
            }
            tp = saw::transform_colour_class(flipped_colours(patch), g);
        } else {
            saw::Gadget g2 = tr_gadget2.empty() ? g : saw::gadget_from_json(saw::load_json_file(tr_gadget2));
            if (!tr_gadget2.empty()) manifest.input("gadget2", tr_gadget2);
            tp = saw::transform_colour_class(patch, g, g2);
        }
        emit(saw::transformed_to_json(tp), tr_out, &manifest);
    });

    // ---- predict ----
    std::string pr_mu, pr_gadget, pr_gadget2, pr_bipartite;
    CommonEnumFlags pr_flags;
    auto* predict = app.add_subcommand("predict", "connective constant of the transformed lattice");
    predict->add_option("--mu-expr", pr_mu, "base connective constant, e.g. \"sqrt(2+sqrt(2))\"")->required();
    predict->add_option("--gadget", pr_gadget, "gadget JSON path")->required();
    predict->add_option("--bipartite", pr_bipartite, "one | two: use the bipartite relation")
        ->check(CLI::IsMember({"one", "two"}));
    predict->add_option("--gadget2", pr_gadget2, "second gadget for --bipartite two");
    predict->add_option("--threads", pr_flags.threads, "enumeration threads (0 = auto)");
    predict->callback([&] {
        double mu_in = saw::evaluate_mu_expression(pr_mu);
        saw::Gadget g = saw::gadget_from_json(saw::load_json_file(pr_gadget));
        saw::CountPolynomial gp = saw::gadget_genfun(g, pr_flags.options());
        saw::MuValue mu = saw::MuValue::exact(mu_in, pr_mu);
        saw::MuValue out;
        json j;
        if (pr_bipartite.empty()) {
            out = saw::predict_mu_transformed(mu, gp);
            j["relation"] = "g(x) = 1/mu";
            j["residual"] = format_double(std::fabs(gp.evaluate(1.0 / out.value) - 1.0 / mu_in));
        } else if (pr_bipartite == "one") {
            out = saw::predict_mu_bipartite(mu, gp);
            j["relation"] = "x g(x) = 1/mu^2";
            saw::CountPolynomial h = saw::CountPolynomial::identity() * gp;
            j["residual"] = format_double(std::fabs(h.evaluate(1.0 / out.value) - 1.0 / (mu_in * mu_in)));
        } else {
            saw::CountPolynomial gp2 =
                pr_gadget2.empty()
                    ? gp
                    : saw::gadget_genfun(saw::gadget_from_json(saw::load_json_file(pr_gadget2)),
                                         pr_flags.options());
            out = saw::predict_mu_bipartite(mu, gp, gp2);
            j["relation"] = "g1(x) g2(x) = 1/mu^2";
            saw::CountPolynomial h = gp * gp2;
            j["residual"] = format_double(std::fabs(h.evaluate(1.0 / out.value) - 1.0 / (mu_in * mu_in)));
        }
        j["mu_input"] = format_double(mu_in);
        j["g"] = gp.to_pretty_string();
        j["mu_predicted"] = format_double(out.value);
        j["provenance"] = saw::provenance_name(out.provenance);
        emit(j, std::nullopt);
    });

    // ---- verify ----
    std::string vf_patch, vf_gadget, vf_gadget2, vf_bipartite;
    int vf_nmax = 10;
    CommonEnumFlags vf_flags;
    auto* verify = app.add_subcommand("verify", "exact substitution-identity check");
    verify->add_option("--patch", vf_patch, "patch JSON path")->required();
    verify->add_option("--gadget", vf_gadget, "gadget JSON path")->required();
    verify->add_option("--nmax", vf_nmax, "compare series through this degree")->required();
    verify->add_option("--bipartite", vf_bipartite, "one | two: colour-class identity")
        ->check(CLI::IsMember({"one", "two"}));
    verify->add_option("--gadget2", vf_gadget2, "white-class gadget for --bipartite two");
    verify->add_option("--threads", vf_flags.threads, "enumeration threads (0 = auto)");
    verify->callback([&] {
        saw::FinitePatch patch = saw::patch_from_json(saw::load_json_file(vf_patch));
        saw::Gadget g = saw::gadget_from_json(saw::load_json_file(vf_gadget));
        saw::VerificationReport report;
        if (vf_bipartite.empty()) {
            report = saw::verify_substitution(patch, g, vf_nmax, vf_flags.options());
        } else if (vf_bipartite == "one") {
            report = saw::verify_bipartite_substitution(patch, g, std::nullopt, vf_nmax, vf_flags.options());
        } else {
            saw::Gadget g2 = vf_gadget2.empty() ? g : saw::gadget_from_json(saw::load_json_file(vf_gadget2));
            report = saw::verify_bipartite_substitution(patch, g, g2, vf_nmax, vf_flags.options());
        }
        emit(saw::verification_to_json(report), std::nullopt);
        if (!report.pass) {
            throw saw::SawError(saw::ErrorCode::SubstitutionMismatch,
                                "series differ first at degree " +
                                    std::to_string(report.first_mismatch_degree.value_or(-1)));
        }
    });

    // ---- fixedpoint ----
    std::string fp_gadget;
    double fp_tol = 1e-12;
    CommonEnumFlags fp_flags;
    auto* fixedpoint = app.add_subcommand("fixedpoint", "fixed point of the gadget series on (0,1]");
    fixedpoint->add_option("--gadget", fp_gadget, "gadget JSON path")->required();
    fixedpoint->add_option("--tol", fp_tol, "residual tolerance");
    fixedpoint->callback([&] {
        saw::Gadget g = saw::gadget_from_json(saw::load_json_file(fp_gadget));
        saw::CountPolynomial gp = saw::gadget_genfun(g, fp_flags.options());
        double x = saw::fixed_point(gp, fp_tol);
        json j;
        j["g"] = gp.to_pretty_string();
        j["x_star"] = format_double(x);
        j["mu_limit"] = format_double(1.0 / x);
        emit(j, std::nullopt);
    });

    // ---- iterate ----
    std::string it_gadget;
    double it_x0 = 0.5;
    int it_steps = 10;
    auto* iterate = app.add_subcommand("iterate", "inverse-series iteration x_k = g^{-1}(x_{k-1})");
    iterate->add_option("--x0", it_x0, "starting value in (0,1)")->required();
    iterate->add_option("--gadget", it_gadget, "gadget JSON path")->required();
    iterate->add_option("--steps", it_steps, "iteration count")->required();
    iterate->callback([&] {
        saw::Gadget g = saw::gadget_from_json(saw::load_json_file(it_gadget));
        saw::CountPolynomial gp = saw::gadget_genfun(g);
        std::vector<double> xs = saw::iterate_mu(it_x0, gp, it_steps);
        json vals = json::array();
        for (double v : xs) vals.push_back(format_double(v));
        json j;
        j["g"] = gp.to_pretty_string();
        j["x0"] = format_double(it_x0);
        j["values"] = std::move(vals);
        emit(j, std::nullopt);
    });

    // ---- demo ----
    std::string demo_name;
    int demo_radius = 8;
    int demo_nmax = 10;
    CommonEnumFlags demo_flags;
    auto* demo = app.add_subcommand("demo", "end-to-end worked example");
    demo->add_option("name", demo_name, "demo name: fisher-hex")->required();
    demo->add_option("--radius", demo_radius, "hexagonal patch radius");
    demo->add_option("--nmax", demo_nmax, "verification degree");
    demo->add_option("--threads", demo_flags.threads, "enumeration threads (0 = auto)");
    demo->callback([&] {
        if (demo_name != "fisher-hex") {
            throw saw::SawError(saw::ErrorCode::BadInput, "unknown demo: " + demo_name);
        }
        double mu_hex = std::sqrt(2.0 + std::sqrt(2.0));
        std::cout << "mu(hexagonal) = sqrt(2+sqrt(2)) = " << format_double(mu_hex) << "\n";

        saw::Gadget f = saw::fisher();
        saw::CountPolynomial g = saw::gadget_genfun(f, demo_flags.options());
        std::cout << "g(x) = " << g.to_pretty_string() << "\n";

        saw::MuValue predicted =
            saw::predict_mu_transformed(saw::MuValue::exact(mu_hex, "sqrt(2+sqrt(2))"), g);
        std::cout << "predicted mu(3,12^2) = " << format_double(predicted.value) << "\n";

        saw::FinitePatch hex = saw::generate_lattice(saw::TypeVector::of(6, 6, 6), demo_radius);
        saw::VerificationReport report =
            saw::verify_substitution(hex, f, demo_nmax, demo_flags.options());
        std::cout << "substitution identity through degree " << demo_nmax << ": "
                  << (report.pass ? "PASS" : "FAIL") << "\n";
        if (!report.pass) {
            throw saw::SawError(saw::ErrorCode::SubstitutionMismatch,
                                "demo verification failed at degree " +
                                    std::to_string(report.first_mismatch_degree.value_or(-1)));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const saw::SawError& e) {
        json err;
        err["error"] = {{"code", e.code_name()}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"code", "InternalError"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
}

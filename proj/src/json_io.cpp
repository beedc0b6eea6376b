#include "saw/json_io.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace saw {

using nlohmann::json;

namespace {

json depth_to_json(std::int32_t d) { return d == kUnboundedDepth ? json(-1) : json(d); }

std::int32_t depth_from_json(const json& j) {
    std::int32_t d = j.get<std::int32_t>();
    if (d == -1) return kUnboundedDepth;
    if (d < 0) throw SawError(ErrorCode::BadInput, "boundary depth must be >= 0 or -1");
    return d;
}

std::vector<BigInt> bigints_from_json(const json& j) {
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) throw SawError(ErrorCode::BadInput, "counts must be decimal strings");
        out.push_back(bigint_from_decimal(item.get<std::string>()));
    }
    return out;
}

json bigints_to_json(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const BigInt& b : v) out.push_back(to_decimal(b));
    return out;
}

} // namespace

json patch_to_json(const FinitePatch& patch) {
    json j;
    j["vertices"] = patch.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : patch.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (patch.has_colours()) {
        json cols = json::array();
        for (Colour c : patch.colours()) cols.push_back(c == Colour::Black ? 0 : 1);
        j["colours"] = std::move(cols);
    }
    j["origin"] = patch.origin();
    json depth = json::array();
    for (std::int32_t d : patch.boundary_depths()) depth.push_back(depth_to_json(d));
    j["boundary_depth"] = std::move(depth);
    return j;
}

FinitePatch patch_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("edges")) {
        throw SawError(ErrorCode::BadInput, "patch JSON needs 'vertices' and 'edges'");
    }
    VertexId n = j.at("vertices").get<VertexId>();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw SawError(ErrorCode::BadInput, "edge must be a pair");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    std::optional<std::vector<Colour>> colours;
    if (j.contains("colours")) {
        colours.emplace();
        for (const auto& c : j.at("colours")) {
            int v = c.get<int>();
            if (v != 0 && v != 1) throw SawError(ErrorCode::BadInput, "colour labels are 0 or 1");
            colours->push_back(v == 0 ? Colour::Black : Colour::White);
        }
    }
    VertexId origin = j.contains("origin") ? j.at("origin").get<VertexId>() : 0;
    FinitePatch patch = build_patch(n, edges, std::move(colours), origin);
    if (j.contains("boundary_depth")) {
        const auto& arr = j.at("boundary_depth");
        if (static_cast<VertexId>(arr.size()) != n) {
            throw SawError(ErrorCode::BadInput, "boundary_depth size mismatch");
        }
        std::vector<std::int32_t> depth;
        depth.reserve(arr.size());
        for (const auto& d : arr) depth.push_back(depth_from_json(d));
        patch = with_boundary_depth(std::move(patch), std::move(depth));
    }
    return patch;
}

json gadget_to_json(const Gadget& g) {
    json j = patch_to_json(g.graph);
    j["ports"] = json::array({g.ports[0], g.ports[1], g.ports[2]});
    return j;
}

Gadget gadget_from_json(const json& j) {
    if (!j.contains("ports") || !j.at("ports").is_array() || j.at("ports").size() != 3) {
        throw SawError(ErrorCode::BadInput, "gadget JSON needs a 3-element 'ports' array");
    }
    Gadget g;
    g.graph = patch_from_json(j);
    for (int i = 0; i < 3; ++i) g.ports[static_cast<std::size_t>(i)] = j.at("ports")[static_cast<std::size_t>(i)].get<VertexId>();
    return g;
}

json polynomial_to_json(const CountPolynomial& p) {
    json j;
    j["coeffs"] = bigints_to_json(p.coefficients());
    return j;
}

CountPolynomial polynomial_from_json(const json& j) {
    if (!j.contains("coeffs")) throw SawError(ErrorCode::BadInput, "polynomial JSON needs 'coeffs'");
    return CountPolynomial(bigints_from_json(j.at("coeffs")));
}

json series_to_json(const SawSeries& s) {
    json j;
    j["convention"] = convention_name(s.convention);
    j["counts"] = bigints_to_json(s.counts);
    if (s.moments2) j["moments2"] = bigints_to_json(*s.moments2);
    j["safe_up_to"] = depth_to_json(s.safe_up_to);
    return j;
}

SawSeries series_from_json(const json& j) {
    SawSeries s;
    std::string conv = j.at("convention").get<std::string>();
    if (conv == "edge_steps") {
        s.convention = LengthConvention::EdgeSteps;
    } else if (conv == "vertices_visited") {
        s.convention = LengthConvention::VerticesVisited;
    } else {
        throw SawError(ErrorCode::BadInput, "unknown series convention: " + conv);
    }
    s.counts = bigints_from_json(j.at("counts"));
    if (j.contains("moments2")) s.moments2 = bigints_from_json(j.at("moments2"));
    s.safe_up_to = depth_from_json(j.at("safe_up_to"));
    return s;
}

json transformed_to_json(const TransformedPatch& tp) {
    json j;
    j["patch"] = patch_to_json(tp.patch);
    j["original_edge_map"] = tp.original_edge_map;
    json sites = json::array();
    for (const auto& s : tp.site_map) {
        if (s) {
            sites.push_back(json::array({s->first, s->second}));
        } else {
            sites.push_back(nullptr);
        }
    }
    j["site_map"] = std::move(sites);
    j["untouched"] = tp.untouched;
    return j;
}

TransformedPatch transformed_from_json(const json& j) {
    TransformedPatch tp;
    tp.patch = patch_from_json(j.at("patch"));
    tp.original_edge_map = j.at("original_edge_map").get<std::vector<EdgeId>>();
    for (const auto& s : j.at("site_map")) {
        if (s.is_null()) {
            tp.site_map.emplace_back(std::nullopt);
        } else {
            tp.site_map.emplace_back(std::make_pair(s[0].get<VertexId>(), s[1].get<VertexId>()));
        }
    }
    tp.untouched = j.at("untouched").get<std::vector<VertexId>>();
    return tp;
}

json validation_to_json(const GadgetValidation& v) {
    json j;
    j["automorphism_count"] = v.automorphisms.size();
    j["port_stabilizer_count"] = v.port_stabilizers.size();
    j["port_transitive"] = v.port_transitive;
    j["note"] = v.note;
    return j;
}

json verification_to_json(const VerificationReport& r) {
    json j;
    j["pass"] = r.pass;
    j["nmax"] = r.nmax;
    j["composed"] = polynomial_to_json(r.composed);
    j["enumerated"] = polynomial_to_json(r.enumerated);
    j["first_mismatch_degree"] = r.first_mismatch_degree ? json(*r.first_mismatch_degree) : json(nullptr);
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SawError(ErrorCode::BadInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SawError(ErrorCode::BadInput, "bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw SawError(ErrorCode::BadInput, "cannot write " + path);
    out << dump_canonical(j);
}

} // namespace saw

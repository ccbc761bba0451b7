#include "hilab/certificate.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace hilab {

using nlohmann::json;

// ---------------------------------------------------------------- EdgeColoring

EdgeColoring::EdgeColoring(int n_, int c_) : n(n_), c(c_) {
    if (n < 1) throw parameter_error("edge coloring needs n >= 1");
    if (c < 1) throw parameter_error("edge coloring needs c >= 1");
    edge_colors.assign(static_cast<size_t>(edge_count()), 0);
}

int EdgeColoring::edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return (v - 1) * (v - 2) / 2 + (u - 1);
}

int EdgeColoring::color(int u, int v) const {
    if (u == v || u < 1 || v < 1 || u > n || v > n)
        throw domain_error("edge endpoints outside 1..n");
    return edge_colors[static_cast<size_t>(edge_index(u, v))];
}

void EdgeColoring::set_color(int u, int v, int g) {
    if (u == v || u < 1 || v < 1 || u > n || v > n)
        throw domain_error("edge endpoints outside 1..n");
    if (g < 0 || g > c) throw parameter_error("edge color outside 1..c");
    edge_colors[static_cast<size_t>(edge_index(u, v))] = g;
}

bool EdgeColoring::complete() const {
    return std::all_of(edge_colors.begin(), edge_colors.end(), [](int g) { return g >= 1; });
}

EdgeColoring EdgeColoring::parse(std::istream& in, int c_hint) {
    struct Entry {
        int u, v, g;
    };
    std::vector<Entry> entries;
    int max_v = 0, max_c = c_hint;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Entry e{};
        if (!(ls >> e.u >> e.v >> e.g)) throw format_error("edge line must be \"u v color\"");
        if (e.u == e.v) throw format_error("self-loop in edge coloring");
        entries.push_back(e);
        max_v = std::max({max_v, e.u, e.v});
        max_c = std::max(max_c, e.g);
    }
    if (entries.empty()) throw format_error("empty edge coloring");
    EdgeColoring ec(max_v, std::max(max_c, 1));
    for (const auto& e : entries) ec.set_color(e.u, e.v, e.g);
    if (!ec.complete()) throw format_error("edge coloring does not cover all pairs of K_n");
    return ec;
}

std::string EdgeColoring::to_text() const {
    std::ostringstream out;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) out << u << " " << v << " " << color(u, v) << "\n";
    return out.str();
}

// ---------------------------------------------------------------- scanners

std::optional<std::pair<Cube, int>> scan_for_mono_cube(const Coloring& col, int m,
                                                       bool distinct_sums) {
    if (m < 1) throw parameter_error("cube dimension must be >= 1");
    std::vector<int64_t> mus(static_cast<size_t>(m));
    std::optional<std::pair<Cube, int>> found;

    // Nondecreasing increment tuples; cube elements are invariant under
    // permuting increments, so this order is canonical and complete.
    std::function<bool(int64_t, int, int64_t, int64_t)> gen =
        [&](int64_t beta, int depth, int64_t min_mu, int64_t sum) -> bool {
        if (depth == m) {
            Cube cube(beta, mus);
            if (distinct_sums && !cube_has_distinct_sums(cube)) return false;
            if (auto g = is_monochromatic(col, cube)) {
                found = {cube, *g};
                return true;
            }
            return false;
        }
        for (int64_t mu = min_mu; beta + sum + mu <= col.hi(); ++mu) {
            mus[static_cast<size_t>(depth)] = mu;
            if (gen(beta, depth + 1, mu, sum + mu)) return true;
        }
        return false;
    };

    for (int64_t beta = col.lo; beta <= col.hi(); ++beta)
        if (gen(beta, 0, 1, 0)) break;
    return found;
}

std::optional<std::pair<TripleWitness, int>> scan_for_mono_schur(const Coloring& col,
                                                                 bool strict_distinct) {
    for (int64_t z = col.lo; z <= col.hi(); ++z) {
        for (int64_t x = col.lo; 2 * x <= z; ++x) {
            int64_t y = z - x;
            if (y < col.lo || y > col.hi()) continue;
            if (strict_distinct && x == y) continue;
            int g = col.at(x);
            if (col.at(y) == g && col.at(z) == g)
                return std::make_pair(TripleWitness{x, y, z}, g);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<ApWitness, int>> scan_for_mono_ap(const Coloring& col, int k) {
    if (k < 2) throw parameter_error("AP length must be >= 2");
    for (int64_t start = col.lo; start <= col.hi(); ++start) {
        for (int64_t step = 1; start + static_cast<int64_t>(k - 1) * step <= col.hi(); ++step) {
            int g = col.at(start);
            bool mono = true;
            for (int i = 1; i < k; ++i)
                if (col.at(start + i * step) != g) {
                    mono = false;
                    break;
                }
            if (mono) return std::make_pair(ApWitness{start, step, k}, g);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<CliqueWitness, int>> scan_for_mono_clique(const EdgeColoring& ec, int m) {
    if (m < 2) throw parameter_error("clique size must be >= 2");
    if (m > ec.n) return std::nullopt;
    std::vector<int> verts(static_cast<size_t>(m));
    std::function<std::optional<int>(int, int)> gen = [&](int depth, int next) -> std::optional<int> {
        if (depth == m) {
            int g = ec.color(verts[0], verts[1]);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (ec.color(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]) != g)
                        return std::nullopt;
            return g;
        }
        for (int v = next; v <= ec.n - (m - depth - 1); ++v) {
            verts[static_cast<size_t>(depth)] = v;
            if (auto g = gen(depth + 1, v + 1)) return g;
        }
        return std::nullopt;
    };
    // gen leaves the witness in verts when it succeeds
    if (auto g = gen(0, 1)) return std::make_pair(CliqueWitness{verts}, *g);
    return std::nullopt;
}

// ---------------------------------------------------------------- verification

namespace {

bool verify_mono_cube(const Certificate& cert, const VerifyContext& ctx) {
    if (!ctx.coloring || !cert.color) return false;
    const auto& cube = std::get<Cube>(cert.payload);
    try {
        return is_monochromatic(*ctx.coloring, cube) == cert.color;
    } catch (const domain_error&) {
        return false;
    }
}

bool verify_mono_triple(const Certificate& cert, const VerifyContext& ctx) {
    if (!ctx.coloring || !cert.color) return false;
    const auto& t = std::get<TripleWitness>(cert.payload);
    const Coloring& col = *ctx.coloring;
    if (t.x + t.y != t.z || t.x > t.y) return false;
    if (!col.contains(t.x) || !col.contains(t.y) || !col.contains(t.z)) return false;
    int g = *cert.color;
    return col.at(t.x) == g && col.at(t.y) == g && col.at(t.z) == g;
}

bool verify_mono_ap(const Certificate& cert, const VerifyContext& ctx) {
    if (!ctx.coloring || !cert.color) return false;
    const auto& ap = std::get<ApWitness>(cert.payload);
    if (ap.length < 2 || ap.step < 1) return false;
    for (int i = 0; i < ap.length; ++i) {
        int64_t x = ap.start + static_cast<int64_t>(i) * ap.step;
        if (!ctx.coloring->contains(x) || ctx.coloring->at(x) != *cert.color) return false;
    }
    return true;
}

bool verify_mono_clique(const Certificate& cert, const VerifyContext& ctx) {
    if (!ctx.edges || !cert.color) return false;
    const auto& w = std::get<CliqueWitness>(cert.payload);
    if (w.vertices.size() < 2) return false;
    auto verts = w.vertices;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
    for (int v : verts)
        if (v < 1 || v > ctx.edges->n) return false;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (ctx.edges->color(verts[i], verts[j]) != *cert.color) return false;
    return true;
}

bool verify_avoiding(const Certificate& cert) {
    const auto& av = std::get<AvoidingPayload>(cert.payload);
    switch (av.target.kind) {
        case AvoidTarget::Kind::cube:
            if (!av.coloring) throw format_error("avoiding-cube certificate lacks a coloring");
            return !scan_for_mono_cube(*av.coloring, av.target.m, av.target.distinct_sums);
        case AvoidTarget::Kind::schur_triple:
            if (!av.coloring) throw format_error("avoiding-schur certificate lacks a coloring");
            return !scan_for_mono_schur(*av.coloring, av.target.strict_distinct);
        case AvoidTarget::Kind::ap:
            if (!av.coloring) throw format_error("avoiding-ap certificate lacks a coloring");
            return !scan_for_mono_ap(*av.coloring, av.target.m);
        case AvoidTarget::Kind::clique:
            if (!av.edges) throw format_error("avoiding-clique certificate lacks an edge coloring");
            if (!av.edges->complete()) throw format_error("incomplete edge coloring in certificate");
            return !scan_for_mono_clique(*av.edges, av.target.m);
    }
    throw format_error("unknown avoid target");
}

}  // namespace

bool verify_certificate(const Certificate& cert, const VerifyContext& ctx) {
    switch (cert.kind) {
        case CertKind::mono_cube: return verify_mono_cube(cert, ctx);
        case CertKind::mono_triple: return verify_mono_triple(cert, ctx);
        case CertKind::mono_ap: return verify_mono_ap(cert, ctx);
        case CertKind::mono_clique: return verify_mono_clique(cert, ctx);
        case CertKind::avoiding_coloring: return verify_avoiding(cert);
    }
    throw format_error("unknown certificate kind");
}

// ---------------------------------------------------------------- JSON

std::string cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::mono_cube: return "mono-cube";
        case CertKind::mono_triple: return "mono-triple";
        case CertKind::mono_ap: return "mono-ap";
        case CertKind::mono_clique: return "mono-clique";
        case CertKind::avoiding_coloring: return "avoiding-coloring";
    }
    throw format_error("unknown certificate kind");
}

CertKind cert_kind_from_name(const std::string& name) {
    if (name == "mono-cube") return CertKind::mono_cube;
    if (name == "mono-triple") return CertKind::mono_triple;
    if (name == "mono-ap") return CertKind::mono_ap;
    if (name == "mono-clique") return CertKind::mono_clique;
    if (name == "avoiding-coloring") return CertKind::avoiding_coloring;
    throw format_error("unknown certificate kind: " + name);
}

namespace {

json coloring_to_json(const Coloring& col) {
    return json{{"c", col.c}, {"lo", col.lo}, {"colors", col.colors}};
}

Coloring coloring_from_json(const json& j) {
    return Coloring(j.at("lo").get<int64_t>(), j.at("c").get<int>(),
                    j.at("colors").get<std::vector<int>>());
}

json edges_to_json(const EdgeColoring& ec) {
    json edges = json::array();
    for (int v = 2; v <= ec.n; ++v)
        for (int u = 1; u < v; ++u) edges.push_back({u, v, ec.color(u, v)});
    return json{{"n", ec.n}, {"c", ec.c}, {"edges", edges}};
}

EdgeColoring edges_from_json(const json& j) {
    EdgeColoring ec(j.at("n").get<int>(), j.at("c").get<int>());
    for (const auto& e : j.at("edges"))
        ec.set_color(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    if (!ec.complete()) throw format_error("incomplete edge coloring in JSON");
    return ec;
}

std::string target_kind_name(AvoidTarget::Kind k) {
    switch (k) {
        case AvoidTarget::Kind::cube: return "cube";
        case AvoidTarget::Kind::schur_triple: return "schur-triple";
        case AvoidTarget::Kind::ap: return "ap";
        case AvoidTarget::Kind::clique: return "clique";
    }
    throw format_error("unknown avoid target");
}

AvoidTarget::Kind target_kind_from_name(const std::string& s) {
    if (s == "cube") return AvoidTarget::Kind::cube;
    if (s == "schur-triple") return AvoidTarget::Kind::schur_triple;
    if (s == "ap") return AvoidTarget::Kind::ap;
    if (s == "clique") return AvoidTarget::Kind::clique;
    throw format_error("unknown avoid target: " + s);
}

}  // namespace

std::string Certificate::to_json() const {
    json j;
    j["kind"] = cert_kind_name(kind);
    if (color) j["color"] = *color;
    json p;
    switch (kind) {
        case CertKind::mono_cube: {
            const auto& cube = std::get<Cube>(payload);
            p["base"] = cube.base;
            p["increments"] = cube.increments;
            break;
        }
        case CertKind::mono_triple: {
            const auto& t = std::get<TripleWitness>(payload);
            p["x"] = t.x;
            p["y"] = t.y;
            p["z"] = t.z;
            break;
        }
        case CertKind::mono_ap: {
            const auto& ap = std::get<ApWitness>(payload);
            p["start"] = ap.start;
            p["step"] = ap.step;
            p["length"] = ap.length;
            break;
        }
        case CertKind::mono_clique: {
            p["vertices"] = std::get<CliqueWitness>(payload).vertices;
            break;
        }
        case CertKind::avoiding_coloring: {
            const auto& av = std::get<AvoidingPayload>(payload);
            p["structure"] = target_kind_name(av.target.kind);
            if (av.target.kind == AvoidTarget::Kind::ap)
                p["k"] = av.target.m;
            else if (av.target.kind != AvoidTarget::Kind::schur_triple)
                p["m"] = av.target.m;
            if (av.target.kind == AvoidTarget::Kind::cube)
                p["distinct_sums"] = av.target.distinct_sums;
            if (av.target.kind == AvoidTarget::Kind::schur_triple)
                p["strict_distinct"] = av.target.strict_distinct;
            if (av.coloring) p["coloring"] = coloring_to_json(*av.coloring);
            if (av.edges) p["edge_coloring"] = edges_to_json(*av.edges);
            break;
        }
    }
    j["payload"] = p;
    return j.dump();
}

Certificate Certificate::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw format_error(std::string("bad certificate JSON: ") + e.what());
    }
    try {
        Certificate cert;
        cert.kind = cert_kind_from_name(j.at("kind").get<std::string>());
        if (j.contains("color")) cert.color = j.at("color").get<int>();
        const json& p = j.at("payload");
        switch (cert.kind) {
            case CertKind::mono_cube:
                cert.payload = Cube(p.at("base").get<int64_t>(),
                                    p.at("increments").get<std::vector<int64_t>>());
                break;
            case CertKind::mono_triple:
                cert.payload = TripleWitness{p.at("x").get<int64_t>(), p.at("y").get<int64_t>(),
                                             p.at("z").get<int64_t>()};
                break;
            case CertKind::mono_ap:
                cert.payload = ApWitness{p.at("start").get<int64_t>(), p.at("step").get<int64_t>(),
                                         p.at("length").get<int>()};
                break;
            case CertKind::mono_clique:
                cert.payload = CliqueWitness{p.at("vertices").get<std::vector<int>>()};
                break;
            case CertKind::avoiding_coloring: {
                AvoidingPayload av;
                av.target.kind = target_kind_from_name(p.at("structure").get<std::string>());
                if (p.contains("m")) av.target.m = p.at("m").get<int>();
                if (p.contains("k")) av.target.m = p.at("k").get<int>();
                if (p.contains("distinct_sums")) av.target.distinct_sums = p.at("distinct_sums").get<bool>();
                if (p.contains("strict_distinct"))
                    av.target.strict_distinct = p.at("strict_distinct").get<bool>();
                if (p.contains("coloring")) av.coloring = coloring_from_json(p.at("coloring"));
                if (p.contains("edge_coloring")) av.edges = edges_from_json(p.at("edge_coloring"));
                cert.payload = av;
                break;
            }
        }
        return cert;
    } catch (const json::exception& e) {
        throw format_error(std::string("malformed certificate payload: ") + e.what());
    }
}

}  // namespace hilab

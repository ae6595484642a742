// Command-line front end: build planes over GF(q) x GF(q), run the
// verification suite, query neighbourhoods and reduction splits, export
// planes and graphs.
//
// Exit codes: 0 success, 1 failed claim, 2 usage error, 3 capacity error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringplane/ringplane.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaim = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

constexpr unsigned kDefaultMaxQ = 31;

struct Cfg {
    std::uint64_t q = 0;
    unsigned p = 0;
    unsigned n = 0;
    std::uint64_t max_points = ringplane::kDefaultMaxPlanePoints;
    std::string depth = "fast";
    std::string format;
    std::string out;
    std::string point = "(1,0,0)";
    std::string tag = "hat";
    std::string what = "plane";
};

unsigned max_q_cap() {
    if (const char* env = std::getenv("RINGPLANE_MAX_Q")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v < 2)
            throw std::domain_error("RINGPLANE_MAX_Q must be an integer >= 2");
        return static_cast<unsigned>(v);
    }
    return kDefaultMaxQ;
}

ringplane::GaloisField make_field(const Cfg& cfg) {
    unsigned p = 0, n = 0;
    if (cfg.q != 0) {
        if (cfg.p != 0 || cfg.n != 0)
            throw std::domain_error("give either --q or --p/--n, not both");
        if (!ringplane::factor_prime_power(cfg.q, p, n))
            throw std::domain_error("q=" + std::to_string(cfg.q) + " is not a prime power");
    } else {
        if (cfg.p == 0 || cfg.n == 0)
            throw std::domain_error("either --q or both --p and --n are required");
        p = cfg.p;
        n = cfg.n;
    }
    const unsigned cap = max_q_cap();
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > cap)
            throw ringplane::capacity_error("q exceeds the configured maximum " +
                                            std::to_string(cap) +
                                            " (override with RINGPLANE_MAX_Q)");
    }
    return ringplane::GaloisField(p, n);
}

ringplane::VerifyDepth parse_depth(const std::string& s) {
    if (s == "fast") return ringplane::VerifyDepth::Fast;
    if (s == "definitional") return ringplane::VerifyDepth::Definitional;
    if (s == "oracle") return ringplane::VerifyDepth::Oracle;
    throw std::domain_error("--depth must be fast, definitional or oracle");
}

ringplane::HomTag parse_tag(const std::string& s) {
    if (s == "hat") return ringplane::HomTag::Hat;
    if (s == "tilde") return ringplane::HomTag::Tilde;
    throw std::domain_error("--tag must be hat or tilde");
}

std::string pick_format(const Cfg& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

void emit(const Cfg& cfg, const std::string& content) {
    if (cfg.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << content;
}

int cmd_stats(const Cfg& cfg) {
    const ringplane::GaloisField gf = make_field(cfg);
    const auto rep = ringplane::compute_stats(gf, cfg.max_points);
    const std::string format = pick_format(cfg, "text");
    if (format == "text") emit(cfg, rep.to_text());
    else if (format == "json") emit(cfg, rep.to_json().dump(2) + "\n");
    else throw std::domain_error("stats supports --format text or json");
    return rep.all_match() ? kExitOk : kExitClaim;
}

int cmd_verify(const Cfg& cfg) {
    const ringplane::GaloisField gf = make_field(cfg);
    const auto rep = ringplane::run_verify(gf, parse_depth(cfg.depth), {cfg.max_points, false});
    const std::string format = pick_format(cfg, "text");
    if (format == "text") emit(cfg, rep.to_text());
    else if (format == "json") emit(cfg, rep.to_json().dump(2) + "\n");
    else throw std::domain_error("verify supports --format text or json");
    return rep.all_pass() ? kExitOk : kExitClaim;
}

int cmd_neighbours(const Cfg& cfg) {
    const ringplane::GaloisField gf = make_field(cfg);
    const ringplane::Plane pl(gf, {cfg.max_points, false});
    const ringplane::Triple t = ringplane::parse_triple(pl.ring(), cfg.point);
    const ringplane::PointIndex a = pl.point_index(t);
    const std::vector<ringplane::PointIndex> nb = ringplane::neighbourhood(pl, a);

    const std::string format = pick_format(cfg, "text");
    if (format == "text") {
        std::string out = "# q=" + std::to_string(gf.q()) +
                          " point=" + render_triple(pl.ring(), pl.point(a)) +
                          " neighbours=" + std::to_string(nb.size()) + "\n";
        for (ringplane::PointIndex b : nb)
            out += std::to_string(b) + " " + render_triple(pl.ring(), pl.point(b)) + "\n";
        emit(cfg, out);
    } else if (format == "json") {
        ringplane::ordered_json j;
        j["q"] = gf.q();
        j["point"] = render_triple(pl.ring(), pl.point(a));
        j["point_index"] = a;
        j["count"] = nb.size();
        ringplane::ordered_json arr = ringplane::ordered_json::array();
        for (ringplane::PointIndex b : nb)
            arr.push_back({{"index", b}, {"point", render_triple(pl.ring(), pl.point(b))}});
        j["neighbours"] = arr;
        emit(cfg, j.dump(2) + "\n");
    } else if (format == "csv") {
        std::string out = "index,c1a,c1b,c2a,c2b,c3a,c3b\n";
        for (ringplane::PointIndex b : nb) {
            const ringplane::Triple x = pl.point(b);
            out += std::to_string(b);
            for (const auto& c : x)
                out += "," + std::to_string(c.a) + "," + std::to_string(c.b);
            out += "\n";
        }
        emit(cfg, out);
    } else {
        throw std::domain_error("neighbours supports --format text, json or csv");
    }
    return kExitOk;
}

int cmd_hom(const Cfg& cfg) {
    const ringplane::GaloisField gf = make_field(cfg);
    const ringplane::Plane pl(gf, {cfg.max_points, false});
    const ringplane::Triple t = ringplane::parse_triple(pl.ring(), cfg.point);
    const ringplane::PointIndex a = pl.point_index(t);
    const ringplane::NeighbourSplit split =
        ringplane::neighbourhood_split(pl, a, parse_tag(cfg.tag));

    const std::string format = pick_format(cfg, "json");
    if (format == "json") {
        emit(cfg, export_split_json(pl, split));
    } else if (format == "dot") {
        emit(cfg, export_split_dot(pl, split));
    } else if (format == "text") {
        std::string out = "point " + render_triple(pl.ring(), pl.point(a)) + " tag=" + cfg.tag +
                          " image=" + ringplane::render_pg_triple(pl.pg().point(split.image)) + "\n";
        out += "merged (" + std::to_string(split.merged.size()) + "):\n";
        for (ringplane::PointIndex b : split.merged)
            out += "  " + render_triple(pl.ring(), pl.point(b)) + "\n";
        out += "spread (" + std::to_string(split.spread.size()) + "):\n";
        for (const auto& [b, img] : split.spread)
            out += "  " + render_triple(pl.ring(), pl.point(b)) + " -> " +
                   ringplane::render_pg_triple(pl.pg().point(img)) + "\n";
        emit(cfg, out);
    } else {
        throw std::domain_error("hom supports --format json, dot or text");
    }
    return kExitOk;
}

int cmd_export(const Cfg& cfg) {
    const ringplane::GaloisField gf = make_field(cfg);
    const ringplane::Plane pl(gf, {cfg.max_points, false});
    if (cfg.what == "plane") {
        const std::string format = pick_format(cfg, "json");
        if (format == "json") emit(cfg, export_plane_json(pl));
        else if (format == "csv") emit(cfg, export_incidence_csv(pl));
        else throw std::domain_error("export plane supports --format json or csv");
    } else if (cfg.what == "graph") {
        const ringplane::NeighbourGraph g = neighbour_graph(pl);
        const std::string format = pick_format(cfg, "dot");
        if (format == "dot") emit(cfg, export_graph_dot(pl, g, true));
        else if (format == "json") emit(cfg, export_graph_json(pl, g));
        else if (format == "csv") emit(cfg, export_edges_csv(g));
        else throw std::domain_error("export graph supports --format dot, json or csv");
    } else if (cfg.what == "hom") {
        const ringplane::Triple t = ringplane::parse_triple(pl.ring(), cfg.point);
        const ringplane::NeighbourSplit split =
            ringplane::neighbourhood_split(pl, pl.point_index(t), parse_tag(cfg.tag));
        const std::string format = pick_format(cfg, "json");
        if (format == "json") emit(cfg, export_split_json(pl, split));
        else if (format == "dot") emit(cfg, export_split_dot(pl, split));
        else throw std::domain_error("export hom supports --format json or dot");
    } else {
        throw std::domain_error("--what must be plane, graph or hom");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective plane over the double numbers GF(q) x GF(q): "
                 "enumeration, neighbour/distant structure, reductions onto PG(2,q)"};
    app.require_subcommand(1);

    Cfg cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "field order q = p^n (prime power)");
        sub->add_option("--p", cfg.p, "field characteristic (with --n)");
        sub->add_option("--n", cfg.n, "extension degree (with --p)");
        sub->add_option("--max-points", cfg.max_points,
                        "bound on (q^2+q+1)^2 for full materialization")
            ->capture_default_str();
        sub->add_option("--format", cfg.format, "output format");
        sub->add_option("--out", cfg.out, "output file (default: stdout)");
    };

    CLI::App* stats = app.add_subcommand("stats", "enumerated counts with closed-form checks");
    add_common(stats);

    CLI::App* verify = app.add_subcommand("verify", "run the claim suite, one line per claim");
    add_common(verify);
    verify->add_option("--depth", cfg.depth, "fast | definitional | oracle (oracle: q <= 5)")
        ->capture_default_str();

    CLI::App* neighbours = app.add_subcommand("neighbours", "list the neighbourhood of a point");
    add_common(neighbours);
    neighbours->add_option("--point", cfg.point, "point triple, e.g. \"(1,0,0)\" or \"([1,1],[0,1],[0,0])\"")
        ->capture_default_str();

    CLI::App* hom = app.add_subcommand("hom", "merged/spread split of a neighbourhood");
    add_common(hom);
    hom->add_option("--point", cfg.point, "point triple")->capture_default_str();
    hom->add_option("--tag", cfg.tag, "hat | tilde")->capture_default_str();

    CLI::App* exp = app.add_subcommand("export", "write plane, graph or split files");
    add_common(exp);
    exp->add_option("--what", cfg.what, "plane | graph | hom")->capture_default_str();
    exp->add_option("--point", cfg.point, "point triple (what=hom)")->capture_default_str();
    exp->add_option("--tag", cfg.tag, "hat | tilde (what=hom)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(stats)) return cmd_stats(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(neighbours)) return cmd_neighbours(cfg);
        if (app.got_subcommand(hom)) return cmd_hom(cfg);
        if (app.got_subcommand(exp)) return cmd_export(cfg);
        std::cerr << "usage error: no subcommand given\n";
        return kExitUsage;
    } catch (const ringplane::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

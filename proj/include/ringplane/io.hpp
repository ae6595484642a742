#pragma once

#include <cctype>
#include <charconv>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ringplane/hom.hpp"
#include "ringplane/neighbour.hpp"
#include "ringplane/plane.hpp"

namespace ringplane {

using ordered_json = nlohmann::ordered_json;

inline std::string render_element(const DoubleRing& ring, DoubleNumber x) {
    return ring.to_string(x);
}

inline std::string render_triple(const DoubleRing& ring, const Triple& t) {
    return "(" + ring.to_string(t[0]) + "," + ring.to_string(t[1]) + "," + ring.to_string(t[2]) + ")";
}

inline std::string render_pg_triple(const PgTriple& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline void expect(std::string_view s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c)
        throw std::domain_error(std::string("point text: expected '") + c + "' at position " +
                                std::to_string(pos));
    ++pos;
}

inline FieldElem parse_field_elem(const GaloisField& gf, std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
        throw std::domain_error("point text: expected an integer at position " + std::to_string(start));
    std::uint64_t v = 0;
    std::from_chars(s.data() + start, s.data() + pos, v);
    if (v >= gf.q())
        throw std::domain_error("point text: field component " + std::to_string(v) +
                                " out of range for q=" + std::to_string(gf.q()));
    return static_cast<FieldElem>(v);
}

} // namespace detail

// Element grammar, whitespace-tolerant:
//   "[a,b]"        component pair, 0 <= a,b < q
//   "k"            bare integer, embedded as k*[1,1]; "k+e" / "k-e" also allowed
//   "e"            the idempotent [0,1]; "e+k" / "e-k" also allowed
inline DoubleNumber parse_element(const DoubleRing& ring, std::string_view s, std::size_t& pos) {
    const GaloisField& gf = ring.field();
    detail::skip_ws(s, pos);
    if (pos >= s.size())
        throw std::domain_error("point text: expected a ring element at position " + std::to_string(pos));
    if (s[pos] == '[') {
        ++pos;
        const FieldElem a = detail::parse_field_elem(gf, s, pos);
        detail::expect(s, pos, ',');
        const FieldElem b = detail::parse_field_elem(gf, s, pos);
        detail::expect(s, pos, ']');
        return {a, b};
    }
    if (s[pos] == 'e') {
        ++pos;
        DoubleNumber v = ring.e();
        detail::skip_ws(s, pos);
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            const char op = s[pos];
            ++pos;
            const DoubleNumber k = ring.embed(detail::parse_field_elem(gf, s, pos));
            v = op == '+' ? ring.add(v, k) : ring.sub(v, k);
        }
        return v;
    }
    DoubleNumber v = ring.embed(detail::parse_field_elem(gf, s, pos));
    detail::skip_ws(s, pos);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        const char op = s[pos];
        std::size_t mark = pos;
        ++pos;
        detail::skip_ws(s, pos);
        if (pos < s.size() && s[pos] == 'e') {
            ++pos;
            v = op == '+' ? ring.add(v, ring.e()) : ring.sub(v, ring.e());
        } else {
            pos = mark; // the sign belongs to the surrounding context
        }
    }
    return v;
}

inline Triple parse_triple(const DoubleRing& ring, std::string_view s) {
    std::size_t pos = 0;
    detail::expect(s, pos, '(');
    Triple t;
    t[0] = parse_element(ring, s, pos);
    detail::expect(s, pos, ',');
    t[1] = parse_element(ring, s, pos);
    detail::expect(s, pos, ',');
    t[2] = parse_element(ring, s, pos);
    detail::expect(s, pos, ')');
    detail::skip_ws(s, pos);
    if (pos != s.size())
        throw std::domain_error("point text: unexpected trailing characters at position " +
                                std::to_string(pos));
    return t;
}

namespace detail {

inline ordered_json triple_json(const Triple& t) {
    ordered_json j = ordered_json::array();
    for (const DoubleNumber& c : t) j.push_back({c.a, c.b});
    return j;
}

inline Triple triple_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::runtime_error("plane json: a triple must be an array of three pairs");
    Triple t;
    for (unsigned k = 0; k < 3; ++k) {
        const auto& c = j[k];
        if (!c.is_array() || c.size() != 2)
            throw std::runtime_error("plane json: a ring element must be a pair");
        t[k] = {c[0].get<FieldElem>(), c[1].get<FieldElem>()};
    }
    return t;
}

} // namespace detail

inline ordered_json plane_to_json(const Plane& pl) {
    ordered_json j;
    j["q"] = pl.field().q();
    j["p"] = pl.field().p();
    j["n"] = pl.field().n();
    j["modulus_poly"] = pl.field().modulus_string();
    ordered_json points = ordered_json::array();
    for (PointIndex i = 0; i < pl.point_count(); ++i)
        points.push_back(detail::triple_json(pl.point(i)));
    j["points"] = points;
    ordered_json lines = ordered_json::array();
    for (LineIndex i = 0; i < pl.line_count(); ++i)
        lines.push_back(detail::triple_json(pl.line(i)));
    j["lines"] = lines;
    const auto [one, two] = pl.point_type_counts();
    j["counts"] = {{"total", pl.point_count()},
                   {"type_i", one},
                   {"type_ii", two},
                   {"per_line", pl.points_on_line(0).size()}};
    return j;
}

inline std::string export_plane_json(const Plane& pl) { return plane_to_json(pl).dump(2) + "\n"; }

// Rebuilds the plane named by the header fields and verifies the stored
// lists against the reconstruction, so a loaded plane always equals the
// exported one.
inline std::unique_ptr<Plane> load_plane_json(const std::string& text,
                                              const Plane::Options& opt = {}) {
    const ordered_json j = ordered_json::parse(text);
    const unsigned p = j.at("p").get<unsigned>();
    const unsigned n = j.at("n").get<unsigned>();
    auto pl = std::make_unique<Plane>(p, n, opt);
    if (j.at("q").get<FieldElem>() != pl->field().q())
        throw std::runtime_error("plane json: q does not match p^n");
    if (j.at("modulus_poly").get<std::string>() != pl->field().modulus_string())
        throw std::runtime_error("plane json: modulus polynomial mismatch");
    const auto& points = j.at("points");
    const auto& lines = j.at("lines");
    if (points.size() != pl->point_count() || lines.size() != pl->line_count())
        throw std::runtime_error("plane json: point/line count mismatch");
    for (PointIndex i = 0; i < pl->point_count(); ++i) {
        if (detail::triple_from_json(points[i]) != pl->point(i))
            throw std::runtime_error("plane json: point " + std::to_string(i) +
                                     " differs from the canonical enumeration");
        if (detail::triple_from_json(lines[i]) != pl->line(i))
            throw std::runtime_error("plane json: line " + std::to_string(i) +
                                     " differs from the canonical enumeration");
    }
    return pl;
}

inline std::string export_incidence_csv(const Plane& pl) {
    std::string out = "line_index,point_index\n";
    for (LineIndex l = 0; l < pl.line_count(); ++l)
        for (PointIndex x : pl.points_on_line(l))
            out += std::to_string(l) + "," + std::to_string(x) + "\n";
    return out;
}

inline ordered_json graph_to_json(const Plane& pl, const NeighbourGraph& g) {
    ordered_json j;
    j["q"] = pl.field().q();
    j["vertices"] = g.vertex_count;
    j["edges"] = g.edges.size();
    ordered_json adj = ordered_json::array();
    for (PointIndex v = 0; v < g.vertex_count; ++v) adj.push_back(neighbourhood(pl, v));
    j["adjacency"] = adj;
    return j;
}

inline std::string export_graph_json(const Plane& pl, const NeighbourGraph& g) {
    return graph_to_json(pl, g).dump(2) + "\n";
}

inline std::string export_graph_dot(const Plane& pl, const NeighbourGraph& g,
                                    bool colour_by_type = false) {
    std::ostringstream os;
    os << "graph neighbour_graph {\n";
    os << "  // q=" << pl.field().q() << " vertices=" << g.vertex_count
       << " edges=" << g.edges.size() << "\n";
    os << "  node [shape=circle];\n";
    for (PointIndex v = 0; v < g.vertex_count; ++v) {
        os << "  n" << v << " [label=\"" << render_triple(pl.ring(), pl.point(v)) << "\"";
        if (colour_by_type)
            os << ",style=filled,fillcolor="
               << (pl.point_type(v) == PointType::TypeII ? "\"lightblue\"" : "\"white\"");
        os << "];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e[0] << " -- n" << e[1] << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string export_edges_csv(const NeighbourGraph& g) {
    std::string out = "source,target\n";
    for (const auto& e : g.edges) out += std::to_string(e[0]) + "," + std::to_string(e[1]) + "\n";
    return out;
}

inline ordered_json split_to_json(const Plane& pl, const NeighbourSplit& s) {
    ordered_json j;
    j["q"] = pl.field().q();
    j["point"] = render_triple(pl.ring(), pl.point(s.point));
    j["point_index"] = s.point;
    j["tag"] = s.tag == HomTag::Hat ? "hat" : "tilde";
    j["image"] = render_pg_triple(pl.pg().point(s.image));
    j["image_index"] = s.image;
    ordered_json merged = ordered_json::array();
    for (PointIndex b : s.merged)
        merged.push_back({{"index", b}, {"point", render_triple(pl.ring(), pl.point(b))}});
    j["merged"] = merged;
    ordered_json spread = ordered_json::array();
    for (const auto& [b, img] : s.spread)
        spread.push_back({{"index", b},
                          {"point", render_triple(pl.ring(), pl.point(b))},
                          {"image_index", img},
                          {"image", render_pg_triple(pl.pg().point(img))}});
    j["spread"] = spread;
    return j;
}

inline std::string export_split_json(const Plane& pl, const NeighbourSplit& s) {
    return split_to_json(pl, s).dump(2) + "\n";
}

// Bipartite view of a split: neighbourhood on the left, PG(2,q) on the
// right, one edge per spread assignment; merged neighbours are filled.
inline std::string export_split_dot(const Plane& pl, const NeighbourSplit& s) {
    std::ostringstream os;
    const char* tag = s.tag == HomTag::Hat ? "hat" : "tilde";
    os << "graph neighbourhood_split {\n";
    os << "  // point=" << render_triple(pl.ring(), pl.point(s.point)) << " tag=" << tag
       << " image=" << render_pg_triple(pl.pg().point(s.image)) << "\n";
    os << "  rankdir=LR;\n";
    os << "  subgraph cluster_neighbourhood {\n    label=\"neighbourhood\";\n";
    for (PointIndex b : s.merged)
        os << "    n" << b << " [label=\"" << render_triple(pl.ring(), pl.point(b))
           << "\",style=filled,fillcolor=\"gray\"];\n";
    for (const auto& [b, img] : s.spread)
        os << "    n" << b << " [label=\"" << render_triple(pl.ring(), pl.point(b)) << "\"];\n";
    os << "  }\n";
    os << "  subgraph cluster_image {\n    label=\"PG(2," << pl.field().q() << ")\";\n";
    for (PgIndex i = 0; i < pl.pg().size(); ++i) {
        os << "    p" << i << " [label=\"" << render_pg_triple(pl.pg().point(i)) << "\"";
        if (i == s.image) os << ",style=filled,fillcolor=\"gray\"";
        os << "];\n";
    }
    os << "  }\n";
    for (PointIndex b : s.merged) os << "  n" << b << " -- p" << s.image << " [style=dashed];\n";
    for (const auto& [b, img] : s.spread) os << "  n" << b << " -- p" << img << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ringplane

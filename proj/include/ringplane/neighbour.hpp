#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "ringplane/plane.hpp"

namespace ringplane {

// Two distinct points are neighbours when joined by at least two lines
// (always exactly q+1 here) and distant when joined by exactly one.
enum class RelationKind { Identical, Neighbour, Distant };

struct Relation {
    RelationKind kind;
    std::uint32_t joining_line_count;
};

// Fast predicate: neighbours share exactly one of the two projection images,
// distant points share none, identical points both.
inline Relation relate(const Plane& pl, PointIndex a, PointIndex b) {
    const auto [ha, ta] = pl.point_images(a);
    const auto [hb, tb] = pl.point_images(b);
    const FieldElem q = pl.field().q();
    const unsigned shared = unsigned(ha == hb) + unsigned(ta == tb);
    if (shared == 2) return {RelationKind::Identical, (q + 1) * (q + 1)};
    if (shared == 1) return {RelationKind::Neighbour, q + 1};
    return {RelationKind::Distant, 1};
}

// All lines incident with both points, by full scan over the line list.
inline std::vector<LineIndex> joining_lines(const Plane& pl, PointIndex a, PointIndex b) {
    if (a == b)
        throw std::domain_error("joining_lines: the relation is defined for distinct points");
    const Triple at = pl.point(a);
    const Triple bt = pl.point(b);
    std::vector<LineIndex> out;
    for (LineIndex l = 0; l < pl.line_count(); ++l) {
        const Triple lt = pl.line(l);
        if (Plane::incident_triples(pl.ring(), lt, at) &&
            Plane::incident_triples(pl.ring(), lt, bt))
            out.push_back(l);
    }
    return out;
}

// Definitional route: classify by counting joining lines.
inline Relation relate_definitional(const Plane& pl, PointIndex a, PointIndex b) {
    const Triple at = pl.point(a);
    const Triple bt = pl.point(b);
    std::uint32_t count = 0;
    for (LineIndex l = 0; l < pl.line_count(); ++l) {
        const Triple lt = pl.line(l);
        if (Plane::incident_triples(pl.ring(), lt, at) &&
            Plane::incident_triples(pl.ring(), lt, bt))
            ++count;
    }
    if (a == b) return {RelationKind::Identical, count};
    if (count == 1) return {RelationKind::Distant, count};
    return {RelationKind::Neighbour, count};
}

// The 2q(q+1) neighbours of a point: vary one projection image while the
// other is held fixed. Sorted ascending.
inline std::vector<PointIndex> neighbourhood(const Plane& pl, PointIndex a) {
    const auto [h, t] = pl.point_images(a);
    const PgIndex npg = pl.pg().size();
    std::vector<PointIndex> out;
    out.reserve(2 * std::size_t(npg - 1));
    for (PgIndex j = 0; j < npg; ++j)
        if (j != t) out.push_back(pl.point_from_images(h, j));
    for (PgIndex i = 0; i < npg; ++i)
        if (i != h) out.push_back(pl.point_from_images(i, t));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<PointIndex> common_neighbours(const Plane& pl, PointIndex a, PointIndex b) {
    if (a == b)
        throw std::domain_error("common_neighbours: arguments must be distinct");
    const std::vector<PointIndex> na = neighbourhood(pl, a);
    const std::vector<PointIndex> nb = neighbourhood(pl, b);
    std::vector<PointIndex> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

// Number of neighbours of p lying on an incident line l; always 2q.
inline std::uint32_t line_neighbour_profile(const Plane& pl, PointIndex p, LineIndex l) {
    if (!pl.incident(l, p))
        throw std::domain_error("line_neighbour_profile: the line must pass through the point");
    const std::vector<PointIndex> on = pl.points_on_line(l);
    const std::vector<PointIndex> nb = neighbourhood(pl, p);
    std::uint32_t count = 0;
    auto it = on.begin();
    for (PointIndex x : nb) {
        it = std::lower_bound(it, on.end(), x);
        if (it == on.end()) break;
        if (*it == x) ++count;
    }
    return count;
}

// Greedily picks mutually distant points along the line in enumeration
// order, then verifies that the pairwise neighbourhood overlaps of the
// chosen q+1 points account for every remaining point exactly once:
// q+1 + 2*C(q+1,2) = (q+1)^2.
inline bool line_covering_check(const Plane& pl, LineIndex l) {
    const FieldElem q = pl.field().q();
    const std::vector<PointIndex> pts = pl.points_on_line(l);
    std::vector<PointIndex> chosen;
    for (PointIndex p : pts) {
        bool distant_to_all = true;
        for (PointIndex c : chosen)
            if (relate(pl, p, c).kind != RelationKind::Distant) {
                distant_to_all = false;
                break;
            }
        if (distant_to_all) chosen.push_back(p);
    }
    if (chosen.size() != std::size_t(q) + 1) return false;

    std::set<PointIndex> covered(chosen.begin(), chosen.end());
    std::uint64_t overlap_members = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
            const std::vector<PointIndex> cn = common_neighbours(pl, chosen[i], chosen[j]);
            if (cn.size() != 2) return false;
            for (PointIndex p : cn) {
                if (!std::binary_search(pts.begin(), pts.end(), p)) return false;
                if (!covered.insert(p).second) return false; // claimed by two pairs
                ++overlap_members;
            }
        }
    return overlap_members == std::uint64_t(q) * (q + 1) && covered.size() == pts.size();
}

struct NeighbourGraph {
    std::uint32_t vertex_count = 0;
    std::vector<std::array<PointIndex, 2>> edges; // a < b, ascending
    std::vector<std::uint32_t> degrees;
};

inline NeighbourGraph neighbour_graph(const Plane& pl) {
    NeighbourGraph g;
    g.vertex_count = pl.point_count();
    g.degrees.assign(g.vertex_count, 0);
    for (PointIndex v = 0; v < g.vertex_count; ++v) {
        const std::vector<PointIndex> nb = neighbourhood(pl, v);
        g.degrees[v] = static_cast<std::uint32_t>(nb.size());
        for (PointIndex u : nb)
            if (u > v) g.edges.push_back({v, u});
    }
    return g;
}

} // namespace ringplane

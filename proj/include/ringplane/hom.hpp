#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ringplane/neighbour.hpp"
#include "ringplane/plane.hpp"

namespace ringplane {

// The two reductions onto GF(q): Hat kills the ideal <e> = {[0,b]} and keeps
// the first component; Tilde kills <e-1> = {[a,0]} and keeps the second.
enum class HomTag { Hat, Tilde };

inline FieldElem project(HomTag tag, DoubleNumber x) {
    return tag == HomTag::Hat ? x.a : x.b;
}

inline PgTriple project_triple(HomTag tag, const Triple& t) {
    return {project(tag, t[0]), project(tag, t[1]), project(tag, t[2])};
}

// Coordinatewise projection followed by PG-canonicalization; never the zero
// triple for an admissible argument, so the image class always exists.
inline PgTriple project_class(const PgPlane& pg, HomTag tag, const Triple& t) {
    return pg.canonicalize(project_triple(tag, t));
}

// Image of a stored point (or line) class under the chosen reduction.
inline PgIndex image_index(const Plane& pl, HomTag tag, PointIndex i) {
    const auto [h, t] = pl.point_images(i);
    return tag == HomTag::Hat ? h : t;
}

// Under either reduction, half of a neighbourhood merges onto the base
// point's image and the other half spreads bijectively over the remaining
// q(q+1) points of PG(2,q).
struct NeighbourSplit {
    PointIndex point = 0;
    HomTag tag = HomTag::Hat;
    PgIndex image = 0;
    std::vector<PointIndex> merged;                      // image equals the base image
    std::vector<std::pair<PointIndex, PgIndex>> spread;  // neighbour -> its distinct image
};

inline NeighbourSplit neighbourhood_split(const Plane& pl, PointIndex a, HomTag tag) {
    NeighbourSplit s;
    s.point = a;
    s.tag = tag;
    s.image = image_index(pl, tag, a);
    for (PointIndex b : neighbourhood(pl, a)) {
        const PgIndex img = image_index(pl, tag, b);
        if (img == s.image) s.merged.push_back(b);
        else s.spread.push_back({b, img});
    }
    return s;
}

// The role swap between the two reductions: what merges under one is exactly
// what spreads under the other.
inline bool complementarity_check(const Plane& pl, PointIndex a) {
    const NeighbourSplit hat = neighbourhood_split(pl, a, HomTag::Hat);
    const NeighbourSplit tilde = neighbourhood_split(pl, a, HomTag::Tilde);
    auto domain = [](const NeighbourSplit& s) {
        std::vector<PointIndex> d;
        d.reserve(s.spread.size());
        for (const auto& [b, img] : s.spread) d.push_back(b);
        return d;
    };
    return hat.merged == domain(tilde) && tilde.merged == domain(hat);
}

struct FibreGroup {
    PgIndex image = 0;
    std::vector<PointIndex> members;
};

struct LineFibres {
    LineIndex line = 0;
    HomTag tag = HomTag::Hat;
    PgIndex image_line = 0;
    std::vector<FibreGroup> fibres; // ascending by image index
};

// Groups the (q+1)^2 points of a line by their image; the image line has
// q+1 points and every fibre has exactly q+1 members.
inline LineFibres line_fibre_decomposition(const Plane& pl, LineIndex l, HomTag tag) {
    LineFibres f;
    f.line = l;
    f.tag = tag;
    f.image_line = image_index(pl, tag, l);
    std::map<PgIndex, std::vector<PointIndex>> groups;
    for (PointIndex x : pl.points_on_line(l)) groups[image_index(pl, tag, x)].push_back(x);
    for (auto& [img, members] : groups) f.fibres.push_back({img, std::move(members)});
    return f;
}

} // namespace ringplane

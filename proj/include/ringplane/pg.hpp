#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ringplane/gf.hpp"

namespace ringplane {

using PgTriple = std::array<FieldElem, 3>;
using PgIndex = std::uint32_t;

// The ordinary projective plane PG(2,q): q^2+q+1 points and as many lines,
// both enumerated as canonical triples (leftmost nonzero entry scaled to 1)
// in ascending lexicographic order. Incidence is the vanishing dot product,
// which is symmetric, so the per-line point lists double as the per-point
// line lists.
class PgPlane {
public:
    explicit PgPlane(const GaloisField& gf) : gf_(&gf) { build(); }

    const GaloisField& field() const { return *gf_; }

    PgIndex size() const { return static_cast<PgIndex>(points_.size()); }

    const PgTriple& point(PgIndex i) const {
        check_index(i);
        return points_[i];
    }
    const PgTriple& line(PgIndex i) const { return point(i); }

    PgTriple canonicalize(const PgTriple& t) const {
        for (FieldElem c : t) gf_->check(c);
        for (unsigned k = 0; k < 3; ++k) {
            if (t[k] != 0) {
                const FieldElem s = gf_->inv(t[k]);
                return {gf_->mul(s, t[0]), gf_->mul(s, t[1]), gf_->mul(s, t[2])};
            }
        }
        throw std::domain_error("PgPlane: the zero triple has no projective class");
    }

    PgIndex index_of(const PgTriple& t) const {
        const PgTriple c = canonicalize(t);
        const FieldElem q = gf_->q();
        if (c[0] == 1) return 1 + q + c[1] * q + c[2];
        if (c[1] == 1) return 1 + c[2];
        return 0; // (0,0,1)
    }

    bool incident(const PgTriple& l, const PgTriple& x) const { return dot(l, x) == 0; }
    bool incident(PgIndex l, PgIndex x) const { return dot(point(l), point(x)) == 0; }

    PgTriple line_through(const PgTriple& p1, const PgTriple& p2) const {
        const PgTriple cr = cross(p1, p2);
        if (cr[0] == 0 && cr[1] == 0 && cr[2] == 0)
            throw std::domain_error("PgPlane: equal points do not determine a unique line");
        return canonicalize(cr);
    }
    PgIndex line_through(PgIndex a, PgIndex b) const {
        return index_of(line_through(point(a), point(b)));
    }

    const std::vector<PgIndex>& points_on_line(PgIndex l) const {
        check_index(l);
        return on_line_[l];
    }
    const std::vector<PgIndex>& lines_through_point(PgIndex x) const { return points_on_line(x); }

    std::string to_string(const PgTriple& t) const {
        return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + ")";
    }

private:
    const GaloisField* gf_; // must outlive this plane
    std::vector<PgTriple> points_;
    std::vector<std::vector<PgIndex>> on_line_;

    void check_index(PgIndex i) const {
        if (i >= points_.size()) throw std::domain_error("PgPlane: index out of range");
    }

    FieldElem dot(const PgTriple& l, const PgTriple& x) const {
        FieldElem s = gf_->mul(l[0], x[0]);
        s = gf_->add(s, gf_->mul(l[1], x[1]));
        return gf_->add(s, gf_->mul(l[2], x[2]));
    }

    PgTriple cross(const PgTriple& u, const PgTriple& v) const {
        return {gf_->sub(gf_->mul(u[1], v[2]), gf_->mul(u[2], v[1])),
                gf_->sub(gf_->mul(u[2], v[0]), gf_->mul(u[0], v[2])),
                gf_->sub(gf_->mul(u[0], v[1]), gf_->mul(u[1], v[0]))};
    }

    void build() {
        const FieldElem q = gf_->q();
        points_.reserve(std::size_t(q) * q + q + 1);
        points_.push_back({0, 0, 1});
        for (FieldElem z = 0; z < q; ++z) points_.push_back({0, 1, z});
        for (FieldElem y = 0; y < q; ++y)
            for (FieldElem z = 0; z < q; ++z) points_.push_back({1, y, z});

        on_line_.resize(points_.size());
        for (PgIndex l = 0; l < points_.size(); ++l) {
            on_line_[l].reserve(q + 1);
            for (PgIndex x = 0; x < points_.size(); ++x)
                if (dot(points_[l], points_[x]) == 0) on_line_[l].push_back(x);
        }
    }
};

} // namespace ringplane

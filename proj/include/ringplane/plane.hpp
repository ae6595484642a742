#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ringplane/pg.hpp"
#include "ringplane/ring.hpp"

namespace ringplane {

// A coordinate triple over the double-number ring. Points and lines of the
// plane are unit-scaling classes of admissible triples.
using Triple = std::array<DoubleNumber, 3>;

using PointIndex = std::uint32_t;
using LineIndex = std::uint32_t;

// Type I: some coordinate is a unit. Type II: all coordinates are
// zero-divisors, not all from the same ideal.
enum class PointType { TypeI, TypeII };

// A triple is admissible iff its coordinates, when zero-divisors, do not all
// lie in one ideal; equivalently, neither component projection is the zero
// triple.
inline bool is_admissible(const Triple& t) {
    const bool hat_zero = t[0].a == 0 && t[1].a == 0 && t[2].a == 0;
    const bool tilde_zero = t[0].b == 0 && t[1].b == 0 && t[2].b == 0;
    return !hat_zero && !tilde_zero;
}

// Unit scaling acts independently on the two component projections, so the
// canonical representative normalizes each projection to leading entry 1.
// Idempotent, constant on unit orbits, distinct across orbits.
inline Triple canonicalize(const GaloisField& gf, const Triple& t) {
    for (const DoubleNumber& c : t) { gf.check(c.a); gf.check(c.b); }
    if (!is_admissible(t))
        throw std::domain_error("inadmissible triple: a component projection vanishes identically");
    FieldElem sa = 0, sb = 0;
    for (unsigned k = 0; k < 3 && sa == 0; ++k)
        if (t[k].a != 0) sa = gf.inv(t[k].a);
    for (unsigned k = 0; k < 3 && sb == 0; ++k)
        if (t[k].b != 0) sb = gf.inv(t[k].b);
    Triple out;
    for (unsigned k = 0; k < 3; ++k)
        out[k] = {gf.mul(sa, t[k].a), gf.mul(sb, t[k].b)};
    return out;
}

// (q^2+q+1)^2 at q=13, the default full-materialization bound.
inline constexpr std::uint64_t kDefaultMaxPlanePoints = 33489;

struct PlaneOptions {
    std::uint64_t max_points = kDefaultMaxPlanePoints;
    bool eager_line_sets = false;
};

// The projective plane over GF(q) x GF(q), fully enumerated. Every point
// corresponds to an ordered pair of PG(2,q) points (its two component
// projections) and dually for lines; points and lines carry identical
// canonical coordinate lists, ordered lexicographically. Immutable after
// construction; all queries are pure.
class Plane {
public:
    static constexpr std::uint64_t kDefaultMaxPoints = kDefaultMaxPlanePoints;
    using Options = PlaneOptions;

    explicit Plane(GaloisField gf, const Options& opt = {})
        : ring_(std::move(gf)), pg_(ring_.field()) {
        const std::uint64_t npg = pg_.size();
        const std::uint64_t total = npg * npg;
        if (total > opt.max_points)
            throw capacity_error("plane would have " + std::to_string(total) +
                                 " points, above the configured limit of " +
                                 std::to_string(opt.max_points));
        pairs_.reserve(total);
        for (PgIndex i = 0; i < npg; ++i)
            for (PgIndex j = 0; j < npg; ++j) pairs_.push_back({i, j});
        std::sort(pairs_.begin(), pairs_.end(),
                  [this](const std::pair<PgIndex, PgIndex>& l, const std::pair<PgIndex, PgIndex>& r) {
                      return triple_of(l) < triple_of(r);
                  });
        pair_to_index_.assign(total, 0);
        for (PointIndex k = 0; k < pairs_.size(); ++k)
            pair_to_index_[std::size_t(pairs_[k].first) * npg + pairs_[k].second] = k;
        if (opt.eager_line_sets) {
            line_sets_.resize(pairs_.size());
            for (LineIndex l = 0; l < pairs_.size(); ++l) line_sets_[l] = compute_line_points(l);
        }
    }

    Plane(unsigned p, unsigned n, const Options& opt = {}) : Plane(GaloisField(p, n), opt) {}

    Plane(const Plane&) = delete;
    Plane& operator=(const Plane&) = delete;

    const GaloisField& field() const { return ring_.field(); }
    const DoubleRing& ring() const { return ring_; }
    const PgPlane& pg() const { return pg_; }

    PointIndex point_count() const { return static_cast<PointIndex>(pairs_.size()); }
    LineIndex line_count() const { return point_count(); }

    Triple point(PointIndex i) const {
        check_index(i);
        return triple_of(pairs_[i]);
    }
    Triple line(LineIndex i) const { return point(i); }

    // The pair of PG(2,q) indices (first-component image, second-component image).
    std::pair<PgIndex, PgIndex> point_images(PointIndex i) const {
        check_index(i);
        return pairs_[i];
    }
    std::pair<PgIndex, PgIndex> line_images(LineIndex i) const { return point_images(i); }

    PointIndex point_from_images(PgIndex hat, PgIndex tilde) const {
        if (hat >= pg_.size() || tilde >= pg_.size())
            throw std::domain_error("Plane: projection index out of range");
        return pair_to_index_[std::size_t(hat) * pg_.size() + tilde];
    }
    LineIndex line_from_images(PgIndex hat, PgIndex tilde) const {
        return point_from_images(hat, tilde);
    }

    PointIndex point_index(const Triple& t) const {
        const Triple c = canonicalize(field(), t);
        const PgTriple hat{c[0].a, c[1].a, c[2].a};
        const PgTriple tilde{c[0].b, c[1].b, c[2].b};
        return point_from_images(pg_.index_of(hat), pg_.index_of(tilde));
    }
    LineIndex line_index(const Triple& t) const { return point_index(t); }

    PointType point_type(PointIndex i) const {
        check_index(i);
        const PgTriple& p = pg_.point(pairs_[i].first);
        const PgTriple& q = pg_.point(pairs_[i].second);
        for (unsigned k = 0; k < 3; ++k)
            if (p[k] != 0 && q[k] != 0) return PointType::TypeI;
        return PointType::TypeII;
    }
    PointType line_type(LineIndex i) const { return point_type(i); }

    std::pair<std::uint64_t, std::uint64_t> point_type_counts() const {
        std::uint64_t one = 0, two = 0;
        for (PointIndex i = 0; i < point_count(); ++i)
            (point_type(i) == PointType::TypeI ? one : two)++;
        return {one, two};
    }

    // Definitional incidence: l1*x1 + l2*x2 + l3*x3 = 0 in the ring.
    // Representative-independent because unit scaling preserves the zero.
    bool incident(LineIndex l, PointIndex x) const {
        return incident_triples(ring_, line(l), point(x));
    }

    static bool incident_triples(const DoubleRing& ring, const Triple& lt, const Triple& xt) {
        DoubleNumber s = ring.mul(lt[0], xt[0]);
        s = ring.add(s, ring.mul(lt[1], xt[1]));
        s = ring.add(s, ring.mul(lt[2], xt[2]));
        return s.a == 0 && s.b == 0;
    }

    // Fast route via the product structure: the points on line (L1,L2) are
    // exactly the pairs (P,Q) with P on L1 and Q on L2. Sorted ascending.
    std::vector<PointIndex> points_on_line(LineIndex l) const {
        check_index(l);
        if (!line_sets_.empty()) return line_sets_[l];
        return compute_line_points(l);
    }

    std::vector<LineIndex> lines_through_point(PointIndex x) const {
        check_index(x);
        return compute_line_points(x); // dot-product symmetry: same computation
    }

    // Independent slow route: scan every point against the ring incidence sum.
    std::vector<PointIndex> points_on_line_scan(LineIndex l) const {
        check_index(l);
        const Triple lt = line(l);
        std::vector<PointIndex> out;
        for (PointIndex x = 0; x < point_count(); ++x)
            if (incident_triples(ring_, lt, point(x))) out.push_back(x);
        return out;
    }

    std::vector<LineIndex> lines_through_point_scan(PointIndex x) const {
        check_index(x);
        const Triple xt = point(x);
        std::vector<LineIndex> out;
        for (LineIndex l = 0; l < line_count(); ++l)
            if (incident_triples(ring_, line(l), xt)) out.push_back(l);
        return out;
    }

private:
    DoubleRing ring_;
    PgPlane pg_;
    std::vector<std::pair<PgIndex, PgIndex>> pairs_;
    std::vector<PointIndex> pair_to_index_;
    std::vector<std::vector<PointIndex>> line_sets_;

    void check_index(PointIndex i) const {
        if (i >= pairs_.size()) throw std::domain_error("Plane: index out of range");
    }

    Triple triple_of(const std::pair<PgIndex, PgIndex>& pr) const {
        const PgTriple& p = pg_.point(pr.first);
        const PgTriple& q = pg_.point(pr.second);
        return {DoubleNumber{p[0], q[0]}, DoubleNumber{p[1], q[1]}, DoubleNumber{p[2], q[2]}};
    }

    std::vector<PointIndex> compute_line_points(LineIndex l) const {
        const auto [l1, l2] = pairs_[l];
        const std::uint64_t npg = pg_.size();
        std::vector<PointIndex> out;
        const auto& on1 = pg_.points_on_line(l1);
        const auto& on2 = pg_.points_on_line(l2);
        out.reserve(on1.size() * on2.size());
        for (PgIndex i : on1)
            for (PgIndex j : on2) out.push_back(pair_to_index_[std::size_t(i) * npg + j]);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Oracle enumeration: all q^6 raw triples, filtered by admissibility and
// deduplicated by canonical form. Sorted the same way the plane sorts its
// classes, so the two paths are directly comparable. Gated to q <= 5.
inline std::vector<Triple> enumerate_classes_by_filter(const GaloisField& gf) {
    if (gf.q() > 5)
        throw capacity_error("exhaustive q^6 class enumeration is gated to q <= 5");
    const FieldElem q = gf.q();
    const std::uint32_t nring = q * q;
    std::vector<Triple> out;
    for (std::uint32_t u = 0; u < nring; ++u)
        for (std::uint32_t v = 0; v < nring; ++v)
            for (std::uint32_t w = 0; w < nring; ++w) {
                const Triple t{DoubleNumber{u / q, u % q}, DoubleNumber{v / q, v % q},
                               DoubleNumber{w / q, w % q}};
                if (!is_admissible(t)) continue;
                out.push_back(canonicalize(gf, t));
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Count of raw triples whose three entries all lie in a single ideal
// (an intermediate quantity of the type-II census derivation).
inline std::uint64_t same_ideal_triple_count(const GaloisField& gf) {
    if (gf.q() > 5)
        throw capacity_error("exhaustive q^6 triple scan is gated to q <= 5");
    const FieldElem q = gf.q();
    const std::uint32_t nring = q * q;
    std::uint64_t count = 0;
    for (std::uint32_t u = 0; u < nring; ++u)
        for (std::uint32_t v = 0; v < nring; ++v)
            for (std::uint32_t w = 0; w < nring; ++w) {
                const DoubleNumber x{u / q, u % q}, y{v / q, v % q}, z{w / q, w % q};
                const bool all_e = x.a == 0 && y.a == 0 && z.a == 0;
                const bool all_e1 = x.b == 0 && y.b == 0 && z.b == 0;
                if (all_e || all_e1) ++count;
            }
    return count;
}

} // namespace ringplane

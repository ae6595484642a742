#pragma once

#include <cstdint>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "ringplane/hom.hpp"
#include "ringplane/neighbour.hpp"
#include "ringplane/plane.hpp"

namespace ringplane {

// fast: counting and product-structure checks only.
// definitional: adds the joining-line-count routes against the fast predicate.
// oracle: adds the exhaustive q^6 enumeration comparisons (q <= 5 only).
enum class VerifyDepth { Fast, Definitional, Oracle };

inline const char* to_string(VerifyDepth d) {
    switch (d) {
        case VerifyDepth::Fast: return "fast";
        case VerifyDepth::Definitional: return "definitional";
        default: return "oracle";
    }
}

// splitmix64; deterministic across runs and platforms so that sampled
// verification reports are byte-stable.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

private:
    std::uint64_t state_;
};

struct ClaimResult {
    std::string id;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct VerifyReport {
    unsigned p = 0;
    unsigned n = 0;
    FieldElem q = 0;
    VerifyDepth depth = VerifyDepth::Fast;
    std::vector<ClaimResult> claims;

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "verify q=" << q << " (p=" << p << ", n=" << n << ") depth=" << to_string(depth)
           << "\n";
        for (const auto& c : claims)
            os << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(28) << c.id
               << "  expected " << std::setw(30) << c.expected << "  observed " << c.observed
               << "\n";
        os << "overall: " << (all_pass() ? "PASS" : "FAIL") << " (" << claims.size()
           << " claims)\n";
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["p"] = p;
        j["n"] = n;
        j["depth"] = to_string(depth);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : claims)
            arr.push_back({{"id", c.id},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"pass", c.pass}});
        j["claims"] = arr;
        j["pass"] = all_pass();
        return j;
    }
};

inline VerifyReport run_verify(const GaloisField& gf, VerifyDepth depth,
                               const Plane::Options& opt = {}) {
    if (depth == VerifyDepth::Oracle && gf.q() > 5)
        throw capacity_error("verification depth 'oracle' is gated to q <= 5");

    VerifyReport rep;
    rep.p = gf.p();
    rep.n = gf.n();
    rep.q = gf.q();
    rep.depth = depth;

    const Plane pl(gf, opt);
    const DoubleRing& R = pl.ring();
    const PgPlane& pg = pl.pg();
    const std::uint64_t q = gf.q();
    const PointIndex N = pl.point_count();
    const PgIndex npg = pg.size();

    DetRng rng(0x52504c414e45ull ^ (q << 8) ^ static_cast<unsigned>(depth));

    auto add = [&rep](std::string id, std::string expected, std::string observed, bool pass) {
        rep.claims.push_back({std::move(id), std::move(expected), std::move(observed), pass});
    };
    auto num = [](std::uint64_t v) { return std::to_string(v); };
    auto sample_or_all = [&rng](std::uint32_t n, std::uint32_t want) {
        std::vector<std::uint32_t> out;
        if (n <= want) {
            out.resize(n);
            std::iota(out.begin(), out.end(), 0u);
            return out;
        }
        std::unordered_set<std::uint32_t> seen;
        out.reserve(want);
        while (out.size() < want) {
            const std::uint32_t v = rng.below(n);
            if (seen.insert(v).second) out.push_back(v);
        }
        return out;
    };
    auto coverage = [&num](std::uint64_t value, std::uint64_t checked, const char* what) {
        return num(value) + " on " + num(checked) + "/" + num(checked) + " " + what;
    };

    // ---- ring layer ----
    {
        const DoubleRing::Census c = R.census();
        add("ring-total", "q^2 = " + num(q * q), num(c.total), c.total == q * q);
        add("ring-zero-divisors", "2q-1 = " + num(2 * q - 1), num(c.zero_divisors),
            c.zero_divisors == 2 * q - 1);
        add("ring-units", "(q-1)^2 = " + num((q - 1) * (q - 1)), num(c.units),
            c.units == (q - 1) * (q - 1));
    }
    {
        const auto ie = R.ideal_elements(IdealTag::E);
        const auto ie1 = R.ideal_elements(IdealTag::EMinusOne);
        add("ideal-size-e", "q = " + num(q), num(ie.size()), ie.size() == q);
        add("ideal-size-e-minus-one", "q = " + num(q), num(ie1.size()), ie1.size() == q);
        std::vector<DoubleNumber> common;
        for (const DoubleNumber& x : ie)
            for (const DoubleNumber& y : ie1)
                if (x == y) common.push_back(x);
        const bool ok = common.size() == 1 && common[0] == R.zero();
        add("ideal-intersection", "only [0,0]",
            ok ? "only [0,0]" : num(common.size()) + " common elements", ok);
    }
    {
        bool closed = true;
        for (IdealTag tag : {IdealTag::E, IdealTag::EMinusOne}) {
            const auto ideal = R.ideal_elements(tag);
            for (const DoubleNumber& x : ideal)
                for (const DoubleNumber& y : ideal)
                    if (!R.in_ideal(tag, R.add(x, y))) closed = false;
            for (const DoubleNumber& x : ideal)
                for (FieldElem a = 0; a < q && closed; ++a)
                    for (FieldElem b = 0; b < q; ++b)
                        if (!R.in_ideal(tag, R.mul({a, b}, x))) { closed = false; break; }
        }
        add("ideal-closure", "closed under + and ring multiples", closed ? "closed" : "violated",
            closed);
    }

    // ---- plane counting ----
    const std::uint64_t n_expect = (q * q + q + 1) * (q * q + q + 1);
    add("point-total", "(q^2+q+1)^2 = " + num(n_expect), num(N), N == n_expect);
    add("line-total", "(q^2+q+1)^2 = " + num(n_expect), num(pl.line_count()),
        pl.line_count() == n_expect);
    {
        const auto [one, two] = pl.point_type_counts();
        add("point-type-i", "(q^2+q+1)^2-6q = " + num(n_expect - 6 * q), num(one),
            one == n_expect - 6 * q);
        add("point-type-ii", "6q = " + num(6 * q), num(two), two == 6 * q);
        std::uint64_t line_two = 0;
        for (LineIndex l = 0; l < pl.line_count(); ++l)
            if (pl.line_type(l) == PointType::TypeII) ++line_two;
        add("line-type-ii", "6q = " + num(6 * q), num(line_two), line_two == 6 * q);
    }
    {
        const std::uint64_t expect = (q + 1) * (q + 1);
        const auto lines = sample_or_all(N, q <= 4 ? N : 200);
        std::uint64_t bad = 0;
        for (auto l : lines)
            if (pl.points_on_line(l).size() != expect) ++bad;
        add("per-line-points", "(q+1)^2 = " + num(expect),
            bad ? num(bad) + " lines off" : coverage(expect, lines.size(), "lines"), bad == 0);
        const auto points = sample_or_all(N, q <= 4 ? N : 200);
        bad = 0;
        for (auto x : points)
            if (pl.lines_through_point(x).size() != expect) ++bad;
        add("per-point-lines", "(q+1)^2 = " + num(expect),
            bad ? num(bad) + " points off" : coverage(expect, points.size(), "points"), bad == 0);
    }
    {
        // two distinct lines meet in exactly 1 or q+1 points, as the shared-
        // projection relation predicts
        std::uint64_t checked = 0, bad = 0;
        auto meet_ok = [&](LineIndex l1, LineIndex l2) {
            const auto a = pl.points_on_line(l1);
            const auto b = pl.points_on_line(l2);
            std::vector<PointIndex> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            return inter.size() == relate(pl, l1, l2).joining_line_count;
        };
        if (q <= 3) {
            for (LineIndex l1 = 0; l1 < N; ++l1)
                for (LineIndex l2 = l1 + 1; l2 < N; ++l2) {
                    ++checked;
                    if (!meet_ok(l1, l2)) ++bad;
                }
        } else {
            while (checked < 2000) {
                const LineIndex l1 = rng.below(N), l2 = rng.below(N);
                if (l1 == l2) continue;
                ++checked;
                if (!meet_ok(l1, l2)) ++bad;
            }
        }
        add("line-meet-dichotomy", "1 or q+1 common points, as related",
            bad ? num(bad) + " pairs off" : "agrees on " + num(checked) + " line pairs", bad == 0);
    }

    // ---- neighbourhoods ----
    {
        const std::uint64_t expect = 2 * q * (q + 1);
        const auto points = sample_or_all(N, q <= 3 ? N : 200);
        std::uint64_t bad = 0;
        for (auto a : points)
            if (neighbourhood(pl, a).size() != expect) ++bad;
        add("neighbourhood-size", "2q(q+1) = " + num(expect),
            bad ? num(bad) + " points off" : coverage(expect, points.size(), "points"), bad == 0);
    }
    {
        // breakdown for the reference point (1,0,0): unit-coordinate part,
        // then the all-zero-divisor part split by the middle coordinate
        const PointIndex a = pl.point_index({R.one(), R.zero(), R.zero()});
        std::uint64_t f_unit = 0, f_mid = 0, f_last = 0;
        for (PointIndex b : neighbourhood(pl, a)) {
            const Triple t = pl.point(b);
            bool has_unit = false;
            for (const DoubleNumber& c : t)
                if (c.a != 0 && c.b != 0) has_unit = true;
            if (has_unit) ++f_unit;
            else if (t[1] != R.zero()) ++f_mid;
            else ++f_last;
        }
        const bool ok = f_unit == 2 * (q * q - 1) && f_mid == 2 * q && f_last == 2;
        add("neighbourhood-breakdown",
            "2(q^2-1) + 2q + 2 = " + num(2 * (q * q - 1)) + "+" + num(2 * q) + "+2",
            num(f_unit) + "+" + num(f_mid) + "+" + num(f_last), ok);
    }
    {
        const auto points = sample_or_all(N, q <= 3 ? N : 50);
        std::uint64_t bad = 0;
        for (auto a : points)
            for (PointIndex b : neighbourhood(pl, a)) {
                const auto nb = neighbourhood(pl, b);
                if (!std::binary_search(nb.begin(), nb.end(), a)) ++bad;
            }
        add("neighbourhood-symmetry", "b in N(a) iff a in N(b)",
            bad ? num(bad) + " asymmetric pairs" : "symmetric on " + num(points.size()) + " points",
            bad == 0);
    }
    {
        std::uint64_t checked = 0, bad = 0;
        if (q == 2) {
            for (PointIndex a = 0; a < N; ++a)
                for (PointIndex b = a + 1; b < N; ++b) {
                    if (relate(pl, a, b).kind != RelationKind::Distant) continue;
                    ++checked;
                    if (common_neighbours(pl, a, b).size() != 2) ++bad;
                }
        } else {
            while (checked < 10000) {
                const PointIndex a = rng.below(N), b = rng.below(N);
                if (a == b || relate(pl, a, b).kind != RelationKind::Distant) continue;
                ++checked;
                if (common_neighbours(pl, a, b).size() != 2) ++bad;
            }
        }
        add("distant-pair-overlap", "2 shared neighbours",
            bad ? num(bad) + " pairs off" : "2 on " + num(checked) + " distant pairs", bad == 0);
    }
    {
        std::uint64_t checked = 0, bad = 0;
        auto triple_empty = [&](PointIndex a, PointIndex b, PointIndex c) {
            const auto nc = neighbourhood(pl, c);
            for (PointIndex x : common_neighbours(pl, a, b))
                if (std::binary_search(nc.begin(), nc.end(), x)) return false;
            return true;
        };
        auto mutually_distant = [&](PointIndex a, PointIndex b, PointIndex c) {
            return relate(pl, a, b).kind == RelationKind::Distant &&
                   relate(pl, a, c).kind == RelationKind::Distant &&
                   relate(pl, b, c).kind == RelationKind::Distant;
        };
        if (q == 2) {
            for (PointIndex a = 0; a < N; ++a)
                for (PointIndex b = a + 1; b < N; ++b) {
                    if (relate(pl, a, b).kind != RelationKind::Distant) continue;
                    for (PointIndex c = b + 1; c < N; ++c) {
                        if (!mutually_distant(a, b, c)) continue;
                        ++checked;
                        if (!triple_empty(a, b, c)) ++bad;
                    }
                }
        } else {
            while (checked < 1000) {
                const PointIndex a = rng.below(N), b = rng.below(N), c = rng.below(N);
                if (a == b || a == c || b == c || !mutually_distant(a, b, c)) continue;
                ++checked;
                if (!triple_empty(a, b, c)) ++bad;
            }
        }
        add("distant-triple-overlap", "no common neighbour",
            bad ? num(bad) + " triples off" : "empty on " + num(checked) + " distant triples",
            bad == 0);
    }
    {
        // neighbour is not transitive: X ~ Y ~ Z with X, Z distant
        const PointIndex x = pl.point_from_images(0, 0);
        const PointIndex y = pl.point_from_images(0, 1);
        const PointIndex z = pl.point_from_images(1, 1);
        const bool ok = relate(pl, x, y).kind == RelationKind::Neighbour &&
                        relate(pl, y, z).kind == RelationKind::Neighbour &&
                        relate(pl, x, z).kind == RelationKind::Distant;
        add("non-transitivity-witness", "X~Y, Y~Z, X distant Z", ok ? "witness found" : "violated",
            ok);
    }
    {
        const std::uint64_t expect = 2 * q;
        std::uint64_t checked = 0, bad = 0;
        if (q <= 3) {
            for (PointIndex a = 0; a < N; ++a)
                for (LineIndex l : pl.lines_through_point(a)) {
                    ++checked;
                    if (line_neighbour_profile(pl, a, l) != expect) ++bad;
                }
        } else {
            const auto points = sample_or_all(N, 200);
            for (auto a : points) {
                const auto through = pl.lines_through_point(a);
                const LineIndex l = through[rng.below(static_cast<std::uint32_t>(through.size()))];
                ++checked;
                if (line_neighbour_profile(pl, a, l) != expect) ++bad;
            }
        }
        add("line-neighbour-profile", "2q = " + num(expect),
            bad ? num(bad) + " incidences off" : coverage(expect, checked, "incident pairs"),
            bad == 0);
    }
    {
        const auto lines = sample_or_all(N, q <= 3 ? N : 200);
        std::uint64_t bad = 0;
        for (auto l : lines)
            if (!line_covering_check(pl, l)) ++bad;
        add("line-covering", "q+1 distant points + pairwise overlaps = (q+1)^2",
            bad ? num(bad) + " lines off" : "holds on " + num(lines.size()) + " lines", bad == 0);
    }

    // ---- homomorphisms ----
    {
        bool ok = project(HomTag::Hat, R.one()) == 1 && project(HomTag::Tilde, R.one()) == 1;
        for (FieldElem a = 0; a < q && ok; ++a)
            for (FieldElem b = 0; b < q && ok; ++b)
                for (FieldElem c = 0; c < q && ok; ++c)
                    for (FieldElem d = 0; d < q; ++d) {
                        const DoubleNumber x{a, b}, y{c, d};
                        const DoubleNumber s = R.add(x, y), m = R.mul(x, y);
                        if (project(HomTag::Hat, s) !=
                                gf.add(project(HomTag::Hat, x), project(HomTag::Hat, y)) ||
                            project(HomTag::Hat, m) !=
                                gf.mul(project(HomTag::Hat, x), project(HomTag::Hat, y)) ||
                            project(HomTag::Tilde, s) !=
                                gf.add(project(HomTag::Tilde, x), project(HomTag::Tilde, y)) ||
                            project(HomTag::Tilde, m) !=
                                gf.mul(project(HomTag::Tilde, x), project(HomTag::Tilde, y))) {
                            ok = false;
                            break;
                        }
                    }
        add("hom-axioms", "additive, multiplicative, unital", ok ? "hold" : "violated", ok);
    }
    {
        std::vector<DoubleNumber> ker_hat, ker_tilde;
        for (FieldElem a = 0; a < q; ++a)
            for (FieldElem b = 0; b < q; ++b) {
                const DoubleNumber x{a, b};
                if (project(HomTag::Hat, x) == 0) ker_hat.push_back(x);
                if (project(HomTag::Tilde, x) == 0) ker_tilde.push_back(x);
            }
        const bool ok = ker_hat == R.ideal_elements(IdealTag::E) &&
                        ker_tilde == R.ideal_elements(IdealTag::EMinusOne);
        add("hom-kernels", "ker = <e> and <e-1>, q elements each",
            ok ? num(ker_hat.size()) + " and " + num(ker_tilde.size()) + " elements, as the ideals"
               : "kernel mismatch",
            ok);
    }
    {
        const std::uint64_t half = q * (q + 1);
        const auto points = sample_or_all(N, q <= 3 ? N : 200);
        std::uint64_t bad_sizes = 0, bad_bijection = 0, bad_families = 0;
        for (auto a : points) {
            const NeighbourSplit hat = neighbourhood_split(pl, a, HomTag::Hat);
            const NeighbourSplit tilde = neighbourhood_split(pl, a, HomTag::Tilde);
            for (const NeighbourSplit& s : {hat, tilde}) {
                if (s.merged.size() != half || s.spread.size() != half) ++bad_sizes;
                std::set<PgIndex> images;
                bool hit_base = false;
                for (const auto& [b, img] : s.spread) {
                    images.insert(img);
                    if (img == s.image) hit_base = true;
                }
                if (hit_base || images.size() != s.spread.size() || images.size() != npg - 1u)
                    ++bad_bijection;
            }
            std::vector<PointIndex> unionised;
            std::merge(hat.merged.begin(), hat.merged.end(), tilde.merged.begin(),
                       tilde.merged.end(), std::back_inserter(unionised));
            std::vector<PointIndex> inter;
            std::set_intersection(hat.merged.begin(), hat.merged.end(), tilde.merged.begin(),
                                  tilde.merged.end(), std::back_inserter(inter));
            if (!inter.empty() || unionised != neighbourhood(pl, a)) ++bad_families;
        }
        add("split-merged-size", "q(q+1) = " + num(half) + " merged and spread",
            bad_sizes ? num(bad_sizes) + " splits off"
                      : coverage(half, points.size() * 2, "splits"),
            bad_sizes == 0);
        add("split-spread-bijection", "spread is onto PG minus the image",
            bad_bijection ? num(bad_bijection) + " splits off"
                          : "bijective on " + num(points.size() * 2) + " splits",
            bad_bijection == 0);
        add("split-families", "merged(hat), merged(tilde) partition N(a)",
            bad_families ? num(bad_families) + " points off"
                         : "partition on " + num(points.size()) + " points",
            bad_families == 0);
    }
    {
        const auto points = sample_or_all(N, q <= 4 ? N : 200);
        std::uint64_t bad = 0;
        for (auto a : points)
            if (!complementarity_check(pl, a)) ++bad;
        add("complementarity-swap", "merged(hat) = spread(tilde) and vice versa",
            bad ? num(bad) + " points off" : "swap holds on " + num(points.size()) + " points",
            bad == 0);
    }
    {
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(npg) * npg, 0);
        bool duplicate = false;
        for (PointIndex i = 0; i < N; ++i) {
            const auto [h, t] = pl.point_images(i);
            std::uint8_t& slot = seen[static_cast<std::size_t>(h) * npg + t];
            if (slot) duplicate = true;
            slot = 1;
        }
        const bool onto =
            std::all_of(seen.begin(), seen.end(), [](std::uint8_t v) { return v == 1; });
        add("product-bijection", "points <-> PG(2,q) x PG(2,q)",
            !duplicate && onto ? "bijective" : "not bijective", !duplicate && onto);
    }
    {
        std::vector<std::uint64_t> hat_count(npg, 0), tilde_count(npg, 0);
        for (PointIndex i = 0; i < N; ++i) {
            const auto [h, t] = pl.point_images(i);
            ++hat_count[h];
            ++tilde_count[t];
        }
        const std::uint64_t expect = npg;
        const bool ok =
            std::all_of(hat_count.begin(), hat_count.end(),
                        [&](std::uint64_t v) { return v == expect; }) &&
            std::all_of(tilde_count.begin(), tilde_count.end(),
                        [&](std::uint64_t v) { return v == expect; });
        add("fibre-balance", "q^2+q+1 = " + num(expect) + " preimages per PG point",
            ok ? coverage(expect, 2 * npg, "fibres") : "unbalanced", ok);
    }
    {
        const auto lines = sample_or_all(N, q <= 3 ? N : 50);
        std::uint64_t checked = 0, bad = 0;
        for (auto l : lines) {
            const auto [l1, l2] = pl.line_images(l);
            for (PointIndex x = 0; x < N; ++x) {
                if (!pl.incident(l, x)) continue;
                ++checked;
                const auto [p1, p2] = pl.point_images(x);
                if (!pg.incident(l1, p1) || !pg.incident(l2, p2)) ++bad;
            }
        }
        add("incidence-preservation", "images stay incident under both maps",
            bad ? num(bad) + " incidences off" : "preserved on " + num(checked) + " incidences",
            bad == 0);
    }

    // ---- definitional routes ----
    if (depth >= VerifyDepth::Definitional) {
        {
            std::uint64_t checked = 0, bad = 0;
            auto agree = [&](PointIndex a, PointIndex b) {
                const Relation fast = relate(pl, a, b);
                const Relation slow = relate_definitional(pl, a, b);
                return fast.kind == slow.kind &&
                       fast.joining_line_count == slow.joining_line_count;
            };
            if (q <= 3) {
                for (PointIndex a = 0; a < N; ++a)
                    for (PointIndex b = a; b < N; ++b) {
                        ++checked;
                        if (!agree(a, b)) ++bad;
                    }
            } else {
                const std::uint64_t want = q <= 5 ? 100000 : 3000;
                while (checked < want) {
                    const PointIndex a = rng.below(N), b = rng.below(N);
                    ++checked;
                    if (!agree(a, b)) ++bad;
                }
            }
            add("relate-agreement", "line counting matches the projection predicate",
                bad ? num(bad) + " pairs off" : "agrees on " + num(checked) + " pairs", bad == 0);
        }
        {
            std::uint64_t checked = 0, bad = 0;
            auto dichotomy = [&](PointIndex a, PointIndex b) {
                const std::size_t k = joining_lines(pl, a, b).size();
                return k == 1 || k == q + 1;
            };
            if (q <= 3) {
                for (PointIndex a = 0; a < N; ++a)
                    for (PointIndex b = a + 1; b < N; ++b) {
                        ++checked;
                        if (!dichotomy(a, b)) ++bad;
                    }
            } else {
                const std::uint64_t want = q <= 5 ? 10000 : 1000;
                while (checked < want) {
                    const PointIndex a = rng.below(N), b = rng.below(N);
                    if (a == b) continue;
                    ++checked;
                    if (!dichotomy(a, b)) ++bad;
                }
            }
            add("joining-dichotomy", "1 or q+1 = " + num(q + 1) + " joining lines",
                bad ? num(bad) + " pairs off" : "holds on " + num(checked) + " point pairs",
                bad == 0);
        }
        {
            const auto lines = sample_or_all(N, q <= 3 ? N : 50);
            std::uint64_t bad = 0;
            for (auto l : lines)
                if (pl.points_on_line_scan(l) != pl.points_on_line(l)) ++bad;
            add("points-on-line-agreement", "incidence scan matches product route",
                bad ? num(bad) + " lines off" : "agrees on " + num(lines.size()) + " lines",
                bad == 0);
        }
        {
            std::uint64_t checked = 0, bad = 0;
            auto meet = [&](LineIndex l1, LineIndex l2) {
                const auto a = pl.points_on_line_scan(l1);
                const auto b = pl.points_on_line_scan(l2);
                std::vector<PointIndex> inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(inter));
                return inter.size();
            };
            if (q <= 3) {
                std::vector<std::vector<PointIndex>> scans(N);
                for (LineIndex l = 0; l < N; ++l) scans[l] = pl.points_on_line_scan(l);
                for (LineIndex l1 = 0; l1 < N; ++l1)
                    for (LineIndex l2 = l1 + 1; l2 < N; ++l2) {
                        ++checked;
                        std::vector<PointIndex> inter;
                        std::set_intersection(scans[l1].begin(), scans[l1].end(),
                                              scans[l2].begin(), scans[l2].end(),
                                              std::back_inserter(inter));
                        if (inter.size() != 1 && inter.size() != q + 1) ++bad;
                    }
            } else {
                while (checked < 200) {
                    const LineIndex l1 = rng.below(N), l2 = rng.below(N);
                    if (l1 == l2) continue;
                    ++checked;
                    const std::size_t m = meet(l1, l2);
                    if (m != 1 && m != q + 1) ++bad;
                }
            }
            add("line-meet-definitional", "1 or q+1 = " + num(q + 1) + " common points",
                bad ? num(bad) + " pairs off" : "holds on " + num(checked) + " line pairs",
                bad == 0);
        }
    }

    // ---- oracle routes ----
    if (depth >= VerifyDepth::Oracle) {
        {
            const std::vector<Triple> filtered = enumerate_classes_by_filter(gf);
            bool equal = filtered.size() == N;
            for (PointIndex i = 0; equal && i < N; ++i)
                if (filtered[i] != pl.point(i)) equal = false;
            add("enumeration-oracle", "q^6 filter equals the product enumeration",
                equal ? num(filtered.size()) + " classes, identical lists" : "lists differ", equal);

            std::uint64_t one = 0, two = 0;
            for (const Triple& t : filtered) {
                bool has_unit = false;
                for (const DoubleNumber& c : t)
                    if (c.a != 0 && c.b != 0) has_unit = true;
                (has_unit ? one : two)++;
            }
            const auto [fast_one, fast_two] = pl.point_type_counts();
            const bool ok = one == fast_one && two == fast_two;
            add("type-counts-oracle", "type split agrees with the fast route",
                ok ? num(one) + " + " + num(two) : "split differs", ok);
        }
        {
            const std::uint64_t observed = same_ideal_triple_count(gf);
            const std::uint64_t expect = 2 * q * q * q - 1;
            add("same-ideal-triples", "2q^3-1 = " + num(expect), num(observed),
                observed == expect);
        }
        {
            // pairs against GF(q)[x]/(x^2-x): the pair [a,b] corresponds to the
            // residue with value a at 0 and b at 1
            bool ok = true;
            for (FieldElem a = 0; a < q && ok; ++a)
                for (FieldElem b = 0; b < q && ok; ++b)
                    for (FieldElem c = 0; c < q && ok; ++c)
                        for (FieldElem d = 0; d < q; ++d) {
                            const DoubleNumber x{a, b}, y{c, d};
                            const FieldElem x0 = x.a, x1 = gf.sub(x.b, x.a);
                            const FieldElem y0 = y.a, y1 = gf.sub(y.b, y.a);
                            const FieldElem s0 = gf.add(x0, y0), s1 = gf.add(x1, y1);
                            FieldElem m0 = gf.mul(x0, y0);
                            FieldElem m1 = gf.add(gf.add(gf.mul(x0, y1), gf.mul(x1, y0)),
                                                  gf.mul(x1, y1)); // x^2 -> x
                            const DoubleNumber sum{s0, gf.add(s0, s1)};
                            const DoubleNumber prod{m0, gf.add(m0, m1)};
                            if (sum != R.add(x, y) || prod != R.mul(x, y)) {
                                ok = false;
                                break;
                            }
                        }
            add("ring-iso-polynomial", "componentwise ops match GF(q)[x]/(x^2-x)",
                ok ? "isomorphic on all pairs" : "violated", ok);
        }
    }

    return rep;
}

// ---- stats ----

struct StatsRow {
    std::string name;
    std::string formula;
    std::uint64_t expected = 0;
    std::uint64_t observed = 0;
    bool match = false;
};

struct StatsReport {
    unsigned p = 0;
    unsigned n = 0;
    FieldElem q = 0;
    std::string modulus;
    bool materialized = false; // false: streamed without building the full plane
    std::vector<StatsRow> rows;

    bool all_match() const {
        for (const auto& r : rows)
            if (!r.match) return false;
        return true;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "stats q=" << q << " (p=" << p << ", n=" << n << ") modulus=" << modulus
           << " mode=" << (materialized ? "full" : "stats-only") << "\n";
        for (const auto& r : rows)
            os << std::left << std::setw(22) << r.name << " observed " << std::setw(10)
               << r.observed << " expected " << std::setw(22) << (r.formula + " = " + std::to_string(r.expected))
               << (r.match ? " ok" : " MISMATCH") << "\n";
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["p"] = p;
        j["n"] = n;
        j["modulus_poly"] = modulus;
        j["mode"] = materialized ? "full" : "stats-only";
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"name", r.name},
                           {"formula", r.formula},
                           {"expected", r.expected},
                           {"observed", r.observed},
                           {"match", r.match}});
        j["rows"] = arr;
        return j;
    }
};

inline StatsReport compute_stats(const GaloisField& gf,
                                 std::uint64_t max_points = Plane::kDefaultMaxPoints) {
    StatsReport rep;
    rep.p = gf.p();
    rep.n = gf.n();
    rep.q = gf.q();
    rep.modulus = gf.modulus_string();

    const std::uint64_t q = gf.q();
    auto push = [&rep](std::string name, std::string formula, std::uint64_t expected,
                       std::uint64_t observed) {
        rep.rows.push_back({std::move(name), std::move(formula), expected, observed,
                            expected == observed});
    };

    const DoubleRing ring(gf);
    const DoubleRing::Census c = ring.census();
    push("ring-total", "q^2", q * q, c.total);
    push("ring-zero-divisors", "2q-1", 2 * q - 1, c.zero_divisors);
    push("ring-units", "(q-1)^2", (q - 1) * (q - 1), c.units);

    const std::uint64_t n_expect = (q * q + q + 1) * (q * q + q + 1);
    const std::uint64_t npg64 = q * q + q + 1;
    rep.materialized = npg64 * npg64 <= max_points;

    if (rep.materialized) {
        const Plane pl(gf, {max_points, false});
        push("points", "(q^2+q+1)^2", n_expect, pl.point_count());
        push("lines", "(q^2+q+1)^2", n_expect, pl.line_count());
        const auto [one, two] = pl.point_type_counts();
        push("points-type-i", "(q^2+q+1)^2-6q", n_expect - 6 * q, one);
        push("points-type-ii", "6q", 6 * q, two);
        push("points-per-line", "(q+1)^2", (q + 1) * (q + 1), pl.points_on_line(0).size());
        push("lines-per-point", "(q+1)^2", (q + 1) * (q + 1), pl.lines_through_point(0).size());
        push("neighbourhood-size", "2q(q+1)", 2 * q * (q + 1), neighbourhood(pl, 0).size());
    } else {
        // streamed over PG(2,q) pairs, without materializing the plane
        const PgPlane pg(gf);
        const PgIndex npg = pg.size();
        std::uint64_t total = 0, two = 0;
        for (PgIndex i = 0; i < npg; ++i)
            for (PgIndex j = 0; j < npg; ++j) {
                ++total;
                const PgTriple& a = pg.point(i);
                const PgTriple& b = pg.point(j);
                bool has_unit = false;
                for (unsigned k = 0; k < 3; ++k)
                    if (a[k] != 0 && b[k] != 0) has_unit = true;
                if (!has_unit) ++two;
            }
        push("points", "(q^2+q+1)^2", n_expect, total);
        push("lines", "(q^2+q+1)^2", n_expect, total);
        push("points-type-i", "(q^2+q+1)^2-6q", n_expect - 6 * q, total - two);
        push("points-type-ii", "6q", 6 * q, two);
        const std::uint64_t on0 = pg.points_on_line(0).size();
        push("points-per-line", "(q+1)^2", (q + 1) * (q + 1), on0 * on0);
        push("lines-per-point", "(q+1)^2", (q + 1) * (q + 1), on0 * on0);
        std::uint64_t nb = 0;
        for (PgIndex j = 1; j < npg; ++j) nb += 2;
        push("neighbourhood-size", "2q(q+1)", 2 * q * (q + 1), nb);
    }
    return rep;
}

} // namespace ringplane

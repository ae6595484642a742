#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "ringplane/neighbour.hpp"

using namespace ringplane;

namespace {

// the parametrized coordinate families around (1,0,0) and (0,0,1)
struct Families {
    std::set<PointIndex> with_unit; // 2(q^2-1) members
    std::set<PointIndex> mixed;     // 2q members
    std::set<PointIndex> pair;      // 2 members
};

DoubleNumber ge(const DoubleRing& R, FieldElem g) { return R.mul(R.embed(g), R.e()); }
DoubleNumber he1(const DoubleRing& R, FieldElem h) { return R.mul(R.embed(h), R.e_minus_one()); }

Families families_around_100(const Plane& pl) {
    const DoubleRing& R = pl.ring();
    const FieldElem q = pl.field().q();
    Families f;
    for (FieldElem g2 = 0; g2 < q; ++g2)
        for (FieldElem g3 = 0; g3 < q; ++g3) {
            if (g2 == 0 && g3 == 0) continue;
            f.with_unit.insert(pl.point_index({R.one(), ge(R, g2), ge(R, g3)}));
            f.with_unit.insert(pl.point_index({R.one(), he1(R, g2), he1(R, g3)}));
        }
    for (FieldElem g3 = 0; g3 < q; ++g3) {
        f.mixed.insert(pl.point_index({R.e_minus_one(), R.e(), ge(R, g3)}));
        f.mixed.insert(pl.point_index({R.e(), R.e_minus_one(), he1(R, g3)}));
    }
    f.pair.insert(pl.point_index({R.e_minus_one(), R.zero(), R.e()}));
    f.pair.insert(pl.point_index({R.e(), R.zero(), R.e_minus_one()}));
    return f;
}

Families families_around_001(const Plane& pl) {
    const DoubleRing& R = pl.ring();
    const FieldElem q = pl.field().q();
    Families f;
    for (FieldElem g1 = 0; g1 < q; ++g1)
        for (FieldElem g2 = 0; g2 < q; ++g2) {
            if (g1 == 0 && g2 == 0) continue;
            f.with_unit.insert(pl.point_index({ge(R, g1), ge(R, g2), R.one()}));
            f.with_unit.insert(pl.point_index({he1(R, g1), he1(R, g2), R.one()}));
        }
    for (FieldElem g1 = 0; g1 < q; ++g1) {
        f.mixed.insert(pl.point_index({ge(R, g1), R.e(), R.e_minus_one()}));
        f.mixed.insert(pl.point_index({he1(R, g1), R.e_minus_one(), R.e()}));
    }
    f.pair.insert(pl.point_index({R.e(), R.zero(), R.e_minus_one()}));
    f.pair.insert(pl.point_index({R.e_minus_one(), R.zero(), R.e()}));
    return f;
}

} // namespace

TEST_CASE("joining lines of the reference distant pair") {
    const Plane pl(2, 1);
    const DoubleRing& R = pl.ring();
    const PointIndex a = pl.point_index({R.one(), R.zero(), R.zero()});
    const PointIndex b = pl.point_index({R.zero(), R.zero(), R.one()});
    const auto joins = joining_lines(pl, a, b);
    REQUIRE(joins.size() == 1);
    CHECK(joins[0] == pl.line_index({R.zero(), R.one(), R.zero()}));
    CHECK(relate(pl, a, b).kind == RelationKind::Distant);
}

TEST_CASE("neighbour pairs are joined by q+1 lines") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const DoubleRing& R = pl.ring();
        const FieldElem q = pl.field().q();
        const PointIndex a = pl.point_index({R.one(), R.zero(), R.zero()});
        const PointIndex m = pl.point_index({R.one(), R.e(), R.zero()});
        CHECK(relate(pl, a, m).kind == RelationKind::Neighbour);
        const auto joins = joining_lines(pl, a, m);
        CHECK(joins.size() == q + 1); // 3 at q=2, 4 at q=3
        for (LineIndex l : joins) {
            CHECK(pl.incident(l, a));
            CHECK(pl.incident(l, m));
        }
    }
}

TEST_CASE("relate classifies the worked examples") {
    const Plane pl(3, 1);
    const DoubleRing& R = pl.ring();
    const PointIndex a = pl.point_index({R.one(), R.zero(), R.zero()});
    CHECK(relate(pl, a, a).kind == RelationKind::Identical);
    for (FieldElem g2 = 0; g2 < 3; ++g2)
        for (FieldElem g3 = 0; g3 < 3; ++g3) {
            if (g2 == 0 && g3 == 0) continue;
            const PointIndex b = pl.point_index({R.one(), ge(R, g2), ge(R, g3)});
            CHECK(relate(pl, a, b).kind == RelationKind::Neighbour);
        }
    CHECK_THROWS_AS(joining_lines(pl, a, a), std::domain_error);
    CHECK_THROWS_AS(common_neighbours(pl, a, a), std::domain_error);
}

TEST_CASE("neighbourhood size is 2q(q+1) everywhere") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const FieldElem q = pl.field().q();
        for (PointIndex a = 0; a < pl.point_count(); ++a) {
            const auto nb = neighbourhood(pl, a);
            CHECK(nb.size() == std::size_t(2) * q * (q + 1));
            CHECK_FALSE(std::binary_search(nb.begin(), nb.end(), a));
        }
    }
}

TEST_CASE("neighbourhood of (1,0,0) is exactly the three coordinate families") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        const Plane pl(p, n);
        const DoubleRing& R = pl.ring();
        const FieldElem q = pl.field().q();
        const PointIndex a = pl.point_index({R.one(), R.zero(), R.zero()});
        const Families f = families_around_100(pl);

        CHECK(f.with_unit.size() == std::size_t(2) * (q * q - 1));
        CHECK(f.mixed.size() == std::size_t(2) * q);
        CHECK(f.pair.size() == 2);

        std::set<PointIndex> all;
        all.insert(f.with_unit.begin(), f.with_unit.end());
        all.insert(f.mixed.begin(), f.mixed.end());
        all.insert(f.pair.begin(), f.pair.end());
        CHECK(all.size() == f.with_unit.size() + f.mixed.size() + f.pair.size());

        const auto nb = neighbourhood(pl, a);
        CHECK(all == std::set<PointIndex>(nb.begin(), nb.end()));
    }
}

TEST_CASE("neighbourhood symmetry") {
    const Plane pl(2, 1);
    for (PointIndex a = 0; a < pl.point_count(); ++a)
        for (PointIndex b : neighbourhood(pl, a)) {
            const auto nb = neighbourhood(pl, b);
            CHECK(std::binary_search(nb.begin(), nb.end(), a));
        }
}

TEST_CASE("distant points share exactly the two overlap points") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const DoubleRing& R = pl.ring();
        const PointIndex a = pl.point_index({R.one(), R.zero(), R.zero()});
        const PointIndex b = pl.point_index({R.zero(), R.zero(), R.one()});
        const auto common = common_neighbours(pl, a, b);
        REQUIRE(common.size() == 2);
        std::set<PointIndex> expect = {pl.point_index({R.e(), R.zero(), R.e_minus_one()}),
                                       pl.point_index({R.e_minus_one(), R.zero(), R.e()})};
        CHECK(std::set<PointIndex>(common.begin(), common.end()) == expect);
        // those two overlap points close the family picture around both points
        CHECK(families_around_100(pl).pair == expect);
        CHECK(families_around_001(pl).pair == expect);
        // families around (0,0,1) tile its neighbourhood as well
        const Families fb = families_around_001(pl);
        std::set<PointIndex> all;
        all.insert(fb.with_unit.begin(), fb.with_unit.end());
        all.insert(fb.mixed.begin(), fb.mixed.end());
        all.insert(fb.pair.begin(), fb.pair.end());
        const auto nb = neighbourhood(pl, b);
        CHECK(all == std::set<PointIndex>(nb.begin(), nb.end()));
    }
}

TEST_CASE("neighbour pairs share q^2+q-1 neighbours, as the product view predicts") {
    // not a closed form asserted elsewhere: points sharing one projection with
    // both of two image-sharing points are the q^2+q-1 other points over the
    // shared image
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const FieldElem q = pl.field().q();
        for (PointIndex a = 0; a < pl.point_count(); a += 7)
            for (PointIndex b : neighbourhood(pl, a)) {
                if (b < a) continue;
                CHECK(common_neighbours(pl, a, b).size() == std::size_t(q) * q + q - 1);
            }
    }
}

TEST_CASE("overlap of every distant pair has size two, triples are empty") {
    const Plane pl(2, 1);
    const PointIndex N = pl.point_count();
    for (PointIndex a = 0; a < N; ++a)
        for (PointIndex b = a + 1; b < N; ++b) {
            if (relate(pl, a, b).kind != RelationKind::Distant) continue;
            const auto common = common_neighbours(pl, a, b);
            CHECK(common.size() == 2);
            for (PointIndex c = b + 1; c < N; ++c) {
                if (relate(pl, a, c).kind != RelationKind::Distant) continue;
                if (relate(pl, b, c).kind != RelationKind::Distant) continue;
                const auto nc = neighbourhood(pl, c);
                for (PointIndex x : common)
                    CHECK_FALSE(std::binary_search(nc.begin(), nc.end(), x));
            }
        }
}

TEST_CASE("the neighbour relation is not transitive") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        const Plane pl(p, n);
        const PointIndex x = pl.point_from_images(0, 0);
        const PointIndex y = pl.point_from_images(0, 1);
        const PointIndex z = pl.point_from_images(1, 1);
        CHECK(relate(pl, x, y).kind == RelationKind::Neighbour);
        CHECK(relate(pl, y, z).kind == RelationKind::Neighbour);
        CHECK(relate(pl, x, z).kind == RelationKind::Distant);
    }
}

TEST_CASE("definitional line counting agrees with the projection predicate") {
    const Plane pl(2, 1);
    const FieldElem q = 2;
    for (PointIndex a = 0; a < pl.point_count(); ++a)
        for (PointIndex b = a; b < pl.point_count(); ++b) {
            const Relation fast = relate(pl, a, b);
            const Relation slow = relate_definitional(pl, a, b);
            CHECK(fast.kind == slow.kind);
            CHECK(fast.joining_line_count == slow.joining_line_count);
            if (a != b)
                CHECK((slow.joining_line_count == 1 || slow.joining_line_count == q + 1));
        }
}

TEST_CASE("a line through a point meets 2q of its neighbours") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const FieldElem q = pl.field().q();
        for (PointIndex a = 0; a < pl.point_count(); ++a)
            for (LineIndex l : pl.lines_through_point(a))
                CHECK(line_neighbour_profile(pl, a, l) == 2 * q);
    }
    // spot check at q=4: profile is 8
    const Plane pl4(2, 2);
    const PointIndex a = 17;
    const LineIndex l = pl4.lines_through_point(a)[3];
    CHECK(line_neighbour_profile(pl4, a, l) == 8);
    // non-incident pair is a domain error
    const Plane pl2(2, 1);
    const DoubleRing& R = pl2.ring();
    const PointIndex p100 = pl2.point_index({R.one(), R.zero(), R.zero()});
    const LineIndex l100 = pl2.line_index({R.one(), R.zero(), R.zero()});
    CHECK_THROWS_AS(line_neighbour_profile(pl2, p100, l100), std::domain_error);
}

TEST_CASE("line covering by q+1 mutually distant points") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        for (LineIndex l = 0; l < pl.line_count(); ++l) CHECK(line_covering_check(pl, l));
    }
}

TEST_CASE("neighbour graph is 2q(q+1)-regular") {
    {
        const Plane pl(2, 1);
        const NeighbourGraph g = neighbour_graph(pl);
        CHECK(g.vertex_count == 49);
        CHECK(g.edges.size() == 294); // 49*12/2
        for (auto d : g.degrees) CHECK(d == 12);
        for (const auto& e : g.edges) CHECK(e[0] < e[1]);
    }
    {
        const Plane pl(3, 1);
        const NeighbourGraph g = neighbour_graph(pl);
        CHECK(g.vertex_count == 169);
        CHECK(g.edges.size() == 2028); // 169*24/2
        for (auto d : g.degrees) CHECK(d == 24);
    }
}

TEST_CASE("line pairs meet in 1 or q+1 points") {
    const Plane pl(2, 1);
    for (LineIndex l1 = 0; l1 < pl.line_count(); ++l1) {
        const auto a = pl.points_on_line(l1);
        for (LineIndex l2 = l1 + 1; l2 < pl.line_count(); ++l2) {
            const auto b = pl.points_on_line(l2);
            std::vector<PointIndex> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            CHECK((inter.size() == 1 || inter.size() == 3));
            CHECK(inter.size() == relate(pl, l1, l2).joining_line_count);
        }
    }
}

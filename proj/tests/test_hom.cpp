#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "ringplane/hom.hpp"

using namespace ringplane;

namespace {

DoubleNumber ge(const DoubleRing& R, FieldElem g) { return R.mul(R.embed(g), R.e()); }
DoubleNumber he1(const DoubleRing& R, FieldElem h) { return R.mul(R.embed(h), R.e_minus_one()); }

std::set<PgIndex> images_of(const Plane& pl, HomTag tag, const std::vector<Triple>& triples) {
    std::set<PgIndex> out;
    for (const Triple& t : triples)
        out.insert(pl.pg().index_of(project_class(pl.pg(), tag, t)));
    return out;
}

} // namespace

TEST_CASE("projection basics") {
    const DoubleRing R(3, 1);
    CHECK(project(HomTag::Hat, R.e()) == 0);
    CHECK(project(HomTag::Tilde, R.e()) == 1);
    CHECK(project(HomTag::Hat, R.e_minus_one()) == 2); // -1 in GF(3)
    CHECK(project(HomTag::Tilde, R.e_minus_one()) == 0);
    CHECK(project(HomTag::Hat, R.one()) == 1);
    CHECK(project(HomTag::Tilde, R.one()) == 1);
}

TEST_CASE("kernels are exactly the two ideals") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        const DoubleRing R(p, n);
        const FieldElem q = R.field().q();
        std::vector<DoubleNumber> ker_hat, ker_tilde;
        for (FieldElem a = 0; a < q; ++a)
            for (FieldElem b = 0; b < q; ++b) {
                const DoubleNumber x{a, b};
                if (project(HomTag::Hat, x) == 0) ker_hat.push_back(x);
                if (project(HomTag::Tilde, x) == 0) ker_tilde.push_back(x);
            }
        CHECK(ker_hat == R.ideal_elements(IdealTag::E));
        CHECK(ker_tilde == R.ideal_elements(IdealTag::EMinusOne));
    }
}

TEST_CASE("projection is a ring homomorphism") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        const DoubleRing R(p, n);
        const GaloisField& gf = R.field();
        const FieldElem q = gf.q();
        for (HomTag tag : {HomTag::Hat, HomTag::Tilde}) {
            CHECK(project(tag, R.one()) == 1);
            for (FieldElem a = 0; a < q; ++a)
                for (FieldElem b = 0; b < q; ++b)
                    for (FieldElem c = 0; c < q; ++c)
                        for (FieldElem d = 0; d < q; ++d) {
                            const DoubleNumber x{a, b}, y{c, d};
                            CHECK(project(tag, R.add(x, y)) ==
                                  gf.add(project(tag, x), project(tag, y)));
                            CHECK(project(tag, R.mul(x, y)) ==
                                  gf.mul(project(tag, x), project(tag, y)));
                        }
        }
    }
}

TEST_CASE("images of the neighbour families around (1,0,0)") {
    const Plane pl(3, 1);
    const DoubleRing& R = pl.ring();
    const FieldElem q = 3;
    const PgPlane& pg = pl.pg();
    const PgIndex img_100 = pg.index_of({1, 0, 0});

    std::vector<Triple> first_e, first_e1, mixed_e, mixed_e1;
    for (FieldElem g2 = 0; g2 < q; ++g2)
        for (FieldElem g3 = 0; g3 < q; ++g3) {
            if (g2 == 0 && g3 == 0) continue;
            first_e.push_back({R.one(), ge(R, g2), ge(R, g3)});
            first_e1.push_back({R.one(), he1(R, g2), he1(R, g3)});
        }
    for (FieldElem g3 = 0; g3 < q; ++g3) {
        mixed_e.push_back({R.e_minus_one(), R.e(), ge(R, g3)});
        mixed_e1.push_back({R.e(), R.e_minus_one(), he1(R, g3)});
    }
    const Triple pair_a{R.e_minus_one(), R.zero(), R.e()};
    const Triple pair_b{R.e(), R.zero(), R.e_minus_one()};

    // the <e>-decorated coordinates die under hat: everything merges on (1,0,0)
    CHECK(images_of(pl, HomTag::Hat, first_e) == std::set<PgIndex>{img_100});
    // while the <e-1>-decorated ones spread over all (1,s,t) != (1,0,0)
    std::set<PgIndex> spread_expect;
    for (FieldElem s = 0; s < q; ++s)
        for (FieldElem t = 0; t < q; ++t)
            if (!(s == 0 && t == 0)) spread_expect.insert(pg.index_of({1, s, t}));
    CHECK(images_of(pl, HomTag::Hat, first_e1) == spread_expect);
    // and the two families swap under tilde
    CHECK(images_of(pl, HomTag::Tilde, first_e1) == std::set<PgIndex>{img_100});
    CHECK(images_of(pl, HomTag::Tilde, first_e) == spread_expect);

    CHECK(images_of(pl, HomTag::Hat, mixed_e) == std::set<PgIndex>{img_100});
    std::set<PgIndex> second_row;
    for (FieldElem t = 0; t < q; ++t) second_row.insert(pg.index_of({0, 1, t}));
    CHECK(images_of(pl, HomTag::Hat, mixed_e1) == second_row);
    CHECK(images_of(pl, HomTag::Tilde, mixed_e1) == std::set<PgIndex>{img_100});
    CHECK(images_of(pl, HomTag::Tilde, mixed_e) == second_row);

    CHECK(project_class(pg, HomTag::Hat, pair_a) == PgTriple{1, 0, 0});
    CHECK(project_class(pg, HomTag::Hat, pair_b) == PgTriple{0, 0, 1});
    CHECK(project_class(pg, HomTag::Tilde, pair_a) == PgTriple{0, 0, 1});
    CHECK(project_class(pg, HomTag::Tilde, pair_b) == PgTriple{1, 0, 0});
}

TEST_CASE("point images determine the point uniquely") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const PgIndex npg = pl.pg().size();
        std::set<std::pair<PgIndex, PgIndex>> seen;
        for (PointIndex i = 0; i < pl.point_count(); ++i) {
            const auto [h, t] = pl.point_images(i);
            CHECK(h == image_index(pl, HomTag::Hat, i));
            CHECK(t == image_index(pl, HomTag::Tilde, i));
            seen.insert({h, t});
            CHECK(pl.point_from_images(h, t) == i);
        }
        CHECK(seen.size() == std::size_t(npg) * npg);
    }
}

TEST_CASE("incidence is preserved by both reductions") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const PgPlane& pg = pl.pg();
        for (LineIndex l = 0; l < pl.line_count(); ++l) {
            const auto [l1, l2] = pl.line_images(l);
            for (PointIndex x = 0; x < pl.point_count(); ++x) {
                if (!pl.incident(l, x)) continue;
                const auto [p1, p2] = pl.point_images(x);
                CHECK(pg.incident(l1, p1));
                CHECK(pg.incident(l2, p2));
            }
        }
    }
}

TEST_CASE("neither reduction preserves the neighbour relation") {
    const Plane pl(2, 1);
    // two neighbours with equal hat images
    const PointIndex a = pl.point_from_images(0, 0);
    const PointIndex merged = pl.point_from_images(0, 1);
    const PointIndex spread = pl.point_from_images(1, 0);
    CHECK(relate(pl, a, merged).kind == RelationKind::Neighbour);
    CHECK(relate(pl, a, spread).kind == RelationKind::Neighbour);
    CHECK(image_index(pl, HomTag::Hat, a) == image_index(pl, HomTag::Hat, merged));
    CHECK(image_index(pl, HomTag::Hat, a) != image_index(pl, HomTag::Hat, spread));
}

TEST_CASE("the neighbourhood splits in halves, spread bijective") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const FieldElem q = pl.field().q();
        const PgIndex npg = pl.pg().size();
        const std::size_t half = std::size_t(q) * (q + 1);
        for (PointIndex a = 0; a < pl.point_count(); ++a) {
            for (HomTag tag : {HomTag::Hat, HomTag::Tilde}) {
                const NeighbourSplit s = neighbourhood_split(pl, a, tag);
                CHECK(s.merged.size() == half);
                CHECK(s.spread.size() == half);
                std::set<PgIndex> targets;
                for (const auto& [b, img] : s.spread) {
                    CHECK(img != s.image);
                    targets.insert(img);
                }
                CHECK(targets.size() == npg - 1u); // onto PG minus the image
            }
            const NeighbourSplit hat = neighbourhood_split(pl, a, HomTag::Hat);
            const NeighbourSplit tilde = neighbourhood_split(pl, a, HomTag::Tilde);
            std::vector<PointIndex> unionised;
            std::merge(hat.merged.begin(), hat.merged.end(), tilde.merged.begin(),
                       tilde.merged.end(), std::back_inserter(unionised));
            CHECK(unionised == neighbourhood(pl, a));
        }
    }
}

TEST_CASE("the q=2 split is six merged plus six spread over the Fano plane") {
    const Plane pl(2, 1);
    const DoubleRing& R = pl.ring();
    const PointIndex a = pl.point_index({R.one(), R.zero(), R.zero()});
    const NeighbourSplit s = neighbourhood_split(pl, a, HomTag::Hat);
    CHECK(s.merged.size() == 6);
    CHECK(s.spread.size() == 6);
    std::set<PgIndex> targets;
    for (const auto& [b, img] : s.spread) targets.insert(img);
    std::set<PgIndex> others;
    for (PgIndex i = 0; i < pl.pg().size(); ++i)
        if (i != s.image) others.insert(i);
    CHECK(targets == others);
}

TEST_CASE("merged and spread swap roles between the two reductions") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        const Plane pl(p, n);
        for (PointIndex a = 0; a < pl.point_count(); ++a) CHECK(complementarity_check(pl, a));
    }
}

TEST_CASE("line fibres are balanced over the image line") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        const Plane pl(p, n);
        const FieldElem q = pl.field().q();
        const DoubleRing& R = pl.ring();
        const LineIndex l = pl.line_index({R.one(), R.zero(), R.zero()});
        for (HomTag tag : {HomTag::Hat, HomTag::Tilde}) {
            const LineFibres f = line_fibre_decomposition(pl, l, tag);
            CHECK(f.fibres.size() == q + 1u);
            std::set<PgIndex> images;
            for (const FibreGroup& g : f.fibres) {
                CHECK(g.members.size() == q + 1u);
                images.insert(g.image);
            }
            const auto& on_image_line = pl.pg().points_on_line(f.image_line);
            CHECK(images == std::set<PgIndex>(on_image_line.begin(), on_image_line.end()));
        }
    }
}

TEST_CASE("images of the line (1,0,0) groups swap between the reductions") {
    const Plane pl(3, 1);
    const DoubleRing& R = pl.ring();
    const PgPlane& pg = pl.pg();
    const FieldElem q = 3;

    std::vector<Triple> g_mid, h_mid, g_last, h_last;
    for (FieldElem v = 1; v < q; ++v) {
        g_mid.push_back({R.zero(), R.one(), ge(R, v)});   // (0, 1, ge)
        h_mid.push_back({R.zero(), R.one(), he1(R, v)});  // (0, 1, h(e-1))
        g_last.push_back({R.zero(), ge(R, v), R.one()});  // (0, ge, 1)
        h_last.push_back({R.zero(), he1(R, v), R.one()}); // (0, h(e-1), 1)
    }
    const std::set<PgIndex> only_010 = {pg.index_of({0, 1, 0})};
    const std::set<PgIndex> only_001 = {pg.index_of({0, 0, 1})};
    std::set<PgIndex> row_nonzero, col_nonzero;
    for (FieldElem t = 1; t < q; ++t) {
        row_nonzero.insert(pg.index_of({0, 1, t}));
        col_nonzero.insert(pg.index_of({0, t, 1}));
    }

    CHECK(images_of(pl, HomTag::Hat, g_mid) == only_010);
    CHECK(images_of(pl, HomTag::Hat, h_mid) == row_nonzero);
    CHECK(images_of(pl, HomTag::Tilde, g_mid) == row_nonzero);
    CHECK(images_of(pl, HomTag::Tilde, h_mid) == only_010);

    CHECK(images_of(pl, HomTag::Hat, g_last) == only_001);
    CHECK(images_of(pl, HomTag::Hat, h_last) == col_nonzero);
    CHECK(images_of(pl, HomTag::Tilde, g_last) == col_nonzero);
    CHECK(images_of(pl, HomTag::Tilde, h_last) == only_001);

    const Triple swap_a{R.zero(), R.e(), R.e_minus_one()};
    const Triple swap_b{R.zero(), R.e_minus_one(), R.e()};
    CHECK(project_class(pg, HomTag::Hat, swap_a) == PgTriple{0, 0, 1});
    CHECK(project_class(pg, HomTag::Hat, swap_b) == PgTriple{0, 1, 0});
    CHECK(project_class(pg, HomTag::Tilde, swap_a) == PgTriple{0, 1, 0});
    CHECK(project_class(pg, HomTag::Tilde, swap_b) == PgTriple{0, 0, 1});
}

TEST_CASE("every PG point has q^2+q+1 preimages under each reduction") {
    const Plane pl(3, 1);
    const PgIndex npg = pl.pg().size();
    std::vector<std::uint32_t> hat_count(npg, 0), tilde_count(npg, 0);
    for (PointIndex i = 0; i < pl.point_count(); ++i) {
        const auto [h, t] = pl.point_images(i);
        ++hat_count[h];
        ++tilde_count[t];
    }
    for (PgIndex i = 0; i < npg; ++i) {
        CHECK(hat_count[i] == npg);
        CHECK(tilde_count[i] == npg);
    }
}

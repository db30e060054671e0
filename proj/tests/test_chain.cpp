#include "doctest.h"
#include "fixtures.hpp"

#include "steenrod/coherent.hpp"
#include "steenrod/corpus.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/exact.hpp"

using namespace steenrod;
using namespace steenrod::fixtures;

TEST_CASE("homology examples") {
    auto c = circle3();
    CHECK(homology(c, 0).to_string() == "Z");
    CHECK(homology(c, 1).to_string() == "Z");
    CHECK(homology(c, 2).is_trivial());
    CHECK(homology(c, -4).is_trivial());
    CHECK(homology(point(), 0).to_string() == "Z");
    CHECK(homology(disk(), 0).is_trivial());
    CHECK(homology(disk(), 1).is_trivial());
}

TEST_CASE("complexes reject dd != 0 and bad shapes") {
    CHECK_THROWS_AS(ChainComplex(0, {1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}}), ValidationError);
    CHECK_THROWS_AS(ChainComplex(0, {1, 2}, {IntMatrix{{1}}}), ValidationError);
    CHECK_THROWS_AS(ChainMap(circle3(), circle3(), {IntMatrix::identity(3), IntMatrix::zero(3, 3)}), ValidationError);
}

TEST_CASE("mapping cone examples") {
    auto c = circle3();
    auto id_cone = mapping_cone(ChainMap::identity(c)).complex;
    for (int n = -1; n <= 3; ++n) CHECK(homology(id_cone, n).is_trivial());

    // zero map: H_n(cone) = H_{n-1}(L) + H_n(M), L = circle + point, M = circle
    auto l = direct_sum(c, point());
    auto zero_cone = mapping_cone(ChainMap::zero(l, c)).complex;
    for (int n = 0; n <= 2; ++n) {
        auto expected = direct_sum(homology(l, n - 1), homology(c, n));
        CHECK(homology(zero_cone, n).isomorphic(expected));
    }

    auto cone2 = mapping_cone(circle_double()).complex;
    CHECK(cone2.rank(1) == 6);
    CHECK(cone2.rank(2) == 3);
    CHECK(homology(cone2, 1).to_string() == "Z/2");
    CHECK(homology(cone2, 0).is_trivial());
    CHECK(homology(cone2, 2).is_trivial());
}

TEST_CASE("cone differential has the block form") {
    auto f = circle_double();
    auto cone = mapping_cone(f).complex;
    auto d = cone.differential(1);  // L_0 + M_1 -> M_0
    CHECK(d.block(0, 0, 3, 3) == f.component(0));
    CHECK(d.block(0, 3, 3, 3) == -circle3().differential(1));
    auto d2 = cone.differential(2);  // L_1 -> L_0 + M_1
    CHECK(d2.block(0, 0, 3, 3) == circle3().differential(1));
    CHECK(d2.block(3, 0, 3, 3) == f.component(1));
}

TEST_CASE("induced on homology examples") {
    auto c = circle3();
    CHECK(induced_on_homology(ChainMap::identity(c), 1).canonical_matrix() == IntMatrix{{1}});
    auto two = induced_on_homology(circle_double(), 1).canonical_matrix();
    CHECK(abs(two(0, 0)) == 2);
    CHECK(induced_on_homology(ChainMap::zero(c, disk()), 0).is_zero());
}

TEST_CASE("cone functor map examples") {
    auto f = circle_double();
    auto id = cone_functor_map(CoherentChainMorphism::identity(f));
    CHECK(GradedMap(id) == GradedMap(ChainMap::identity(mapping_cone(f).complex)));

    // strict morphism: block diagonal
    auto c = circle3();
    auto strict = CoherentChainMorphism::strict(f, f, 3 * ChainMap::identity(c), 3 * ChainMap::identity(c));
    auto m = cone_functor_map(strict);
    CHECK(m.component(1) == 3 * IntMatrix::identity(6));

    // nonstrict: on the disk, (0, id) with g phi1 = 0 and phi2 f = id, homotopic via h = -1
    auto d = disk();
    auto idd = ChainMap::identity(d);
    GradedMap h(d, d, 1, {IntMatrix{{-1}}});
    CoherentChainMorphism phi{idd, idd, ChainMap::zero(d, d), idd, h};
    CHECK_FALSE(compose(phi.g, phi.phi1) == compose(phi.phi2, phi.f));
    CHECK_NOTHROW(phi.validate());
    CHECK_NOTHROW(cone_functor_map(phi));

    CoherentChainMorphism bad{idd, idd, ChainMap::zero(d, d), idd, GradedMap::zero(d, d, 1)};
    CHECK_THROWS_AS(cone_functor_map(bad), IncoherentMorphism);
}

TEST_CASE("cone functor homotopy examples") {
    auto f = circle_double();
    auto id = CoherentChainMorphism::identity(f);
    CoherentChainHomotopy zero{GradedMap::zero(f.source(), f.source(), 1), GradedMap::zero(f.target(), f.target(), 1),
                               GradedMap::zero(f.source(), f.target(), 2)};
    CHECK(cone_functor_homotopy(zero, id, id).is_zero());

    // levelwise homotopic strict morphisms on the disk: 0 => id via h = 1, corrector zero
    auto d = disk();
    auto idd = ChainMap::identity(d);
    auto zd = ChainMap::zero(d, d);
    auto phi = CoherentChainMorphism::strict(zd, zd, zd, zd);
    auto psi = CoherentChainMorphism::strict(zd, zd, idd, idd);
    GradedMap h(d, d, 1, {IntMatrix{{1}}});
    CoherentChainHomotopy dd{h, h, GradedMap::zero(d, d, 2)};
    auto dsharp = cone_functor_homotopy(dd, phi, psi);
    // (l, m) -> (h l, -h m): C_0 = M_0 -> L_0 + M_1 and C_1 = L_0 + M_1 -> L_1
    CHECK(dsharp.component(0) == IntMatrix{{0}, {-1}});
    CHECK(dsharp.component(1) == IntMatrix{{1, 0}});

    // forced corrector: L = Z[0], M = P = 0, Q = (Z[2] -1-> Z[1]); phi12 = 0, psi12 = -1, D12 = 1
    ChainComplex l(0, {1}, {});
    ChainComplex q(1, {1, 1}, {IntMatrix{{1}}});
    ChainComplex zero_c;
    auto fz = ChainMap::zero(l, zero_c);
    auto gz = ChainMap::zero(zero_c, q);
    CoherentChainMorphism a{fz, gz, ChainMap::zero(l, zero_c), ChainMap::zero(zero_c, q), GradedMap::zero(l, q, 1)};
    CoherentChainMorphism b{fz, gz, ChainMap::zero(l, zero_c), ChainMap::zero(zero_c, q), GradedMap(l, q, 1, {IntMatrix{{-1}}})};
    CoherentChainHomotopy forced{GradedMap::zero(l, zero_c, 1), GradedMap::zero(zero_c, q, 1),
                                 GradedMap(l, q, 2, {IntMatrix{{1}}})};
    CHECK_NOTHROW(forced.validate(a, b));
    auto hs = cone_functor_homotopy(forced, a, b);
    CHECK_FALSE(hs.is_zero());
    CoherentChainHomotopy wrong{forced.d1, forced.d2, GradedMap::zero(l, q, 2)};
    CHECK_THROWS_AS(cone_functor_homotopy(wrong, a, b), IncoherentHomotopy);
}

TEST_CASE("compose_coherent examples") {
    auto f = circle_double();
    auto c = circle3();
    auto id = CoherentChainMorphism::identity(f);
    auto s = CoherentChainMorphism::strict(f, f, 2 * ChainMap::identity(c), 2 * ChainMap::identity(c));
    auto left = compose_coherent(id, s);
    CHECK(GradedMap(left.phi1) == GradedMap(s.phi1));
    CHECK(left.phi12.is_zero());
    auto ss = compose_coherent(s, s);
    CHECK(ss.phi12.is_zero());

    auto d = disk();
    auto idd = ChainMap::identity(d);
    CoherentChainMorphism phi{idd, idd, ChainMap::zero(d, d), idd, GradedMap(d, d, 1, {IntMatrix{{-1}}})};
    auto three = CoherentChainMorphism::strict(idd, idd, 3 * idd, 3 * idd);
    auto comp = compose_coherent(phi, three);  // three after phi
    CHECK(comp.phi12 == 3 * phi.phi12);
}

TEST_CASE("cone sequence of a single map is exact") {
    for (const auto& f : {circle_double(), ChainMap::identity(circle3()), ChainMap::zero(circle3(), disk())}) {
        auto ses = cone_sequence(f);
        CHECK(certify_ses(ses).ok());
        auto les = homology_sequence(ses, -1, 3);
        CHECK(les.composites_vanish());
        CHECK(les.exact());
    }
}

TEST_CASE("random corpus: cone identities and homotopy invariance") {
    CorpusGenerator gen(2024);
    for (int trial = 0; trial < 25; ++trial) {
        auto f = gen.chain_map();
        auto cone_id = mapping_cone(ChainMap::identity(f.target())).complex;
        for (int n = cone_id.lo(); n <= cone_id.hi(); ++n) CHECK(homology(cone_id, n).is_trivial());

        auto ses = cone_sequence(f);
        CHECK(certify_ses(ses).ok());
        auto c = ses.i.target();
        CHECK(homology_sequence(ses, c.lo() - 1, c.hi() + 1).exact());

        auto pair = gen.coherent_pair();
        auto a = cone_functor_map(pair.phi);
        auto b = cone_functor_map(pair.psi);
        auto h = cone_functor_homotopy(pair.d, pair.phi, pair.psi);
        const auto& src = a.source();
        for (int n = src.lo(); n <= src.hi(); ++n)
            CHECK(equal_maps(induced_on_homology(a, n), induced_on_homology(b, n)));
        (void)h;

        auto next = gen.coherent_successor(pair.phi);
        auto comp = compose_coherent(pair.phi, next);
        auto lhs = cone_functor_map(comp);
        auto mid = cone_functor_map(next);
        for (int n = src.lo(); n <= src.hi(); ++n) {
            CHECK(equal_maps(induced_on_homology(lhs, n),
                             compose(induced_on_homology(mid, n), induced_on_homology(a, n))));
        }
    }
}

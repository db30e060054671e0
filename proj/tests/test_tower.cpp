#include "doctest.h"
#include "fixtures.hpp"

#include "steenrod/corpus.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/limits.hpp"

using namespace steenrod;
using namespace steenrod::fixtures;

namespace {

// Levelwise multiplication by k on a map tower whose bonds are arbitrary.
TowerMorphism scalar_morphism(const MapTower& f, long k) {
    TowerMorphism m;
    m.source = f;
    m.target = f;
    for (const auto& g : f.maps) {
        m.levels.push_back(CoherentChainMorphism::strict(g, g, Integer(k) * ChainMap::identity(g.source()),
                                                         Integer(k) * ChainMap::identity(g.target())));
    }
    return m;
}

MapTower trivial_domain(const Tower& t) {
    MapTower f;
    f.codomain = t;
    f.domain = Tower::constant(ChainComplex(), t.length());
    for (const auto& c : t.levels) f.maps.push_back(ChainMap::zero(ChainComplex(), c));
    return f;
}

MapTower trivial_codomain(const Tower& t) {
    MapTower f;
    f.domain = t;
    f.codomain = Tower::constant(ChainComplex(), t.length());
    for (const auto& c : t.levels) f.maps.push_back(ChainMap::zero(c, ChainComplex()));
    return f;
}

MapTower levelwise_identity(const Tower& t) {
    MapTower f{t, t, {}};
    for (const auto& c : t.levels) f.maps.push_back(ChainMap::identity(c));
    return f;
}

bool is_iso(const Homomorphism& h) { return h.is_injective() && h.is_surjective(); }

}  // namespace

TEST_CASE("product complex examples") {
    auto one = Tower::constant(circle3(), 1);
    CHECK(product_complex(one) == circle3());
    auto two = Tower::constant(circle3(), 2);
    CHECK(product_complex(two).rank(0) == 6);
    CHECK(product_complex(two).rank(1) == 6);
    // three triangle levels joined by chain-level degree-2 bonds
    auto t = doubling_tower(3);
    CHECK(product_complex(t).rank(0) == 9);
    CHECK(product_complex(t).rank(1) == 9);
}

TEST_CASE("shift difference examples") {
    auto t = Tower::constant(circle3(), 2);
    auto s = shift_difference(t);
    for (int n : {0, 1}) CHECK(s.component(n) == hstack(-IntMatrix::identity(3), IntMatrix::identity(3)));
    CHECK_THROWS_AS(shift_difference(Tower::constant(circle3(), 1)), TowerTooShort);

    // compatible families of the constant tower are diagonal
    GroupTower g;
    auto h = homology(circle3(), 1);
    g.groups.assign(3, h);
    g.bonds.assign(2, Homomorphism::identity(h));
    CHECK(shift_homomorphism(g).kernel().isomorphic(h));

    // on the fundamental cycle, (a z, b z, c z) -> ((2b - a) z, (2c - b) z)
    auto d = shift_difference(doubling_tower(3));
    std::vector<Integer> x;
    for (long k : {5, -1, 4})
        for (long e : {1, -1, 1}) x.push_back(k * e);
    auto y = d.component(1).apply(x);
    std::vector<Integer> expected;
    for (long k : {2 * -1 - 5, 2 * 4 + 1})
        for (long e : {1, -1, 1}) expected.push_back(k * e);
    CHECK(y == expected);
}

TEST_CASE("pair shift difference examples") {
    auto f = levelwise_identity(Tower::constant(circle3(), 2));
    auto s = pair_shift_difference(f);
    auto cone_rank = mapping_cone(ChainMap::identity(circle3())).complex.rank(1);
    CHECK(s.component(1) == hstack(-IntMatrix::identity(cone_rank), IntMatrix::identity(cone_rank)));

    // domain coordinates of the pair shift reproduce the domain shift
    auto g = constant_map_tower(base_point(), 3);
    g.domain = Tower::constant(point(), 3);
    auto pair = pair_shift_difference(g);
    auto dom = shift_difference(g.domain);
    // degree 1 of each cone is (point_0 | circle_1) = 1 + 3 generators
    auto c = pair.component(1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(c(4 * i, 4 * j) == dom.component(0)(i, j));

    // solenoid over solenoid: degree-2 bonds, levelwise multiplication by 3
    MapTower sol{doubling_tower(3), doubling_tower(3), {}};
    sol.maps.assign(3, Integer(3) * ChainMap::identity(circle3()));
    CHECK_NOTHROW(sol.validate());
    CHECK_NOTHROW(pair_shift_difference(sol));
}

TEST_CASE("strong homology examples") {
    auto id_point = constant_map_tower(ChainMap::identity(point()), 2);
    // two level cones of rank 2 in the source, one in the target
    CHECK(mapping_cone(pair_shift_difference(id_point)).complex.total_rank() == 6);
    CHECK(strong_homology(id_point, 0).is_trivial());

    auto id_circle = constant_map_tower(ChainMap::identity(circle3()), 3);
    for (int n = -1; n <= 2; ++n) CHECK(strong_homology(id_circle, n).is_trivial());

    auto incl = constant_map_tower(base_point(), 3);
    CHECK(strong_homology(incl, 1).isomorphic(homology(mapping_cone(base_point()).complex, 1)));
    CHECK(strong_homology(incl, 1).to_string() == "Z");
    CHECK(strong_homology(incl, 0).is_trivial());
}

TEST_CASE("sigma / partial sequence examples") {
    auto t = doubling_tower(3);
    auto dom = sigma_partial_ses(trivial_domain(t));
    CHECK(dom.certificate.ok());
    CHECK(dom.ses.p.is_zero());
    for (int n = dom.ses.i.source().lo(); n <= dom.ses.i.source().hi(); ++n) {
        auto m = dom.ses.i.component(n);
        CHECK(m.rows() == m.cols());
        CHECK(abs(determinant(m)) == 1);
    }
    auto cod = sigma_partial_ses(trivial_codomain(t));
    CHECK(cod.certificate.ok());
    CHECK(cod.ses.i.is_zero());
    for (int n = cod.ses.p.source().lo(); n <= cod.ses.p.source().hi(); ++n) {
        auto m = cod.ses.p.component(n);
        CHECK(m.rows() == m.cols());
        CHECK(abs(determinant(m)) == 1);
    }
    CHECK(sigma_partial_ses(constant_map_tower(base_point(), 3)).certificate.ok());
}

TEST_CASE("long exact sequence examples") {
    auto t = doubling_tower(3);
    // levelwise identity: Hbar(f) = 0 and E is an isomorphism
    auto les = long_exact_sequence(levelwise_identity(t), -1, 2);
    CHECK(les.exact());
    for (std::size_t k = 1; k < les.groups.size(); k += 3) CHECK(les.groups[k].is_trivial());
    for (std::size_t k = 2; k < les.maps.size(); k += 3) CHECK(is_iso(les.maps[k]));

    // trivial codomain: Hbar_n(f) -> Hbar_{n-1}(X) is an isomorphism
    auto cod = long_exact_sequence(trivial_codomain(t), -1, 2);
    CHECK(cod.exact());
    for (std::size_t k = 1; k < cod.maps.size(); k += 3) CHECK(is_iso(cod.maps[k]));
    CHECK(cod.labels[1] == "Hbar_2(f)");
    CHECK(cod.labels[2] == "Hbar_1(X)");

    auto incl = long_exact_sequence(constant_map_tower(base_point(), 3), -1, 2);
    CHECK(incl.composites_vanish());
    CHECK(incl.exact());
}

TEST_CASE("induced morphism examples") {
    auto incl = constant_map_tower(base_point(), 3);
    incl.codomain = doubling_tower(3);
    REQUIRE_NOTHROW(incl.validate());
    CHECK(strong_homology(incl, 1).to_string() == "Z");

    auto id = induced_morphism(TowerMorphism::identity(incl), 1);
    CHECK(equal_maps(id, Homomorphism::identity(id.source())));

    auto three = induced_morphism(scalar_morphism(incl, 3), 1);
    CHECK(three.canonical_matrix() == IntMatrix{{3}});

    // into a levelwise acyclic target
    auto acyclic = levelwise_identity(Tower::constant(circle3(), 3));
    TowerMorphism to_acyclic;
    to_acyclic.source = incl;
    to_acyclic.target = acyclic;
    for (std::size_t i = 0; i < 3; ++i) {
        to_acyclic.levels.push_back(CoherentChainMorphism::strict(
            incl.maps[i], acyclic.maps[i], ChainMap(compose(base_point(), ChainMap::identity(point()))),
            ChainMap::identity(circle3())));
    }
    // bonds differ (doubling vs identity), so this is not a tower morphism
    CHECK_THROWS_AS(to_acyclic.validate(), IncoherentMorphism);
    auto flat = constant_map_tower(base_point(), 3);
    to_acyclic.source = flat;
    for (std::size_t i = 0; i < 3; ++i) to_acyclic.levels[i].f = flat.maps[i];
    CHECK(induced_morphism(to_acyclic, 1).is_zero());
}

TEST_CASE("reindexing keeps the finite-truncation value") {
    CorpusGenerator gen(17);
    for (int trial = 0; trial < 5; ++trial) {
        auto f = gen.map_tower(4);
        auto r = reindex(f, {0, 2, 3});
        CHECK_NOTHROW(r.validate());
        for (int n = 0; n <= 3; ++n) CHECK(strong_homology(r, n).isomorphic(strong_homology(f, n)));
    }
}

TEST_CASE("random corpus: shift maps, sequences and truncation identity") {
    CorpusGenerator gen(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = gen.map_tower();
        CHECK_NOTHROW(shift_difference(f.domain));
        CHECK_NOTHROW(pair_shift_difference(f));
        auto sp = sigma_partial_ses(f);
        CHECK(sp.certificate.ok());
        auto les = long_exact_sequence(f, -1, 4);
        CHECK(les.exact());
        const auto& last = f.domain.levels.back();
        for (int n = -1; n <= 4; ++n) {
            CHECK(homology(mapping_cone(shift_difference(f.domain)).complex, n + 1).isomorphic(homology(last, n)));
            CHECK(strong_homology(f, n).isomorphic(homology(mapping_cone(f.maps.back()).complex, n)));
        }
    }
}

TEST_CASE("random corpus: naturality and homotopy invariance") {
    CorpusGenerator gen(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = gen.tower_morphism();
        auto ladder = induced_ses_morphism(m);
        CHECK(ladder_commutes_on_chains(ladder));
        for (const auto& c : check_ladder(ladder, -1, 5)) CHECK(c.ok());

        auto pair = gen.tower_homotopy_pair();
        auto h = strong_homotopy(pair.d, pair.phi, pair.psi);
        CHECK(h.from() == strong_chain_map(pair.phi));
        for (int n = -1; n <= 4; ++n)
            CHECK(equal_maps(induced_morphism(pair.phi, n), induced_morphism(pair.psi, n)));
    }
}

#include "doctest.h"
#include "fixtures.hpp"

#include "steenrod/corpus.hpp"
#include "steenrod/limits.hpp"
#include "steenrod/polynomial.hpp"

using namespace steenrod;
using namespace steenrod::fixtures;

namespace {

GroupTower endo_tower(const FgAbGroup& g, const IntMatrix& m) { return GroupTower::constant(g, Homomorphism(g, g, m)); }

FgAbGroup cyclic(long d) { return FgAbGroup::from_invariants({Integer(d)}, 0); }

// Oracle for the finite-group limit: the eventual image, by brute force on elements.
std::size_t stable_image_size(long d, long k) {
    std::vector<bool> in(static_cast<std::size_t>(d), true);
    for (int step = 0; step < 64; ++step) {
        std::vector<bool> next(static_cast<std::size_t>(d), false);
        for (long x = 0; x < d; ++x)
            if (in[static_cast<std::size_t>(x)]) next[static_cast<std::size_t>(((k * x) % d + d) % d)] = true;
        in = next;
    }
    std::size_t n = 0;
    for (bool b : in) n += b;
    return n;
}

}  // namespace

TEST_CASE("inverse limit examples") {
    auto z = FgAbGroup::free(1);
    CHECK(inverse_limit(endo_tower(z, IntMatrix{{1}})).to_string() == "Z");
    CHECK(inverse_limit(endo_tower(z, IntMatrix{{2}})).is_trivial());
    CHECK(inverse_limit(endo_tower(cyclic(4), IntMatrix{{2}})).is_trivial());
    CHECK(inverse_limit(endo_tower(cyclic(6), IntMatrix{{2}})).to_string() == "Z/3");
    CHECK(inverse_limit(endo_tower(z, IntMatrix{{-1}})).to_string() == "Z");
    // Fibonacci bonds are invertible over Z; a nilpotent block contributes nothing
    CHECK(inverse_limit(endo_tower(FgAbGroup::free(2), IntMatrix{{1, 1}, {1, 0}})).free_rank() == 2);
    CHECK(inverse_limit(endo_tower(FgAbGroup::free(2), IntMatrix{{0, 1}, {0, 0}})).is_trivial());
    CHECK(inverse_limit(endo_tower(FgAbGroup::free(2), IntMatrix{{2, 1}, {0, 1}})).to_string() == "Z");

    // finite towers: lim = A_N
    GroupTower t;
    t.groups = {z, z, z};
    t.bonds = {Homomorphism(z, z, IntMatrix{{2}}), Homomorphism(z, z, IntMatrix{{3}})};
    CHECK(inverse_limit(t).to_string() == "Z");
    CHECK(lim1_verdict(t).zero);
}

TEST_CASE("lim1 verdict examples") {
    auto z = FgAbGroup::free(1);
    for (long p : {2, 3, 5}) {
        auto v = lim1_verdict(endo_tower(z, IntMatrix{{p}}));
        CHECK_FALSE(v.zero);
        CHECK(abs(v.index_witness) == p);
    }
    CHECK(lim1_verdict(endo_tower(z, IntMatrix{{1}})).zero);
    CHECK(lim1_verdict(endo_tower(z, IntMatrix{{-1}})).zero);
    auto z6 = lim1_verdict(endo_tower(cyclic(6), IntMatrix{{2}}));
    CHECK(z6.zero);
    REQUIRE(z6.stable_at.has_value());
    CHECK(*z6.stable_at == 1);
    CHECK(lim1_verdict(endo_tower(z, IntMatrix{{0}})).zero);
}

TEST_CASE("polynomial helpers") {
    auto cp = characteristic_polynomial(IntMatrix{{1, 1}, {1, 0}});
    CHECK(cp == Polynomial{-1, -1, 1});
    auto f = factor_monic(multiply(Polynomial{-2, 1}, Polynomial{-1, -1, 1}));
    REQUIRE(f.size() == 2);
    auto g = factor_monic(Polynomial{0, 0, 1});
    CHECK(g.size() == 2);
}

TEST_CASE("cyclic limits against brute force") {
    for (long d : {2, 4, 6, 8, 9, 12, 30})
        for (long k = -3; k <= 6; ++k) {
            auto lim = inverse_limit(endo_tower(cyclic(d), IntMatrix{{k}}));
            CHECK(lim.order() == static_cast<long>(stable_image_size(d, k)));
            CHECK(lim1_verdict(endo_tower(cyclic(d), IntMatrix{{k}})).zero);
        }
}

TEST_CASE("verdicts are invariant under conjugation") {
    CorpusGenerator gen(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto ge = gen.group_with_endo(trial % 3 == 0);
        const auto& g = ge.group;
        auto base = GroupTower::constant(g, ge.endo);
        auto u = gen.unimodular(g.ambient_rank());
        auto u_inv = unimodular_inverse(u);
        FgAbGroup h(g.ambient_rank(), u * g.relations());
        auto conj = GroupTower::constant(h, Homomorphism(h, h, u * ge.endo.matrix() * u_inv));
        CHECK(inverse_limit(base).isomorphic(inverse_limit(conj)));
        CHECK(lim1_verdict(base).zero == lim1_verdict(conj).zero);
        if (g.is_finite()) CHECK(lim1_verdict(base).zero);
        CHECK(inverse_limit(GroupTower::constant(g, Homomorphism::identity(g))).isomorphic(g));

        // equality once implies equality forever
        auto chain = image_chain(g, ge.endo.matrix(), g.ambient_rank() + 6);
        bool seen = false;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            bool eq = lattices_equal(chain[k], chain[k + 1]);
            if (seen) CHECK(eq);
            seen = seen || eq;
        }
    }
}

TEST_CASE("milnor report examples") {
    auto id = constant_map_tower(ChainMap::identity(circle3()), 3);
    for (int n = 0; n <= 1; ++n) {
        auto r = milnor_report(id, n);
        CHECK(r.ok());
        CHECK(r.lim.is_trivial());
        CHECK(r.lim1.is_trivial());
        CHECK(r.strong_group.is_trivial());
    }
    auto incl = constant_map_tower(base_point(), 3);
    auto r = milnor_report(incl, 1);
    CHECK(r.ok());
    CHECK(r.strong_group.to_string() == "Z");
    CHECK(r.last_level.to_string() == "Z");
}

TEST_CASE("milnor naturality examples") {
    auto incl = constant_map_tower(base_point(), 3);
    incl.codomain = doubling_tower(3);
    CHECK(milnor_naturality(TowerMorphism::identity(incl), 1).ok());

    TowerMorphism three{incl, incl, {}};
    for (const auto& g : incl.maps)
        three.levels.push_back(CoherentChainMorphism::strict(g, g, Integer(3) * ChainMap::identity(g.source()),
                                                             Integer(3) * ChainMap::identity(g.target())));
    CHECK(milnor_naturality(three, 1).ok());
    CHECK(induced_morphism(three, 1).canonical_matrix() == IntMatrix{{3}});
    auto lim_tower = levelwise_homology_tower(incl, 1);
    auto last = lim_tower.groups.size() - 1;
    CHECK(lim_tower.groups[last].to_string() == "Z");
    CHECK(lim_tower.bonds[last - 1].canonical_matrix() == IntMatrix{{2}});

    // to the trivial map tower
    MapTower zero{Tower::constant(ChainComplex(), 3), Tower::constant(ChainComplex(), 3), {}};
    zero.maps.assign(3, ChainMap::zero(ChainComplex(), ChainComplex()));
    TowerMorphism to_zero{incl, zero, {}};
    for (const auto& g : incl.maps)
        to_zero.levels.push_back(CoherentChainMorphism::strict(g, zero.maps[0], ChainMap::zero(g.source(), ChainComplex()),
                                                               ChainMap::zero(g.target(), ChainComplex())));
    CHECK(milnor_naturality(to_zero, 1).ok());
    CHECK(induced_morphism(to_zero, 1).is_zero());
}

TEST_CASE("random corpus: Milnor sequence and naturality") {
    CorpusGenerator gen(3);
    for (int trial = 0; trial < 15; ++trial) {
        auto f = gen.map_tower();
        for (int n = -1; n <= 4; ++n) {
            auto r = milnor_report(f, n);
            CHECK(r.exact_left);
            CHECK(r.exact_middle);
            CHECK(r.exact_right);
            CHECK(r.oracle);
        }
        auto m = gen.tower_morphism();
        for (int n = -1; n <= 4; ++n) CHECK(milnor_naturality(m, n).ok());
    }
}

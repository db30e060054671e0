#include "doctest.h"

#include "steenrod/corpus.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/simplicial.hpp"

using namespace steenrod;

namespace {

SimplicialMap wrap(std::size_t from, std::size_t to) {
    SimplicialMap f{SimplicialComplex::circle(from), SimplicialComplex::circle(to), {}};
    for (std::size_t v = 0; v < from; ++v) f.vertex_map.push_back(v % to);
    f.validate();
    return f;
}

SimplicialMap identity(const SimplicialComplex& k) {
    SimplicialMap f{k, k, {}};
    for (std::size_t v = 0; v < k.vertex_count(); ++v) f.vertex_map.push_back(v);
    return f;
}

// Reduced homology of a complex from its augmented chains.
FgAbGroup reduced(const SimplicialComplex& k, int n) { return homology(chains_of(k, true), n); }

}  // namespace

TEST_CASE("chains of simplicial complexes") {
    auto c = chains_of(SimplicialComplex::circle(3));
    CHECK(c.rank(0) == 3);
    CHECK(c.rank(1) == 3);
    CHECK(homology(c, 0).to_string() == "Z");
    CHECK(homology(c, 1).to_string() == "Z");

    auto p = chains_of(SimplicialComplex::point());
    CHECK(p.rank(0) == 1);
    CHECK(p.total_rank() == 1);

    auto tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1, 2}});
    auto t = chains_of(tri);
    CHECK(homology(t, 0).to_string() == "Z");
    CHECK(homology(t, 1).is_trivial());
    CHECK(homology(t, 2).is_trivial());
    CHECK(reduced(tri, 0).is_trivial());

    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0}, {0, 1}}), ValidationError);
}

TEST_CASE("chain maps of simplicial maps") {
    auto c = SimplicialComplex::circle(4);
    CHECK(GradedMap(chain_map_of(identity(c))) == GradedMap(ChainMap::identity(chains_of(c))));

    SimplicialMap collapse{c, SimplicialComplex::point(), std::vector<std::size_t>(4, 0)};
    auto f = chain_map_of(collapse);
    CHECK(f.component(1).is_zero());
    CHECK(f.component(0) == IntMatrix{{1, 1, 1, 1}});

    auto d = induced_on_homology(chain_map_of(wrap(6, 3)), 1);
    CHECK(abs(d.canonical_matrix()(0, 0)) == 2);

    SimplicialMap fold{c, SimplicialComplex::circle(3), {0, 1, 2, 1}};
    CHECK_NOTHROW(fold.validate());
    SimplicialMap worse{SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1, 2}}), c, {0, 1, 2}};
    CHECK_THROWS_AS(worse.validate(), ValidationError);
}

TEST_CASE("functoriality") {
    auto f = wrap(12, 6);
    auto g = wrap(6, 3);
    auto gf = compose(g, f);
    CHECK(GradedMap(chain_map_of(gf)) == GradedMap(compose(chain_map_of(g), chain_map_of(f))));
    CorpusGenerator gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = gen.simplicial_map();
        SimplicialMap b{a.target, SimplicialComplex::point(), std::vector<std::size_t>(a.target.vertex_count(), 0)};
        CHECK(GradedMap(chain_map_of(compose(b, a))) == GradedMap(compose(chain_map_of(b), chain_map_of(a))));
        CHECK(GradedMap(chain_map_of(compose(b, a), true)) ==
              GradedMap(compose(chain_map_of(b, true), chain_map_of(a, true))));
    }
}

TEST_CASE("solenoid towers") {
    auto one = solenoid_tower(2, 1);
    CHECK(one.length() == 1);
    CHECK(homology(one.levels[0], 1).to_string() == "Z");

    for (long p : {2, 3}) {
        auto t = solenoid_tower(p, 3);
        CHECK(t.levels[0].rank(1) == 3);
        CHECK(t.levels[2].rank(1) == static_cast<std::size_t>(3 * p * p));
        auto h = homology_tower(t, 1);
        for (const auto& g : h.groups) CHECK(g.to_string() == "Z");
        for (const auto& b : h.bonds) CHECK(abs(b.canonical_matrix()(0, 0)) == p);
    }
}

TEST_CASE("simplicial mapping cones") {
    auto pt = simplicial_mapping_cone(identity(SimplicialComplex::point()));
    CHECK(pt.complex.vertex_count() == 3);
    for (int n = 0; n <= 2; ++n) CHECK(reduced(pt.complex, n).is_trivial());

    auto circ = simplicial_mapping_cone(identity(SimplicialComplex::circle(3)));
    for (int n = 0; n <= 3; ++n) CHECK(reduced(circ.complex, n).is_trivial());

    auto moore = simplicial_mapping_cone(wrap(6, 3));
    CHECK(reduced(moore.complex, 1).to_string() == "Z/2");
    CHECK(reduced(moore.complex, 2).is_trivial());
    CHECK_NOTHROW(moore.target_inclusion.validate());
}

TEST_CASE("axiom 1 cross-check examples") {
    auto id = axiom1_crosscheck(identity(SimplicialComplex::circle(3)), 3);
    CHECK(id.ok());
    for (const auto& d : id.degrees) CHECK(d.algebraic == "0");

    auto two = axiom1_crosscheck(wrap(6, 3), 3);
    CHECK(two.ok());
    CHECK(two.degrees[1].algebraic == "Z/2");
    CHECK(two.degrees[1].geometric == "Z/2");

    SimplicialMap incl{SimplicialComplex::point(), SimplicialComplex::circle(3), {0}};
    auto in = axiom1_crosscheck(incl, 2);
    CHECK(in.ok());
    CHECK(in.degrees[1].algebraic == "Z");
    CHECK(in.degrees[1].geometric == "Z");
}

TEST_CASE("random corpus: axiom 1 cross-check") {
    CorpusGenerator gen(21);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = gen.simplicial_map();
        auto cert = axiom1_crosscheck(f, 3);
        CHECK(cert.chain_level);
        CHECK(cert.ok());
    }
}

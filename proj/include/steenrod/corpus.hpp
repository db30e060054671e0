#pragma once

#include "steenrod/limits.hpp"
#include "steenrod/simplicial.hpp"
#include "steenrod/tower.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace steenrod {

// Elementary summand of a free complex: a sphere Z[k] (order 0) or a disk
// Z[k+1] -order-> Z[k].
struct ElementaryPiece {
    int degree = 0;
    Integer order = 0;
    std::size_t bottom = 0;  // position among the elementary generators of degree `degree`
    std::size_t top = 0;     // position in degree `degree + 1` (disks only)
};

// Basis of each C_n in which the differential is a direct sum of pieces.
// basis[n - lo] has the elementary generators as columns.
struct ElementaryBasis {
    int lo = 0;
    std::vector<ElementaryPiece> pieces;
    std::vector<IntMatrix> basis, inverse;
};

ElementaryBasis decompose(const ChainComplex& c);

// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct CorpusOptions {
    std::size_t max_levels = 5;
    std::size_t max_rank = 3;  // per degree, for each independent summand
    int span = 4;              // number of degrees a complex may occupy
    int lo = 0;
};

struct CoherentPair {
    CoherentChainMorphism phi, psi;
    CoherentChainHomotopy d;  // phi => psi
};

struct TowerHomotopyPair {
    TowerMorphism phi, psi;
    TowerHomotopy d;
};

struct GroupWithEndo {
    FgAbGroup group;
    Homomorphism endo;
};

// Seeded generator of valid instances. Everything is built valid by
// construction: complexes as sums of spheres and disks under a unimodular
// change of basis, maps from the elementary description plus null-homotopic
// terms, map towers by completing the codomain around each square.
class CorpusGenerator {
public:
    explicit CorpusGenerator(std::uint64_t seed, CorpusOptions options = {});

    std::mt19937_64& engine() { return rng_; }
    const CorpusOptions& options() const { return opts_; }
    long uniform(long lo, long hi);
    Integer entry();  // small coefficient, biased towards 0

    IntMatrix unimodular(std::size_t n);
    ChainComplex complex();
    ChainComplex complex(int lo, int span, std::size_t max_rank);
    GradedMap graded_map(const ChainComplex& source, const ChainComplex& target, int degree);
    ChainMap chain_map(const ChainComplex& source, const ChainComplex& target);
    ChainMap chain_map();

    Tower tower(std::size_t n);
    MapTower map_tower(std::size_t n);
    MapTower map_tower();  // random length 2..max_levels

    CoherentChainMorphism coherent_from(const ChainMap& f);
    CoherentChainMorphism coherent_successor(const CoherentChainMorphism& phi) { return coherent_from(phi.g); }
    CoherentPair coherent_pair();
    // Alternates generic towers with levelwise-constant morphisms over scalar bonds.
    TowerMorphism tower_morphism();
    TowerHomotopyPair tower_homotopy_pair();

    GroupWithEndo group_with_endo(bool finite);

    SimplicialComplex simplicial_complex(std::size_t max_vertices);
    // Source simplices are chosen inside preimages of target simplices, so the
    // vertex map is simplicial; some simplices collapse.
    SimplicialMap simplicial_map();

private:
    Integer bond_scalar();
    CorpusOptions opts_;
    std::mt19937_64 rng_;
    std::size_t morphism_count_ = 0;
};

}  // namespace steenrod

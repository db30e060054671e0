#pragma once

#include "steenrod/coherent.hpp"
#include "steenrod/exact.hpp"

#include <vector>

namespace steenrod {

// Finite truncation X_1 <- X_2 <- ... <- X_N. Levels are stored 0-based:
// bonds[i] : levels[i + 1] -> levels[i].
struct Tower {
    std::vector<ChainComplex> levels;
    std::vector<ChainMap> bonds;

    std::size_t length() const { return levels.size(); }
    void validate() const;
    static Tower constant(const ChainComplex& c, std::size_t n);
};

// Levelwise maps f_i : X_i -> X'_i with f_i p_i = p'_i f_{i+1}.
struct MapTower {
    Tower domain, codomain;
    std::vector<ChainMap> maps;

    std::size_t length() const { return maps.size(); }
    void validate() const;
    // The tower of levelwise cones C(f_i) with the induced cone bonds.
    Tower cone_tower() const;
};

// Product over the first `count` levels (all levels by default).
ChainComplex product_complex(const Tower& t, std::size_t count);
ChainComplex product_complex(const Tower& t);

// (c_i) -> (p_i c_{i+1} - c_i), from levels 1..N to levels 1..N-1.
// Throws TowerTooShort when N < 2.
ChainMap shift_difference(const Tower& t);
// The shift difference of the cone tower.
ChainMap pair_shift_difference(const MapTower& f);

// H_{n+1} of the cone of the pair shift difference.
FgAbGroup strong_homology(const MapTower& f, int n);
HomologyData strong_homology_data(const MapTower& f, int n);

// 0 -> C(p'#) -sigma-> C(p#, p'#) -partial-> Sigma C(p#) -> 0.
struct SigmaPartial {
    ShortExactSequence ses;
    SesCertificate certificate;
};

SigmaPartial sigma_partial_ses(const MapTower& f);

// ... -> Hbar_n(X') -> Hbar_n(f) -> Hbar_{n-1}(X) -> Hbar_{n-1}(X') -> ...
// for n from hi down to lo, where Hbar_n(X) = H_{n+1}(C(p#)).
LongExactSequence long_exact_sequence(const MapTower& f, int lo, int hi);

// Levelwise coherent morphisms Phi_i : f_i -> g_i that commute strictly with
// the bonds of both map towers (including the phi12 components).
struct TowerMorphism {
    MapTower source, target;
    std::vector<CoherentChainMorphism> levels;

    void validate() const;
    static TowerMorphism identity(const MapTower& f);
};

// Restrict a map tower to the levels index[0] < index[1] < ..., composing bonds.
Tower reindex(const Tower& t, const std::vector<std::size_t>& index);
MapTower reindex(const MapTower& f, const std::vector<std::size_t>& index);

// Level cone maps assembled into the strict morphism of pair shift
// differences, and the induced chain map on their cones.
CoherentChainMorphism shift_morphism(const TowerMorphism& m);
ChainMap strong_chain_map(const TowerMorphism& m);
Homomorphism induced_morphism(const TowerMorphism& m, int n);

// Map of the sigma/partial sequences induced by a tower morphism.
SesMorphism induced_ses_morphism(const TowerMorphism& m);

// Levelwise coherent homotopies D_i : Phi_i => Psi_i, commuting strictly with bonds.
struct TowerHomotopy {
    std::vector<CoherentChainHomotopy> levels;
};

// Homotopy between strong_chain_map(phi) and strong_chain_map(psi).
ChainHomotopy strong_homotopy(const TowerHomotopy& d, const TowerMorphism& phi, const TowerMorphism& psi);

}  // namespace steenrod

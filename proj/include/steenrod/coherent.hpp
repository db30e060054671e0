#pragma once

#include "steenrod/chain.hpp"

namespace steenrod {

// A coherent morphism Phi : f -> g from f : L -> M to g : P -> Q.
// phi12 is a chain homotopy from phi2 f to g phi1, i.e.
//     d phi12 + phi12 d = g phi1 - phi2 f,
// which is the orientation that makes the induced cone map a chain map.
struct CoherentChainMorphism {
    ChainMap f, g;
    ChainMap phi1;  // L -> P
    ChainMap phi2;  // M -> Q
    GradedMap phi12;  // L -> Q, degree +1

    // Throws IncoherentMorphism if endpoints or the homotopy identity fail.
    void validate() const;

    static CoherentChainMorphism identity(const ChainMap& f);
    // phi12 = 0; requires g phi1 = phi2 f.
    static CoherentChainMorphism strict(const ChainMap& f, const ChainMap& g, const ChainMap& phi1,
                                        const ChainMap& phi2);
};

// A coherent homotopy D : Phi => Psi. d1 : phi1 => psi1 and d2 : phi2 => psi2
// are chain homotopies and d12 : L -> Q has degree +2 with
//     d d12 - d12 d = g d1 - d2 f + phi12 - psi12.
struct CoherentChainHomotopy {
    GradedMap d1, d2, d12;

    // Throws IncoherentHomotopy when a defining identity fails.
    void validate(const CoherentChainMorphism& phi, const CoherentChainMorphism& psi) const;
};

// Phi_#(l, m) = (phi1 l, phi2 m + phi12 l) between the cones of f and g.
ChainMap cone_functor_map(const CoherentChainMorphism& phi);

// D_#(l, m) = (d1 l, -d2 m + d12 l). Satisfies d D_# + D_# d = Psi_# - Phi_#,
// so the result is a homotopy from Phi_# to Psi_#.
ChainHomotopy cone_functor_homotopy(const CoherentChainHomotopy& d, const CoherentChainMorphism& phi,
                                    const CoherentChainMorphism& psi);

// Psi after Phi: (psi1 phi1, psi2 phi2, psi12 phi1 + psi2 phi12).
CoherentChainMorphism compose_coherent(const CoherentChainMorphism& phi, const CoherentChainMorphism& psi);

}  // namespace steenrod

#pragma once

#include "steenrod/chain.hpp"

#include <string>
#include <vector>

namespace steenrod {

// 0 -> A -i-> B -p-> C -> 0, degreewise.
struct ShortExactSequence {
    ChainMap i, p;
};

struct DegreeCheck {
    int degree = 0;
    bool mono = false;       // i_n injective
    bool epi = false;        // p_n surjective
    bool composite = false;  // p_n i_n = 0
    bool exact = false;      // ker p_n = im i_n

    bool ok() const { return mono && epi && composite && exact; }
};

struct SesCertificate {
    std::vector<DegreeCheck> degrees;
    bool ok() const;
};

SesCertificate certify_ses(const ShortExactSequence& ses);

// Connecting map H_n(C) -> H_{n-1}(A): lift, differentiate, pull back.
Homomorphism connecting_map(const ShortExactSequence& ses, int n);

struct LongExactSequence {
    // groups[k] -maps[k]-> groups[k+1]
    std::vector<FgAbGroup> groups;
    std::vector<Homomorphism> maps;
    std::vector<std::string> labels;  // one per group

    // Composite and exactness at every interior group.
    bool composites_vanish() const;
    bool exact() const;
    // Interior positions where exactness fails.
    std::vector<std::size_t> failures() const;
};

// ... -> H_n(A) -> H_n(B) -> H_n(C) -> H_{n-1}(A) -> ..., from degree hi down
// to degree lo (ending at H_lo(C)).
LongExactSequence homology_sequence(const ShortExactSequence& ses, int lo, int hi,
                                    const std::vector<std::string>& names = {"A", "B", "C"});

// Map of short exact sequences given by a : A -> A', b : B -> B', c : C -> C'.
struct SesMorphism {
    ShortExactSequence source, target;
    ChainMap a, b, c;
};

struct LadderCheck {
    int degree = 0;
    bool left = false;       // b i = i' a on H_n
    bool middle = false;     // c p = p' b on H_n
    bool connecting = false; // a delta = delta' c from H_n(C)
    bool ok() const { return left && middle && connecting; }
};

// Chain-level commutation of the two squares (exact matrix identities).
bool ladder_commutes_on_chains(const SesMorphism& m);
std::vector<LadderCheck> check_ladder(const SesMorphism& m, int lo, int hi);

// 0 -> M -iota-> C(f) -pi-> Sigma L -> 0 with iota_n(m) = (0, (-1)^n m) and
// pi(l, m) = l.
ShortExactSequence cone_sequence(const ChainMap& f);

}  // namespace steenrod

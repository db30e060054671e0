#pragma once

#include "steenrod/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace steenrod {

// A_1 <- A_2 <- ... <- A_N, optionally continued by an eventually constant
// tail A_N <-splice- A <-M- A <-M- A <- ...
struct GroupTower {
    struct Tail {
        FgAbGroup group;
        Homomorphism endo;    // A -> A
        Homomorphism splice;  // A -> A_N (ignored when the finite part is empty)
    };

    std::vector<FgAbGroup> groups;
    std::vector<Homomorphism> bonds;  // bonds[i] : A_{i+2} -> A_{i+1}, 0-based A_{i+1} -> A_i
    std::optional<Tail> tail;

    bool eventually_constant() const { return tail.has_value(); }
    void validate() const;

    static GroupTower constant(const FgAbGroup& g, const Homomorphism& endo);
};

// The shift homomorphism prod_{1..N} A_i -> prod_{1..N-1} A_i of a finite tower.
Homomorphism shift_homomorphism(const GroupTower& t);

FgAbGroup inverse_limit(const GroupTower& t);

struct Lim1Verdict {
    bool zero = true;
    // Eventually constant mode: image chain data.
    std::size_t rank_stable_at = 0;       // first k with rank M^k A = rank M^{k+1} A
    std::optional<std::size_t> stable_at; // first k with M^k A = M^{k+1} A, when it exists
    Integer index_witness = 1;            // det of M on the stable-rank free image
    std::string reason;
};

Lim1Verdict lim1_verdict(const GroupTower& t);

// Image chain M^k A (as lattices of the ambient space containing the
// relations) for k = 0..steps.
std::vector<IntMatrix> image_chain(const FgAbGroup& a, const IntMatrix& endo, std::size_t steps);

struct MilnorReport {
    int degree = 0;
    FgAbGroup lim;            // lim H_n(f_i), from the kernel of the shift map
    FgAbGroup lim_tower;      // same, computed from the levelwise group tower
    FgAbGroup lim1;           // coker of the shift map on H_{n+1}(f_i)
    Lim1Verdict lim1_verdict;
    FgAbGroup strong_group;   // Hbar_n(f)
    FgAbGroup last_level;     // H_n(C(f_N)), the finite truncation value
    bool exact_left = false;  // prod H_{n+1} -> prod H_{n+1} -> Hbar_n
    bool exact_middle = false;
    bool exact_right = false; // Hbar_n -> prod H_n -> prod H_n
    bool lim1_trivial = false;
    bool oracle = false;      // Hbar_n = lim = H_n(C(f_N)) as invariants

    bool ok() const { return exact_left && exact_middle && exact_right && lim1_trivial && oracle; }
};

// Levelwise homology {H_n(X_i)} with the induced bonds.
GroupTower homology_tower(const Tower& t, int n);
// Levelwise homology tower {H_n(C(f_i))} with the induced bonds.
GroupTower levelwise_homology_tower(const MapTower& f, int n);

MilnorReport milnor_report(const MapTower& f, int n);

struct MilnorNaturality {
    int degree = 0;
    bool left = false;   // Lim^1 square
    bool right = false;  // Lim square
    bool shift = false;  // shift maps commute with the level maps
    bool ok() const { return left && right && shift; }
};

MilnorNaturality milnor_naturality(const TowerMorphism& m, int n);
// Same for every degree in [lo, hi], building the ladder once.
std::vector<MilnorNaturality> milnor_naturality(const TowerMorphism& m, int lo, int hi);

}  // namespace steenrod

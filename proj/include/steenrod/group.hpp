#pragma once

#include "steenrod/lattice.hpp"

#include <memory>
#include <string>
#include <vector>

namespace steenrod {

// Finitely generated abelian group Z^n / (column lattice of relations).
//
// The presentation is kept as given: elements are integer vectors in the
// ambient generator basis and all maps are written on that basis. The
// canonical invariants (torsion d1 | d2 | ... > 1, then the free rank) and
// canonical coordinates come from a Smith form of the relation matrix.
class FgAbGroup {
public:
    FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}
    FgAbGroup(std::size_t ambient_rank, IntMatrix relations);

    static FgAbGroup free(std::size_t rank) { return {rank, IntMatrix(rank, 0)}; }
    // Z/d1 + ... + Z/dk + Z^free, on the obvious generators.
    static FgAbGroup from_invariants(const std::vector<Integer>& torsion, std::size_t free_rank);

    std::size_t ambient_rank() const { return data_->ambient; }
    const IntMatrix& relations() const { return data_->relations; }

    std::size_t free_rank() const { return data_->free_rank; }
    const std::vector<Integer>& torsion() const { return data_->torsion; }
    bool is_trivial() const { return free_rank() == 0 && torsion().empty(); }
    bool is_finite() const { return free_rank() == 0; }
    // Order of a finite group; 0 when infinite.
    Integer order() const;
    bool isomorphic(const FgAbGroup& other) const {
        return free_rank() == other.free_rank() && torsion() == other.torsion();
    }

    // Number of canonical generators (torsion ones first, then free ones).
    std::size_t canonical_rank() const { return data_->nontrivial.size(); }
    // Order of canonical generator i (0 for a free generator).
    const Integer& canonical_order(std::size_t i) const { return data_->diag[data_->nontrivial[i]]; }
    // Reduced canonical coordinates of an ambient vector.
    std::vector<Integer> canonical_coordinates(const std::vector<Integer>& x) const;
    // Ambient representative of canonical generator i.
    std::vector<Integer> canonical_generator(std::size_t i) const;
    // Rows of U restricted to the nontrivial indices: ambient -> canonical (unreduced).
    IntMatrix to_canonical() const;
    // Columns of U^-1 restricted to the nontrivial indices: canonical -> ambient.
    IntMatrix from_canonical() const;

    bool is_zero(const std::vector<Integer>& x) const;
    bool equal_elements(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

    // "0", "Z", "Z/2 + Z/6 + Z^3"
    std::string to_string() const;

private:
    struct Data {
        std::size_t ambient = 0;
        IntMatrix relations;
        IntMatrix U, U_inv;
        std::vector<Integer> diag;  // length ambient; 0 beyond the rank
        std::vector<std::size_t> nontrivial;
        std::vector<Integer> torsion;
        std::size_t free_rank = 0;
    };
    std::shared_ptr<const Data> data_;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_sum(const std::vector<FgAbGroup>& parts);

// Z^rows / column lattice of M.
FgAbGroup cokernel(const IntMatrix& m);

// (column lattice of K) / (column lattice of I). Throws ContainmentViolation
// if I is not inside K. The resulting group is written on an echelon basis
// of the K lattice; see SubquotientBasis for the coordinate maps.
FgAbGroup subquotient(const IntMatrix& k, const IntMatrix& i);

// A subquotient together with the data to move between ambient vectors of
// the K lattice and the generators of the group.
struct SubquotientBasis {
    IntMatrix basis;  // ambient x r, basis of the K lattice (group generators)
    ColumnEchelon echelon;
    FgAbGroup group;

    // Coordinates of an ambient vector of the K lattice in `basis`.
    std::vector<Integer> coordinates(const std::vector<Integer>& x) const;
};

SubquotientBasis make_subquotient(const IntMatrix& k, const IntMatrix& i);

// Group homomorphism given by an integer matrix on the ambient generators.
class Homomorphism {
public:
    Homomorphism() = default;
    // Throws NotWellDefined unless the matrix sends relations to relations.
    Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static Homomorphism identity(const FgAbGroup& g);
    static Homomorphism zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    // Matrix on canonical generators, entries reduced modulo target orders.
    IntMatrix canonical_matrix() const;

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    // Kernel as a sublattice of the source ambient space (contains source relations).
    IntMatrix kernel_lattice() const;
    FgAbGroup kernel() const;
    FgAbGroup image() const;
    FgAbGroup cokernel() const;

    std::string to_string() const;

private:
    FgAbGroup source_, target_;
    IntMatrix matrix_;
};

// g after f.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
// Same source and target presentations and equal as maps.
bool equal_maps(const Homomorphism& a, const Homomorphism& b);
Homomorphism direct_sum(const Homomorphism& a, const Homomorphism& b);

// ker g == im f at the middle group (requires f.target() and g.source() to be
// the same presentation). Also checks g f == 0.
bool is_exact_at(const Homomorphism& f, const Homomorphism& g);

// Map induced by f on subquotients (srcK/srcI) -> (tgtK/tgtI), written on the
// echelon bases of the two K lattices. Throws NotWellDefined when f does not
// carry srcK into tgtK or srcI into tgtI.
Homomorphism induced_hom(const IntMatrix& f, const IntMatrix& src_k, const IntMatrix& src_i,
                         const IntMatrix& tgt_k, const IntMatrix& tgt_i);

}  // namespace steenrod

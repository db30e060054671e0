#pragma once

#include "steenrod/matrix.hpp"

#include <optional>
#include <vector>

namespace steenrod {

// D = U * M * V with U, V unimodular and D diagonal, d1 | d2 | ... (all >= 0).
struct SmithForm {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;  // only filled when requested
    std::size_t rank = 0;

    std::vector<Integer> diagonal() const;
};

enum SmithFlags : unsigned {
    kSmithU = 1u << 0,
    kSmithV = 1u << 1,
    kSmithUInv = 1u << 2,
    kSmithVInv = 1u << 3,
    kSmithAll = kSmithU | kSmithV | kSmithUInv | kSmithVInv,
};

// Pivot rule: smallest nonzero |entry| of the active block, first in
// row-major order on ties. Output is therefore a pure function of M.
SmithForm smith_normal_form(const IntMatrix& m, unsigned flags = kSmithU | kSmithV);

// Column Hermite form: M * V = [E | 0], where E has full column rank, the
// pivot of column j sits in row pivot_rows[j] (strictly increasing), entries
// above a pivot are zero, pivots are positive and entries to the left of a
// pivot are reduced into [0, pivot).
struct ColumnEchelon {
    IntMatrix E;      // rows(M) x rank
    IntMatrix V;      // cols(M) x cols(M), unimodular
    IntMatrix V_inv;  // inverse of V
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return pivot_rows.size(); }
    // Integer coordinates c with E * c = b, or nullopt if b is outside the lattice.
    std::optional<std::vector<Integer>> coordinates(std::vector<Integer> b) const;
};

ColumnEchelon column_echelon(const IntMatrix& m, bool with_transform = true);

std::size_t rank(const IntMatrix& m);

// Saturated basis of {x : M x = 0}, as columns.
IntMatrix kernel_basis(const IntMatrix& m);

// Basis of the column lattice of M.
IntMatrix image_basis(const IntMatrix& m);

// Some integer x with M x = b, if one exists.
std::optional<std::vector<Integer>> solve(const IntMatrix& m, const std::vector<Integer>& b);

// Same, for many right-hand sides against one matrix.
class Solver {
public:
    explicit Solver(const IntMatrix& m) : cols_(m.cols()), ech_(column_echelon(m, true)) {}
    std::optional<std::vector<Integer>> operator()(const std::vector<Integer>& b) const;

private:
    std::size_t cols_;
    ColumnEchelon ech_;
};

// Every column of B lies in the column lattice of A.
bool lattice_contains(const IntMatrix& a, const IntMatrix& b);

// Column lattices coincide (requires equal ambient rank).
bool lattices_equal(const IntMatrix& a, const IntMatrix& b);

}  // namespace steenrod

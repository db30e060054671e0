#include "steenrod/lattice.hpp"

#include "steenrod/errors.hpp"

#include <algorithm>

namespace steenrod {

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> out(std::min(D.rows(), D.cols()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = D(i, i);
    return out;
}

namespace {

// Tracks row operations on D together with U (left) and U^-1 (right), and
// column operations together with V (right) and V^-1 (left).
struct SmithWork {
    IntMatrix D;
    IntMatrix U, Ui, V, Vi;
    bool u, ui, v, vi;

    void swap_rows(std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        if (u) U.swap_rows(a, b);
        if (ui) Ui.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        if (v) V.swap_cols(a, b);
        if (vi) Vi.swap_rows(a, b);
    }
    void negate_row(std::size_t r) {
        D.negate_row(r);
        if (u) U.negate_row(r);
        if (ui) Ui.negate_col(r);
    }
    // row[dst] -= q row[src]
    void row_submul(std::size_t dst, std::size_t src, const Integer& q) {
        D.row_submul(dst, src, q);
        if (u) U.row_submul(dst, src, q);
        if (ui) Ui.col_submul(src, dst, -q);
    }
    // col[dst] -= q col[src]
    void col_submul(std::size_t dst, std::size_t src, const Integer& q) {
        D.col_submul(dst, src, q);
        if (v) V.col_submul(dst, src, q);
        if (vi) Vi.row_submul(src, dst, -q);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, unsigned flags) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithWork w{m,
                (flags & kSmithU) ? IntMatrix::identity(rows) : IntMatrix{},
                (flags & kSmithUInv) ? IntMatrix::identity(rows) : IntMatrix{},
                (flags & kSmithV) ? IntMatrix::identity(cols) : IntMatrix{},
                (flags & kSmithVInv) ? IntMatrix::identity(cols) : IntMatrix{},
                (flags & kSmithU) != 0,
                (flags & kSmithUInv) != 0,
                (flags & kSmithV) != 0,
                (flags & kSmithVInv) != 0};
    auto& D = w.D;
    std::size_t t = 0;
    const std::size_t limit = std::min(rows, cols);
    for (; t < limit; ++t) {
        for (;;) {
            // pivot search
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    const auto& x = D(i, j);
                    if (x == 0) continue;
                    if (pr == rows || cmpabs(x, D(pr, pc)) < 0) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == rows) goto done;
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D(i, t) == 0) continue;
                w.row_submul(i, t, tdiv(D(i, t), D(t, t)));
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(t, j) == 0) continue;
                w.col_submul(j, t, tdiv(D(t, j), D(t, t)));
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into row t and retry
            bool folded = false;
            for (std::size_t i = t + 1; i < rows && !folded; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!divides(D(t, t), D(i, j))) {
                        w.row_submul(t, i, Integer(-1));
                        folded = true;
                        break;
                    }
                }
            }
            if (!folded) break;
        }
        if (D(t, t) < 0) w.negate_row(t);
    }
done:
    SmithForm out;
    out.rank = t;
    out.D = std::move(w.D);
    out.U = std::move(w.U);
    out.U_inv = std::move(w.Ui);
    out.V = std::move(w.V);
    out.V_inv = std::move(w.Vi);
    return out;
}

ColumnEchelon column_echelon(const IntMatrix& m, bool with_transform) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithWork w{m,
                IntMatrix{},
                IntMatrix{},
                with_transform ? IntMatrix::identity(cols) : IntMatrix{},
                with_transform ? IntMatrix::identity(cols) : IntMatrix{},
                false,
                false,
                with_transform,
                with_transform};
    auto& E = w.D;
    ColumnEchelon out;
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows && r < cols; ++i) {
        for (;;) {
            std::size_t pc = cols;
            for (std::size_t j = r; j < cols; ++j) {
                if (E(i, j) != 0 && (pc == cols || cmpabs(E(i, j), E(i, pc)) < 0)) pc = j;
            }
            if (pc == cols) break;
            w.swap_cols(r, pc);
            bool clean = true;
            for (std::size_t j = r + 1; j < cols; ++j) {
                if (E(i, j) == 0) continue;
                w.col_submul(j, r, tdiv(E(i, j), E(i, r)));
                if (E(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < cols && E(i, r) != 0) {
            if (E(i, r) < 0) {
                E.negate_col(r);
                if (with_transform) {
                    w.V.negate_col(r);
                    w.Vi.negate_row(r);
                }
            }
            for (std::size_t j = 0; j < r; ++j) {
                if (E(i, j) == 0) continue;
                w.col_submul(j, r, fdiv(E(i, j), E(i, r)));
            }
            out.pivot_rows.push_back(i);
            ++r;
        }
    }
    out.E = E.col_range(0, r);
    out.V = std::move(w.V);
    out.V_inv = std::move(w.Vi);
    return out;
}

std::optional<std::vector<Integer>> ColumnEchelon::coordinates(std::vector<Integer> b) const {
    if (b.size() != E.rows()) throw ValidationError("coordinate request with wrong ambient rank");
    std::vector<Integer> c(rank());
    std::size_t j = 0;
    for (std::size_t row = 0; row < b.size(); ++row) {
        if (j < rank() && pivot_rows[j] == row) {
            const auto& p = E(row, j);
            if (!divides(p, b[row])) return std::nullopt;
            Integer q;
            mpz_divexact(q.get_mpz_t(), b[row].get_mpz_t(), p.get_mpz_t());
            if (q != 0) {
                for (std::size_t k = row; k < b.size(); ++k)
                    if (E(k, j) != 0) submul(b[k], q, E(k, j));
            }
            c[j] = std::move(q);
            ++j;
        } else if (b[row] != 0) {
            return std::nullopt;
        }
    }
    return c;
}

std::size_t rank(const IntMatrix& m) { return column_echelon(m, false).rank(); }

IntMatrix kernel_basis(const IntMatrix& m) {
    auto ech = column_echelon(m, true);
    return ech.V.col_range(ech.rank(), m.cols() - ech.rank());
}

IntMatrix image_basis(const IntMatrix& m) { return column_echelon(m, false).E; }

std::optional<std::vector<Integer>> Solver::operator()(const std::vector<Integer>& b) const {
    auto c = ech_.coordinates(b);
    if (!c) return std::nullopt;
    std::vector<Integer> x(cols_);
    for (std::size_t k = 0; k < ech_.rank(); ++k) {
        if ((*c)[k] == 0) continue;
        for (std::size_t i = 0; i < cols_; ++i)
            if (ech_.V(i, k) != 0) addmul(x[i], (*c)[k], ech_.V(i, k));
    }
    return x;
}

std::optional<std::vector<Integer>> solve(const IntMatrix& m, const std::vector<Integer>& b) { return Solver(m)(b); }

bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("lattice comparison with different ambient ranks");
    auto ech = column_echelon(a, false);
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!ech.coordinates(b.col(j))) return false;
    return true;
}

bool lattices_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("lattice comparison with different ambient ranks");
    auto ea = column_echelon(a, false);
    auto eb = column_echelon(b, false);
    // column Hermite forms are unique, so equal lattices give identical E
    return ea.E == eb.E;
}

}  // namespace steenrod

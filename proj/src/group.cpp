#include "steenrod/group.hpp"

#include "steenrod/errors.hpp"

#include <sstream>

namespace steenrod {

FgAbGroup::FgAbGroup(std::size_t ambient_rank, IntMatrix relations) {
    if (relations.rows() != ambient_rank) {
        throw ValidationError("relation matrix has " + std::to_string(relations.rows()) +
                              " rows for " + std::to_string(ambient_rank) + " generators");
    }
    auto d = std::make_shared<Data>();
    d->ambient = ambient_rank;
    auto snf = smith_normal_form(relations, kSmithU | kSmithUInv);
    d->relations = std::move(relations);
    d->U = std::move(snf.U);
    d->U_inv = std::move(snf.U_inv);
    d->diag.assign(ambient_rank, Integer(0));
    for (std::size_t i = 0; i < snf.rank; ++i) d->diag[i] = snf.D(i, i);
    for (std::size_t i = 0; i < ambient_rank; ++i) {
        if (d->diag[i] == 1) continue;
        d->nontrivial.push_back(i);
        if (d->diag[i] == 0)
            ++d->free_rank;
        else
            d->torsion.push_back(d->diag[i]);
    }
    data_ = std::move(d);
}

FgAbGroup FgAbGroup::from_invariants(const std::vector<Integer>& torsion, std::size_t free_rank) {
    const std::size_t n = torsion.size() + free_rank;
    IntMatrix rel(n, torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) rel(i, i) = torsion[i];
    return {n, std::move(rel)};
}

Integer FgAbGroup::order() const {
    if (free_rank() != 0) return 0;
    Integer n = 1;
    for (const auto& d : torsion()) n *= d;
    return n;
}

std::vector<Integer> FgAbGroup::canonical_coordinates(const std::vector<Integer>& x) const {
    auto y = data_->U.apply(x);
    std::vector<Integer> out;
    out.reserve(canonical_rank());
    for (std::size_t idx : data_->nontrivial) {
        const auto& d = data_->diag[idx];
        if (d == 0) {
            out.push_back(y[idx]);
        } else {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), y[idx].get_mpz_t(), d.get_mpz_t());
            out.push_back(r);
        }
    }
    return out;
}

std::vector<Integer> FgAbGroup::canonical_generator(std::size_t i) const {
    return data_->U_inv.col(data_->nontrivial[i]);
}

IntMatrix FgAbGroup::to_canonical() const { return data_->U.select_rows(data_->nontrivial); }

IntMatrix FgAbGroup::from_canonical() const { return data_->U_inv.select_cols(data_->nontrivial); }

bool FgAbGroup::is_zero(const std::vector<Integer>& x) const {
    if (x.size() != ambient_rank()) throw ValidationError("element has wrong ambient rank");
    auto y = data_->U.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!divides(data_->diag[i], y[i])) return false;
    }
    return true;
}

bool FgAbGroup::equal_elements(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
    std::vector<Integer> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
    return is_zero(d);
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion()) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (free_rank() > 0) {
        if (!first) os << " + ";
        os << "Z";
        if (free_rank() > 1) os << '^' << free_rank();
    }
    return os.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    return {a.ambient_rank() + b.ambient_rank(), block_diagonal(a.relations(), b.relations())};
}

FgAbGroup direct_sum(const std::vector<FgAbGroup>& parts) {
    std::size_t n = 0, m = 0;
    for (const auto& p : parts) {
        n += p.ambient_rank();
        m += p.relations().cols();
    }
    IntMatrix rel(n, m);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        rel.set_block(r, c, p.relations());
        r += p.ambient_rank();
        c += p.relations().cols();
    }
    return {n, std::move(rel)};
}

FgAbGroup cokernel(const IntMatrix& m) { return {m.rows(), m}; }

std::vector<Integer> SubquotientBasis::coordinates(const std::vector<Integer>& x) const {
    auto c = echelon.coordinates(x);
    if (!c) throw ContainmentViolation("vector is outside the lattice of the subquotient");
    return *c;
}

SubquotientBasis make_subquotient(const IntMatrix& k, const IntMatrix& i) {
    if (k.rows() != i.rows()) throw ValidationError("subquotient lattices live in different ambient spaces");
    auto ech = column_echelon(k, false);
    const std::size_t r = ech.rank();
    IntMatrix rel(r, i.cols());
    for (std::size_t j = 0; j < i.cols(); ++j) {
        auto c = ech.coordinates(i.col(j));
        if (!c) throw ContainmentViolation("relation lattice is not contained in the cycle lattice");
        rel.set_col(j, *c);
    }
    IntMatrix basis = ech.E;
    return {std::move(basis), std::move(ech), FgAbGroup(r, std::move(rel))};
}

FgAbGroup subquotient(const IntMatrix& k, const IntMatrix& i) { return make_subquotient(k, i).group; }

namespace {

bool same_presentation(const FgAbGroup& a, const FgAbGroup& b) {
    return a.ambient_rank() == b.ambient_rank() && a.relations() == b.relations();
}

}  // namespace

Homomorphism::Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank()) {
        throw ValidationError("homomorphism matrix has the wrong shape");
    }
    auto image_of_relations = matrix_ * source_.relations();
    for (std::size_t j = 0; j < image_of_relations.cols(); ++j) {
        if (!target_.is_zero(image_of_relations.col(j))) {
            throw NotWellDefined("matrix does not send relations of the source into relations of the target");
        }
    }
}

Homomorphism Homomorphism::identity(const FgAbGroup& g) {
    return {g, g, IntMatrix::identity(g.ambient_rank())};
}

Homomorphism Homomorphism::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return {source, target, IntMatrix(target.ambient_rank(), source.ambient_rank())};
}

IntMatrix Homomorphism::canonical_matrix() const {
    IntMatrix m = target_.to_canonical() * matrix_ * source_.from_canonical();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto& d = target_.canonical_order(r);
        if (d == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_fdiv_r(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), d.get_mpz_t());
    }
    return m;
}

bool Homomorphism::is_zero() const {
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (!target_.is_zero(matrix_.col(j))) return false;
    return true;
}

IntMatrix Homomorphism::kernel_lattice() const {
    const std::size_t a = source_.ambient_rank();
    auto k = kernel_basis(hstack(matrix_, target_.relations()));
    return k.row_range(0, a);
}

bool Homomorphism::is_injective() const { return lattice_contains(source_.relations(), kernel_lattice()); }

bool Homomorphism::is_surjective() const {
    return lattices_equal(hstack(matrix_, target_.relations()), IntMatrix::identity(target_.ambient_rank()));
}

FgAbGroup Homomorphism::kernel() const { return subquotient(kernel_lattice(), source_.relations()); }

FgAbGroup Homomorphism::image() const {
    return subquotient(hstack(matrix_, target_.relations()), target_.relations());
}

FgAbGroup Homomorphism::cokernel() const { return steenrod::cokernel(hstack(matrix_, target_.relations())); }

std::string Homomorphism::to_string() const {
    std::ostringstream os;
    os << source_.to_string() << " -> " << target_.to_string() << " " << canonical_matrix();
    return os.str();
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
    if (!same_presentation(f.target(), g.source())) {
        throw ValidationError("composing homomorphisms through different presentations");
    }
    return {f.source(), g.target(), g.matrix() * f.matrix()};
}

bool equal_maps(const Homomorphism& a, const Homomorphism& b) {
    if (!same_presentation(a.source(), b.source()) || !same_presentation(a.target(), b.target())) {
        throw ValidationError("comparing homomorphisms between different presentations");
    }
    auto diff = a.matrix() - b.matrix();
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!a.target().is_zero(diff.col(j))) return false;
    return true;
}

Homomorphism direct_sum(const Homomorphism& a, const Homomorphism& b) {
    return {direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()),
            block_diagonal(a.matrix(), b.matrix())};
}

bool is_exact_at(const Homomorphism& f, const Homomorphism& g) {
    if (!same_presentation(f.target(), g.source())) {
        throw ValidationError("exactness check through different presentations");
    }
    if (!compose(g, f).is_zero()) return false;
    return lattice_contains(hstack(f.matrix(), f.target().relations()), g.kernel_lattice());
}

Homomorphism induced_hom(const IntMatrix& f, const IntMatrix& src_k, const IntMatrix& src_i,
                         const IntMatrix& tgt_k, const IntMatrix& tgt_i) {
    auto src = make_subquotient(src_k, src_i);
    auto tgt = make_subquotient(tgt_k, tgt_i);
    if (f.cols() != src_k.rows() || f.rows() != tgt_k.rows()) throw ValidationError("induced_hom shape mismatch");
    if (!lattice_contains(tgt_i, f * src_i)) throw NotWellDefined("map does not carry relations into relations");
    IntMatrix m(tgt.basis.cols(), src.basis.cols());
    for (std::size_t j = 0; j < src.basis.cols(); ++j) {
        auto c = tgt.echelon.coordinates(f.apply(src.basis.col(j)));
        if (!c) throw NotWellDefined("map does not carry the source lattice into the target lattice");
        m.set_col(j, *c);
    }
    return {src.group, tgt.group, std::move(m)};
}

}  // namespace steenrod

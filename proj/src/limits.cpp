#include "steenrod/limits.hpp"

#include "steenrod/errors.hpp"
#include "steenrod/polynomial.hpp"

namespace steenrod {

namespace {

bool same_presentation(const FgAbGroup& a, const FgAbGroup& b) {
    return a.ambient_rank() == b.ambient_rank() && a.relations() == b.relations();
}

// floor(log2 n) + 1 for n >= 1
std::size_t bit_length(const Integer& n) { return n <= 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2); }

struct CanonicalEndo {
    std::size_t torsion_rank = 0, free_rank = 0;
    IntMatrix torsion_block;  // t x t
    IntMatrix relations;      // diag(d_i), t x t
    IntMatrix free_block;     // f x f
    Integer torsion_order = 1;
};

CanonicalEndo split_endo(const Homomorphism& m) {
    const auto& a = m.source();
    const auto c = m.canonical_matrix();
    CanonicalEndo out;
    out.torsion_rank = a.torsion().size();
    out.free_rank = a.free_rank();
    out.torsion_block = c.block(0, 0, out.torsion_rank, out.torsion_rank);
    out.free_block = c.block(out.torsion_rank, out.torsion_rank, out.free_rank, out.free_rank);
    out.relations = IntMatrix::diagonal(a.torsion());
    for (const auto& d : a.torsion()) out.torsion_order *= d;
    return out;
}

// Stable image of the endomorphism on the torsion subgroup, as a lattice of Z^t.
IntMatrix stable_torsion_image(const CanonicalEndo& e) {
    IntMatrix l = IntMatrix::identity(e.torsion_rank);
    // each strict step at least halves the order of the image
    const std::size_t bound = bit_length(e.torsion_order) + 1;
    for (std::size_t k = 0; k <= bound; ++k) {
        IntMatrix next = image_basis(hstack(e.torsion_block * l, e.relations));
        if (lattices_equal(next, l)) return l;
        l = std::move(next);
    }
    throw std::logic_error("torsion image chain failed to stabilize within its bound");
}

// Rank of lim of (Z^f, M): total degree of the irreducible factors of the
// characteristic polynomial whose constant term is a unit.
std::size_t free_limit_rank(const IntMatrix& m) {
    if (m.rows() == 0) return 0;
    std::size_t r = 0;
    for (const auto& g : factor_monic(characteristic_polynomial(m)))
        if (abs(g[0]) == 1) r += static_cast<std::size_t>(degree(g));
    return r;
}

FgAbGroup tail_limit(const Homomorphism& m) {
    auto e = split_endo(m);
    auto t_inf = subquotient(stable_torsion_image(e), e.relations);
    return FgAbGroup::from_invariants(t_inf.torsion(), free_limit_rank(e.free_block));
}

}  // namespace

void GroupTower::validate() const {
    if (groups.empty() && !tail) throw ValidationError("a group tower needs at least one group");
    if (bonds.size() + 1 != groups.size() && !(groups.empty() && bonds.empty())) {
        throw ValidationError("a group tower of N groups needs N - 1 bonds");
    }
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (!same_presentation(bonds[i].source(), groups[i + 1]) || !same_presentation(bonds[i].target(), groups[i])) {
            throw ValidationError("group tower bond " + std::to_string(i + 1) + " has the wrong endpoints");
        }
    }
    if (tail) {
        if (!same_presentation(tail->endo.source(), tail->group) || !same_presentation(tail->endo.target(), tail->group)) {
            throw ValidationError("tail endomorphism must act on the tail group");
        }
        if (!groups.empty() && (!same_presentation(tail->splice.source(), tail->group) ||
                                !same_presentation(tail->splice.target(), groups.back()))) {
            throw ValidationError("tail splice must map the tail group to the last finite group");
        }
    }
}

GroupTower GroupTower::constant(const FgAbGroup& g, const Homomorphism& endo) {
    GroupTower t;
    t.tail = Tail{g, endo, Homomorphism::identity(g)};
    t.validate();
    return t;
}

Homomorphism shift_homomorphism(const GroupTower& t) {
    t.validate();
    const std::size_t n = t.groups.size();
    if (n < 2) throw TowerTooShort("the shift homomorphism needs at least two groups");
    auto src = direct_sum(t.groups);
    auto tgt = direct_sum(std::vector<FgAbGroup>(t.groups.begin(), t.groups.end() - 1));
    IntMatrix m(tgt.ambient_rank(), src.ambient_rank());
    std::size_t row = 0, col = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t r = t.groups[i].ambient_rank();
        for (std::size_t k = 0; k < r; ++k) m(row + k, col + k) = -1;
        m.set_block(row, col + r, t.bonds[i].matrix());
        row += r;
        col += r;
    }
    return {src, tgt, std::move(m)};
}

FgAbGroup inverse_limit(const GroupTower& t) {
    t.validate();
    // cofinality: an eventually constant tower has the limit of its tail
    if (t.tail) return tail_limit(t.tail->endo);
    if (t.groups.size() == 1) return t.groups.front();
    return shift_homomorphism(t).kernel();
}

std::vector<IntMatrix> image_chain(const FgAbGroup& a, const IntMatrix& endo, std::size_t steps) {
    std::vector<IntMatrix> out{IntMatrix::identity(a.ambient_rank())};
    for (std::size_t k = 0; k < steps; ++k) out.push_back(image_basis(hstack(endo * out.back(), a.relations())));
    return out;
}

Lim1Verdict lim1_verdict(const GroupTower& t) {
    t.validate();
    Lim1Verdict v;
    if (!t.tail) {
        if (t.groups.size() == 1) {
            v.reason = "single group";
            return v;
        }
        v.zero = shift_homomorphism(t).cokernel().is_trivial();
        v.reason = v.zero ? "finite tower: the shift map is surjective" : "finite tower: shift map not surjective";
        return v;
    }
    const auto& a = t.tail->group;
    const auto& m = t.tail->endo;
    auto e = split_endo(m);

    // free part: ranks of M^k F stabilize within f steps
    IntMatrix img = IntMatrix::identity(e.free_rank);
    std::size_t k0 = 0;
    for (;; ++k0) {
        IntMatrix next = image_basis(e.free_block * img);
        if (next.cols() == img.cols()) break;
        img = std::move(next);
        if (k0 > e.free_rank) throw std::logic_error("rank of the image chain failed to stabilize");
    }
    v.rank_stable_at = k0;
    // restriction of M to the stable-rank image: M B = B X
    const std::size_t s = img.cols();
    IntMatrix x(s, s);
    auto ech = column_echelon(img, false);
    auto mb = e.free_block * img;
    for (std::size_t j = 0; j < s; ++j) {
        auto c = ech.coordinates(mb.col(j));
        if (!c) throw std::logic_error("image lattice is not invariant");
        x.set_col(j, *c);
    }
    v.index_witness = determinant(x);
    if (abs(v.index_witness) != 1) {
        v.zero = false;
        v.reason = "not Mittag-Leffler: M has determinant " + v.index_witness.get_str() +
                   " on the stable-rank image, so the images descend strictly forever";
        return v;
    }
    // Mittag-Leffler: the full image chain in A becomes constant
    const std::size_t bound = k0 + bit_length(e.torsion_order) + 2;
    auto chain = image_chain(a, m.matrix(), bound);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (lattices_equal(chain[k], chain[k + 1])) {
            v.stable_at = k;
            break;
        }
    }
    if (!v.stable_at) throw std::logic_error("unit determinant but the image chain did not stabilize");
    v.zero = true;
    v.reason = "Mittag-Leffler: images stabilize at k = " + std::to_string(*v.stable_at);
    return v;
}

GroupTower homology_tower(const Tower& tower, int n) {
    tower.validate();
    GroupTower t;
    std::vector<HomologyData> data;
    for (const auto& c : tower.levels) {
        data.push_back(homology_data(c, n));
        t.groups.push_back(data.back().group);
    }
    for (std::size_t i = 0; i < tower.bonds.size(); ++i)
        t.bonds.push_back(induced_on_homology(tower.bonds[i], n, data[i + 1], data[i]));
    return t;
}

GroupTower levelwise_homology_tower(const MapTower& f, int n) { return homology_tower(f.cone_tower(), n); }

MilnorReport milnor_report(const MapTower& f, int n) {
    MilnorReport r;
    r.degree = n;
    auto s = pair_shift_difference(f);
    auto seq = cone_sequence(s);
    const auto& k = s.source();
    const auto& kp = s.target();
    const auto& c = seq.i.target();
    const auto& sk = seq.p.target();
    auto hk1 = homology_data(k, n + 1), hkp1 = homology_data(kp, n + 1);
    auto hc = homology_data(c, n + 1);
    auto hsk = homology_data(sk, n + 1);  // = H_n(K) on the same matrices
    auto hkp0 = homology_data(kp, n);

    auto p1 = induced_on_homology(s, n + 1, hk1, hkp1);
    auto iota = induced_on_homology(seq.i, n + 1, hkp1, hc);
    auto pi = induced_on_homology(seq.p, n + 1, hc, hsk);
    auto p0 = induced_on_homology(s, n, hsk, hkp0);

    r.exact_left = is_exact_at(p1, iota);
    r.exact_middle = is_exact_at(iota, pi);
    r.exact_right = is_exact_at(pi, p0);
    r.lim1 = p1.cokernel();
    r.lim = p0.kernel();
    r.lim1_trivial = r.lim1.is_trivial();
    r.lim1_verdict = lim1_verdict(levelwise_homology_tower(f, n + 1));
    r.lim_tower = inverse_limit(levelwise_homology_tower(f, n));
    r.strong_group = hc.group;
    r.last_level = homology(mapping_cone(f.maps.back()).complex, n);
    r.oracle = r.strong_group.isomorphic(r.last_level) && r.lim.isomorphic(r.last_level) &&
               r.lim_tower.isomorphic(r.last_level) && r.lim1_verdict.zero;
    return r;
}

std::vector<MilnorNaturality> milnor_naturality(const TowerMorphism& m, int lo, int hi) {
    auto sm = shift_morphism(m);
    SesMorphism ladder{cone_sequence(sm.f), cone_sequence(sm.g), sm.phi2, cone_functor_map(sm),
                       suspension(sm.phi1)};
    std::vector<MilnorNaturality> out;
    const bool chains = ladder_commutes_on_chains(ladder);
    std::vector<LadderCheck> checks;
    if (chains) checks = check_ladder(ladder, lo + 1, hi + 1);
    for (int n = lo; n <= hi; ++n) {
        MilnorNaturality r;
        r.degree = n;
        if (chains) {
            const auto& c = checks[static_cast<std::size_t>(n - lo)];
            r.left = c.left;
            r.right = c.middle;
            r.shift = c.connecting;
        }
        out.push_back(r);
    }
    return out;
}

MilnorNaturality milnor_naturality(const TowerMorphism& m, int n) { return milnor_naturality(m, n, n).front(); }

}  // namespace steenrod

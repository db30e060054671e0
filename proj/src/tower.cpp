#include "steenrod/tower.hpp"

#include "steenrod/errors.hpp"

namespace steenrod {

void Tower::validate() const {
    if (levels.empty()) throw ValidationError("a tower needs at least one level");
    if (bonds.size() + 1 != levels.size()) throw ValidationError("a tower of N levels needs N - 1 bonds");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (!(bonds[i].source() == levels[i + 1]) || !(bonds[i].target() == levels[i])) {
            throw ValidationError("bond " + std::to_string(i + 1) + " does not connect adjacent levels");
        }
    }
}

Tower Tower::constant(const ChainComplex& c, std::size_t n) {
    Tower t;
    t.levels.assign(n, c);
    t.bonds.assign(n == 0 ? 0 : n - 1, ChainMap::identity(c));
    return t;
}

void MapTower::validate() const {
    domain.validate();
    codomain.validate();
    if (maps.size() != domain.length() || maps.size() != codomain.length()) {
        throw ValidationError("map tower levels do not match the tower lengths");
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (!(maps[i].source() == domain.levels[i]) || !(maps[i].target() == codomain.levels[i])) {
            throw ValidationError("level map " + std::to_string(i + 1) + " has the wrong endpoints");
        }
    }
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        if (!(compose(maps[i], domain.bonds[i]) == compose(codomain.bonds[i], maps[i + 1]))) {
            throw ValidationError("square at level " + std::to_string(i + 1) + " does not commute");
        }
    }
}

Tower MapTower::cone_tower() const {
    Tower t;
    for (const auto& f : maps) t.levels.push_back(mapping_cone(f).complex);
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        t.bonds.push_back(cone_functor_map(
            CoherentChainMorphism::strict(maps[i + 1], maps[i], domain.bonds[i], codomain.bonds[i])));
    }
    return t;
}

ChainComplex product_complex(const Tower& t, std::size_t count) {
    return direct_sum(std::vector<ChainComplex>(t.levels.begin(), t.levels.begin() + static_cast<std::ptrdiff_t>(count)));
}

ChainComplex product_complex(const Tower& t) { return product_complex(t, t.length()); }

ChainMap shift_difference(const Tower& t) {
    if (t.length() < 2) throw TowerTooShort("the shift difference needs at least two levels");
    t.validate();
    const std::size_t n_levels = t.length();
    auto src = product_complex(t, n_levels);
    auto tgt = product_complex(t, n_levels - 1);
    std::vector<IntMatrix> comps;
    for (int n = src.lo(); n <= src.hi(); ++n) {
        IntMatrix m(tgt.rank(n), src.rank(n));
        std::size_t row = 0, col = 0;
        for (std::size_t i = 0; i + 1 < n_levels; ++i) {
            const std::size_t ri = t.levels[i].rank(n);
            for (std::size_t k = 0; k < ri; ++k) m(row + k, col + k) = -1;
            m.set_block(row, col + ri, t.bonds[i].component(n));
            row += ri;
            col += ri;
        }
        comps.push_back(std::move(m));
    }
    return {src, tgt, std::move(comps)};
}

ChainMap pair_shift_difference(const MapTower& f) {
    if (f.length() < 2) throw TowerTooShort("the pair shift difference needs at least two levels");
    f.validate();
    return shift_difference(f.cone_tower());
}

HomologyData strong_homology_data(const MapTower& f, int n) {
    return homology_data(mapping_cone(pair_shift_difference(f)).complex, n + 1);
}

FgAbGroup strong_homology(const MapTower& f, int n) { return strong_homology_data(f, n).group; }

namespace {

// Offset of level i inside degree n of a product over the first `count` levels.
std::size_t level_offset(const Tower& t, std::size_t i, int n) {
    std::size_t off = 0;
    for (std::size_t l = 0; l < i; ++l) off += t.levels[l].rank(n);
    return off;
}

long parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

SigmaPartial sigma_partial_ses(const MapTower& f) {
    f.validate();
    const std::size_t n_levels = f.length();
    const auto& x = f.domain;
    const auto& xp = f.codomain;
    auto cone_t = f.cone_tower();
    auto c_pair = mapping_cone(pair_shift_difference(f)).complex;
    auto c_xp = mapping_cone(shift_difference(xp)).complex;
    auto c_x = mapping_cone(shift_difference(x)).complex;
    auto s_c_x = suspension(c_x);

    // Degree k of C(pair): (prod_N C_{k-1}(f_i)) + (prod_{N-1} C_k(f_i)),
    // with C_j(f_i) = X_i,j-1 + X'_i,j.
    std::vector<IntMatrix> sigma, partial;
    for (int k = c_xp.lo(); k <= c_xp.hi(); ++k) {
        IntMatrix m(c_pair.rank(k), c_xp.rank(k));
        const std::size_t head = level_offset(cone_t, n_levels, k - 1);
        const std::size_t head_src = level_offset(xp, n_levels, k - 1);
        for (std::size_t i = 0; i < n_levels; ++i) {
            const std::size_t row = level_offset(cone_t, i, k - 1) + x.levels[i].rank(k - 2);
            const std::size_t col = level_offset(xp, i, k - 1);
            for (std::size_t a = 0; a < xp.levels[i].rank(k - 1); ++a) m(row + a, col + a) = parity_sign(k - 1);
        }
        for (std::size_t i = 0; i + 1 < n_levels; ++i) {
            const std::size_t row = head + level_offset(cone_t, i, k) + x.levels[i].rank(k - 1);
            const std::size_t col = head_src + level_offset(xp, i, k);
            for (std::size_t a = 0; a < xp.levels[i].rank(k); ++a) m(row + a, col + a) = parity_sign(k);
        }
        sigma.push_back(std::move(m));
    }
    for (int k = c_pair.lo(); k <= c_pair.hi(); ++k) {
        IntMatrix m(s_c_x.rank(k), c_pair.rank(k));
        const std::size_t head = level_offset(cone_t, n_levels, k - 1);
        const std::size_t head_tgt = level_offset(x, n_levels, k - 2);
        for (std::size_t i = 0; i < n_levels; ++i) {
            const std::size_t row = level_offset(x, i, k - 2);
            const std::size_t col = level_offset(cone_t, i, k - 1);
            for (std::size_t a = 0; a < x.levels[i].rank(k - 2); ++a) m(row + a, col + a) = 1;
        }
        for (std::size_t i = 0; i + 1 < n_levels; ++i) {
            const std::size_t row = head_tgt + level_offset(x, i, k - 1);
            const std::size_t col = head + level_offset(cone_t, i, k);
            for (std::size_t a = 0; a < x.levels[i].rank(k - 1); ++a) m(row + a, col + a) = 1;
        }
        partial.push_back(std::move(m));
    }
    SigmaPartial out{{ChainMap(c_xp, c_pair, std::move(sigma)), ChainMap(c_pair, s_c_x, std::move(partial))}, {}};
    out.certificate = certify_ses(out.ses);
    return out;
}

LongExactSequence long_exact_sequence(const MapTower& f, int lo, int hi) {
    auto sp = sigma_partial_ses(f);
    auto les = homology_sequence(sp.ses, lo + 1, hi + 1);
    // H_k(C(p'#)) = Hbar_{k-1}(X'), H_k(C(pair)) = Hbar_{k-1}(f), H_k(Sigma C(p#)) = Hbar_{k-2}(X)
    for (std::size_t idx = 0; idx < les.labels.size(); ++idx) {
        const int k = hi + 1 - static_cast<int>(idx / 3);
        switch (idx % 3) {
            case 0: les.labels[idx] = "Hbar_" + std::to_string(k - 1) + "(X')"; break;
            case 1: les.labels[idx] = "Hbar_" + std::to_string(k - 1) + "(f)"; break;
            default: les.labels[idx] = "Hbar_" + std::to_string(k - 2) + "(X)"; break;
        }
    }
    return les;
}

void TowerMorphism::validate() const {
    source.validate();
    target.validate();
    if (levels.size() != source.length() || levels.size() != target.length()) {
        throw IncoherentMorphism("tower morphism needs one coherent morphism per level");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& l = levels[i];
        if (!(l.f == source.maps[i]) || !(l.g == target.maps[i])) {
            throw IncoherentMorphism("level " + std::to_string(i + 1) + " morphism has the wrong maps");
        }
        l.validate();
    }
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        const auto& a = levels[i];
        const auto& b = levels[i + 1];
        if (!(compose(a.phi1, source.domain.bonds[i]) == compose(target.domain.bonds[i], b.phi1)) ||
            !(compose(a.phi2, source.codomain.bonds[i]) == compose(target.codomain.bonds[i], b.phi2)) ||
            !(compose(a.phi12, GradedMap(source.domain.bonds[i])) ==
              compose(GradedMap(target.codomain.bonds[i]), b.phi12))) {
            throw IncoherentMorphism("tower morphism does not commute with the bonds at level " +
                                     std::to_string(i + 1));
        }
    }
}

TowerMorphism TowerMorphism::identity(const MapTower& f) {
    TowerMorphism m{f, f, {}};
    for (const auto& g : f.maps) m.levels.push_back(CoherentChainMorphism::identity(g));
    return m;
}

Tower reindex(const Tower& t, const std::vector<std::size_t>& index) {
    t.validate();
    Tower out;
    for (std::size_t j = 0; j < index.size(); ++j) {
        if (index[j] >= t.length() || (j > 0 && index[j] <= index[j - 1])) {
            throw ValidationError("reindexing needs a strictly increasing list of levels");
        }
        out.levels.push_back(t.levels[index[j]]);
        if (j == 0) continue;
        ChainMap bond = ChainMap::identity(t.levels[index[j]]);
        for (std::size_t l = index[j]; l > index[j - 1]; --l) bond = compose(t.bonds[l - 1], bond);
        out.bonds.push_back(bond);
    }
    return out;
}

MapTower reindex(const MapTower& f, const std::vector<std::size_t>& index) {
    MapTower out{reindex(f.domain, index), reindex(f.codomain, index), {}};
    for (auto i : index) out.maps.push_back(f.maps[i]);
    out.validate();
    return out;
}

namespace {

ChainMap product_map(const std::vector<ChainMap>& maps, std::size_t count) {
    std::vector<GradedMap> parts(maps.begin(), maps.begin() + static_cast<std::ptrdiff_t>(count));
    return ChainMap(direct_sum(parts));
}

}  // namespace

CoherentChainMorphism shift_morphism(const TowerMorphism& m) {
    m.validate();
    const std::size_t n_levels = m.levels.size();
    std::vector<ChainMap> cone_maps;
    for (const auto& l : m.levels) cone_maps.push_back(cone_functor_map(l));
    return CoherentChainMorphism::strict(pair_shift_difference(m.source), pair_shift_difference(m.target),
                                         product_map(cone_maps, n_levels), product_map(cone_maps, n_levels - 1));
}

ChainMap strong_chain_map(const TowerMorphism& m) { return cone_functor_map(shift_morphism(m)); }

Homomorphism induced_morphism(const TowerMorphism& m, int n) {
    auto f = strong_chain_map(m);
    return induced_on_homology(f, n + 1);
}

SesMorphism induced_ses_morphism(const TowerMorphism& m) {
    m.validate();
    const std::size_t n_levels = m.levels.size();
    std::vector<ChainMap> phi1, phi2;
    for (const auto& l : m.levels) {
        phi1.push_back(l.phi1);
        phi2.push_back(l.phi2);
    }
    auto on_x = CoherentChainMorphism::strict(shift_difference(m.source.domain), shift_difference(m.target.domain),
                                              product_map(phi1, n_levels), product_map(phi1, n_levels - 1));
    auto on_xp =
        CoherentChainMorphism::strict(shift_difference(m.source.codomain), shift_difference(m.target.codomain),
                                      product_map(phi2, n_levels), product_map(phi2, n_levels - 1));
    return {sigma_partial_ses(m.source).ses, sigma_partial_ses(m.target).ses, cone_functor_map(on_xp),
            strong_chain_map(m), suspension(cone_functor_map(on_x))};
}

ChainHomotopy strong_homotopy(const TowerHomotopy& d, const TowerMorphism& phi, const TowerMorphism& psi) {
    if (d.levels.size() != phi.levels.size()) throw IncoherentHomotopy("one coherent homotopy per level is needed");
    const std::size_t n_levels = d.levels.size();
    std::vector<GradedMap> hs;
    for (std::size_t i = 0; i < n_levels; ++i)
        hs.push_back(cone_functor_homotopy(d.levels[i], phi.levels[i], psi.levels[i]));
    auto all = direct_sum(hs);
    auto head = direct_sum(std::vector<GradedMap>(hs.begin(), hs.begin() + static_cast<std::ptrdiff_t>(n_levels - 1)));
    CoherentChainHomotopy top{all, head, GradedMap::zero(all.source(), head.target(), 2)};
    return cone_functor_homotopy(top, shift_morphism(phi), shift_morphism(psi));
}

}  // namespace steenrod

#include "steenrod/simplicial.hpp"

#include "steenrod/errors.hpp"

#include <algorithm>
#include <set>

namespace steenrod {

namespace {

// Sort a vertex sequence; sign of the sorting permutation, or 0 on a repeat.
int orient(std::vector<std::size_t>& seq) {
    int sign = 1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
            if (seq[j - 1] == seq[j]) return 0;
            std::swap(seq[j - 1], seq[j]);
            sign = -sign;
        }
    }
    return sign;
}

const std::vector<Simplex> kNoSimplices;

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> simplices)
    : labels_(std::move(labels)) {
    std::set<Simplex> all;
    for (auto& s : simplices) {
        if (s.empty()) throw ValidationError("empty simplex in a simplicial complex");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= labels_.size()) throw ValidationError("simplex uses an unknown vertex");
            if (i > 0 && s[i] <= s[i - 1]) throw ValidationError("simplex vertices must be strictly increasing");
        }
        all.insert(s);
    }
    for (const auto& s : all) {
        if (s.size() < 2) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            if (!all.count(face)) throw ValidationError("simplicial complex is not closed under faces");
        }
    }
    for (const auto& s : all) {
        const std::size_t k = s.size() - 1;
        if (by_dim_.size() <= k) by_dim_.resize(k + 1);
        by_dim_[k].push_back(s);  // std::set iterates in lexicographic order
    }
    index_.resize(by_dim_.size());
    for (std::size_t k = 0; k < by_dim_.size(); ++k)
        for (std::size_t i = 0; i < by_dim_[k].size(); ++i) index_[k][by_dim_[k][i]] = i;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels, const std::vector<Simplex>& facets) {
    std::set<Simplex> all;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        const std::size_t n = f.size();
        if (n == 0) continue;
        if (n > 20) throw ValidationError("facet too large");
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ul << i)) s.push_back(f[i]);
            all.insert(std::move(s));
        }
    }
    return {std::move(labels), std::vector<Simplex>(all.begin(), all.end())};
}

SimplicialComplex SimplicialComplex::circle(std::size_t m) {
    if (m < 3) throw ValidationError("a simplicial circle needs at least three edges");
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    for (std::size_t v = 0; v < m; ++v) {
        labels.push_back("v" + std::to_string(v));
        facets.push_back({v, (v + 1) % m});
    }
    return from_facets(std::move(labels), facets);
}

SimplicialComplex SimplicialComplex::point() { return {{"v0"}, {{0}}}; }

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kNoSimplices;
    return by_dim_[static_cast<std::size_t>(k)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const std::size_t k = s.size() - 1;
    return !s.empty() && k < index_.size() && index_[k].count(s) > 0;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
    if (!contains(s)) throw ValidationError("simplex not in complex");
    return index_[s.size() - 1].at(s);
}

void SimplicialMap::validate() const {
    if (vertex_map.size() != source.vertex_count()) throw ValidationError("vertex map has the wrong length");
    for (auto v : vertex_map)
        if (v >= target.vertex_count()) throw ValidationError("vertex map leaves the target");
    for (int k = 0; k <= source.dimension(); ++k) {
        for (const auto& s : source.simplices(k)) {
            std::set<std::size_t> image;
            for (auto v : s) image.insert(vertex_map[v]);
            if (!target.contains(Simplex(image.begin(), image.end()))) {
                throw ValidationError("simplicial map sends a simplex outside the target");
            }
        }
    }
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap out{f.source, g.target, {}};
    for (auto v : f.vertex_map) out.vertex_map.push_back(g.vertex_map[v]);
    out.validate();
    return out;
}

ChainComplex chains_of(const SimplicialComplex& k, bool augmented) {
    const int top = k.dimension();
    const int lo = augmented ? -1 : 0;
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> d;
    for (int n = lo; n <= top; ++n) {
        ranks.push_back(n < 0 ? 1 : k.simplices(n).size());
        if (n == lo) continue;
        IntMatrix m(ranks[ranks.size() - 2], ranks.back());
        const auto& cells = k.simplices(n);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (n == 0) {
                m(0, j) = 1;  // augmentation
                continue;
            }
            for (std::size_t i = 0; i < cells[j].size(); ++i) {
                Simplex face = cells[j];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                m(k.index_of(face), j) += (i % 2 == 0) ? 1 : -1;
            }
        }
        d.push_back(std::move(m));
    }
    return {lo, std::move(ranks), std::move(d)};
}

ChainMap chain_map_of(const SimplicialMap& f, bool augmented) {
    f.validate();
    auto src = chains_of(f.source, augmented);
    auto tgt = chains_of(f.target, augmented);
    std::vector<IntMatrix> comps;
    for (int n = src.lo(); n <= src.hi(); ++n) {
        IntMatrix m(tgt.rank(n), src.rank(n));
        if (n < 0) {
            m(0, 0) = 1;
        } else {
            const auto& cells = f.source.simplices(n);
            for (std::size_t j = 0; j < cells.size(); ++j) {
                std::vector<std::size_t> image;
                for (auto v : cells[j]) image.push_back(f.vertex_map[v]);
                const int s = orient(image);
                if (s != 0) m(f.target.index_of(image), j) += s;
            }
        }
        comps.push_back(std::move(m));
    }
    return {src, tgt, std::move(comps)};
}

std::vector<SimplicialComplex> solenoid_circles(long p, std::size_t n) {
    if (p < 2) throw ValidationError("solenoid degree must be at least 2");
    std::vector<SimplicialComplex> out;
    std::size_t edges = 3;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(SimplicialComplex::circle(edges));
        edges *= static_cast<std::size_t>(p);
    }
    return out;
}

std::vector<SimplicialMap> solenoid_bonds(long p, std::size_t n) {
    auto circles = solenoid_circles(p, n);
    std::vector<SimplicialMap> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        SimplicialMap b{circles[i + 1], circles[i], {}};
        const std::size_t m = circles[i].vertex_count();
        for (std::size_t v = 0; v < circles[i + 1].vertex_count(); ++v) b.vertex_map.push_back(v % m);
        b.validate();
        out.push_back(std::move(b));
    }
    return out;
}

Tower solenoid_tower(long p, std::size_t n) {
    Tower t;
    for (const auto& c : solenoid_circles(p, n)) t.levels.push_back(chains_of(c));
    for (const auto& b : solenoid_bonds(p, n)) t.bonds.push_back(chain_map_of(b));
    t.validate();
    return t;
}

SimplicialCone simplicial_mapping_cone(const SimplicialMap& f) {
    f.validate();
    const std::size_t ns = f.source.vertex_count();
    const std::size_t nt = f.target.vertex_count();
    SimplicialCone out;
    out.apex = 0;
    out.source_offset = 1;
    out.target_offset = 1 + ns;
    std::vector<std::string> labels{"*"};
    for (const auto& l : f.source.labels()) labels.push_back("x:" + l);
    for (const auto& l : f.target.labels()) labels.push_back("y:" + l);
    std::vector<Simplex> facets;
    for (int k = 0; k <= f.target.dimension(); ++k) {
        for (auto s : f.target.simplices(k)) {
            for (auto& v : s) v += out.target_offset;
            facets.push_back(std::move(s));
        }
    }
    facets.push_back({out.apex});
    for (int k = 0; k <= f.source.dimension(); ++k) {
        for (const auto& s : f.source.simplices(k)) {
            Simplex coned{out.apex};
            for (auto v : s) coned.push_back(v + out.source_offset);
            facets.push_back(std::move(coned));
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex cyl;
                for (std::size_t j = 0; j <= i; ++j) cyl.push_back(s[j] + out.source_offset);
                for (std::size_t j = i; j < s.size(); ++j) cyl.push_back(f.vertex_map[s[j]] + out.target_offset);
                facets.push_back(std::move(cyl));
            }
        }
    }
    out.complex = SimplicialComplex::from_facets(std::move(labels), facets);
    out.target_inclusion = SimplicialMap{f.target, out.complex, {}};
    for (std::size_t v = 0; v < nt; ++v) out.target_inclusion.vertex_map.push_back(v + out.target_offset);
    out.target_inclusion.validate();
    return out;
}

bool Axiom1Certificate::ok() const {
    if (!chain_level) return false;
    return std::all_of(degrees.begin(), degrees.end(), [](const Axiom1Degree& d) {
        return d.isomorphic && d.c_iso && d.suspension_iso && d.ladder;
    });
}

namespace {

// Reduced chains of K modulo the subcomplex spanned by simplices whose
// vertices all lie at or above `sub_from`.
struct QuotientChains {
    ChainComplex complex;
    ChainMap projection;
    // keep[n][j]: position of simplex j of degree n in the quotient basis, or -1
    std::vector<std::vector<long>> keep;
};

QuotientChains quotient_chains(const SimplicialComplex& k, const ChainComplex& full, std::size_t sub_from) {
    QuotientChains q;
    const int top = k.dimension();
    std::vector<std::size_t> ranks;
    for (int n = -1; n <= top; ++n) {
        std::vector<long> pos;
        long next = 0;
        if (n < 0) {
            pos.push_back(-1);  // the augmentation class lies in the subcomplex
        } else {
            for (const auto& s : k.simplices(n)) pos.push_back(s.front() >= sub_from ? -1 : next++);
        }
        q.keep.push_back(std::move(pos));
        ranks.push_back(static_cast<std::size_t>(next));
    }
    auto kept = [&](int n) {
        std::vector<std::size_t> idx;
        const auto& pos = q.keep[static_cast<std::size_t>(n + 1)];
        for (std::size_t j = 0; j < pos.size(); ++j)
            if (pos[j] >= 0) idx.push_back(j);
        return idx;
    };
    std::vector<IntMatrix> d;
    for (int n = 0; n <= top; ++n) d.push_back(full.differential(n).select_rows(kept(n - 1)).select_cols(kept(n)));
    q.complex = ChainComplex(-1, ranks, std::move(d));
    std::vector<IntMatrix> proj;
    for (int n = full.lo(); n <= full.hi(); ++n) {
        IntMatrix m(q.complex.rank(n), full.rank(n));
        const auto& pos = q.keep[static_cast<std::size_t>(n + 1)];
        for (std::size_t j = 0; j < pos.size(); ++j)
            if (pos[j] >= 0) m(static_cast<std::size_t>(pos[j]), j) = 1;
        proj.push_back(std::move(m));
    }
    q.projection = ChainMap(full, q.complex, std::move(proj));
    return q;
}

}  // namespace

Axiom1Certificate axiom1_crosscheck(const SimplicialMap& f, int n) {
    auto cone = simplicial_mapping_cone(f);
    const auto& k = cone.complex;
    auto ft = chain_map_of(f, true);
    auto alg = cone_sequence(ft);  // 0 -> M~ -> C(f~) -> Sigma L~ -> 0
    const auto& c_alg = alg.i.target();
    auto ck = chains_of(k, true);
    auto incl = chain_map_of(cone.target_inclusion, true);
    auto quot = quotient_chains(k, ck, cone.target_offset);
    const auto& lt = ft.source();

    // Theta_n(l, m) = (-1)^n m + (-1)^(n-1) (P l + * l), P the prism operator.
    auto theta_col = [&](const Simplex& tau, IntMatrix& m, std::size_t col, long scale) {
        if (tau.empty()) {
            m(k.index_of({cone.apex}), col) += scale;
            return;
        }
        Simplex coned{cone.apex};
        for (auto v : tau) coned.push_back(v + cone.source_offset);
        m(k.index_of(coned), col) += scale;
        for (std::size_t i = 0; i < tau.size(); ++i) {
            std::vector<std::size_t> seq;
            for (std::size_t j = 0; j <= i; ++j) seq.push_back(tau[j] + cone.source_offset);
            for (std::size_t j = i; j < tau.size(); ++j) seq.push_back(f.vertex_map[tau[j]] + cone.target_offset);
            const int s = orient(seq);
            if (s != 0) m(k.index_of(seq), col) += ((i % 2 == 0) ? 1 : -1) * s * scale;
        }
    };
    auto source_cells = [&](int deg) {
        if (deg == -1) return std::vector<Simplex>{Simplex{}};
        return f.source.simplices(deg);
    };

    std::vector<IntMatrix> theta;
    for (int deg = c_alg.lo(); deg <= c_alg.hi(); ++deg) {
        IntMatrix m(ck.rank(deg), c_alg.rank(deg));
        const long alpha = (deg % 2 == 0) ? 1 : -1;
        const long beta = -alpha;
        const auto cells = source_cells(deg - 1);
        for (std::size_t j = 0; j < lt.rank(deg - 1); ++j) theta_col(cells[j], m, j, beta);
        const auto im = incl.component(deg);
        for (std::size_t j = 0; j < ft.target().rank(deg); ++j)
            for (std::size_t r = 0; r < im.rows(); ++r)
                if (im(r, j) != 0) m(r, lt.rank(deg - 1) + j) += alpha * im(r, j);
        theta.push_back(std::move(m));
    }

    Axiom1Certificate cert;
    try {
        ChainMap th(c_alg, ck, std::move(theta));
        std::vector<IntMatrix> theta_bar;
        const auto& sl = alg.p.target();
        for (int deg = sl.lo(); deg <= sl.hi(); ++deg) {
            // Sigma L~ in degree deg is L~_{deg-1}; compose Theta restricted to it with the projection
            IntMatrix restricted = th.component(deg).col_range(0, lt.rank(deg - 1));
            theta_bar.push_back(quot.projection.component(deg) * restricted);
        }
        ChainMap tb(sl, quot.complex, std::move(theta_bar));
        SesMorphism ladder{alg, ShortExactSequence{incl, quot.projection}, ChainMap::identity(ft.target()), th, tb};
        cert.chain_level = ladder_commutes_on_chains(ladder) && certify_ses(ladder.target).ok();
        auto checks = check_ladder(ladder, 0, n);
        for (int deg = 0; deg <= n; ++deg) {
            Axiom1Degree d;
            d.degree = deg;
            auto ha = homology(c_alg, deg);
            auto hg = homology(ck, deg);
            d.algebraic = ha.to_string();
            d.geometric = hg.to_string();
            d.isomorphic = ha.isomorphic(hg);
            d.c_iso = induced_on_homology(th, deg).is_isomorphism();
            d.suspension_iso = induced_on_homology(tb, deg).is_isomorphism();
            d.ladder = checks[static_cast<std::size_t>(deg)].ok();
            cert.degrees.push_back(d);
        }
    } catch (const ValidationError&) {
        cert.chain_level = false;
    }
    return cert;
}

}  // namespace steenrod

#include "steenrod/corpus.hpp"

#include "steenrod/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace steenrod {

namespace {

GradedMap build(const ChainComplex& src, const ChainComplex& tgt, int degree,
                const std::function<IntMatrix(int)>& component) {
    std::vector<IntMatrix> comps;
    for (int n = src.lo(); n <= src.hi(); ++n) comps.push_back(component(n));
    return {src, tgt, degree, std::move(comps)};
}

// Per-degree basis change E_n with inverses, for the degrees of one complex.
struct Rebasing {
    int lo = 0;
    std::vector<IntMatrix> e, inv;

    IntMatrix at(int n, std::size_t rank) const {
        auto k = n - lo;
        return k >= 0 && k < static_cast<int>(e.size()) ? e[k] : IntMatrix::identity(rank);
    }
    IntMatrix inverse_at(int n, std::size_t rank) const {
        auto k = n - lo;
        return k >= 0 && k < static_cast<int>(inv.size()) ? inv[k] : IntMatrix::identity(rank);
    }
};

ChainComplex rebased(const ChainComplex& c, const Rebasing& r) {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> d;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        ranks.push_back(c.rank(n));
        if (n > c.lo()) d.push_back(r.at(n - 1, c.rank(n - 1)) * c.differential(n) * r.inverse_at(n, c.rank(n)));
    }
    return c.is_zero() ? c : ChainComplex(c.lo(), std::move(ranks), std::move(d));
}

// f written on the new bases: E'_{n+k} f_n E_n^{-1}. Either side may be left alone.
GradedMap rebased(const GradedMap& f, const ChainComplex& src, const ChainComplex& tgt, const Rebasing* rs,
                  const Rebasing* rt) {
    const int k = f.degree();
    return build(src, tgt, k, [&](int n) {
        IntMatrix m = f.component(n);
        if (rt) m = rt->at(n + k, tgt.rank(n + k)) * m;
        if (rs) m = m * rs->inverse_at(n, src.rank(n));
        return m;
    });
}

ChainMap rebased(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt, const Rebasing* rs,
                 const Rebasing* rt) {
    return ChainMap(rebased(static_cast<const GradedMap&>(f), src, tgt, rs, rt));
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: matrix is not square");
    auto s = smith_normal_form(m);
    if (s.D != IntMatrix::identity(m.rows())) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    return s.V * s.U;
}

ElementaryBasis decompose(const ChainComplex& c) {
    ElementaryBasis out;
    out.lo = c.lo();
    if (c.is_zero()) return out;
    // complement basis of the previous step's W_{n}, already adapted
    IntMatrix w_adapted(c.rank(c.lo()), 0);
    std::vector<std::size_t> disks_below;  // pieces whose top lives in the current degree
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const std::size_t rn = c.rank(n);
        auto sn = smith_normal_form(c.differential(n), kSmithV | kSmithVInv);
        const std::size_t r = sn.rank;
        IntMatrix k = sn.V.col_range(r, rn - r);
        IntMatrix kc = sn.V_inv.row_range(r, rn - r);

        auto next = smith_normal_form(c.differential(n + 1), kSmithV);
        const std::size_t r1 = next.rank;
        IntMatrix w1 = next.V.col_range(0, r1);
        IntMatrix a = kc * c.differential(n + 1) * w1;  // (rn - r) x r1
        auto sa = smith_normal_form(a, kSmithAll);
        IntMatrix z = k * sa.U_inv;
        IntMatrix w1_adapted = w1 * sa.V;

        IntMatrix e = hstack(w_adapted, z);
        for (std::size_t j = 0; j < disks_below.size(); ++j) out.pieces[disks_below[j]].top = j;
        std::vector<std::size_t> disks_here;
        const auto diag = sa.diagonal();
        for (std::size_t j = 0; j < z.cols(); ++j) {
            ElementaryPiece p;
            p.degree = n;
            p.bottom = r + j;
            if (j < r1) {
                p.order = diag[j];
                disks_here.push_back(out.pieces.size());
            }
            out.pieces.push_back(p);
        }
        out.inverse.push_back(unimodular_inverse(e));
        out.basis.push_back(std::move(e));
        w_adapted = std::move(w1_adapted);
        disks_below = std::move(disks_here);
    }
    return out;
}

CorpusGenerator::CorpusGenerator(std::uint64_t seed, CorpusOptions options) : opts_(options), rng_(seed) {}

long CorpusGenerator::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Integer CorpusGenerator::entry() {
    static constexpr long values[] = {0, 0, 0, 0, 1, -1, 1, -1, 2, -2};
    return values[uniform(0, 9)];
}

Integer CorpusGenerator::bond_scalar() {
    static constexpr long values[] = {1, -1, 2, 3};
    return values[uniform(0, 3)];
}

IntMatrix CorpusGenerator::unimodular(std::size_t n) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && uniform(0, 1)) m.negate_row(0);
        return m;
    }
    for (std::size_t step = 0; step < 2 * n; ++step) {
        auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        m.row_submul(i, j, uniform(0, 1) ? 1 : -1);
    }
    if (uniform(0, 1)) m.swap_rows(0, n - 1);
    return m;
}

ChainComplex CorpusGenerator::complex() { return complex(opts_.lo, opts_.span, opts_.max_rank); }

ChainComplex CorpusGenerator::complex(int lo, int span, std::size_t max_rank) {
    static constexpr long orders[] = {1, 1, 2, 2, 3, 4, 5, 6};
    std::vector<std::size_t> ranks(static_cast<std::size_t>(span), 0);
    struct Cell {
        std::size_t k;
        long order;
    };
    std::vector<Cell> cells;
    const long attempts = uniform(1, static_cast<long>(max_rank) * span);
    for (long a = 0; a < attempts; ++a) {
        auto k = static_cast<std::size_t>(uniform(0, span - 1));
        const bool disk = k + 1 < ranks.size() && uniform(0, 99) < 55;
        if (ranks[k] >= max_rank || (disk && ranks[k + 1] >= max_rank)) continue;
        long order = disk ? orders[uniform(0, 7)] : 0;
        cells.push_back({k, order});
        ++ranks[k];
        if (disk) ++ranks[k + 1];
    }
    // elementary differential, then a unimodular basis change in every degree
    std::vector<std::size_t> fill(ranks.size(), 0);
    std::vector<IntMatrix> d;
    for (std::size_t k = 1; k < ranks.size(); ++k) d.emplace_back(ranks[k - 1], ranks[k]);
    for (const auto& c : cells) {
        const std::size_t bottom = fill[c.k]++;
        if (c.order != 0) d[c.k](bottom, fill[c.k + 1]++) = c.order;
    }
    std::vector<IntMatrix> e, inv;
    for (auto r : ranks) {
        e.push_back(unimodular(r));
        inv.push_back(unimodular_inverse(e.back()));
    }
    for (std::size_t k = 1; k < ranks.size(); ++k) d[k - 1] = e[k - 1] * d[k - 1] * inv[k];
    return {lo, std::move(ranks), std::move(d)};
}

GradedMap CorpusGenerator::graded_map(const ChainComplex& source, const ChainComplex& target, int degree) {
    return build(source, target, degree, [&](int n) {
        IntMatrix m(target.rank(n + degree), source.rank(n));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (uniform(0, 2) == 0) m(i, j) = entry();
        return m;
    });
}

ChainMap CorpusGenerator::chain_map(const ChainComplex& source, const ChainComplex& target) {
    auto a = decompose(source);
    auto b = decompose(target);
    // elementary components F_n, keyed by degree
    std::vector<IntMatrix> f;
    for (int n = source.lo(); n <= source.hi(); ++n) f.emplace_back(target.rank(n), source.rank(n));
    auto put = [&](int n, std::size_t row, std::size_t col, const Integer& v) {
        f[static_cast<std::size_t>(n - source.lo())](row, col) = v;
    };
    for (const auto& pa : a.pieces) {
        for (const auto& pb : b.pieces) {
            const bool sa = pa.order == 0, sb = pb.order == 0;
            if (pb.degree == pa.degree) {
                if (sa) {
                    put(pa.degree, pb.bottom, pa.bottom, entry());
                } else if (!sb) {
                    Integer t = entry();
                    Integer g = gcd(pa.order, pb.order);
                    put(pa.degree + 1, pb.top, pa.top, t * (pa.order / g));
                    put(pa.degree, pb.bottom, pa.bottom, t * (pb.order / g));
                }
            } else if (!sa && pb.degree == pa.degree + 1) {
                put(pa.degree + 1, pb.bottom, pa.top, entry());
            }
        }
    }
    GradedMap base = build(source, target, 0, [&](int n) {
        const auto k = static_cast<std::size_t>(n - source.lo());
        if (target.is_zero() || n < target.lo() || n > target.hi()) return IntMatrix(target.rank(n), source.rank(n));
        return b.basis[static_cast<std::size_t>(n - target.lo())] * f[k] * a.inverse[k];
    });
    return ChainMap(base + commutator_with_boundary(graded_map(source, target, 1)));
}

ChainMap CorpusGenerator::chain_map() {
    auto l = complex();
    auto m = complex();
    return chain_map(l, m);
}

Tower CorpusGenerator::tower(std::size_t n) {
    Tower t;
    for (std::size_t i = 0; i < n; ++i) t.levels.push_back(complex());
    for (std::size_t i = 0; i + 1 < n; ++i) t.bonds.push_back(chain_map(t.levels[i + 1], t.levels[i]));
    t.validate();
    return t;
}

MapTower CorpusGenerator::map_tower() { return map_tower(static_cast<std::size_t>(uniform(2, static_cast<long>(opts_.max_levels)))); }

MapTower CorpusGenerator::map_tower(std::size_t n) {
    // X' = X + Y with p'(x, y) = (p x, c x + q y) and f(x) = (a x, a g x),
    // where c = g p - q g makes every square commute.
    Tower x = tower(n), y = tower(n);
    std::vector<ChainMap> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(chain_map(x.levels[i], y.levels[i]));
    static constexpr long scalars[] = {0, 1, 1, 1, 2, -1};
    const Integer a = scalars[uniform(0, 5)];

    MapTower out;
    out.domain = x;
    std::vector<Rebasing> rb;
    std::vector<ChainComplex> plain;
    for (std::size_t i = 0; i < n; ++i) {
        plain.push_back(direct_sum(x.levels[i], y.levels[i]));
        Rebasing r{plain[i].lo(), {}, {}};
        for (int d = plain[i].lo(); d <= plain[i].hi(); ++d) {
            r.e.push_back(unimodular(plain[i].rank(d)));
            r.inv.push_back(unimodular_inverse(r.e.back()));
        }
        out.codomain.levels.push_back(rebased(plain[i], r));
        rb.push_back(std::move(r));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto& p = x.bonds[i];
        const auto& q = y.bonds[i];
        auto c = compose(g[i], p) - compose(q, g[i + 1]);
        auto bond = build(plain[i + 1], plain[i], 0, [&](int d) {
            return vstack(hstack(p.component(d), IntMatrix(x.levels[i].rank(d), y.levels[i + 1].rank(d))),
                          hstack(c.component(d), q.component(d)));
        });
        out.codomain.bonds.push_back(
            rebased(ChainMap(bond), out.codomain.levels[i + 1], out.codomain.levels[i], &rb[i + 1], &rb[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& xi = x.levels[i];
        auto f = build(xi, plain[i], 0, [&](int d) {
            return vstack(a * IntMatrix::identity(xi.rank(d)), a * g[i].component(d));
        });
        out.maps.push_back(rebased(ChainMap(f), xi, out.codomain.levels[i], nullptr, &rb[i]));
    }
    out.validate();
    return out;
}

CoherentChainMorphism CorpusGenerator::coherent_from(const ChainMap& f) {
    // Strict square first: P = L + P'', Q = M + Y,
    //   phi1 = (1, j), phi2 = (a, h), g = [[a f - r j, r], [h f - s j, s]],
    // then homotopic perturbations of phi1 and phi2 absorbed into phi12.
    const auto& l = f.source();
    const auto& m = f.target();
    auto pp = complex();
    auto y = complex();
    auto j = chain_map(l, pp);
    auto r = chain_map(pp, m);
    auto h = chain_map(m, y);
    auto s = chain_map(pp, y);
    static constexpr long scalars[] = {1, 1, 2, -1, 0};
    const Integer a = scalars[uniform(0, 4)];

    auto p0 = direct_sum(l, pp);
    auto q0 = direct_sum(m, y);
    auto rebasing = [&](const ChainComplex& c) {
        Rebasing rb{c.lo(), {}, {}};
        for (int d = c.lo(); d <= c.hi(); ++d) {
            rb.e.push_back(unimodular(c.rank(d)));
            rb.inv.push_back(unimodular_inverse(rb.e.back()));
        }
        return rb;
    };
    auto rp = rebasing(p0), rq = rebasing(q0);
    auto p = rebased(p0, rp), q = rebased(q0, rq);

    auto phi1 = ChainMap(build(l, p0, 0, [&](int d) { return vstack(IntMatrix::identity(l.rank(d)), j.component(d)); }));
    auto phi2 = ChainMap(build(m, q0, 0, [&](int d) { return vstack(a * IntMatrix::identity(m.rank(d)), h.component(d)); }));
    auto g = ChainMap(build(p0, q0, 0, [&](int d) {
        auto top = hstack(a * f.component(d) - r.component(d) * j.component(d), r.component(d));
        auto bottom = hstack(h.component(d) * f.component(d) - s.component(d) * j.component(d), s.component(d));
        return vstack(top, bottom);
    }));
    CoherentChainMorphism out;
    out.f = f;
    out.g = rebased(g, p, q, &rp, &rq);
    out.phi1 = rebased(phi1, l, p, nullptr, &rp);
    out.phi2 = rebased(phi2, m, q, nullptr, &rq);

    auto s1 = graded_map(l, p, 1);
    auto s2 = graded_map(m, q, 1);
    auto e = graded_map(l, q, 2);
    out.phi1 = ChainMap(out.phi1 + commutator_with_boundary(s1));
    out.phi2 = ChainMap(out.phi2 + commutator_with_boundary(s2));
    out.phi12 = compose(out.g, s1) - compose(s2, f) + commutator_with_boundary(e);
    out.validate();
    return out;
}

namespace {

CoherentPair perturb(CorpusGenerator& gen, const CoherentChainMorphism& phi) {
    const auto& l = phi.f.source();
    const auto& m = phi.f.target();
    const auto& p = phi.g.source();
    const auto& q = phi.g.target();
    CoherentPair out;
    out.phi = phi;
    out.d.d1 = gen.graded_map(l, p, 1);
    out.d.d2 = gen.graded_map(m, q, 1);
    out.d.d12 = gen.graded_map(l, q, 2);
    out.psi.f = phi.f;
    out.psi.g = phi.g;
    out.psi.phi1 = ChainMap(phi.phi1 + commutator_with_boundary(out.d.d1));
    out.psi.phi2 = ChainMap(phi.phi2 + commutator_with_boundary(out.d.d2));
    out.psi.phi12 = phi.phi12 + compose(phi.g, out.d.d1) - compose(out.d.d2, phi.f) -
                    commutator_with_boundary(out.d.d12);
    out.psi.validate();
    out.d.validate(out.phi, out.psi);
    return out;
}

Tower scalar_tower(const ChainComplex& c, const std::vector<Integer>& scalars) {
    Tower t;
    t.levels.assign(scalars.size() + 1, c);
    for (const auto& s : scalars) t.bonds.push_back(s * ChainMap::identity(c));
    return t;
}

MapTower scalar_map_tower(const ChainMap& f, const std::vector<Integer>& scalars) {
    MapTower t;
    t.domain = scalar_tower(f.source(), scalars);
    t.codomain = scalar_tower(f.target(), scalars);
    t.maps.assign(scalars.size() + 1, f);
    t.validate();
    return t;
}

}  // namespace

CoherentPair CorpusGenerator::coherent_pair() { return perturb(*this, coherent_from(chain_map())); }

TowerMorphism CorpusGenerator::tower_morphism() {
    const auto n = static_cast<std::size_t>(uniform(2, static_cast<long>(opts_.max_levels)));
    TowerMorphism out;
    if (morphism_count_++ % 2 == 0) {
        // F -> F + H, (a, 0) on every level
        auto f = map_tower(n);
        auto h = map_tower(n);
        static constexpr long scalars[] = {1, 2, 3, -1, 0};
        const Integer a = scalars[uniform(0, 4)];
        out.source = f;
        MapTower& g = out.target;
        for (std::size_t i = 0; i < n; ++i) {
            g.domain.levels.push_back(direct_sum(f.domain.levels[i], h.domain.levels[i]));
            g.codomain.levels.push_back(direct_sum(f.codomain.levels[i], h.codomain.levels[i]));
            g.maps.push_back(direct_sum(f.maps[i], h.maps[i]));
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            g.domain.bonds.push_back(direct_sum(f.domain.bonds[i], h.domain.bonds[i]));
            g.codomain.bonds.push_back(direct_sum(f.codomain.bonds[i], h.codomain.bonds[i]));
        }
        g.validate();
        auto inject = [&](const ChainComplex& c, const ChainComplex& sum) {
            return ChainMap(build(c, sum, 0, [&](int d) {
                IntMatrix m(sum.rank(d), c.rank(d));
                m.set_block(0, 0, a * IntMatrix::identity(c.rank(d)));
                return m;
            }));
        };
        for (std::size_t i = 0; i < n; ++i) {
            out.levels.push_back(CoherentChainMorphism::strict(f.maps[i], g.maps[i],
                                                               inject(f.domain.levels[i], g.domain.levels[i]),
                                                               inject(f.codomain.levels[i], g.codomain.levels[i])));
        }
    } else {
        // levelwise constant coherent morphism over scalar bonds
        std::vector<Integer> scalars;
        for (std::size_t i = 0; i + 1 < n; ++i) scalars.push_back(bond_scalar());
        auto phi = coherent_from(chain_map());
        out.source = scalar_map_tower(phi.f, scalars);
        out.target = scalar_map_tower(phi.g, scalars);
        out.levels.assign(n, phi);
    }
    out.validate();
    return out;
}

TowerHomotopyPair CorpusGenerator::tower_homotopy_pair() {
    const auto n = static_cast<std::size_t>(uniform(2, static_cast<long>(opts_.max_levels)));
    std::vector<Integer> scalars;
    for (std::size_t i = 0; i + 1 < n; ++i) scalars.push_back(bond_scalar());
    auto pair = coherent_pair();
    TowerHomotopyPair out;
    for (auto* m : {&out.phi, &out.psi}) {
        m->source = scalar_map_tower(pair.phi.f, scalars);
        m->target = scalar_map_tower(pair.phi.g, scalars);
    }
    out.phi.levels.assign(n, pair.phi);
    out.psi.levels.assign(n, pair.psi);
    out.d.levels.assign(n, pair.d);
    out.phi.validate();
    out.psi.validate();
    return out;
}

GroupWithEndo CorpusGenerator::group_with_endo(bool finite) {
    static constexpr long orders[] = {2, 3, 4, 6, 8, 9, 12};
    const std::size_t t = static_cast<std::size_t>(uniform(finite ? 1 : 0, 3));
    const std::size_t f = finite ? 0 : static_cast<std::size_t>(uniform(t == 0 ? 1 : 0, 2));
    const std::size_t n = t + f;
    std::vector<Integer> d;
    for (std::size_t i = 0; i < t; ++i) d.push_back(orders[uniform(0, 6)]);
    // endomorphism on the diagonal presentation: torsion never maps to free
    // generators, and Z/dj -> Z/di entries are multiples of di / gcd(di, dj)
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i >= t && j < t) continue;
            Integer v = entry();
            if (i < t && j < t) v *= d[i] / gcd(d[i], d[j]);
            m(i, j) = v;
        }
    }
    IntMatrix rel(n, t + (t > 0 ? 1 : 0));
    for (std::size_t i = 0; i < t; ++i) rel(i, i) = d[i];
    if (t > 0) {
        // one redundant relator
        for (std::size_t i = 0; i < t; ++i) rel(i, t) = d[i] * entry();
    }
    auto u = unimodular(n);
    auto u_inv = unimodular_inverse(u);
    FgAbGroup g(n, u * rel);
    return {g, Homomorphism(g, g, u * m * u_inv)};
}

SimplicialComplex CorpusGenerator::simplicial_complex(std::size_t max_vertices) {
    const auto n = static_cast<std::size_t>(uniform(3, static_cast<long>(max_vertices)));
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    for (std::size_t v = 0; v < n; ++v) {
        labels.push_back("v" + std::to_string(v));
        facets.push_back({v});
    }
    const long count = uniform(2, 6);
    for (long k = 0; k < count; ++k) {
        Simplex s;
        const long size = uniform(2, 3);
        while (static_cast<long>(s.size()) < size) {
            auto v = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        facets.push_back(s);
    }
    return SimplicialComplex::from_facets(std::move(labels), facets);
}

SimplicialMap CorpusGenerator::simplicial_map() {
    auto target = simplicial_complex(6);
    const auto n = static_cast<std::size_t>(uniform(2, 7));
    std::vector<std::size_t> vmap;
    std::vector<std::vector<std::size_t>> fibre(target.vertex_count());
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    for (std::size_t v = 0; v < n; ++v) {
        vmap.push_back(static_cast<std::size_t>(uniform(0, static_cast<long>(target.vertex_count()) - 1)));
        fibre[vmap.back()].push_back(v);
        labels.push_back("u" + std::to_string(v));
        facets.push_back({v});
    }
    std::vector<Simplex> all;
    for (int d = 1; d <= target.dimension(); ++d)
        for (const auto& t : target.simplices(d)) all.push_back(t);
    const long count = all.empty() ? 0 : uniform(1, 8);
    for (long k = 0; k < count; ++k) {
        const auto& tau = all[static_cast<std::size_t>(uniform(0, static_cast<long>(all.size()) - 1))];
        Simplex s;
        bool ok = true;
        for (auto w : tau) {
            if (fibre[w].empty()) {
                ok = false;
                break;
            }
            const auto& fw = fibre[w];
            s.push_back(fw[static_cast<std::size_t>(uniform(0, static_cast<long>(fw.size()) - 1))]);
            // occasionally a second preimage, which collapses under the map
            if (fw.size() > 1 && uniform(0, 3) == 0) {
                auto extra = fw[static_cast<std::size_t>(uniform(0, static_cast<long>(fw.size()) - 1))];
                if (std::find(s.begin(), s.end(), extra) == s.end()) s.push_back(extra);
            }
        }
        if (!ok) continue;
        std::sort(s.begin(), s.end());
        facets.push_back(s);
    }
    SimplicialMap f{SimplicialComplex::from_facets(std::move(labels), facets), target, vmap};
    f.validate();
    return f;
}

}  // namespace steenrod

#include "steenrod/chain.hpp"

#include "steenrod/errors.hpp"

#include <algorithm>
#include <map>

namespace steenrod {

ChainComplex::ChainComplex() : data_(std::make_shared<Data>()) {}

ChainComplex::ChainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials) {
    const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
    if (differentials.size() != expected) {
        throw ValidationError("complex with " + std::to_string(ranks.size()) + " degrees needs " +
                              std::to_string(expected) + " differentials");
    }
    for (std::size_t k = 0; k < differentials.size(); ++k) {
        const auto& d = differentials[k];
        if (d.rows() != ranks[k] || d.cols() != ranks[k + 1]) {
            throw ValidationError("differential d_" + std::to_string(lo + static_cast<int>(k) + 1) +
                                  " has the wrong shape");
        }
        if (k > 0 && !(differentials[k - 1] * d).is_zero()) {
            throw ValidationError("dd != 0 at degree " + std::to_string(lo + static_cast<int>(k) + 1));
        }
    }
    // trim zero degrees at both ends so equal complexes compare equal
    std::size_t first = 0, last = ranks.size();
    while (first < last && ranks[first] == 0) ++first;
    while (last > first && ranks[last - 1] == 0) --last;
    auto data = std::make_shared<Data>();
    if (first < last) {
        data->lo = lo + static_cast<int>(first);
        data->ranks.assign(ranks.begin() + static_cast<std::ptrdiff_t>(first),
                           ranks.begin() + static_cast<std::ptrdiff_t>(last));
        for (std::size_t k = first; k + 1 < last; ++k) data->d.push_back(std::move(differentials[k]));
    }
    data_ = std::move(data);
}

bool ChainComplex::is_zero() const { return data_->ranks.empty(); }

std::size_t ChainComplex::rank(int n) const {
    if (n < lo() || n > hi()) return 0;
    return data_->ranks[static_cast<std::size_t>(n - lo())];
}

namespace {

// Out-of-range blocks are zero; keep one per shape so accessors can return references.
const IntMatrix& zero_block(std::size_t rows, std::size_t cols) {
    thread_local std::map<std::pair<std::size_t, std::size_t>, IntMatrix> cache;
    auto it = cache.find({rows, cols});
    if (it == cache.end()) it = cache.emplace(std::make_pair(rows, cols), IntMatrix(rows, cols)).first;
    return it->second;
}

}  // namespace

const IntMatrix& ChainComplex::differential(int n) const {
    if (n <= lo() || n > hi()) return zero_block(rank(n - 1), rank(n));
    return data_->d[static_cast<std::size_t>(n - lo() - 1)];
}

std::size_t ChainComplex::total_rank() const {
    std::size_t t = 0;
    for (auto r : data_->ranks) t += r;
    return t;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->lo == b.data_->lo && a.data_->ranks == b.data_->ranks && a.data_->d == b.data_->d;
}

ChainComplex suspension(const ChainComplex& c) {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> d;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        ranks.push_back(c.rank(n));
        if (n > c.lo()) d.push_back(c.differential(n));
    }
    return {c.lo() + 1, std::move(ranks), std::move(d)};
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) { return direct_sum({a, b}); }

ChainComplex direct_sum(const std::vector<ChainComplex>& parts) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& p : parts) {
        if (p.is_zero()) continue;
        lo = any ? std::min(lo, p.lo()) : p.lo();
        hi = any ? std::max(hi, p.hi()) : p.hi();
        any = true;
    }
    if (!any) return {};
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> d;
    for (int n = lo; n <= hi; ++n) {
        std::size_t r = 0;
        for (const auto& p : parts) r += p.rank(n);
        ranks.push_back(r);
        if (n == lo) continue;
        IntMatrix m(ranks[ranks.size() - 2], r);
        std::size_t row = 0, col = 0;
        for (const auto& p : parts) {
            m.set_block(row, col, p.differential(n));
            row += p.rank(n - 1);
            col += p.rank(n);
        }
        d.push_back(std::move(m));
    }
    return {lo, std::move(ranks), std::move(d)};
}

GradedMap::GradedMap(ChainComplex source, ChainComplex target, int degree, std::vector<IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    const std::size_t count = source_.is_zero() ? 0 : static_cast<std::size_t>(source_.hi() - source_.lo() + 1);
    if (components.size() > count) throw ValidationError("graded map has components outside the source support");
    components_.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const int n = source_.lo() + static_cast<int>(k);
        const std::size_t rows = target_.rank(n + degree_), cols = source_.rank(n);
        if (k < components.size()) {
            if (components[k].rows() != rows || components[k].cols() != cols) {
                throw ValidationError("graded map component in degree " + std::to_string(n) +
                                      " has the wrong shape");
            }
            components_.push_back(std::move(components[k]));
        } else {
            components_.emplace_back(rows, cols);
        }
    }
}

GradedMap GradedMap::zero(const ChainComplex& source, const ChainComplex& target, int degree) {
    return {source, target, degree, {}};
}

GradedMap GradedMap::boundary(const ChainComplex& c) {
    std::vector<IntMatrix> comps;
    for (int n = c.lo(); n <= c.hi(); ++n) comps.push_back(c.differential(n));
    return {c, c, -1, std::move(comps)};
}

const IntMatrix& GradedMap::component(int n) const {
    if (source_.is_zero() || n < source_.lo() || n > source_.hi())
        return zero_block(target_.rank(n + degree_), source_.rank(n));
    return components_[static_cast<std::size_t>(n - source_.lo())];
}

bool GradedMap::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const IntMatrix& m) { return m.is_zero(); });
}

namespace {

void require_parallel(const GradedMap& a, const GradedMap& b) {
    if (a.degree() != b.degree() || !(a.source() == b.source()) || !(a.target() == b.target())) {
        throw ValidationError("graded maps are not parallel");
    }
}

template <class Op>
GradedMap combine(const GradedMap& a, const GradedMap& b, Op op) {
    require_parallel(a, b);
    std::vector<IntMatrix> comps;
    for (int n = a.source().lo(); n <= a.source().hi(); ++n) comps.push_back(op(a.component(n), b.component(n)));
    return {a.source(), a.target(), a.degree(), std::move(comps)};
}

}  // namespace

bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.degree_ == b.degree_ && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.components_ == b.components_;
}

GradedMap operator+(const GradedMap& a, const GradedMap& b) {
    return combine(a, b, [](const IntMatrix& x, const IntMatrix& y) { return x + y; });
}

GradedMap operator-(const GradedMap& a, const GradedMap& b) {
    return combine(a, b, [](const IntMatrix& x, const IntMatrix& y) { return x - y; });
}

GradedMap operator-(const GradedMap& a) {
    std::vector<IntMatrix> comps;
    for (const auto& m : a.components_) comps.push_back(-m);
    return {a.source_, a.target_, a.degree_, std::move(comps)};
}

GradedMap operator*(const Integer& s, const GradedMap& a) {
    std::vector<IntMatrix> comps;
    for (const auto& m : a.components_) comps.push_back(s * m);
    return {a.source_, a.target_, a.degree_, std::move(comps)};
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (!(f.target() == g.source())) throw ValidationError("composing graded maps with mismatched endpoints");
    std::vector<IntMatrix> comps;
    for (int n = f.source().lo(); n <= f.source().hi(); ++n)
        comps.push_back(g.component(n + f.degree()) * f.component(n));
    return {f.source(), g.target(), f.degree() + g.degree(), std::move(comps)};
}

GradedMap direct_sum(const GradedMap& a, const GradedMap& b) { return direct_sum(std::vector<GradedMap>{a, b}); }

GradedMap direct_sum(const std::vector<GradedMap>& parts) {
    if (parts.empty()) return GradedMap::zero(ChainComplex(), ChainComplex(), 0);
    const int deg = parts.front().degree();
    std::vector<ChainComplex> sources, targets;
    for (const auto& p : parts) {
        if (p.degree() != deg) throw ValidationError("direct sum of graded maps of different degrees");
        sources.push_back(p.source());
        targets.push_back(p.target());
    }
    auto src = direct_sum(sources);
    auto tgt = direct_sum(targets);
    std::vector<IntMatrix> comps;
    for (int n = src.lo(); n <= src.hi(); ++n) {
        IntMatrix m(tgt.rank(n + deg), src.rank(n));
        std::size_t r = 0, c = 0;
        for (const auto& p : parts) {
            m.set_block(r, c, p.component(n));
            r += p.target().rank(n + deg);
            c += p.source().rank(n);
        }
        comps.push_back(std::move(m));
    }
    return {src, tgt, deg, std::move(comps)};
}

GradedMap commutator_with_boundary(const GradedMap& h) {
    auto left = compose(GradedMap::boundary(h.target()), h);
    auto right = compose(h, GradedMap::boundary(h.source()));
    return (h.degree() % 2 == 0) ? left - right : left + right;
}

ChainMap::ChainMap(GradedMap m) : GradedMap(std::move(m)) {
    if (degree_ != 0) throw ValidationError("a chain map has degree 0");
    for (int n = source_.lo(); n <= source_.hi() + 1; ++n) {
        if (!(target_.differential(n) * component(n) == component(n - 1) * source_.differential(n))) {
            throw ValidationError("chain map does not commute with the differentials in degree " +
                                  std::to_string(n));
        }
    }
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> components)
    : ChainMap(GradedMap(std::move(source), std::move(target), 0, std::move(components))) {}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::vector<IntMatrix> comps;
    for (int n = c.lo(); n <= c.hi(); ++n) comps.push_back(IntMatrix::identity(c.rank(n)));
    return {c, c, std::move(comps)};
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
    return ChainMap(GradedMap::zero(source, target, 0));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    return ChainMap(compose(static_cast<const GradedMap&>(g), static_cast<const GradedMap&>(f)));
}

ChainMap direct_sum(const ChainMap& a, const ChainMap& b) {
    return ChainMap(direct_sum(static_cast<const GradedMap&>(a), static_cast<const GradedMap&>(b)));
}

ChainMap suspension(const ChainMap& f) {
    auto src = suspension(f.source());
    std::vector<IntMatrix> comps;
    for (int n = src.lo(); n <= src.hi(); ++n) comps.push_back(f.component(n - 1));
    return {src, suspension(f.target()), std::move(comps)};
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
    return ChainMap(static_cast<const GradedMap&>(a) + static_cast<const GradedMap&>(b));
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
    return ChainMap(static_cast<const GradedMap&>(a) - static_cast<const GradedMap&>(b));
}

ChainMap operator*(const Integer& s, const ChainMap& a) {
    return ChainMap(s * static_cast<const GradedMap&>(a));
}

ChainHomotopy::ChainHomotopy(ChainMap from, ChainMap to, GradedMap h)
    : GradedMap(std::move(h)), from_(std::move(from)), to_(std::move(to)) {
    if (degree_ != 1) throw ValidationError("a chain homotopy has degree 1");
    require_parallel(from_, to_);
    if (!(source_ == from_.source()) || !(target_ == from_.target())) {
        throw ValidationError("chain homotopy endpoints do not match its maps");
    }
    if (!(commutator_with_boundary(*this) == GradedMap(to_) - GradedMap(from_))) {
        throw ValidationError("dH + Hd != to - from");
    }
}

ChainHomotopy ChainHomotopy::zero(const ChainMap& f) {
    return {f, f, GradedMap::zero(f.source(), f.target(), 1)};
}

HomologyData homology_data(const ChainComplex& c, int n) {
    const std::size_t r = c.rank(n);
    auto ech = column_echelon(c.differential(n), true);
    const std::size_t k = ech.rank();
    HomologyData h;
    h.cycles = ech.V.col_range(k, r - k);
    h.coordinates = ech.V_inv.row_range(k, r - k);
    h.group = FgAbGroup(r - k, h.coordinates * c.differential(n + 1));
    return h;
}

FgAbGroup homology(const ChainComplex& c, int n) { return homology_data(c, n).group; }

Homomorphism induced_on_homology(const ChainMap& f, int n, const HomologyData& src, const HomologyData& tgt) {
    return {src.group, tgt.group, tgt.coordinates * f.component(n) * src.cycles};
}

Homomorphism induced_on_homology(const ChainMap& f, int n) {
    return induced_on_homology(f, n, homology_data(f.source(), n), homology_data(f.target(), n));
}

MappingCone mapping_cone(const ChainMap& f) {
    const auto& l = f.source();
    const auto& m = f.target();
    int lo = 0, hi = -1;
    if (!l.is_zero()) {
        lo = l.lo() + 1;
        hi = l.hi() + 1;
    }
    if (!m.is_zero()) {
        lo = l.is_zero() ? m.lo() : std::min(lo, m.lo());
        hi = l.is_zero() ? m.hi() : std::max(hi, m.hi());
    }
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> d;
    for (int n = lo; n <= hi; ++n) {
        ranks.push_back(l.rank(n - 1) + m.rank(n));
        if (n == lo) continue;
        // d_n : L_{n-1} + M_n -> L_{n-2} + M_{n-1}
        IntMatrix block(l.rank(n - 2) + m.rank(n - 1), l.rank(n - 1) + m.rank(n));
        block.set_block(0, 0, l.differential(n - 1));
        block.set_block(l.rank(n - 2), 0, f.component(n - 1));
        block.set_block(l.rank(n - 2), l.rank(n - 1), -m.differential(n));
        d.push_back(std::move(block));
    }
    return {ChainComplex(lo, std::move(ranks), std::move(d)), f};
}

}  // namespace steenrod

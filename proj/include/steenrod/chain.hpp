#pragma once

#include "steenrod/group.hpp"

#include <memory>
#include <vector>

namespace steenrod {

// Bounded chain complex of free abelian groups, supported on [lo, hi].
// differential(n) : C_n -> C_{n-1}. Outside the support every group is 0 and
// every differential is the zero-shaped matrix.
class ChainComplex {
public:
    ChainComplex();
    // ranks[k] is the rank in degree lo + k; differentials[k] is d_{lo+k+1}.
    // Throws ValidationError on a shape mismatch or dd != 0.
    ChainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

    int lo() const { return data_->lo; }
    int hi() const { return data_->lo + static_cast<int>(data_->ranks.size()) - 1; }
    bool is_zero() const;
    std::size_t rank(int n) const;
    const IntMatrix& differential(int n) const;
    std::size_t total_rank() const;

    friend bool operator==(const ChainComplex& a, const ChainComplex& b);

private:
    struct Data {
        int lo = 0;
        std::vector<std::size_t> ranks;
        std::vector<IntMatrix> d;  // d[k] = d_{lo+k+1}
    };
    std::shared_ptr<const Data> data_;
};

// (Sigma C)_n = C_{n-1} with the same differential.
ChainComplex suspension(const ChainComplex& c);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainComplex direct_sum(const std::vector<ChainComplex>& parts);

// Graded map of degree d: component(n) : source_n -> target_{n+d}.
class GradedMap {
public:
    GradedMap() = default;
    // Components keyed by source degree starting at source.lo(); missing
    // degrees are zero. Throws ValidationError on a shape mismatch.
    GradedMap(ChainComplex source, ChainComplex target, int degree, std::vector<IntMatrix> components);
    static GradedMap zero(const ChainComplex& source, const ChainComplex& target, int degree);
    // The differential of c as a graded map of degree -1.
    static GradedMap boundary(const ChainComplex& c);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    int degree() const { return degree_; }
    const IntMatrix& component(int n) const;
    bool is_zero() const;

    friend bool operator==(const GradedMap& a, const GradedMap& b);
    friend GradedMap operator+(const GradedMap& a, const GradedMap& b);
    friend GradedMap operator-(const GradedMap& a, const GradedMap& b);
    friend GradedMap operator-(const GradedMap& a);
    friend GradedMap operator*(const Integer& s, const GradedMap& a);

protected:
    ChainComplex source_, target_;
    int degree_ = 0;
    std::vector<IntMatrix> components_;  // indexed by n - source.lo()
};

// g after f; degrees add.
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap direct_sum(const GradedMap& a, const GradedMap& b);
GradedMap direct_sum(const std::vector<GradedMap>& parts);
// d_target h - (-1)^deg h d_source, the graded commutator with the differentials.
GradedMap commutator_with_boundary(const GradedMap& h);

class ChainMap : public GradedMap {
public:
    ChainMap() = default;
    // Throws ValidationError unless degree 0 and d f = f d.
    explicit ChainMap(GradedMap m);
    ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> components);
    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap direct_sum(const ChainMap& a, const ChainMap& b);
// (Sigma f)_n = f_{n-1}.
ChainMap suspension(const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
ChainMap operator*(const Integer& s, const ChainMap& a);

// Degree +1 map H with dH + Hd = to - from.
class ChainHomotopy : public GradedMap {
public:
    ChainHomotopy() = default;
    // Throws ValidationError if the homotopy identity fails.
    ChainHomotopy(ChainMap from, ChainMap to, GradedMap h);
    static ChainHomotopy zero(const ChainMap& f);

    const ChainMap& from() const { return from_; }
    const ChainMap& to() const { return to_; }

private:
    ChainMap from_, to_;
};

// Cycles, boundaries and homology of one degree, with the coordinate maps
// needed to write induced maps on the group generators.
struct HomologyData {
    IntMatrix cycles;       // rank_n x z, basis of ker d_n
    IntMatrix coordinates;  // z x rank_n, coordinates * cycle = its coefficients on `cycles`
    FgAbGroup group;        // Z^z / coordinates * im d_{n+1}

    // A cycle representing the group element with ambient coordinates x.
    std::vector<Integer> representative(const std::vector<Integer>& x) const { return cycles.apply(x); }
};

HomologyData homology_data(const ChainComplex& c, int n);
FgAbGroup homology(const ChainComplex& c, int n);
Homomorphism induced_on_homology(const ChainMap& f, int n);
// Same, reusing precomputed homology data of source and target in degree n.
Homomorphism induced_on_homology(const ChainMap& f, int n, const HomologyData& src, const HomologyData& tgt);

// The cone with C_n = L_{n-1} + M_n and d(l, m) = (dl, -dm + f l).
// Generators of degree n are ordered as (L_{n-1} | M_n).
struct MappingCone {
    ChainComplex complex;
    ChainMap of;

    std::size_t source_rank(int n) const { return of.source().rank(n - 1); }
    std::size_t target_rank(int n) const { return of.target().rank(n); }
};

MappingCone mapping_cone(const ChainMap& f);

}  // namespace steenrod

#pragma once

#include "steenrod/exact.hpp"
#include "steenrod/tower.hpp"

#include <map>
#include <string>
#include <vector>

namespace steenrod {

using Simplex = std::vector<std::size_t>;  // strictly increasing vertex indices

// Finite simplicial complex on vertices 0..n-1 (with labels); vertex order
// fixes the orientation of every simplex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // Throws ValidationError unless the set is closed under faces.
    SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> simplices);
    // Downward closure of the given facets.
    static SimplicialComplex from_facets(std::vector<std::string> labels, const std::vector<Simplex>& facets);
    // Circle with m >= 3 edges on vertices 0..m-1.
    static SimplicialComplex circle(std::size_t m);
    static SimplicialComplex point();

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    // Simplices of dimension k in lexicographic order.
    const std::vector<Simplex>& simplices(int k) const;
    bool contains(const Simplex& s) const;
    std::size_t index_of(const Simplex& s) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

struct SimplicialMap {
    SimplicialComplex source, target;
    std::vector<std::size_t> vertex_map;

    // Throws ValidationError unless every simplex lands on a simplex.
    void validate() const;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Oriented chains. With `augmented` the complex gains Z in degree -1 with
// d_0 the augmentation.
ChainComplex chains_of(const SimplicialComplex& k, bool augmented = false);
ChainMap chain_map_of(const SimplicialMap& f, bool augmented = false);

// Circles with 3 p^{i-1} edges at level i and the wrap-around maps
// v -> v mod 3 p^{i-1} as bonds; each bond has degree p.
std::vector<SimplicialComplex> solenoid_circles(long p, std::size_t n);
std::vector<SimplicialMap> solenoid_bonds(long p, std::size_t n);
Tower solenoid_tower(long p, std::size_t n);

// Mapping cylinder of f with its source end coned off. Vertex order: apex,
// then the source copy, then the target.
struct SimplicialCone {
    SimplicialComplex complex;
    SimplicialMap target_inclusion;
    std::size_t apex = 0;
    std::size_t source_offset = 1;
    std::size_t target_offset = 0;
};

SimplicialCone simplicial_mapping_cone(const SimplicialMap& f);

struct Axiom1Degree {
    int degree = 0;
    std::string algebraic;  // H_n of the algebraic cone of f
    std::string geometric;  // reduced H_n of the simplicial mapping cone
    bool isomorphic = false;     // invariants agree
    bool c_iso = false;          // the comparison map is an isomorphism
    bool suspension_iso = false; // the quotient comparison is an isomorphism
    bool ladder = false;         // all three squares commute on homology
};

struct Axiom1Certificate {
    bool chain_level = false;  // comparison maps are chain maps and both squares commute on chains
    std::vector<Axiom1Degree> degrees;
    bool ok() const;
};

// Compares the homology sequence of 0 -> M -> C(f#) -> Sigma L -> 0 with
// that of the pair (simplicial cone, target), in reduced homology, through
// an explicit chain-level comparison map, for degrees 0..n.
Axiom1Certificate axiom1_crosscheck(const SimplicialMap& f, int n);

}  // namespace steenrod

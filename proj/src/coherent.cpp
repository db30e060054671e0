#include "steenrod/coherent.hpp"

#include "steenrod/errors.hpp"

namespace steenrod {

void CoherentChainMorphism::validate() const {
    if (!(phi1.source() == f.source()) || !(phi1.target() == g.source()) || !(phi2.source() == f.target()) ||
        !(phi2.target() == g.target())) {
        throw IncoherentMorphism("coherent morphism endpoints do not match the two maps");
    }
    if (phi12.degree() != 1 || !(phi12.source() == f.source()) || !(phi12.target() == g.target())) {
        throw IncoherentMorphism("phi12 must be a degree +1 map from the source of f to the target of g");
    }
    if (!(commutator_with_boundary(phi12) == GradedMap(compose(g, phi1)) - GradedMap(compose(phi2, f)))) {
        throw IncoherentMorphism("d phi12 + phi12 d != g phi1 - phi2 f");
    }
}

CoherentChainMorphism CoherentChainMorphism::identity(const ChainMap& f) {
    return strict(f, f, ChainMap::identity(f.source()), ChainMap::identity(f.target()));
}

CoherentChainMorphism CoherentChainMorphism::strict(const ChainMap& f, const ChainMap& g, const ChainMap& phi1,
                                                    const ChainMap& phi2) {
    CoherentChainMorphism out{f, g, phi1, phi2, GradedMap::zero(f.source(), g.target(), 1)};
    out.validate();
    return out;
}

void CoherentChainHomotopy::validate(const CoherentChainMorphism& phi, const CoherentChainMorphism& psi) const {
    if (!(phi.f == psi.f) || !(phi.g == psi.g)) {
        throw IncoherentHomotopy("coherent homotopy between morphisms of different maps");
    }
    try {
        ChainHomotopy(phi.phi1, psi.phi1, d1);
        ChainHomotopy(phi.phi2, psi.phi2, d2);
    } catch (const ValidationError& e) {
        throw IncoherentHomotopy(std::string("level homotopy: ") + e.what());
    }
    if (d12.degree() != 2 || !(d12.source() == phi.f.source()) || !(d12.target() == phi.g.target())) {
        throw IncoherentHomotopy("d12 must be a degree +2 map from the source of f to the target of g");
    }
    auto rhs = compose(GradedMap(phi.g), d1) - compose(d2, GradedMap(phi.f)) + phi.phi12 - psi.phi12;
    if (!(commutator_with_boundary(d12) == rhs)) {
        throw IncoherentHomotopy("d d12 - d12 d != g d1 - d2 f + phi12 - psi12");
    }
}

namespace {

// Block map between cones: (l, m) -> (a l, c l + b m), where a has degree
// `deg`, b has degree `deg` and c has degree deg + 1, all on the underlying
// complexes.
GradedMap cone_block_map(const MappingCone& src, const MappingCone& tgt, int deg, const GradedMap& a,
                         const GradedMap& b, const GradedMap& c) {
    const auto& s = src.complex;
    std::vector<IntMatrix> comps;
    for (int n = s.lo(); n <= s.hi(); ++n) {
        const int t = n + deg;
        IntMatrix m(tgt.source_rank(t) + tgt.target_rank(t), src.source_rank(n) + src.target_rank(n));
        m.set_block(0, 0, a.component(n - 1));
        m.set_block(tgt.source_rank(t), 0, c.component(n - 1));
        m.set_block(tgt.source_rank(t), src.source_rank(n), b.component(n));
        comps.push_back(std::move(m));
    }
    return {s, tgt.complex, deg, std::move(comps)};
}

}  // namespace

ChainMap cone_functor_map(const CoherentChainMorphism& phi) {
    phi.validate();
    auto cf = mapping_cone(phi.f);
    auto cg = mapping_cone(phi.g);
    return ChainMap(cone_block_map(cf, cg, 0, phi.phi1, phi.phi2, phi.phi12));
}

ChainHomotopy cone_functor_homotopy(const CoherentChainHomotopy& d, const CoherentChainMorphism& phi,
                                    const CoherentChainMorphism& psi) {
    d.validate(phi, psi);
    auto cf = mapping_cone(phi.f);
    auto cg = mapping_cone(phi.g);
    auto h = cone_block_map(cf, cg, 1, d.d1, -d.d2, d.d12);
    return {cone_functor_map(phi), cone_functor_map(psi), std::move(h)};
}

CoherentChainMorphism compose_coherent(const CoherentChainMorphism& phi, const CoherentChainMorphism& psi) {
    if (!(phi.g == psi.f)) throw ValidationError("coherent morphisms do not compose: endpoint mismatch");
    CoherentChainMorphism out{phi.f, psi.g, compose(psi.phi1, phi.phi1), compose(psi.phi2, phi.phi2),
                              compose(psi.phi12, GradedMap(phi.phi1)) + compose(GradedMap(psi.phi2), phi.phi12)};
    out.validate();
    return out;
}

}  // namespace steenrod

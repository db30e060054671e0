#include "steenrod/suites.hpp"

#include "steenrod/corpus.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/exact.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

namespace steenrod {

namespace {

struct Range {
    int lo = 0, hi = -1;
};

void widen(Range& r, const ChainComplex& c) {
    if (c.is_zero()) return;
    if (r.hi < r.lo) {
        r = {c.lo(), c.hi()};
        return;
    }
    r.lo = std::min(r.lo, c.lo());
    r.hi = std::max(r.hi, c.hi());
}

// Degrees worth checking for a map tower: one step past its support on both sides.
Range degrees_of(const MapTower& f) {
    Range r;
    for (const auto& c : f.domain.levels) widen(r, c);
    for (const auto& c : f.codomain.levels) widen(r, c);
    if (r.hi < r.lo) return {0, 0};
    return {r.lo - 1, r.hi + 1};
}

std::size_t max_rank(const Tower& t) {
    std::size_t m = 0;
    for (const auto& c : t.levels)
        for (int n = c.lo(); n <= c.hi(); ++n) m = std::max(m, c.rank(n));
    return m;
}

Json shape(const MapTower& f) {
    Range r;
    for (const auto& c : f.domain.levels) widen(r, c);
    for (const auto& c : f.codomain.levels) widen(r, c);
    Json j;
    j["levels"] = f.length();
    j["max_rank"] = std::max(max_rank(f.domain), max_rank(f.codomain));
    j["span"] = r.hi < r.lo ? 0 : r.hi - r.lo + 1;
    return j;
}

bool commutes_with_d(const ChainMap& f) {
    auto c = commutator_with_boundary(f);
    return c.is_zero();
}

Json shift_maps(CorpusGenerator& gen) {
    auto f = gen.map_tower();
    Json j;
    j["shape"] = shape(f);
    bool dom = commutes_with_d(shift_difference(f.domain));
    bool cod = commutes_with_d(shift_difference(f.codomain));
    bool pair = commutes_with_d(pair_shift_difference(f));
    j["domain_shift"] = dom;
    j["codomain_shift"] = cod;
    j["pair_shift"] = pair;
    j["pass"] = dom && cod && pair;
    return j;
}

Json sigma_partial(CorpusGenerator& gen) {
    auto f = gen.map_tower();
    auto sp = sigma_partial_ses(f);
    Json j;
    j["shape"] = shape(f);
    Json degrees = Json::array();
    for (const auto& d : sp.certificate.degrees) {
        Json e;
        e["degree"] = d.degree;
        e["sigma_mono"] = d.mono;
        e["partial_epi"] = d.epi;
        e["composite_zero"] = d.composite;
        e["kernel_is_image"] = d.exact;
        degrees.push_back(e);
    }
    j["degrees"] = degrees;
    j["pass"] = sp.certificate.ok();
    return j;
}

Json exact_sequence(CorpusGenerator& gen) {
    auto f = gen.map_tower();
    auto r = degrees_of(f);
    auto les = long_exact_sequence(f, r.lo, r.hi);
    Json j;
    j["shape"] = shape(f);
    j["degrees"] = {r.lo, r.hi};
    j["positions"] = les.groups.size();
    j["composites_vanish"] = les.composites_vanish();
    Json failures = Json::array();
    for (auto k : les.failures()) failures.push_back(les.labels[k]);
    j["failures"] = failures;
    j["pass"] = les.exact();
    return j;
}

bool acyclic(const ChainComplex& c) {
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (!homology(c, n).is_trivial()) return false;
    return true;
}

Json coherent(CorpusGenerator& gen) {
    auto pair = gen.coherent_pair();
    auto a = cone_functor_map(pair.phi);
    auto b = cone_functor_map(pair.psi);
    Json j;
    bool chain = commutes_with_d(a) && commutes_with_d(b);
    bool homotopy = true;
    try {
        cone_functor_homotopy(pair.d, pair.phi, pair.psi);
    } catch (const ValidationError&) {
        homotopy = false;
    }
    bool equal = true;
    Json degrees = Json::array();
    const auto& src = a.source();
    for (int n = src.lo() - 1; n <= src.hi() + 1; ++n) {
        auto x = induced_on_homology(a, n);
        bool same = equal_maps(x, induced_on_homology(b, n));
        equal = equal && same;
        Json e;
        e["degree"] = n;
        e["source"] = x.source().to_string();
        e["target"] = x.target().to_string();
        e["equal"] = same;
        degrees.push_back(e);
    }
    bool id_acyclic = acyclic(mapping_cone(ChainMap::identity(pair.phi.f.source())).complex) &&
                      acyclic(mapping_cone(ChainMap::identity(pair.phi.g.target())).complex);
    j["cone_maps_are_chain_maps"] = chain;
    j["cone_homotopy_valid"] = homotopy;
    j["induced_maps_equal"] = equal;
    j["identity_cones_acyclic"] = id_acyclic;
    j["degrees"] = degrees;
    j["pass"] = chain && homotopy && equal && id_acyclic;
    return j;
}

Json milnor(CorpusGenerator& gen) {
    auto f = gen.map_tower();
    auto r = degrees_of(f);
    Json j;
    j["shape"] = shape(f);
    Json degrees = Json::array();
    bool ok = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        auto m = milnor_report(f, n);
        Json e;
        e["degree"] = n;
        e["strong"] = m.strong_group.to_string();
        e["lim"] = m.lim.to_string();
        e["lim1"] = m.lim1.to_string();
        e["last_level"] = m.last_level.to_string();
        e["exact"] = m.exact_left && m.exact_middle && m.exact_right;
        e["oracle"] = m.oracle;
        degrees.push_back(e);
        ok = ok && m.ok();
    }
    j["degrees"] = degrees;
    j["pass"] = ok;
    return j;
}

Json naturality(CorpusGenerator& gen) {
    auto m = gen.tower_morphism();
    auto r = degrees_of(m.source);
    auto t = degrees_of(m.target);
    r = {std::min(r.lo, t.lo), std::max(r.hi, t.hi)};
    Json j;
    j["shape"] = shape(m.source);
    Json degrees = Json::array();
    bool ok = true;
    for (const auto& c : milnor_naturality(m, r.lo, r.hi)) {
        Json e;
        e["degree"] = c.degree;
        e["lim1_square"] = c.left;
        e["lim_square"] = c.right;
        e["shift_square"] = c.shift;
        degrees.push_back(e);
        ok = ok && c.ok();
    }
    j["degrees"] = degrees;
    j["pass"] = ok;
    return j;
}

Json axiom1(CorpusGenerator& gen) {
    auto f = gen.simplicial_map();
    auto cert = axiom1_crosscheck(f, 3);
    Json j;
    j["source_vertices"] = f.source.vertex_count();
    j["target_vertices"] = f.target.vertex_count();
    j["chain_level"] = cert.chain_level;
    Json degrees = Json::array();
    for (const auto& d : cert.degrees) {
        Json e;
        e["degree"] = d.degree;
        e["algebraic"] = d.algebraic;
        e["geometric"] = d.geometric;
        e["comparison_iso"] = d.c_iso;
        e["ladder"] = d.ladder;
        degrees.push_back(e);
    }
    j["degrees"] = degrees;
    j["pass"] = cert.ok();
    return j;
}

Json lim1(CorpusGenerator& gen, std::size_t index) {
    bool finite = index % 2 == 0;
    auto ge = gen.group_with_endo(finite);
    const auto& g = ge.group;
    auto tower = GroupTower::constant(g, ge.endo);
    auto id = GroupTower::constant(g, Homomorphism::identity(g));
    auto verdict = lim1_verdict(tower);

    auto u = gen.unimodular(g.ambient_rank());
    FgAbGroup h(g.ambient_rank(), u * g.relations());
    auto conj = GroupTower::constant(h, Homomorphism(h, h, u * ge.endo.matrix() * unimodular_inverse(u)));
    auto lim = inverse_limit(tower);

    Json j;
    j["group"] = g.to_string();
    j["lim"] = lim.to_string();
    j["lim1_zero"] = verdict.zero;
    j["reason"] = verdict.reason;
    bool identity_lim = inverse_limit(id).isomorphic(g);
    bool identity_lim1 = lim1_verdict(id).zero;
    bool finite_ok = !g.is_finite() || verdict.zero;
    bool invariant = inverse_limit(conj).isomorphic(lim) && lim1_verdict(conj).zero == verdict.zero;
    j["identity_lim_is_group"] = identity_lim;
    j["identity_lim1_zero"] = identity_lim1;
    j["finite_lim1_zero"] = finite_ok;
    j["conjugation_invariant"] = invariant;
    j["pass"] = identity_lim && identity_lim1 && finite_ok && invariant;
    return j;
}

using SuiteFn = std::function<Json(CorpusGenerator&, std::size_t)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"axiom1", [](CorpusGenerator& g, std::size_t) { return axiom1(g); }},
        {"coherent", [](CorpusGenerator& g, std::size_t) { return coherent(g); }},
        {"exact_sequence", [](CorpusGenerator& g, std::size_t) { return exact_sequence(g); }},
        {"lim1", [](CorpusGenerator& g, std::size_t i) { return lim1(g, i); }},
        {"milnor", [](CorpusGenerator& g, std::size_t) { return milnor(g); }},
        {"naturality", [](CorpusGenerator& g, std::size_t) { return naturality(g); }},
        {"shift_maps", [](CorpusGenerator& g, std::size_t) { return shift_maps(g); }},
        {"sigma_partial", [](CorpusGenerator& g, std::size_t) { return sigma_partial(g); }},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

// splitmix64 finalizer over the pair.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Json run_suite_instance(const std::string& suite, std::uint64_t seed, std::size_t index) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw ParseError("unknown suite '" + suite + "'");
    Json j;
    try {
        CorpusGenerator gen(instance_seed(seed, index));
        j = it->second(gen, index);
    } catch (const std::exception& e) {
        j = Json::object();
        j["error"] = e.what();
        j["pass"] = false;
    }
    j["index"] = index;
    return j;
}

SuiteRun run_suite(const std::string& suite, std::uint64_t seed, std::size_t count, unsigned threads) {
    if (!is_suite(suite)) throw ParseError("unknown suite '" + suite + "'");
    SuiteRun run;
    run.instances.resize(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) run.instances[i] = run_suite_instance(suite, seed, i);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& j : run.instances) run.passed += j["pass"].get<bool>();
    return run;
}

}  // namespace steenrod

#include "steenrod/cli.hpp"

#include "steenrod/corpus.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/exact.hpp"
#include "steenrod/io.hpp"
#include "steenrod/suites.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace steenrod {

namespace {

struct InputError : Error {
    using Error::Error;
};

Json conventions() {
    Json j;
    j["cone"] = "C_n = L_{n-1} + M_n, d(l, m) = (dl, -dm + f l), generators ordered (L_{n-1} | M_n)";
    j["cone_sequence"] = "i(m) = (0, (-1)^n m), p(l, m) = l, connecting map computed by diagram chase";
    j["coherent_morphism"] = "d phi12 + phi12 d = g phi1 - phi2 f";
    j["truncation"] = "shift maps prod_{1..N} -> prod_{1..N-1}, (c_i) -> (p c_{i+1} - c_i), no wrap-around term";
    j["strong_homology"] = "Hbar_n(f) = H_{n+1} of the cone of the pair shift map";
    j["simplicial"] = "ordered simplicial chains, orientation by vertex index, collapsed simplices map to 0";
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Degrees {
    int lo = 0, hi = 0;
};

Degrees support(const std::vector<ChainComplex>& cs) {
    bool any = false;
    Degrees d;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        if (!any) d = {c.lo(), c.hi()};
        d.lo = std::min(d.lo, c.lo());
        d.hi = std::max(d.hi, c.hi());
        any = true;
    }
    return d;
}

Degrees requested(const JobSpec& spec, Degrees fallback) {
    if (spec.degree) return {*spec.degree, *spec.degree};
    if (spec.range) {
        if (spec.range->first > spec.range->second) throw InputError("empty degree range");
        return {spec.range->first, spec.range->second};
    }
    return fallback;
}

std::vector<ChainComplex> levels_of(const MapTower& f) {
    auto out = f.domain.levels;
    out.insert(out.end(), f.codomain.levels.begin(), f.codomain.levels.end());
    return out;
}

// A bare tower X is read as the map tower 0 -> X, whose strong homology is that of X.
MapTower as_map_tower(const Json& doc) {
    auto kind = document_kind(doc);
    if (kind == "map_tower") return map_tower_from_json(doc);
    if (kind == "tower") {
        auto t = tower_from_json(doc);
        MapTower f;
        f.codomain = t;
        f.domain = Tower::constant(ChainComplex(), t.length());
        for (const auto& c : t.levels) f.maps.push_back(ChainMap::zero(ChainComplex(), c));
        return f;
    }
    throw ParseError("expected a tower or map_tower document, got '" + kind + "'");
}

struct Outcome {
    Json result;
    Json certificates = Json::object();
    std::string summary;
};

bool all_pass(const Json& certs) {
    for (const auto& [name, value] : certs.items())
        if (!value.get<bool>()) return false;
    return true;
}

Outcome homology_command(const JobSpec& spec, const Json& doc) {
    auto kind = document_kind(doc);
    std::vector<ChainComplex> complexes;
    if (kind == "complex") {
        complexes.push_back(complex_from_json(doc));
    } else if (kind == "simplicial") {
        complexes.push_back(chains_of(simplicial_from_json(doc)));
    } else if (kind == "tower") {
        complexes = tower_from_json(doc).levels;
    } else {
        throw ParseError("homology expects a complex, simplicial or tower document");
    }
    auto r = requested(spec, support(complexes));
    Outcome out;
    Json levels = Json::array();
    for (const auto& c : complexes) {
        Json degrees = Json::object();
        for (int n = r.lo; n <= r.hi; ++n) degrees[std::to_string(n)] = invariants_json(homology(c, n));
        levels.push_back(degrees);
    }
    if (kind == "tower") {
        Json bonds = Json::array();
        auto t = tower_from_json(doc);
        for (int n = r.lo; n <= r.hi; ++n) {
            Json per = Json::array();
            for (const auto& b : homology_tower(t, n).bonds) per.push_back(homomorphism_json(b));
            bonds.push_back({{"degree", n}, {"bonds", per}});
        }
        out.result["levels"] = levels;
        out.result["induced_bonds"] = bonds;
    } else {
        out.result["homology"] = levels[0];
    }
    out.summary = "homology in degrees " + std::to_string(r.lo) + ".." + std::to_string(r.hi);
    return out;
}

Outcome cone_command(const JobSpec& spec, const Json& doc) {
    auto kind = document_kind(doc);
    ChainMap f;
    std::optional<SimplicialMap> simplicial;
    if (kind == "chain_map") {
        f = chain_map_from_json(doc);
    } else if (kind == "simplicial_map") {
        simplicial = simplicial_map_from_json(doc);
        f = chain_map_of(*simplicial);
    } else {
        throw ParseError("cone expects a chain_map or simplicial_map document");
    }
    auto cone = mapping_cone(f);
    auto s = support({cone.complex});
    auto r = requested(spec, {s.lo - 1, s.hi + 1});
    Outcome out;
    Json ranks = Json::object(), groups = Json::object();
    for (int n = r.lo; n <= r.hi; ++n) {
        ranks[std::to_string(n)] = cone.complex.rank(n);
        groups[std::to_string(n)] = invariants_json(homology(cone.complex, n));
    }
    out.result["ranks"] = ranks;
    out.result["homology"] = groups;

    auto ses = cone_sequence(f);
    out.certificates["cone_sequence_short_exact"] = certify_ses(ses).ok();
    out.certificates["cone_sequence_long_exact"] = homology_sequence(ses, r.lo, r.hi, {"M", "C(f)", "Sigma L"}).exact();
    if (simplicial) {
        auto cert = axiom1_crosscheck(*simplicial, std::max(r.hi, 0));
        Json degrees = Json::array();
        for (const auto& d : cert.degrees) {
            degrees.push_back({{"degree", d.degree}, {"algebraic", d.algebraic}, {"geometric", d.geometric},
                               {"ladder", d.ladder}});
        }
        out.result["simplicial_cone"] = degrees;
        out.certificates["simplicial_comparison"] = cert.ok();
    }
    out.summary = "cone of a map with " + std::to_string(cone.complex.total_rank()) + " generators";
    return out;
}

Outcome strong_command(const JobSpec& spec, const Json& doc) {
    auto f = as_map_tower(doc);
    auto s = support(levels_of(f));
    auto r = requested(spec, {s.lo - 1, s.hi + 1});
    auto last = mapping_cone(f.maps.back()).complex;
    Outcome out;
    Json groups = Json::object();
    bool oracle = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        auto g = strong_homology(f, n);
        groups[std::to_string(n)] = invariants_json(g);
        oracle = oracle && g.isomorphic(homology(last, n));
    }
    out.result["levels"] = f.length();
    out.result["strong_homology"] = groups;
    out.certificates["finite_truncation"] = oracle;
    out.summary = "strong homology of a " + std::to_string(f.length()) + "-level map tower";
    return out;
}

Outcome les_command(const JobSpec& spec, const Json& doc) {
    auto f = as_map_tower(doc);
    auto s = support(levels_of(f));
    auto r = requested(spec, {s.lo - 1, s.hi + 1});
    auto les = long_exact_sequence(f, r.lo, r.hi);
    Outcome out;
    Json seq = Json::array();
    for (std::size_t k = 0; k < les.groups.size(); ++k) {
        Json e;
        e["label"] = les.labels[k];
        e["group"] = invariants_json(les.groups[k]);
        if (k < les.maps.size()) e["map_to_next"] = homomorphism_json(les.maps[k]);
        seq.push_back(e);
    }
    out.result["sequence"] = seq;
    out.certificates["composites_vanish"] = les.composites_vanish();
    out.certificates["exact"] = les.exact();
    out.summary = "long exact sequence with " + std::to_string(les.groups.size()) + " terms";
    return out;
}

Json verdict_json(const Lim1Verdict& v) {
    Json j;
    j["zero"] = v.zero;
    j["reason"] = v.reason;
    j["index_witness"] = v.index_witness.get_str();
    j["rank_stable_at"] = v.rank_stable_at;
    if (v.stable_at) j["stable_at"] = *v.stable_at;
    return j;
}

Outcome milnor_command(const JobSpec& spec, const Json& doc) {
    Outcome out;
    if (document_kind(doc) == "group_tower") {
        auto t = group_tower_from_json(doc);
        out.result["lim"] = invariants_json(inverse_limit(t));
        out.result["lim1"] = verdict_json(lim1_verdict(t));
        out.summary = "lim and lim1 of a group tower";
        return out;
    }
    auto f = as_map_tower(doc);
    auto s = support(levels_of(f));
    auto r = requested(spec, {s.lo - 1, s.hi + 1});
    Json degrees = Json::array();
    bool exact = true, oracle = true, lim1_zero = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        auto m = milnor_report(f, n);
        Json e;
        e["degree"] = n;
        e["lim1"] = invariants_json(m.lim1);
        e["strong"] = invariants_json(m.strong_group);
        e["lim"] = invariants_json(m.lim);
        e["lim1_verdict"] = verdict_json(m.lim1_verdict);
        e["last_level"] = invariants_json(m.last_level);
        degrees.push_back(e);
        exact = exact && m.exact_left && m.exact_middle && m.exact_right;
        oracle = oracle && m.oracle;
        lim1_zero = lim1_zero && m.lim1_trivial;
    }
    out.result["degrees"] = degrees;
    out.certificates["exact"] = exact;
    out.certificates["finite_truncation"] = oracle;
    out.certificates["lim1_vanishes"] = lim1_zero;
    out.summary = "Milnor sequence in degrees " + std::to_string(r.lo) + ".." + std::to_string(r.hi);
    return out;
}

Outcome verify_command(const JobSpec& spec) {
    if (!is_suite(spec.suite)) {
        std::string names;
        for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
        throw InputError("unknown suite '" + spec.suite + "' (known: " + names + ")");
    }
    auto run = run_suite(spec.suite, spec.seed, spec.count, spec.threads);
    Outcome out;
    out.result["suite"] = spec.suite;
    out.result["instances"] = run.instances;
    out.result["passed"] = run.passed;
    out.result["count"] = run.instances.size();
    out.certificates["all_instances"] = run.ok();
    out.summary = spec.suite + ": " + std::to_string(run.passed) + "/" + std::to_string(run.instances.size()) + " passed";
    return out;
}

// Simplicial tower documents for solenoid examples.
Json simplicial_tower_json(const std::vector<SimplicialComplex>& levels, const std::vector<SimplicialMap>& bonds) {
    Json j;
    j["kind"] = "tower";
    j["levels"] = Json::array();
    for (const auto& k : levels) j["levels"].push_back(to_json(k));
    j["bonds"] = Json::array();
    for (const auto& b : bonds) j["bonds"].push_back(b.vertex_map);
    return j;
}

Json generate_document(const JobSpec& spec) {
    CorpusGenerator gen(spec.seed);
    const std::size_t levels = std::max<std::size_t>(spec.levels, 1);
    const auto& kind = spec.kind;
    if (spec.p != 0) {
        if (spec.p < 2) throw InputError("--p must be at least 2");
        auto circles = solenoid_circles(spec.p, levels);
        auto bonds = solenoid_bonds(spec.p, levels);
        if (kind == "tower") return simplicial_tower_json(circles, bonds);
        if (kind == "map_tower") {
            // base point of each circle
            std::vector<SimplicialComplex> points(levels, SimplicialComplex::point());
            std::vector<SimplicialMap> point_bonds;
            for (std::size_t i = 0; i + 1 < levels; ++i) point_bonds.push_back({points[i + 1], points[i], {0}});
            Json j;
            j["kind"] = "map_tower";
            j["domain"] = simplicial_tower_json(points, point_bonds);
            j["codomain"] = simplicial_tower_json(circles, bonds);
            j["maps"] = Json::array();
            for (std::size_t i = 0; i < levels; ++i) j["maps"].push_back(std::vector<std::size_t>{0});
            return j;
        }
        if (kind == "group_tower") {
            auto z = FgAbGroup::free(1);
            return to_json(GroupTower::constant(z, Homomorphism(z, z, IntMatrix{{spec.p}})));
        }
        throw InputError("--p applies to tower, map_tower and group_tower");
    }
    if (kind == "complex") return to_json(gen.complex());
    if (kind == "chain_map") return to_json(gen.chain_map());
    if (kind == "tower") return to_json(gen.tower(levels));
    if (kind == "map_tower") return to_json(gen.map_tower(levels));
    if (kind == "simplicial") return to_json(gen.simplicial_complex(6));
    if (kind == "simplicial_map") return to_json(gen.simplicial_map());
    if (kind == "group_tower") {
        auto ge = gen.group_with_endo(false);
        return to_json(GroupTower::constant(ge.group, ge.endo));
    }
    throw InputError("unknown kind '" + kind + "'");
}

std::string canonical_job(const JobSpec& spec) {
    std::ostringstream ss;
    ss << spec.command << " suite=" << spec.suite << " kind=" << spec.kind << " seed=" << spec.seed
       << " count=" << spec.count << " p=" << spec.p << " levels=" << spec.levels;
    return ss.str();
}

Json job_json(const JobSpec& spec) {
    Json j;
    j["command"] = spec.command;
    if (spec.degree) j["degree"] = *spec.degree;
    if (spec.range) j["range"] = {spec.range->first, spec.range->second};
    if (spec.command == "verify") {
        j["suite"] = spec.suite;
        j["seed"] = spec.seed;
        j["count"] = spec.count;
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find("..");
    std::size_t width = 2;
    if (sep == std::string::npos) {
        sep = text.find(':');
        width = 1;
    }
    if (sep == std::string::npos) throw ParseError("range must look like a:b or a..b");
    try {
        std::size_t used = 0;
        auto a_text = text.substr(0, sep), b_text = text.substr(sep + width);
        int a = std::stoi(a_text, &used);
        if (used != a_text.size()) throw std::invalid_argument(a_text);
        int b = std::stoi(b_text, &used);
        if (used != b_text.size()) throw std::invalid_argument(b_text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError("bad degree range '" + text + "'");
    }
}

JobResult run(const JobSpec& spec) {
    JobResult res;
    Json report;
    report["command"] = spec.command;
    report["convention_version"] = kConventionVersion;
    report["conventions"] = conventions();
    report["job"] = job_json(spec);
    // replaced by the digest of the inputs once they are read
    report["input_digest"] = sha256_hex(canonical_job(spec));
    try {
        std::string digest_source;
        std::vector<std::string> texts;
        for (const auto& path : spec.inputs) {
            texts.push_back(read_file(path));
            digest_source += texts.back();
        }
        report["input_digest"] = sha256_hex(texts.empty() ? canonical_job(spec) : digest_source);
        std::vector<Json> docs;
        for (const auto& text : texts) docs.push_back(parse_document(text));

        const auto& c = spec.command;
        auto one_input = [&]() -> const Json& {
            if (docs.size() != 1) throw InputError(c + " takes exactly one --input");
            return docs[0];
        };
        if (c == "generate") {
            auto doc = generate_document(spec);
            res.report = dump(doc);
            res.summary = "generated " + doc["kind"].get<std::string>() + " (seed " + std::to_string(spec.seed) + ")";
            return res;
        }
        Outcome out;
        if (c == "homology") out = homology_command(spec, one_input());
        else if (c == "cone") out = cone_command(spec, one_input());
        else if (c == "strong") out = strong_command(spec, one_input());
        else if (c == "les") out = les_command(spec, one_input());
        else if (c == "milnor") out = milnor_command(spec, one_input());
        else if (c == "verify") out = verify_command(spec);
        else throw InputError("unknown command '" + c + "'");

        report["result"] = out.result;
        report["certificates"] = out.certificates;
        const bool pass = all_pass(out.certificates);
        report["status"] = pass ? "pass" : "certificate_failure";
        res.exit_code = pass ? 0 : 1;
        res.summary = out.summary + (pass ? "; all certificates pass" : "; CERTIFICATE FAILURE");
    } catch (const CertificateFailure& e) {
        report["status"] = "certificate_failure";
        report["error"] = {{"type", "CertificateFailure"}, {"message", e.what()}};
        res.exit_code = 1;
        res.summary = std::string("certificate failure: ") + e.what();
    } catch (const std::exception& e) {
        std::string type = "InputError";
        if (dynamic_cast<const ParseError*>(&e)) type = "ParseError";
        else if (dynamic_cast<const ValidationError*>(&e)) type = "ValidationError";
        else if (dynamic_cast<const TowerTooShort*>(&e)) type = "TowerTooShort";
        else if (dynamic_cast<const NotWellDefined*>(&e)) type = "NotWellDefined";
        report["status"] = "input_error";
        report["error"] = {{"type", type}, {"message", e.what()}};
        res.exit_code = 2;
        res.summary = type + ": " + e.what();
    }
    res.report = dump(report);
    return res;
}

}  // namespace steenrod

#include "steenrod/io.hpp"

#include "steenrod/errors.hpp"

#include <set>

namespace steenrod {

namespace {

const std::set<std::string> kKinds = {"complex", "chain_map", "tower", "map_tower",
                                      "simplicial", "simplicial_map", "group_tower"};

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
    return *it;
}

std::size_t count_field(const Json& j, const char* name, const std::string& where) {
    const auto& v = field(j, name, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(where + ": '" + name + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* name, const std::string& where) {
    const auto& v = field(j, name, where);
    if (!v.is_array()) throw ParseError(where + ": '" + name + "' must be an array");
    return v;
}

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    throw ParseError(where + ": matrix entries must be integers or integer strings");
}

std::vector<std::size_t> index_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of vertex indices");
    std::vector<std::size_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(where + ": bad vertex index");
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

void expect_kind(const Json& j, const std::string& kind, const std::string& where) {
    auto it = j.find("kind");
    if (it != j.end() && (!it->is_string() || it->get<std::string>() != kind)) {
        throw ParseError(where + ": expected kind '" + kind + "'");
    }
}

bool is_simplicial_level(const Json& j) {
    auto it = j.find("kind");
    return it != j.end() && it->is_string() && it->get<std::string>() == "simplicial";
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

}  // namespace

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": a matrix must be an array of rows");
    if (j.size() != rows) {
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    }
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(row[c], where);
    }
    return m;
}

Json to_json(const ChainComplex& c) {
    Json j;
    j["kind"] = "complex";
    j["lo"] = c.lo();
    Json ranks = Json::array(), d = Json::array();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        ranks.push_back(c.rank(n));
        if (n > c.lo()) d.push_back(to_json(c.differential(n)));
    }
    j["ranks"] = ranks;
    j["differentials"] = d;
    return j;
}

ChainComplex complex_from_json(const Json& j) {
    const std::string where = "complex";
    expect_kind(j, "complex", where);
    const auto& lo_j = field(j, "lo", where);
    if (!lo_j.is_number_integer()) throw ParseError(where + ": 'lo' must be an integer");
    const int lo = lo_j.get<int>();
    std::vector<std::size_t> ranks;
    for (const auto& r : array_field(j, "ranks", where)) {
        if (!r.is_number_integer() || r.get<long long>() < 0) throw ParseError(where + ": ranks must be counts");
        ranks.push_back(r.get<std::size_t>());
    }
    const auto& dj = array_field(j, "differentials", where);
    const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
    if (dj.size() != expected) {
        throw ParseError(where + ": expected " + std::to_string(expected) + " differentials");
    }
    std::vector<IntMatrix> d;
    for (std::size_t k = 0; k < dj.size(); ++k) {
        d.push_back(matrix_from_json(dj[k], ranks[k], ranks[k + 1], "d_" + std::to_string(lo + static_cast<int>(k) + 1)));
    }
    return {lo, std::move(ranks), std::move(d)};
}

Json components_json(const GradedMap& f) {
    Json comps = Json::array();
    for (int n = f.source().lo(); n <= f.source().hi(); ++n) comps.push_back(to_json(f.component(n)));
    return comps;
}

GradedMap graded_map_from_json(const Json& components, const ChainComplex& source, const ChainComplex& target,
                               int degree, const std::string& where) {
    if (!components.is_array()) throw ParseError(where + ": components must be an array");
    const std::size_t count = source.is_zero() ? 0 : static_cast<std::size_t>(source.hi() - source.lo() + 1);
    if (components.size() > count) throw ParseError(where + ": more components than source degrees");
    std::vector<IntMatrix> comps;
    for (std::size_t k = 0; k < components.size(); ++k) {
        const int n = source.lo() + static_cast<int>(k);
        comps.push_back(matrix_from_json(components[k], target.rank(n + degree), source.rank(n),
                                         where + " in degree " + std::to_string(n)));
    }
    return {source, target, degree, std::move(comps)};
}

Json to_json(const ChainMap& f) {
    Json j;
    j["kind"] = "chain_map";
    j["source"] = to_json(f.source());
    j["target"] = to_json(f.target());
    j["components"] = components_json(f);
    return j;
}

ChainMap chain_map_from_json(const Json& j) {
    expect_kind(j, "chain_map", "chain_map");
    auto src = complex_from_json(field(j, "source", "chain_map"));
    auto tgt = complex_from_json(field(j, "target", "chain_map"));
    return ChainMap(graded_map_from_json(field(j, "components", "chain_map"), src, tgt, 0, "chain_map"));
}

Json to_json(const Tower& t) {
    Json j;
    j["kind"] = "tower";
    Json levels = Json::array(), bonds = Json::array();
    for (const auto& c : t.levels) levels.push_back(to_json(c));
    for (const auto& b : t.bonds) bonds.push_back(components_json(b));
    j["levels"] = levels;
    j["bonds"] = bonds;
    return j;
}

namespace {

// Simplicial towers: levels are simplicial complexes, bonds are vertex maps.
struct SimplicialTower {
    std::vector<SimplicialComplex> levels;
    std::vector<SimplicialMap> bonds;
};

SimplicialTower simplicial_tower_from_json(const Json& j, const std::string& where) {
    SimplicialTower t;
    const auto& levels = array_field(j, "levels", where);
    for (std::size_t i = 0; i < levels.size(); ++i) t.levels.push_back(simplicial_from_json(levels[i]));
    const auto& bonds = array_field(j, "bonds", where);
    if (bonds.size() + 1 != levels.size()) throw ParseError(where + ": a tower of N levels needs N - 1 bonds");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        SimplicialMap f{t.levels[i + 1], t.levels[i], index_list(bonds[i], at(where + ".bonds", i))};
        f.validate();
        t.bonds.push_back(std::move(f));
    }
    return t;
}

Tower chains_of(const SimplicialTower& s) {
    Tower t;
    for (const auto& k : s.levels) t.levels.push_back(chains_of(k));
    for (const auto& b : s.bonds) t.bonds.push_back(chain_map_of(b));
    return t;
}

}  // namespace

Tower tower_from_json(const Json& j) {
    const std::string where = "tower";
    expect_kind(j, "tower", where);
    const auto& levels = array_field(j, "levels", where);
    if (levels.empty()) throw ParseError(where + ": a tower needs at least one level");
    if (is_simplicial_level(levels[0])) return chains_of(simplicial_tower_from_json(j, where));
    Tower t;
    for (const auto& l : levels) t.levels.push_back(complex_from_json(l));
    const auto& bonds = array_field(j, "bonds", where);
    if (bonds.size() + 1 != t.levels.size()) throw ParseError(where + ": a tower of N levels needs N - 1 bonds");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        t.bonds.push_back(ChainMap(graded_map_from_json(bonds[i], t.levels[i + 1], t.levels[i], 0, at("bond", i + 1))));
    }
    t.validate();
    return t;
}

Json to_json(const MapTower& f) {
    Json j;
    j["kind"] = "map_tower";
    j["domain"] = to_json(f.domain);
    j["codomain"] = to_json(f.codomain);
    Json maps = Json::array();
    for (const auto& m : f.maps) maps.push_back(components_json(m));
    j["maps"] = maps;
    return j;
}

MapTower map_tower_from_json(const Json& j) {
    const std::string where = "map_tower";
    expect_kind(j, "map_tower", where);
    const auto& dj = field(j, "domain", where);
    const auto& cj = field(j, "codomain", where);
    const auto& maps = array_field(j, "maps", where);
    MapTower f;
    const auto& dl = array_field(dj, "levels", where + ".domain");
    if (!dl.empty() && is_simplicial_level(dl[0])) {
        auto sd = simplicial_tower_from_json(dj, where + ".domain");
        auto sc = simplicial_tower_from_json(cj, where + ".codomain");
        if (maps.size() != sd.levels.size()) throw ParseError(where + ": one map per level is required");
        f.domain = chains_of(sd);
        f.codomain = chains_of(sc);
        for (std::size_t i = 0; i < maps.size(); ++i) {
            SimplicialMap m{sd.levels[i], sc.levels[i], index_list(maps[i], at(where + ".maps", i))};
            m.validate();
            f.maps.push_back(chain_map_of(m));
        }
    } else {
        f.domain = tower_from_json(dj);
        f.codomain = tower_from_json(cj);
        if (maps.size() != f.domain.length()) throw ParseError(where + ": one map per level is required");
        for (std::size_t i = 0; i < maps.size(); ++i) {
            f.maps.push_back(ChainMap(graded_map_from_json(maps[i], f.domain.levels[i], f.codomain.levels[i], 0,
                                                           at("map", i + 1))));
        }
    }
    f.validate();
    return f;
}

Json to_json(const SimplicialComplex& k) {
    Json j;
    j["kind"] = "simplicial";
    j["vertices"] = k.labels();
    Json simplices = Json::array();
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) simplices.push_back(s);
    j["simplices"] = simplices;
    return j;
}

SimplicialComplex simplicial_from_json(const Json& j) {
    const std::string where = "simplicial";
    expect_kind(j, "simplicial", where);
    std::vector<std::string> labels;
    for (const auto& v : array_field(j, "vertices", where)) {
        if (!v.is_string()) throw ParseError(where + ": vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    auto read = [&](const char* name) {
        std::vector<Simplex> out;
        const auto& arr = array_field(j, name, where);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            auto s = index_list(arr[i], at(where + "." + name, i));
            for (auto v : s)
                if (v >= labels.size()) throw ParseError(where + ": simplex uses an unknown vertex");
            out.push_back(std::move(s));
        }
        return out;
    };
    if (j.contains("facets")) return SimplicialComplex::from_facets(std::move(labels), read("facets"));
    auto simplices = read("simplices");
    for (auto& s : simplices) {
        Simplex sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(where + ": repeated vertex in a simplex");
        s = std::move(sorted);
    }
    return {std::move(labels), std::move(simplices)};
}

Json to_json(const SimplicialMap& f) {
    Json j;
    j["kind"] = "simplicial_map";
    j["source"] = to_json(f.source);
    j["target"] = to_json(f.target);
    j["vertex_map"] = f.vertex_map;
    return j;
}

SimplicialMap simplicial_map_from_json(const Json& j) {
    expect_kind(j, "simplicial_map", "simplicial_map");
    SimplicialMap f{simplicial_from_json(field(j, "source", "simplicial_map")),
                    simplicial_from_json(field(j, "target", "simplicial_map")),
                    index_list(field(j, "vertex_map", "simplicial_map"), "simplicial_map.vertex_map")};
    f.validate();
    return f;
}

Json to_json(const FgAbGroup& g) {
    Json j;
    j["generators"] = g.ambient_rank();
    j["relators"] = to_json(g.relations().transpose());
    return j;
}

FgAbGroup group_from_json(const Json& j) {
    const std::string where = "group";
    const std::size_t n = count_field(j, "generators", where);
    IntMatrix rel(n, 0);
    if (j.contains("relators")) {
        const auto& r = array_field(j, "relators", where);
        rel = matrix_from_json(r, r.size(), n, where + ".relators").transpose();
    }
    return {n, std::move(rel)};
}

Json to_json(const GroupTower& t) {
    Json j;
    j["kind"] = "group_tower";
    Json groups = Json::array(), bonds = Json::array();
    for (const auto& g : t.groups) groups.push_back(to_json(g));
    for (const auto& b : t.bonds) bonds.push_back(to_json(b.matrix()));
    j["groups"] = groups;
    j["bonds"] = bonds;
    if (t.tail) {
        Json tail;
        tail["group"] = to_json(t.tail->group);
        tail["endo"] = to_json(t.tail->endo.matrix());
        if (!t.groups.empty()) tail["splice"] = to_json(t.tail->splice.matrix());
        j["tail"] = tail;
    }
    return j;
}

GroupTower group_tower_from_json(const Json& j) {
    const std::string where = "group_tower";
    expect_kind(j, "group_tower", where);
    GroupTower t;
    if (j.contains("groups")) {
        for (const auto& g : array_field(j, "groups", where)) t.groups.push_back(group_from_json(g));
    }
    if (j.contains("bonds")) {
        const auto& bonds = array_field(j, "bonds", where);
        if (bonds.size() + 1 != t.groups.size() && !bonds.empty()) {
            throw ParseError(where + ": N groups need N - 1 bonds");
        }
        for (std::size_t i = 0; i < bonds.size(); ++i) {
            const auto& src = t.groups[i + 1];
            const auto& tgt = t.groups[i];
            try {
                t.bonds.emplace_back(src, tgt,
                                     matrix_from_json(bonds[i], tgt.ambient_rank(), src.ambient_rank(), at("bond", i + 1)));
            } catch (const NotWellDefined& e) {
                throw ValidationError(std::string("group tower bond is not well defined: ") + e.what());
            }
        }
    }
    if (t.groups.size() > 1 && t.bonds.size() + 1 != t.groups.size()) {
        throw ParseError(where + ": N groups need N - 1 bonds");
    }
    if (j.contains("tail")) {
        const auto& tj = field(j, "tail", where);
        auto g = group_from_json(field(tj, "group", where + ".tail"));
        try {
            Homomorphism endo(g, g, matrix_from_json(field(tj, "endo", where + ".tail"), g.ambient_rank(),
                                                     g.ambient_rank(), "tail.endo"));
            Homomorphism splice = Homomorphism::identity(g);
            if (!t.groups.empty()) {
                const auto& last = t.groups.back();
                splice = Homomorphism(g, last, matrix_from_json(field(tj, "splice", where + ".tail"),
                                                                last.ambient_rank(), g.ambient_rank(), "tail.splice"));
            }
            t.tail = GroupTower::Tail{g, std::move(endo), std::move(splice)};
        } catch (const NotWellDefined& e) {
            throw ValidationError(std::string("group tower tail is not well defined: ") + e.what());
        }
    }
    if (t.groups.empty() && !t.tail) throw ParseError(where + ": needs groups or a tail");
    t.validate();
    return t;
}

Json invariants_json(const FgAbGroup& g) {
    Json j;
    j["free_rank"] = g.free_rank();
    Json torsion = Json::array();
    for (const auto& d : g.torsion()) torsion.push_back(d.get_str());
    j["torsion"] = torsion;
    j["text"] = g.to_string();
    return j;
}

Json homomorphism_json(const Homomorphism& h) {
    Json j;
    j["source"] = h.source().to_string();
    j["target"] = h.target().to_string();
    j["matrix"] = to_json(h.canonical_matrix());
    return j;
}

Json parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    document_kind(j);
    return j;
}

std::string document_kind(const Json& j) {
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    auto it = j.find("kind");
    if (it == j.end() || !it->is_string()) throw ParseError("document has no string 'kind'");
    auto kind = it->get<std::string>();
    if (!kKinds.count(kind)) throw ParseError("unknown document kind '" + kind + "'");
    return kind;
}

}  // namespace steenrod

#include "bredon/io.hpp"

#include <nlohmann/json.hpp>

#include <deque>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace bredon {

using json = nlohmann::ordered_json;

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

long long as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<long long>();
}

Integer as_integer(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(where + ": not an integer string");
        }
    }
    return Integer(as_int(j, where));
}

std::vector<int> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<int>(as_int(j[i], where + "[" + std::to_string(i) + "]")));
    return out;
}

IntMatrix matrix_of(const json& j, Index rows, Index cols, const std::string& where) {
    if (!j.is_array() || static_cast<Index>(j.size()) != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const auto& row = j[sz(static_cast<int>(i))];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw ParseError(where + ": row " + std::to_string(i) + " needs " + std::to_string(cols) + " entries");
        for (Index c = 0; c < cols; ++c) m(i, c) = as_integer(row[sz(static_cast<int>(c))], where);
    }
    return m;
}

FgAbPresentation presentation_of(const json& j, const std::string& where) {
    const Index r = as_int(need(j, "rank", where), where + ".rank");
    if (r < 0) throw ParseError(where + ": negative rank");
    if (!j.contains("relations")) return FgAbPresentation::free(r);
    const auto& rel = j.at("relations");
    if (!rel.is_array()) throw ParseError(where + ".relations: expected an array");
    IntMatrix m(r, static_cast<Index>(rel.size()));
    for (std::size_t c = 0; c < rel.size(); ++c) {
        if (!rel[c].is_array() || static_cast<Index>(rel[c].size()) != r)
            throw ParseError(where + ".relations[" + std::to_string(c) + "]: needs " + std::to_string(r) + " entries");
        for (Index i = 0; i < r; ++i) m(i, static_cast<Index>(c)) = as_integer(rel[c][sz(static_cast<int>(i))], where);
    }
    return {r, m};
}

FiniteGroup parse_group(const json& j) {
    if (j.contains("cayley")) {
        const auto& t = j.at("cayley");
        if (!t.is_array()) throw ParseError("group.cayley: expected an array of rows");
        std::vector<std::vector<int>> table;
        for (std::size_t i = 0; i < t.size(); ++i) table.push_back(int_list(t[i], "group.cayley[" + std::to_string(i) + "]"));
        return FiniteGroup(std::move(table));
    }
    if (j.contains("permutations")) {
        const int degree = static_cast<int>(as_int(need(j, "degree", "group"), "group.degree"));
        const auto& p = j.at("permutations");
        if (!p.is_array()) throw ParseError("group.permutations: expected an array");
        std::vector<Perm> gens;
        for (std::size_t i = 0; i < p.size(); ++i) gens.push_back(int_list(p[i], "group.permutations[" + std::to_string(i) + "]"));
        return FiniteGroup::from_permutations(gens, degree);
    }
    throw ParseError("group: needs \"cayley\" or \"permutations\"");
}

int subgroup_of(const SubgroupLattice& lat, const json& j, const std::string& where) {
    if (j.is_array()) {
        auto members = int_list(j, where);
        for (int g : members)
            if (g < 0 || g >= lat.group().order()) throw ParseError(where + ": element " + std::to_string(g) + " out of range");
        const int id = lat.find(members);
        if (id < 0) throw ComplexError(where + ": elements do not form a subgroup");
        return id;
    }
    if (j.is_string()) {
        try {
            return subgroup_of(lat, json(std::stoi(j.get<std::string>())), where);
        } catch (const std::invalid_argument&) {
            throw ParseError(where + ": not a subgroup id");
        }
    }
    const int id = static_cast<int>(as_int(j, where));
    if (id < 0 || id >= lat.size()) throw ParseError(where + ": subgroup id " + std::to_string(id) + " out of range");
    return id;
}

std::shared_ptr<const GCWComplex> parse_complex(const json& j, std::shared_ptr<const SubgroupLattice> lat) {
    const auto& cells = need(j, "cells", "complex");
    if (!cells.is_array()) throw ParseError("complex.cells: expected an array");
    std::vector<OrbitCell> out;
    const int order = lat->group().order();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string where = "complex.cells[" + std::to_string(i) + "]";
        const auto& c = cells[i];
        OrbitCell oc;
        oc.dim = static_cast<int>(as_int(need(c, "dim", where), where + ".dim"));
        try {
            oc.isotropy = subgroup_of(*lat, need(c, "isotropy", where), where + ".isotropy");
        } catch (const ComplexError& e) {
            throw ComplexError(e.what(), static_cast<int>(i));
        }
        if (c.contains("boundary")) {
            const auto& b = c.at("boundary");
            if (!b.is_array()) throw ParseError(where + ".boundary: expected an array");
            for (std::size_t t = 0; t < b.size(); ++t) {
                const std::string w = where + ".boundary[" + std::to_string(t) + "]";
                BoundaryTerm bt;
                bt.cell = static_cast<int>(as_int(need(b[t], "cell", w), w + ".cell"));
                bt.coset = b[t].contains("coset") ? static_cast<int>(as_int(b[t].at("coset"), w + ".coset")) : 0;
                bt.coeff = b[t].contains("coeff") ? as_integer(b[t].at("coeff"), w + ".coeff") : Integer(1);
                if (bt.coset < 0 || bt.coset >= order) throw ParseError(w + ".coset: element out of range");
                oc.boundary.push_back(bt);
            }
        }
        out.push_back(std::move(oc));
    }
    return std::make_shared<const GCWComplex>(std::move(lat), std::move(out));
}

GroupModule parse_module(const json& j, const FiniteGroup& g) {
    GroupModule m;
    m.group = g;
    m.module = presentation_of(need(j, "module", "system.fixed_points"), "system.fixed_points.module");
    const Index r = m.module.generators;
    std::vector<std::optional<IntMatrix>> act(sz(g.order()));
    act[0] = IntMatrix::Identity(r, r);
    std::vector<std::pair<int, IntMatrix>> gens;
    const auto& gj = need(j, "generators", "system.fixed_points");
    if (!gj.is_array()) throw ParseError("system.fixed_points.generators: expected an array");
    for (std::size_t i = 0; i < gj.size(); ++i) {
        const std::string w = "system.fixed_points.generators[" + std::to_string(i) + "]";
        const int e = static_cast<int>(as_int(need(gj[i], "element", w), w + ".element"));
        if (e < 0 || e >= g.order()) throw ParseError(w + ".element: out of range");
        gens.emplace_back(e, matrix_of(need(gj[i], "matrix", w), r, r, w + ".matrix"));
    }
    std::deque<int> work{0};
    while (!work.empty()) {
        const int x = work.front();
        work.pop_front();
        for (const auto& [e, mat] : gens) {
            const int y = g.mul(e, x);
            if (act[sz(y)]) continue;
            act[sz(y)] = IntMatrix(mat * *act[sz(x)]);
            work.push_back(y);
        }
    }
    for (int a = 0; a < g.order(); ++a) {
        if (!act[sz(a)]) throw SystemError("fixed point module: generators do not generate the group");
        m.action.push_back(*act[sz(a)]);
    }
    if (auto e = m.validate(); !e.empty()) throw SystemError("fixed point module: " + e);
    return m;
}

CoefficientSystem parse_system(const json& j, const std::shared_ptr<const SubgroupLattice>& lat) {
    if (j.contains("constant")) return CoefficientSystem::constant(lat, presentation_of(j.at("constant"), "system.constant"));
    if (j.contains("fixed_points")) return CoefficientSystem::fixed_points(lat, parse_module(j.at("fixed_points"), lat->group()));
    const auto& reps = lat->class_reps();
    std::vector<std::optional<FgAbPresentation>> vals(reps.size());
    const auto& v = need(j, "values", "system");
    auto put = [&](int id, const json& p, const std::string& where) {
        if (lat->rep(id) != id) throw SystemError(where + ": subgroup " + std::to_string(id) + " is not a class representative (use " +
                                                      std::to_string(lat->rep(id)) + ")", id);
        vals[sz(lat->class_of(id))] = presentation_of(p, where);
    };
    try {
        if (v.is_object()) {
            for (const auto& [k, p] : v.items()) put(subgroup_of(*lat, json(k), "system.values." + k), p, "system.values." + k);
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                const std::string w = "system.values[" + std::to_string(i) + "]";
                put(subgroup_of(*lat, need(v[i], "subgroup", w), w + ".subgroup"), v[i], w);
            }
        } else {
            throw ParseError("system.values: expected an object or an array");
        }
    } catch (const ComplexError& e) {
        throw SystemError(e.what());
    }
    std::vector<FgAbPresentation> values;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        if (!vals[c]) throw SystemError("no value given for subgroup " + std::to_string(reps[c]), reps[c]);
        values.push_back(*vals[c]);
    }
    std::vector<GeneratorMap> gens;
    if (j.contains("maps")) {
        const auto& ms = j.at("maps");
        if (!ms.is_array()) throw ParseError("system.maps: expected an array");
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const std::string w = "system.maps[" + std::to_string(i) + "]";
            const auto& mj = ms[i];
            int from = 0, to = 0;
            try {
                from = subgroup_of(*lat, need(mj, "from", w), w + ".from");
                to = subgroup_of(*lat, need(mj, "to", w), w + ".to");
            } catch (const ComplexError& e) {
                throw SystemError(e.what());
            }
            const std::string kind = mj.contains("kind") ? mj.at("kind").get<std::string>() : "inclusion";
            int element = mj.contains("element") ? static_cast<int>(as_int(mj.at("element"), w + ".element")) : 0;
            if (element < 0 || element >= lat->group().order()) throw ParseError(w + ".element: out of range");
            if (kind == "inclusion") {
                if (!lat->le(to, from) && element == 0)
                    throw SystemError(w + ": inclusion needs \"to\" contained in \"from\"", to);
            } else if (kind == "weyl") {
                if (from != to) throw SystemError(w + ": a weyl map needs \"from\" equal to \"to\"", from);
                if (!lat->at(lat->normalizer(from)).contains(element))
                    throw SystemError(w + ": element does not normalize the subgroup", from);
            } else {
                throw ParseError(w + ".kind: expected \"inclusion\" or \"weyl\"");
            }
            // M(G/from) -> M(G/to) is M of G/to -> G/from
            gens.push_back({{to, from, element},
                            matrix_of(need(mj, "matrix", w), values[sz(lat->class_of(to))].generators,
                                      values[sz(lat->class_of(from))].generators, w + ".matrix")});
        }
    }
    return CoefficientSystem::from_generators(lat, std::move(values), gens);
}

json nf_json(const NormalForm& n) {
    json t = json::array();
    for (const auto& d : n.torsion) {
        if (d.fits_int64()) t.push_back(d.to_int64());
        else t.push_back(d.str());
    }
    return {{"rank", n.rank}, {"torsion", t}};
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) {
            if (m(i, c).fits_int64()) row.push_back(m(i, c).to_int64());
            else row.push_back(m(i, c).str());
        }
        rows.push_back(row);
    }
    return rows;
}

std::string key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

std::string members_str(const SubgroupLattice& lat, int h) {
    std::string s = "{";
    const auto& m = lat.at(h).members;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "}";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// "iso", "zero", "injective" etc. for a map of finitely generated groups.
std::string describe_map(const AbHom& d) {
    if (d.is_zero()) return "zero";
    const Lattice ker = preimage(d.matrix, d.target.relation_lattice());
    const Lattice im = image(d.matrix, Lattice::full(d.source.generators)) + d.target.relation_lattice();
    const bool inj = ker == d.source.relation_lattice();
    const bool sur = im == Lattice::full(d.target.generators);
    if (inj && sur) return "iso";
    if (inj) return "injective";
    if (sur) return "surjective";
    return "nonzero";
}

int limit(int max_degree, int top) { return max_degree < 0 ? top : std::min(max_degree, top); }

json spectral_json(const SpectralReport& r, const SubgroupLattice& lat, int max_degree) {
    const int top = limit(max_degree, r.filtered.top_degree());
    json j;
    j["top_stratum"] = r.filtered.top_stratum;
    j["dimension"] = r.filtered.top_degree();
    json pages = json::array();
    for (const auto& p : r.pages) {
        json pj;
        pj["r"] = p.r;
        json entries = json::object(), by_k_i = json::object(), diffs = json::object();
        for (const auto& [at, e] : p.entries) {
            if (at.second > top) continue;
            entries[key(at.first, at.second)] = nf_json(e.normal_form());
            by_k_i[key(at.first - at.second, at.second)] = nf_json(e.normal_form());
        }
        for (const auto& [at, d] : p.differentials) {
            if (at.second + 1 > top) continue;
            diffs[key(at.first, at.second) + "->" + key(at.first + p.r, at.second + 1)] = {
                {"kind", describe_map(d)}, {"matrix", matrix_json(d.matrix)}};
        }
        pj["entries"] = entries;
        pj["entries_k_i"] = by_k_i;
        pj["differentials"] = diffs;
        pages.push_back(pj);
    }
    j["pages"] = pages;
    json blocks = json::array();
    for (const auto& b : r.e1.blocks) {
        json local = json::array();
        for (int n = 0; n <= top && sz(n) < b.local.size(); ++n) local.push_back(nf_json(b.local[sz(n)]));
        blocks.push_back({{"stratum", b.stratum},
                          {"subgroup", b.label},
                          {"members", lat.at(b.label).members},
                          {"acting_order", b.gamma_order},
                          {"cochain_iso", b.cochain_iso},
                          {"cohomology", local}});
    }
    j["e1_blocks"] = blocks;
    j["e1_identification"] = {{"pass", r.e1.pass}, {"failures", r.e1.failures}};
    if (r.d1) {
        json comps = json::array();
        for (const auto& c : r.d1->components) {
            if (c.degree + 1 > top) continue;
            json cj = {{"from", c.source}, {"to", c.target}, {"degree", c.degree},
                       {"subconjugate", c.subconjugate}, {"zero", c.zero}};
            if (c.subconjugate) {
                cj["sign"] = c.sign;
                cj["cochain_level"] = c.cochain_level;
            }
            comps.push_back(cj);
        }
        j["d1"] = {{"pass", r.d1->pass}, {"components", comps}, {"failures", r.d1->failures}};
    }
    j["page_checks"] = {{"squares_zero", r.checks.squares_zero},
                        {"recomputation", r.checks.recomputation},
                        {"stabilized", r.checks.stabilized},
                        {"failures", r.checks.failures}};
    json conv = json::object();
    for (int n = 0; n <= top; ++n) {
        json graded = json::array(), einf = json::array();
        bool match = true;
        for (const auto& e : r.convergence.entries)
            if (e.n == n) {
                graded.push_back(nf_json(e.graded));
                einf.push_back(nf_json(e.e_inf));
                match = match && e.match;
            }
        conv["degree " + std::to_string(n)] = {
            {"oracle", nf_json(r.convergence.oracle[sz(n)])}, {"graded", graded}, {"e_inf", einf}, {"match", match}};
    }
    j["convergence"] = conv;
    j["degenerate_at_e1"] = r.degenerate_at_e1();
    j["pass"] = r.pass();
    return j;
}

void spectral_table(std::ostream& os, const SpectralReport& r, const SubgroupLattice& lat, int max_degree) {
    const int top = limit(max_degree, r.filtered.top_degree());
    os << "strata 0.." << r.filtered.top_stratum << ", degrees 0.." << r.filtered.top_degree() << "\n";
    for (const auto& p : r.pages) {
        os << "\nE_" << p.r << "\n";
        os << "  " << std::left << std::setw(8) << "(s,n)" << std::setw(8) << "(k,i)" << "group\n";
        for (const auto& [at, e] : p.entries) {
            if (at.second > top) continue;
            const auto nf = e.normal_form();
            if (nf.is_zero()) continue;
            os << "  " << std::setw(8) << "(" + key(at.first, at.second) + ")" << std::setw(8)
               << "(" + key(at.first - at.second, at.second) + ")" << nf.str() << "\n";
        }
        for (const auto& [at, d] : p.differentials) {
            if (at.second + 1 > top || d.is_zero()) continue;
            os << "  d_" << p.r << " (" << key(at.first, at.second) << ") -> (" << key(at.first + p.r, at.second + 1)
               << "): " << describe_map(d) << "\n";
        }
    }
    os << "\nE_1 blocks\n";
    for (const auto& b : r.e1.blocks) {
        os << "  s=" << b.stratum << " H" << b.label << "=" << members_str(lat, b.label) << " acting order "
           << b.gamma_order << ":";
        for (int n = 0; n <= top && sz(n) < b.local.size(); ++n) os << " " << b.local[sz(n)].str();
        os << (b.cochain_iso ? "" : "  [cochain map mismatch]") << "\n";
    }
    os << "E_1 identification: " << (r.e1.pass ? "pass" : "FAIL") << "\n";
    for (const auto& f : r.e1.failures) os << "  " << f << "\n";
    if (r.d1) {
        os << "d_1 factorization: " << (r.d1->pass ? "pass" : "FAIL") << "\n";
        for (const auto& c : r.d1->components) {
            if (c.degree + 1 > top || (!c.subconjugate && c.zero)) continue;
            os << "  H" << c.source << " -> H" << c.target << " degree " << c.degree << ": "
               << (c.zero ? "zero" : "nonzero");
            if (c.subconjugate) os << ", sign " << c.sign << (c.cochain_level ? " (cochain level)" : "");
            os << "\n";
        }
        for (const auto& f : r.d1->failures) os << "  " << f << "\n";
    }
    os << "page checks: " << (r.checks.pass() ? "pass" : "FAIL") << "\n";
    for (const auto& f : r.checks.failures) os << "  " << f << "\n";
    os << "\nconvergence\n";
    for (int n = 0; n <= top; ++n) {
        os << "  H^" << n << " = " << r.convergence.oracle[sz(n)].str() << "; graded:";
        bool match = true;
        for (const auto& e : r.convergence.entries)
            if (e.n == n) {
                os << " " << e.graded.str();
                match = match && e.match;
            }
        os << (match ? "  match" : "  MISMATCH") << "\n";
    }
    if (r.degenerate_at_e1()) os << "degenerate at E_1\n";
    os << "verdict: " << (r.pass() ? "pass" : "FAIL") << "\n";
}

}  // namespace

Bundle parse_bundle(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what());
    }
    try {
        Bundle b;
        const json* gj = nullptr;
        if (j.contains("group")) gj = &j.at("group");
        else if (j.contains("complex") && j.at("complex").contains("group")) gj = &j.at("complex").at("group");
        if (!gj) throw ParseError("bundle: missing \"group\"");
        b.lattice = std::make_shared<const SubgroupLattice>(parse_group(*gj));
        b.complex = parse_complex(need(j, "complex", "bundle"), b.lattice);
        if (j.contains("system")) b.system = parse_system(j.at("system"), b.lattice);
        return b;
    } catch (const json::exception& e) {
        throw ParseError(std::string("schema: ") + e.what());
    }
}

Bundle load_bundle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bundle(ss.str());
}

std::string report_validate(const Bundle& b, Format f) {
    const auto& lat = *b.lattice;
    const auto& reps = lat.class_reps();
    const auto& x = *b.complex;
    std::vector<std::string> freeness;
    for (int h = 0; h < lat.size(); ++h)
        for (const auto& v : modified_fixed_complex(x, h).freeness_violations) freeness.push_back(v);
    if (f == Format::json) {
        json j;
        j["group_order"] = lat.group().order();
        json subs = json::array();
        for (int h = 0; h < lat.size(); ++h)
            subs.push_back({{"id", h}, {"members", lat.at(h).members}, {"length", lat.length(h)}, {"class_rep", lat.rep(h)}});
        j["subgroups"] = subs;
        json homs = json::object();
        for (int h : reps)
            for (int k : reps) homs[key(h, k)] = hom_set(lat, h, k).size();
        j["hom_sets"] = homs;
        j["cells"] = x.size();
        j["dimension"] = x.dim();
        j["free"] = freeness.empty();
        j["freeness_violations"] = freeness;
        j["system"] = b.system.has_value();
        j["valid"] = freeness.empty();
        return dump(j);
    }
    std::ostringstream os;
    os << "group of order " << lat.group().order() << ", " << lat.size() << " subgroups in " << lat.class_count()
       << " classes\n";
    for (int h = 0; h < lat.size(); ++h)
        os << "  H" << h << " = " << members_str(lat, h) << "  length " << lat.length(h)
           << (lat.rep(h) == h ? "" : "  conjugate to H" + std::to_string(lat.rep(h))) << "\n";
    os << "complex: " << x.size() << " orbit cells, dimension " << x.dim() << "\n";
    os << "coefficient system: " << (b.system ? "valid" : "absent") << "\n";
    os << "freeness: " << (freeness.empty() ? "ok" : "FAIL") << "\n";
    for (const auto& v : freeness) os << "  " << v << "\n";
    return os.str();
}

std::string report_bredon(const Bundle& b, int max_degree, Format f) {
    const auto c = bredon_cochain_complex(*b.complex, *b.system).complex;
    const int top = limit(max_degree, c.top());
    if (f == Format::json) {
        json j = json::array();
        for (int n = 0; n <= top; ++n) j.push_back(nf_json(c.cohomology_group(n)));
        return dump({{"cohomology", j}});
    }
    std::ostringstream os;
    for (int n = 0; n <= top; ++n) os << "H^" << n << " = " << c.cohomology_group(n).str() << "\n";
    return os.str();
}

std::string report_spectral(const SpectralReport& r, const SubgroupLattice& lat, int max_degree, Format f) {
    if (f == Format::json) return dump(spectral_json(r, lat, max_degree));
    std::ostringstream os;
    spectral_table(os, r, lat, max_degree);
    return os.str();
}

std::string report_fps(const FpsReport& r, const SubgroupLattice& lat, int max_degree, Format f) {
    if (f == Format::json) {
        json j;
        j["subgroup"] = r.subgroup;
        j["members"] = lat.at(r.subgroup).members;
        j["weyl_order"] = r.fixed.weyl.weyl.group.order();
        j["spectral_sequence"] = spectral_json(r.report, lat, max_degree);
        j["structural"] = {{"pass", r.structural}, {"failures", r.structural_failures}};
        if (r.coincides_with_main) j["coincides_with_main"] = *r.coincides_with_main;
        j["pass"] = r.pass();
        return dump(j);
    }
    std::ostringstream os;
    os << "fixed points of H" << r.subgroup << " = " << members_str(lat, r.subgroup) << ", Weyl group of order "
       << r.fixed.weyl.weyl.group.order() << "\n";
    spectral_table(os, r.report, lat, max_degree);
    os << "non-equivariant blocks: " << (r.structural ? "pass" : "FAIL") << "\n";
    for (const auto& s : r.structural_failures) os << "  " << s << "\n";
    if (r.coincides_with_main)
        os << (*r.coincides_with_main ? "coincides with main spectral sequence\n" : "DIFFERS from main spectral sequence\n");
    os << "overall: " << (r.pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

std::vector<NormalForm> normal_forms_in(const std::string& text) {
    std::vector<NormalForm> out;
    std::function<void(const json&)> walk = [&](const json& j) {
        if (j.is_object()) {
            if (j.size() == 2 && j.contains("rank") && j.contains("torsion")) {
                NormalForm n;
                n.rank = j.at("rank").get<Index>();
                for (const auto& t : j.at("torsion")) n.torsion.push_back(t.is_string() ? Integer(t.get<std::string>()) : Integer(t.get<long long>()));
                out.push_back(std::move(n));
                return;
            }
            for (const auto& [k, v] : j.items()) walk(v);
        } else if (j.is_array()) {
            for (const auto& v : j) walk(v);
        }
    };
    walk(json::parse(text));
    return out;
}

}  // namespace bredon

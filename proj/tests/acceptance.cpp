// Runs the ten acceptance criteria and prints one line per criterion.
// Usage: acceptance <path to bredon CLI>

#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sys/wait.h>
#include <sstream>

using namespace bredon;
using testing::load;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 5) notes.push_back(what);
        }
    }
};

std::vector<std::pair<std::string, FiniteGroup>> small_groups() {
    return {{"Z/2", FiniteGroup::cyclic(2)}, {"Z/4", FiniteGroup::cyclic(4)}, {"Z/6", FiniteGroup::cyclic(6)},
            {"S3", FiniteGroup::symmetric(3)}, {"D4", FiniteGroup::dihedral(4)}};
}

std::string where(const std::string& a, int h, int k = -1) {
    std::ostringstream os;
    os << a << " H" << h;
    if (k >= 0) os << " K" << k;
    return os.str();
}

Outcome orbit_category() {
    Outcome o;
    for (const auto& [name, g] : small_groups()) {
        const SubgroupLattice lat(g);
        for (int h = 0; h < lat.size(); ++h) {
            for (int k = 0; k < lat.size(); ++k) {
                std::set<int> fixed;
                for (int a = 0; a < g.order(); ++a) {
                    bool ok = true;
                    for (int x : lat.at(h).members) ok = ok && lat.coset_rep(g.mul(x, a), k) == lat.coset_rep(a, k);
                    if (ok) fixed.insert(lat.coset_rep(a, k));
                }
                o.require(hom_set(lat, h, k).size() == fixed.size(), "hom-set size " + where(name, h, k));
            }
            // Aut(G/H) -> N H / H is a bijective homomorphism
            const auto aut = hom_set(lat, h, h);
            const Quotient w = lat.weyl(h);
            std::set<int> image;
            for (const auto& f : aut) {
                o.require(is_isomorphism(lat, f), "non-invertible automorphism " + where(name, h));
                image.insert(w.proj[static_cast<std::size_t>(f.coset)]);
                for (const auto& e : aut) {
                    const int lhs = w.proj[static_cast<std::size_t>(compose(lat, f, e).coset)];
                    const int rhs = w.group.mul(w.proj[static_cast<std::size_t>(f.coset)],
                                                w.proj[static_cast<std::size_t>(e.coset)]);
                    o.require(lhs == rhs, "Aut(G/H) multiplication " + where(name, h));
                }
            }
            o.require(image.size() == aut.size() && static_cast<int>(aut.size()) == w.group.order(),
                      "Aut(G/H) vs Weyl group order " + where(name, h));
        }
    }
    return o;
}

Outcome filtration() {
    Outcome o;
    for (const auto& [name, g] : small_groups()) {
        const SubgroupLattice lat(g);
        std::vector<int> seen(static_cast<std::size_t>(lat.size()), 0);
        for (int s = 0; s <= lat.max_length(); ++s)
            for (int h : lat.stratum(s)) {
                ++seen[static_cast<std::size_t>(h)];
                o.require(lat.length(h) == s, "stratum tag " + where(name, h));
            }
        for (int h = 0; h < lat.size(); ++h) {
            o.require(seen[static_cast<std::size_t>(h)] == 1, "strata do not partition at " + where(name, h));
            for (int k = 0; k < lat.size(); ++k) {
                if (lat.lt(h, k)) o.require(lat.length(h) > lat.length(k), "length not decreasing " + where(name, h, k));
                for (const auto& f : hom_set(lat, h, k))
                    if (!is_isomorphism(lat, f))
                        o.require(lat.length(h) > lat.length(k), "non-isomorphism keeps length " + where(name, h, k));
            }
        }
        o.require(lat.length(lat.whole()) == 0, "length of G in " + name);
    }
    return o;
}

Outcome oracles() {
    Outcome o;
    std::mt19937 rng(20240229);
    for (int trial = 0; trial < 5; ++trial) {
        const auto bd = testing::random_cw_boundaries(rng, 3, 5);
        const auto x = testing::trivial_complex(bd);
        for (const auto& a : {FgAbPresentation::free(1), FgAbPresentation::cyclic(Integer(3))}) {
            const auto m = CoefficientSystem::constant(x.lattice_ptr(), a);
            const auto br = bredon_cochain_complex(x, m).complex;
            const auto cell = cellular_cochain_complex(bd, a);
            for (int n = 0; n <= 3; ++n)
                o.require(br.cohomology_group(n) == cell.cohomology_group(n),
                          "trivial group, trial " + std::to_string(trial) + " degree " + std::to_string(n));
        }
    }
    for (const auto& name : testing::complexes()) {
        const auto b = load(name);
        for (const auto& a : {FgAbPresentation::free(1), FgAbPresentation::cyclic(Integer(2))}) {
            const auto m = CoefficientSystem::constant(b.lattice, a);
            const auto br = bredon_cochain_complex(*b.complex, m).complex;
            const auto q = cellular_cochain_complex(orbit_quotient_boundaries(*b.complex), a);
            for (int n = 0; n <= br.top(); ++n)
                o.require(br.cohomology_group(n) == q.cohomology_group(n), name + ": orbit space, degree " + std::to_string(n));
        }
    }
    return o;
}

Outcome freeness() {
    Outcome o;
    for (const auto& name : testing::complexes()) {
        const auto b = load(name);
        const auto& x = *b.complex;
        const auto& lat = *b.lattice;
        for (int h = 0; h < lat.size(); ++h) {
            const auto mf = modified_fixed_complex(x, h);
            o.require(mf.free(), name + ": reported stabilizer at H" + std::to_string(h));
            // independent check: no element of N H outside H fixes a cell of isotropy exactly H
            const auto& norm = lat.at(lat.normalizer(h));
            for (int orbit = 0; orbit < x.size(); ++orbit)
                for (int g = 0; g < x.group().order(); ++g) {
                    const auto c = x.cell_at(orbit, g);
                    if (c.coset != g || x.isotropy(c) != h) continue;
                    for (int a : norm.members)
                        if (!lat.at(h).mask[static_cast<std::size_t>(a)])
                            o.require(x.act(a, c) != c, name + ": Weyl element fixes a cell at H" + std::to_string(h));
                }
        }
    }
    return o;
}

template <class F>
void over_systems(const F& f) {
    for (const auto& name : testing::complexes()) {
        const auto b = load(name);
        for (const auto& [sys, m] : testing::standard_systems(b.lattice)) f(name + " / " + sys, b, m);
    }
}

Outcome e1_identification() {
    Outcome o;
    over_systems([&](const std::string& what, const Bundle& b, const CoefficientSystem& m) {
        SpectralOptions opt;
        opt.factorization = false;
        const auto r = main_spectral_sequence(*b.complex, m, opt);
        o.require(r.e1.pass, what + (r.e1.failures.empty() ? "" : ": " + r.e1.failures.front()));
        for (const auto& blk : r.e1.blocks) o.require(blk.cochain_iso, what + ": block isomorphism");
    });
    return o;
}

Outcome d1_structure(std::string& detail) {
    Outcome o;
    std::set<int> signs;
    int compared = 0, non_normal = 0;
    over_systems([&](const std::string& what, const Bundle& b, const CoefficientSystem& m) {
        const auto r = main_spectral_sequence(*b.complex, m);
        if (!r.d1) {
            o.require(false, what + ": no d_1 report");
            return;
        }
        o.require(r.d1->pass, what + (r.d1->failures.empty() ? "" : ": " + r.d1->failures.front()));
        const auto& lat = *b.lattice;
        for (const auto& c : r.d1->components) {
            if (!c.subconjugate) {
                o.require(c.zero, what + ": non-zero d_1 between incomparable blocks");
                continue;
            }
            if (c.zero) continue;
            ++compared;
            signs.insert(c.sign);
            o.require(c.cochain_level, what + ": d_1 agrees only on cohomology");
            if (lat.normalizer(c.target) != lat.whole()) ++non_normal;
        }
    });
    o.require(signs.size() <= 1 && !signs.count(0), "inconsistent d_1 signs");
    o.require(non_normal > 0, "no component with a non-normal subgroup");
    detail = std::to_string(compared) + " non-zero components, " + std::to_string(non_normal) +
             " at non-normal subgroups, sign " + (signs.size() == 1 ? (*signs.begin() > 0 ? "+1" : "-1") : "?");
    return o;
}

Outcome convergence() {
    Outcome o;
    over_systems([&](const std::string& what, const Bundle& b, const CoefficientSystem& m) {
        SpectralOptions opt;
        opt.factorization = false;
        const auto r = main_spectral_sequence(*b.complex, m, opt);
        o.require(r.checks.pass(), what + (r.checks.failures.empty() ? "" : ": " + r.checks.failures.front()));
        o.require(r.convergence.pass, what + ": E_infinity vs graded pieces");
        for (int n = 0; n <= b.complex->dim(); ++n)
            o.require(r.convergence.oracle[static_cast<std::size_t>(n)] == bredon_cohomology(*b.complex, m, n),
                      what + ": oracle degree " + std::to_string(n));
    });
    return o;
}

Outcome fixed_point_sets() {
    Outcome o;
    over_systems([&](const std::string& what, const Bundle& b, const CoefficientSystem& m) {
        SpectralOptions opt;
        opt.factorization = false;
        for (int h = 0; h < b.lattice->size(); ++h) {
            const auto w = what + " H" + std::to_string(h);
            const auto r = fps_spectral_sequence(*b.complex, m, h, opt);
            o.require(r.report.pass(), w + ": page checks or convergence");
            o.require(r.structural, w + (r.structural_failures.empty() ? "" : ": " + r.structural_failures.front()));
            const auto hm = induced_system(m, r.fixed.weyl);
            for (int n = 0; n <= r.fixed.complex->dim(); ++n)
                o.require(r.report.convergence.oracle[static_cast<std::size_t>(n)] ==
                              bredon_cohomology(*r.fixed.complex, hm, n),
                          w + ": W H-Bredon oracle degree " + std::to_string(n));
            if (h == b.lattice->trivial())
                o.require(r.coincides_with_main == std::optional<bool>(true), w + ": differs from the main sequence");
        }
    });
    return o;
}

Outcome long_exact_sequence() {
    Outcome o;
    over_systems([&](const std::string& what, const Bundle& b, const CoefficientSystem& m) {
        for (int h = 0; h < b.lattice->size(); ++h) {
            const auto r = check_long_exact_sequence(*b.complex, m, h);
            o.require(r.exact, what + " H" + std::to_string(h) + (r.failures.empty() ? "" : ": " + r.failures.front()));
        }
    });
    return o;
}

std::pair<int, std::string> capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) return {-1, ""};
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism(const std::string& cli) {
    Outcome o;
    if (cli.empty()) {
        o.require(false, "no CLI path given");
        return o;
    }
    for (const auto& name : testing::bundles()) {
        const auto b = load(name);
        const std::string in = " --input '" + testing::fixture(name) + "'";
        std::vector<std::string> cmds;
        for (const std::string fmt : {" --table", " --json"}) {
            cmds.push_back("validate" + in + fmt);
            cmds.push_back("bredon" + in + fmt);
            cmds.push_back("ss" + in + fmt);
            cmds.push_back("ss" + in + fmt + " --parallel");
            cmds.push_back("fps-ss" + in + fmt + " --subgroup " + std::to_string(b.lattice->whole()));
        }
        for (const auto& c : cmds) {
            const auto a = capture("'" + cli + "' " + c);
            const auto z = capture("'" + cli + "' " + c);
            o.require(a.first == 0, name + ": " + c + " exited with " + std::to_string(a.first));
            o.require(a == z, name + ": " + c + " differs between runs");
        }
    }
    // the parallel page computation prints the same bytes as the sequential one
    const std::string in = " --input '" + testing::fixture("s3_sphere_sign") + "' --json";
    o.require(capture("'" + cli + "' ss" + in) == capture("'" + cli + "' ss" + in + " --parallel"),
              "parallel and sequential output differ");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    std::string d1_detail;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"orbit category", orbit_category},
        {"filtration", filtration},
        {"oracle reductions", oracles},
        {"freeness", freeness},
        {"E1 identification", e1_identification},
        {"d1 structure", [&] { return d1_structure(d1_detail); }},
        {"convergence", convergence},
        {"fixed point set spectral sequence", fixed_point_sets},
        {"long exact sequence", long_exact_sequence},
        {"determinism", [&] { return determinism(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char time[32];
        std::snprintf(time, sizeof time, "%.2f s", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "  (" << time << ")";
        if (i == 5 && !d1_detail.empty()) std::cout << "  " << d1_detail;
        std::cout << "\n";
        for (const auto& n : o.notes) std::cout << "      " << n << "\n";
        if (!o.pass) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}

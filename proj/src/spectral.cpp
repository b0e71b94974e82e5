#include "bredon/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace bredon {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

std::string pos_str(int s, int n) { return "(" + std::to_string(s) + "," + std::to_string(n) + ")"; }

void run_all(std::size_t count, bool parallel, const std::function<void(std::size_t)>& job) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (!parallel || hw == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(hw, count); ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) job(i);
        });
    for (auto& t : pool) t.join();
}

AbHom zero_between(const FgAbPresentation& a, const FgAbPresentation& b) {
    return {a, b, IntMatrix::Zero(b.generators, a.generators)};
}

bool zero_modulo(const IntMatrix& m, const Lattice& rel) { return rel.contains_columns(m); }

}  // namespace

Lattice FilteredCochainComplex::filtration(int s, int n) const {
    const Lattice rel = complex.relations(n);
    if (s <= 0) return Lattice::full(complex.rank(n));
    if (s > top_stratum) return rel;
    const auto& st = stratum[sz(n)];
    std::vector<bool> mask(st.size());
    for (std::size_t i = 0; i < st.size(); ++i) mask[i] = st[i] >= s;
    return Lattice::coordinate(mask) + rel;
}

FilteredCochainComplex build_filtration(CochainComplex c, std::vector<std::vector<int>> stratum, int top_stratum) {
    FilteredCochainComplex f{std::move(c), std::move(stratum), top_stratum};
    const int top = f.top_degree();
    if (static_cast<int>(f.stratum.size()) != top + 1) throw std::logic_error("filtration: stratum tags missing");
    for (int n = 0; n <= top; ++n) {
        if (static_cast<Index>(f.stratum[sz(n)].size()) != f.complex.rank(n))
            throw std::logic_error("filtration: stratum tags missing in degree " + std::to_string(n));
        for (int t : f.stratum[sz(n)])
            if (t < 0 || t > top_stratum) throw std::logic_error("filtration: stratum out of range");
    }
    for (int n = 0; n < top; ++n)
        for (int s = 1; s <= top_stratum; ++s)
            if (!f.filtration(s, n + 1).contains(image(f.complex.differential(n), f.filtration(s, n))))
                throw std::logic_error("filtration: differential leaves F^" + std::to_string(s) + " in degree " +
                                       std::to_string(n));
    return f;
}

FilteredCochainComplex build_filtration(const BredonCochainComplex& c, int top_stratum) {
    return build_filtration(c.complex, c.stratum, top_stratum);
}

NormalForm SpectralPage::entry(int s, int n) const {
    auto it = entries.find({s, n});
    return it == entries.end() ? NormalForm{} : it->second.normal_form();
}

bool SpectralPage::zero_differentials() const {
    return std::all_of(differentials.begin(), differentials.end(), [](const auto& d) { return d.second.is_zero(); });
}

std::vector<SpectralPage> compute_pages(const FilteredCochainComplex& f, int r_max, bool parallel) {
    if (r_max < 1) throw std::invalid_argument("compute_pages: r_max must be at least 1");
    const int top = f.top_degree();
    const int big = f.top_stratum + 1;
    auto clamp = [&](int s) { return std::clamp(s, 0, big); };
    // fil[n][s], pre[n][t] = d_n^-1 F^t_{n+1}
    std::vector<std::vector<Lattice>> fil(sz(top + 1)), pre(sz(top + 1));
    for (int n = 0; n <= top; ++n)
        for (int s = 0; s <= big; ++s) fil[sz(n)].push_back(f.filtration(s, n));
    for (int n = 0; n <= top; ++n)
        for (int t = 0; t <= big; ++t)
            pre[sz(n)].push_back(n < top ? preimage(f.complex.differential(n), fil[sz(n + 1)][sz(t)])
                                         : Lattice::full(f.complex.rank(n)));
    // Z_r^s depends on s and s + r only through their clamped values
    std::map<std::tuple<int, int, int>, Lattice> zs;
    for (int n = 0; n <= top; ++n)
        for (int a = 0; a <= big; ++a)
            for (int b = a; b <= big; ++b) zs.emplace(std::tuple{n, a, b}, Lattice());
    std::vector<std::tuple<int, int, int>> keys;
    for (const auto& [k, v] : zs) keys.push_back(k);
    run_all(keys.size(), parallel, [&](std::size_t i) {
        const auto [n, a, b] = keys[i];
        zs.at(keys[i]) = intersect(fil[sz(n)][sz(a)], pre[sz(n)][sz(b)]);
    });
    auto z = [&](int r, int s, int n) -> const Lattice& {
        return zs.at({n, clamp(s), std::max(clamp(s), clamp(s + r))});
    };

    std::vector<Position> positions;
    for (int s = 0; s <= f.top_stratum; ++s)
        for (int n = 0; n <= top; ++n) positions.emplace_back(s, n);

    std::vector<SpectralPage> pages;
    for (int r = 1; r <= r_max; ++r) {
        std::vector<Subquotient> found(positions.size());
        run_all(positions.size(), parallel, [&](std::size_t i) {
            const auto [s, n] = positions[i];
            Lattice den = z(r - 1, s + 1, n);
            if (n > 0) den = den + image(f.complex.differential(n - 1), z(r - 1, s - r + 1, n - 1));
            found[i] = Subquotient(z(r, s, n), den);
        });
        SpectralPage page;
        page.r = r;
        for (std::size_t i = 0; i < positions.size(); ++i) page.entries.emplace(positions[i], std::move(found[i]));
        std::vector<Position> sources;
        for (const auto& [s, n] : positions)
            if (s + r <= f.top_stratum && n + 1 <= top) sources.emplace_back(s, n);
        std::vector<AbHom> maps(sources.size());
        run_all(sources.size(), parallel, [&](std::size_t i) {
            const auto [s, n] = sources[i];
            const auto& a = page.entries.at({s, n});
            const auto& b = page.entries.at({s + r, n + 1});
            maps[i] = {a.presentation(), b.presentation(), induced_map(f.complex.differential(n), a, b)};
        });
        for (std::size_t i = 0; i < sources.size(); ++i) page.differentials.emplace(sources[i], std::move(maps[i]));
        pages.push_back(std::move(page));
    }
    return pages;
}

PageCheck check_pages(const FilteredCochainComplex& f, const std::vector<SpectralPage>& pages) {
    PageCheck pc;
    for (std::size_t k = 0; k < pages.size(); ++k) {
        const auto& p = pages[k];
        const int r = p.r;
        auto out = [&](int s, int n) {
            auto it = p.differentials.find({s, n});
            if (it != p.differentials.end()) return it->second;
            auto e = p.entries.find({s, n});
            return zero_between(e == p.entries.end() ? FgAbPresentation() : e->second.presentation(), FgAbPresentation());
        };
        for (const auto& [at, d] : p.differentials) {
            auto next = p.differentials.find({at.first + r, at.second + 1});
            if (next == p.differentials.end()) continue;
            if (!zero_modulo(product(next->second.matrix, d.matrix), next->second.target.relation_lattice())) {
                pc.squares_zero = false;
                pc.failures.push_back("d_" + std::to_string(r) + " d_" + std::to_string(r) + " != 0 at " +
                                      pos_str(at.first, at.second));
            }
        }
        if (k + 1 >= pages.size()) continue;
        for (const auto& [at, e] : p.entries) {
            const auto [s, n] = at;
            const AbHom o = out(s, n);
            AbHom in = zero_between(FgAbPresentation(), e.presentation());
            if (auto it = p.differentials.find({s - r, n - 1}); it != p.differentials.end()) in = it->second;
            const Lattice ker = preimage(o.matrix, o.target.relation_lattice());
            const Lattice im = image(in.matrix, Lattice::full(in.source.generators)) + in.target.relation_lattice();
            const NormalForm h = Subquotient(ker, im).normal_form();
            if (!(h == pages[k + 1].entry(s, n))) {
                pc.recomputation = false;
                pc.failures.push_back("H(E_" + std::to_string(r) + ") != E_" + std::to_string(r + 1) + " at " + pos_str(s, n));
            }
        }
    }
    for (const auto& p : pages) {
        if (p.r <= f.top_stratum) continue;
        if (!p.zero_differentials()) {
            pc.stabilized = false;
            pc.failures.push_back("d_" + std::to_string(p.r) + " is nonzero past the filtration length");
        }
        for (const auto& [at, e] : p.entries)
            if (!(e.normal_form() == pages[sz(f.top_stratum)].entry(at.first, at.second))) {
                pc.stabilized = false;
                pc.failures.push_back("E_" + std::to_string(p.r) + " differs from E_" + std::to_string(f.top_stratum + 1) +
                                      " at " + pos_str(at.first, at.second));
            }
    }
    return pc;
}

ConvergenceReport certify_convergence(const FilteredCochainComplex& f, const SpectralPage& e_inf) {
    ConvergenceReport rep;
    for (int n = 0; n <= f.top_degree(); ++n) {
        const Lattice zc = f.complex.cocycles(n);
        const Lattice b = f.complex.coboundaries(n);
        rep.oracle.push_back(Subquotient(zc, b).normal_form());
        std::vector<Lattice> pieces;
        for (int s = 0; s <= f.top_stratum + 1; ++s) pieces.push_back(intersect(zc, f.filtration(s, n)) + b);
        for (int s = 0; s <= f.top_stratum; ++s) {
            ConvergenceEntry e;
            e.s = s;
            e.n = n;
            e.graded = Subquotient(pieces[sz(s)], pieces[sz(s + 1)]).normal_form();
            e.e_inf = e_inf.entry(s, n);
            e.match = e.graded == e.e_inf;
            rep.pass = rep.pass && e.match;
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

std::vector<std::vector<int>> label_classes(const GCWComplex& y, const Labelling& lab, int top) {
    std::vector<std::set<int>> found(sz(top + 1));
    const int q = y.group().order();
    for (int o = 0; o < y.size(); ++o)
        for (int a = 0; a < q; ++a) {
            const auto cell = y.cell_at(o, a);
            if (cell.coset != a) continue;
            const int l = lab.of(y, cell);
            int best = l;
            for (int b = 0; b < q; ++b) best = std::min(best, lab.glat->conjugate(lab.lift[sz(b)], l));
            found[sz(lab.glat->length(best))].insert(best);
        }
    std::vector<std::vector<int>> out;
    for (auto& s : found) out.emplace_back(s.begin(), s.end());
    return out;
}

E1Identification identify_e1(const GCWComplex& y, const CoefficientSystem& m, const Labelling& lab,
                             const BredonCochainComplex& c, const SpectralPage& e1, bool modified) {
    E1Identification id;
    const int top = c.complex.top();
    const int n_strata = lab.glat->max_length();
    const auto classes = label_classes(y, lab, n_strata);
    auto fail = [&](std::string s) {
        id.pass = false;
        id.failures.push_back(std::move(s));
    };
    for (int s = 0; s <= n_strata; ++s) {
        std::vector<LocalBlock> blocks;
        for (int l : classes[sz(s)]) blocks.push_back(local_block(y, m, lab, l));
        std::vector<std::vector<IntMatrix>> proj(blocks.size()), emb(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int n = 0; n <= top; ++n) {
                proj[b].push_back(block_projection(y, m, lab, c, blocks[b], n));
                emb[b].push_back(block_embedding(y, m, lab, c, blocks[b], n));
            }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& blk = blocks[b];
            E1Block e;
            e.stratum = s;
            e.label = blk.label;
            e.gamma_order = blk.gamma.group.order();
            const std::string name = "block L=" + std::to_string(blk.label) + " stratum " + std::to_string(s);
            for (int n = 0; n <= top; ++n) {
                const Lattice rel = blk.complex.relations(n);
                for (std::size_t b2 = 0; b2 < blocks.size(); ++b2) {
                    const IntMatrix pe = product(proj[b2][sz(n)], emb[b][sz(n)]);
                    const IntMatrix want = b2 == b ? IntMatrix(IntMatrix::Identity(pe.rows(), pe.cols()))
                                                   : IntMatrix(IntMatrix::Zero(pe.rows(), pe.cols()));
                    if (!equal_modulo(pe, want, blocks[b2].complex.relations(n))) {
                        e.cochain_iso = false;
                        fail(name + ": projection after embedding is wrong in degree " + std::to_string(n));
                    }
                }
                (void)rel;
                if (n < top)
                    for (std::size_t b2 = 0; b2 < blocks.size(); ++b2) {
                        const IntMatrix d = product(product(proj[b2][sz(n + 1)], c.complex.differential(n)), emb[b][sz(n)]);
                        const IntMatrix want = b2 == b ? blk.complex.differential(n)
                                                       : IntMatrix(IntMatrix::Zero(d.rows(), d.cols()));
                        if (!equal_modulo(d, want, blocks[b2].complex.relations(n + 1))) {
                            e.cochain_iso = false;
                            fail(name + ": differential does not commute in degree " + std::to_string(n));
                        }
                    }
                e.local.push_back(blk.complex.cohomology_group(n));
            }
            if (modified) {
                const auto xhh = modified_fixed_complex(y, blk.label);
                if (!xhh.free()) {
                    fail(name + ": modified fixed point set is not free");
                } else {
                    const auto mod = weyl_module(m, blk.label);
                    for (int n = 0; n <= top; ++n)
                        if (!(reduced_local_cohomology(xhh, mod, n) == e.local[sz(n)]))
                            fail(name + ": block cohomology differs from the reduced local cohomology in degree " +
                                 std::to_string(n));
                }
            }
            id.blocks.push_back(std::move(e));
        }
        // the blocks exhaust the stratum s coordinates
        for (int n = 0; n <= top; ++n) {
            const auto& st = c.stratum[sz(n)];
            const auto r = static_cast<Index>(st.size());
            IntMatrix want = IntMatrix::Zero(r, r);
            for (Index i = 0; i < r; ++i)
                if (st[sz(static_cast<int>(i))] == s) want(i, i) = 1;
            IntMatrix sum = IntMatrix::Zero(r, r);
            for (std::size_t b = 0; b < blocks.size(); ++b) sum += product(emb[b][sz(n)], proj[b][sz(n)]);
            if (!equal_modulo(sum, want, c.complex.relations(n)))
                fail("stratum " + std::to_string(s) + ": blocks do not exhaust the graded piece in degree " + std::to_string(n));
            NormalForm total;
            for (const auto& e : id.blocks)
                if (e.stratum == s) total = direct_sum(total, e.local[sz(n)]);
            if (!(total == e1.entry(s, n)))
                fail("E_1 at " + pos_str(s, n) + " is " + e1.entry(s, n).str() + ", blocks give " + total.str());
        }
    }
    return id;
}

namespace {

bool homs_equal(const AbHom& a, const AbHom& b, int sign) {
    AbHom c = b;
    if (sign < 0) c.matrix = -c.matrix;
    return a.equals(c);
}

}  // namespace

D1Report check_d1_factorization(const GCWComplex& x, const CoefficientSystem& m, const BredonCochainComplex& c) {
    D1Report rep;
    const auto& lat = x.lattice();
    const Labelling lab = Labelling::isotropy(x);
    const int top = c.complex.top();
    const int n_strata = lat.max_length();
    const auto classes = label_classes(x, lab, n_strata);
    std::map<int, LocalBlock> blocks;
    auto block = [&](int l) -> const LocalBlock& {
        auto it = blocks.find(l);
        if (it == blocks.end()) it = blocks.emplace(l, local_block(x, m, lab, l)).first;
        return it->second;
    };
    for (int s = 0; s < n_strata; ++s)
        for (int l : classes[sz(s)])
            for (int h : classes[sz(s + 1)]) {
                const auto& lb = block(l);
                const auto& hb = block(h);
                const bool sub = lat.subconjugator(h, l) >= 0;
                std::vector<int> conj;  // N_H-class representatives of G-conjugates of L containing H
                if (sub) {
                    std::set<int> seen;
                    for (int g = 0; g < x.group().order(); ++g) {
                        const int lj = lat.conjugate(g, l);
                        if (!lat.le(h, lj) || seen.count(lj)) continue;
                        const auto cls = conjugacy_orbit_class(lat, h, lj);
                        seen.insert(cls.begin(), cls.end());
                        conj.push_back(*std::min_element(cls.begin(), cls.end()));
                    }
                }
                for (int n = 0; n < top; ++n) {
                    D1Component d;
                    d.source = l;
                    d.target = h;
                    d.degree = n;
                    d.subconjugate = sub;
                    const IntMatrix e_l = block_embedding(x, m, lab, c, lb, n);
                    const IntMatrix lhs = product(product(block_projection(x, m, lab, c, hb, n + 1), c.complex.differential(n)), e_l);
                    const AbHom lhs_h = cohomology_map(lb.complex, hb.complex, lhs, n, 1);
                    d.zero = lhs_h.is_zero();
                    const std::string name = "d_1 from L=" + std::to_string(l) + " to H=" + std::to_string(h) +
                                             " in degree " + std::to_string(n);
                    if (!sub) {
                        if (!d.zero || !zero_modulo(lhs, hb.complex.relations(n + 1))) {
                            rep.pass = false;
                            rep.failures.push_back(name + " is nonzero although H is not subconjugate to L");
                        }
                        rep.components.push_back(d);
                        continue;
                    }
                    const auto w = wedge_complex(x, m, h, s);
                    const IntMatrix delta = connecting_cochain_map(x, m, w, hb, n);
                    IntMatrix phi = IntMatrix::Zero(delta.cols(), lb.complex.rank(n));
                    AbHom rhs_h = zero_between(lhs_h.source, lhs_h.target);
                    const AbHom conn = connecting_homomorphism(x, m, h, s, n);
                    for (int lj : conj) {
                        const auto& bj = block(lj);
                        const IntMatrix move = product(block_projection(x, m, lab, c, bj, n), e_l);
                        phi += product(change_of_groups_cochain_map(x, m, w, bj, h, n), move);
                        const AbHom t = cohomology_map(lb.complex, bj.complex, move, n);
                        rhs_h.matrix += compose(conn, compose(change_of_groups(x, m, h, lj, n), t)).matrix;
                    }
                    const IntMatrix rhs = product(delta, phi);
                    const Lattice rel = hb.complex.relations(n + 1);
                    if (equal_modulo(lhs, rhs, rel)) d.cochain_level = true;
                    for (int sign : {1, -1})
                        if (homs_equal(lhs_h, rhs_h, sign)) {
                            d.sign = sign;
                            break;
                        }
                    if (d.sign != 1) {
                        rep.pass = false;
                        rep.failures.push_back(name + (d.sign == -1 ? " agrees with the factorization only up to sign"
                                                                    : " does not factor through the wedge"));
                    }
                    rep.components.push_back(d);
                }
            }
    return rep;
}

const SpectralPage& SpectralReport::e_infinity() const { return pages[sz(filtered.top_stratum)]; }

bool SpectralReport::degenerate_at_e1() const {
    return std::all_of(pages.begin(), pages.end(), [](const SpectralPage& p) { return p.zero_differentials(); });
}

bool SpectralReport::pass() const {
    return checks.pass() && e1.pass && (!d1 || d1->pass) && convergence.pass;
}

namespace {

SpectralReport run(const GCWComplex& y, const CoefficientSystem& m, const Labelling& lab, const SpectralOptions& opt,
                   bool main) {
    SpectralReport rep;
    const BredonCochainComplex c = bredon_cochain_complex(y, m, lab.lengths());
    const int n = lab.glat->max_length();
    rep.filtered = build_filtration(c, n);
    rep.pages = compute_pages(rep.filtered, n + 2, opt.parallel);
    rep.checks = check_pages(rep.filtered, rep.pages);
    rep.e1 = identify_e1(y, m, lab, c, rep.pages.front(), main);
    if (main && opt.factorization) rep.d1 = check_d1_factorization(y, m, c);
    rep.convergence = certify_convergence(rep.filtered, rep.e_infinity());
    return rep;
}

}  // namespace

SpectralReport main_spectral_sequence(const GCWComplex& x, const CoefficientSystem& m, const SpectralOptions& opt) {
    return run(x, m, Labelling::isotropy(x), opt, true);
}

bool same_pages(const std::vector<SpectralPage>& a, const std::vector<SpectralPage>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].entries.size() != b[k].entries.size() || a[k].differentials.size() != b[k].differentials.size())
            return false;
        for (const auto& [at, e] : a[k].entries)
            if (!(e.normal_form() == b[k].entry(at.first, at.second))) return false;
        for (const auto& [at, d] : a[k].differentials) {
            auto it = b[k].differentials.find(at);
            if (it == b[k].differentials.end() || d.matrix != it->second.matrix) return false;
        }
    }
    return true;
}

bool FpsReport::pass() const { return report.pass() && structural && coincides_with_main.value_or(true); }

FpsReport fps_spectral_sequence(const GCWComplex& x, const CoefficientSystem& m, int h, const SpectralOptions& opt) {
    const auto& lat = x.lattice();
    if (h < 0 || h >= lat.size()) throw std::invalid_argument("subgroup id out of range");
    FpsReport f;
    f.subgroup = h;
    f.fixed = weyl_fixed_complex(x, h);
    const GCWComplex& y = *f.fixed.complex;
    const CoefficientSystem hm = induced_system(m, f.fixed.weyl);
    const Labelling lab = Labelling::fixed_points(f.fixed, x.lattice_ptr());
    f.report = run(y, hm, lab, opt, false);

    const int nh = lat.normalizer(h);
    for (const auto& row : label_classes(y, lab, lat.max_length()))
        for (int l : row) {
            if (!lat.le(nh, l)) continue;
            const auto b = local_block(y, hm, lab, l);
            if (b.gamma.group.order() != 1) {
                f.structural = false;
                f.structural_failures.push_back("block L=" + std::to_string(l) + " has a nontrivial acting group");
                continue;
            }
            std::vector<IntMatrix> bd;
            for (std::size_t n = 0; n < b.chains.rank.size(); ++n)
                bd.push_back(n == 0 ? IntMatrix(0, b.chains.rank[0]) : b.chains.boundary[n][0]);
            const auto plain = cellular_cochain_complex(bd, b.module.module);
            for (int n = 0; n <= plain.top(); ++n)
                if (!(plain.cohomology_group(n) == b.complex.cohomology_group(n))) {
                    f.structural = false;
                    f.structural_failures.push_back("block L=" + std::to_string(l) +
                                                    " differs from ordinary cochains in degree " + std::to_string(n));
                }
        }
    if (h == lat.trivial()) {
        SpectralOptions o = opt;
        o.factorization = false;
        f.coincides_with_main = same_pages(f.report.pages, main_spectral_sequence(x, m, o).pages);
    }
    return f;
}

}  // namespace bredon

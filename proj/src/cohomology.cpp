#include "bredon/cohomology.hpp"

#include <algorithm>

namespace bredon {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

/// Orbit decomposition of sorted cell lists under a list of acting elements.
void decompose(const GCWComplex& x, const std::vector<std::vector<EquivariantCell>>& cells,
               const std::vector<int>& elements, std::vector<std::vector<int>>& reps,
               std::vector<std::vector<std::pair<int, int>>>& where) {
    reps.assign(cells.size(), {});
    where.assign(cells.size(), {});
    for (std::size_t n = 0; n < cells.size(); ++n) {
        const auto& v = cells[n];
        where[n].assign(v.size(), {-1, -1});
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (where[n][j].first >= 0) continue;
            const int orbit = static_cast<int>(reps[n].size());
            reps[n].push_back(static_cast<int>(j));
            for (std::size_t e = 0; e < elements.size(); ++e) {
                const auto c = x.act(elements[e], v[j]);
                auto it = std::lower_bound(v.begin(), v.end(), c);
                if (it == v.end() || !(*it == c)) throw std::logic_error("cell set is not closed under the action");
                auto& w = where[n][static_cast<std::size_t>(it - v.begin())];
                if (w.first < 0) w = {orbit, static_cast<int>(e)};
            }
        }
    }
}

std::pair<int, int> find_in(const std::vector<std::vector<EquivariantCell>>& cells,
                            const std::vector<std::vector<std::pair<int, int>>>& where, int n,
                            const EquivariantCell& c) {
    if (n < 0 || sz(n) >= cells.size()) return {-1, -1};
    const auto& v = cells[sz(n)];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it == v.end() || !(*it == c)) return {-1, -1};
    return where[sz(n)][static_cast<std::size_t>(it - v.begin())];
}

}  // namespace

BredonCochainComplex bredon_cochain_complex(const GCWComplex& x, const CoefficientSystem& m, std::vector<int> strata) {
    if (!(m.lattice().group() == x.group()))
        throw SystemError("coefficient system and complex are over different groups");
    const auto& lat = x.lattice();
    if (strata.empty())
        for (const auto& c : x.cells()) strata.push_back(lat.length(c.isotropy));
    BredonCochainComplex b;
    std::vector<FgAbPresentation> terms;
    for (int n = 0; n <= x.dim(); ++n) {
        std::vector<FgAbPresentation> parts;
        std::vector<int> st, ce;
        std::vector<Index> off;
        Index o = 0;
        for (int a : x.cells_of_dim(n)) {
            const auto& v = m.value(x.cell(a).isotropy);
            parts.push_back(v);
            off.push_back(o);
            o += v.generators;
            for (Index i = 0; i < v.generators; ++i) {
                st.push_back(strata[sz(a)]);
                ce.push_back(a);
            }
        }
        terms.push_back(direct_sum(parts));
        b.stratum.push_back(std::move(st));
        b.cell.push_back(std::move(ce));
        b.offset.push_back(std::move(off));
    }
    std::vector<IntMatrix> ds;
    for (int n = 0; n < x.dim(); ++n) {
        IntMatrix d = IntMatrix::Zero(terms[sz(n + 1)].generators, terms[sz(n)].generators);
        for (int a : x.cells_of_dim(n + 1)) {
            const auto& ca = x.cell(a);
            const Index row = b.offset[sz(n + 1)][sz(x.position(a))];
            for (const auto& t : ca.boundary) {
                const Index col = b.offset[sz(n)][sz(x.position(t.cell))];
                const IntMatrix& f = m.map({ca.isotropy, x.cell(t.cell).isotropy, t.coset});
                d.block(row, col, f.rows(), f.cols()) += t.coeff * f;
            }
        }
        ds.push_back(std::move(d));
    }
    b.complex = CochainComplex(std::move(terms), std::move(ds));
    return b;
}

NormalForm bredon_cohomology(const GCWComplex& x, const CoefficientSystem& m, int n) {
    return bredon_cochain_complex(x, m).complex.cohomology_group(n);
}

CochainComplex cellular_cochain_complex(const std::vector<IntMatrix>& boundaries, const FgAbPresentation& a) {
    const Index k = a.generators;
    std::vector<FgAbPresentation> terms;
    for (const auto& d : boundaries)
        terms.push_back(direct_sum(std::vector<FgAbPresentation>(static_cast<std::size_t>(d.cols()), a)));
    std::vector<IntMatrix> ds;
    for (std::size_t n = 0; n + 1 < boundaries.size(); ++n) {
        const IntMatrix& bd = boundaries[n + 1];  // C_{n+1} -> C_n
        IntMatrix d = IntMatrix::Zero(bd.cols() * k, bd.rows() * k);
        for (Index i = 0; i < bd.rows(); ++i)
            for (Index j = 0; j < bd.cols(); ++j)
                if (bd(i, j) != Integer(0)) d.block(j * k, i * k, k, k) = bd(i, j) * IntMatrix::Identity(k, k);
        ds.push_back(std::move(d));
    }
    return {std::move(terms), std::move(ds)};
}

NormalForm reduced_local_cohomology(const ModifiedFixedComplex& xhh, const GroupModule& mod, int n) {
    if (!xhh.free()) throw std::logic_error("modified fixed point set is not free: " + xhh.freeness_violations.front());
    if (xhh.chains.rank.empty()) return {};
    return hom_over_group_ring(xhh.chains, mod).cohomology_group(n);
}

Labelling Labelling::isotropy(const GCWComplex& x) {
    Labelling l;
    l.glat = x.lattice_ptr();
    for (const auto& c : x.cells()) l.label.push_back(c.isotropy);
    for (int g = 0; g < x.group().order(); ++g) l.lift.push_back(g);
    return l;
}

Labelling Labelling::fixed_points(const WeylFixedComplex& y, std::shared_ptr<const SubgroupLattice> glat) {
    Labelling l;
    l.glat = std::move(glat);
    l.label = y.label;
    l.lift = y.weyl.weyl.rep;
    return l;
}

int Labelling::of(const GCWComplex&, const EquivariantCell& c) const {
    return glat->conjugate(lift[sz(c.coset)], label[sz(c.orbit)]);
}

std::vector<int> Labelling::lengths() const {
    std::vector<int> out;
    for (int l : label) out.push_back(glat->length(l));
    return out;
}

std::pair<int, int> LocalBlock::locate(int n, const EquivariantCell& c) const { return find_in(cells, where, n, c); }

LocalBlock local_block(const GCWComplex& y, const CoefficientSystem& m, const Labelling& lab, int l) {
    const auto& q = y.lattice();
    const auto& g = lab.glat;
    const int qn = y.group().order();
    LocalBlock b;
    b.label = l;
    std::vector<int> s, c;
    for (int a = 0; a < qn; ++a) {
        if (g->conjugate(lab.lift[sz(a)], l) == l) s.push_back(a);
        if (g->at(l).contains(lab.lift[sz(a)])) c.push_back(a);
    }
    b.acting = q.find(s);
    b.isotropy = q.find(c);
    if (b.acting < 0 || b.isotropy < 0) throw std::logic_error("local block: stabilizer is not a subgroup");
    b.gamma = q.quotient(b.acting, b.isotropy);

    const auto top = sz(y.dim() + 1);
    b.cells.assign(top, {});
    for (int o = 0; o < y.size(); ++o)
        for (int a = 0; a < qn; ++a) {
            const auto cell = y.cell_at(o, a);
            if (cell.coset != a || lab.of(y, cell) != l) continue;
            if (y.isotropy(cell) != b.isotropy) throw std::logic_error("local block: cells with unequal isotropy");
            b.cells[sz(y.cell(o).dim)].push_back(cell);
        }
    for (auto& v : b.cells) std::sort(v.begin(), v.end());
    decompose(y, b.cells, b.gamma.rep, b.reps, b.where);

    b.chains.group = b.gamma.group;
    for (std::size_t n = 0; n < top; ++n) b.chains.rank.push_back(static_cast<Index>(b.reps[n].size()));
    b.chains.boundary.assign(top, {});
    const auto w = sz(b.gamma.group.order());
    for (std::size_t n = 1; n < top; ++n) {
        b.chains.boundary[n].assign(w, IntMatrix::Zero(b.chains.rank[n - 1], b.chains.rank[n]));
        for (std::size_t j = 0; j < b.reps[n].size(); ++j)
            for (const auto& [cell, v] : y.boundary(b.cells[n][sz(b.reps[n][j])])) {
                const auto [orbit, e] = b.locate(static_cast<int>(n - 1), cell);
                if (orbit < 0) continue;
                b.chains.boundary[n][sz(e)](orbit, static_cast<Index>(j)) += v;
            }
    }
    b.module.group = b.gamma.group;
    b.module.module = m.value(b.isotropy);
    for (int r : b.gamma.rep) b.module.action.push_back(m.map({b.isotropy, b.isotropy, r}));
    b.complex = hom_over_group_ring(b.chains, b.module);
    return b;
}

namespace {

/// For each orbit cell of dimension n meeting the block: (position, local orbit, coset of the local representative).
std::vector<std::tuple<int, int, int>> block_cells(const GCWComplex& y, const LocalBlock& b, int n) {
    std::vector<std::tuple<int, int, int>> out;
    if (n < 0 || sz(n) >= b.reps.size()) return out;
    for (std::size_t j = 0; j < b.reps[sz(n)].size(); ++j) {
        const auto& cell = b.cells[sz(n)][sz(b.reps[sz(n)][j])];
        out.emplace_back(cell.orbit, static_cast<int>(j), cell.coset);
    }
    (void)y;
    return out;
}

}  // namespace

IntMatrix block_projection(const GCWComplex& y, const CoefficientSystem& m, const Labelling&,
                           const BredonCochainComplex& c, const LocalBlock& b, int n) {
    const Index k = b.module.module.generators;
    IntMatrix p = IntMatrix::Zero(b.complex.rank(n), c.complex.rank(n));
    const auto& qg = y.group();
    (void)qg;
    for (const auto& [o, j, coset] : block_cells(y, b, n)) {
        const Index col = c.offset[sz(n)][sz(y.position(o))];
        const IntMatrix& f = m.map({b.isotropy, y.cell(o).isotropy, coset});
        p.block(j * k, col, k, f.cols()) = f;
    }
    return p;
}

IntMatrix block_embedding(const GCWComplex& y, const CoefficientSystem& m, const Labelling&,
                          const BredonCochainComplex& c, const LocalBlock& b, int n) {
    const Index k = b.module.module.generators;
    IntMatrix e = IntMatrix::Zero(c.complex.rank(n), b.complex.rank(n));
    for (const auto& [o, j, coset] : block_cells(y, b, n)) {
        const Index row = c.offset[sz(n)][sz(y.position(o))];
        const IntMatrix& f = m.map({y.cell(o).isotropy, b.isotropy, y.group().inv(coset)});
        e.block(row, j * k, f.rows(), k) = f;
    }
    return e;
}

std::pair<int, int> EquivariantCochains::locate(int n, const EquivariantCell& c) const {
    return find_in(cells, where, n, c);
}

IntMatrix EquivariantCochains::to_coordinates(int n, const IntMatrix& ambient) const {
    return coordinates(admissible[sz(n)], ambient);
}

EquivariantCochains equivariant_cochain_complex(const GCWComplex& x, const CoefficientSystem& m, int k,
                                                int module_subgroup,
                                                const std::function<bool(const EquivariantCell&)>& select) {
    const auto& lat = x.lattice();
    const int h = module_subgroup;
    EquivariantCochains e;
    e.acting = lat.intersection(lat.normalizer(h), lat.normalizer(k));
    const auto& p = lat.at(e.acting).members;
    const FixedComplex f = fixed_complex(x, k);
    for (const auto& v : f.cells) {
        std::vector<EquivariantCell> keep;
        for (const auto& c : v)
            if (select(c)) keep.push_back(c);
        e.cells.push_back(std::move(keep));
    }
    decompose(x, e.cells, p, e.reps, e.where);

    const FgAbPresentation& val = m.value(h);
    const Index r = val.generators;
    e.module_rank = r;
    auto rho = [&](int g) -> const IntMatrix& { return m.map({h, h, g}); };
    const Lattice rel = val.relation_lattice();

    std::vector<FgAbPresentation> terms;
    for (std::size_t n = 0; n < e.cells.size(); ++n) {
        std::vector<IntMatrix> bases, rels;
        for (int rp : e.reps[n]) {
            const auto& cell = e.cells[n][sz(rp)];
            std::vector<int> stab;
            for (int g : p)
                if (x.act(g, cell) == cell) stab.push_back(g);
            IntMatrix s(static_cast<Index>(stab.size()) * r, r);
            std::vector<IntMatrix> rr;
            for (std::size_t i = 0; i < stab.size(); ++i) {
                s.middleRows(static_cast<Index>(i) * r, r) = rho(stab[i]) - IntMatrix::Identity(r, r);
                rr.push_back(val.relations);
            }
            bases.push_back(preimage(s, Lattice::span(block_diagonal(rr))).basis());
            rels.push_back(val.relations);
        }
        e.admissible.push_back(Lattice::span(block_diagonal(bases)));
        const auto& adm = e.admissible.back();
        const Index amb = static_cast<Index>(e.reps[n].size()) * r;
        if (adm.ambient() != amb) e.admissible.back() = Lattice::zero(amb);
        terms.emplace_back(e.admissible.back().rank(), coordinates(e.admissible.back(), block_diagonal(rels)));
    }
    std::vector<IntMatrix> ds;
    for (std::size_t n = 0; n + 1 < e.cells.size(); ++n) {
        IntMatrix d = IntMatrix::Zero(static_cast<Index>(e.reps[n + 1].size()) * r, static_cast<Index>(e.reps[n].size()) * r);
        for (std::size_t j = 0; j < e.reps[n + 1].size(); ++j)
            for (const auto& [cell, v] : x.boundary(e.cells[n + 1][sz(e.reps[n + 1][j])])) {
                const auto [orbit, g] = e.locate(static_cast<int>(n), cell);
                if (orbit < 0) continue;
                d.block(static_cast<Index>(j) * r, orbit * r, r, r) += v * rho(p[sz(g)]);
            }
        e.ambient_d.push_back(d);
        ds.push_back(coordinates(e.admissible[n + 1], product(d, e.admissible[n].basis())));
    }
    if (!e.cells.empty()) e.ambient_d.push_back(IntMatrix::Zero(0, static_cast<Index>(e.reps.back().size()) * r));
    e.complex = CochainComplex(std::move(terms), std::move(ds));
    return e;
}

EquivariantCochains wedge_complex(const GCWComplex& x, const CoefficientSystem& m, int h, int k) {
    const auto& lat = x.lattice();
    return equivariant_cochain_complex(x, m, h, h, [&](const EquivariantCell& c) {
        const int i = x.isotropy(c);
        return i != h && lat.length(i) == k;
    });
}

IntMatrix connecting_cochain_map(const GCWComplex& x, const CoefficientSystem& m, const EquivariantCochains& wedge,
                                 const LocalBlock& hb, int n) {
    const int h = hb.label;
    const Index r = wedge.module_rank;
    const Index wn = n >= 0 && sz(n) < wedge.reps.size() ? static_cast<Index>(wedge.reps[sz(n)].size()) * r : 0;
    const auto& p = x.lattice().at(wedge.acting).members;
    IntMatrix d = IntMatrix::Zero(hb.complex.rank(n + 1), wn);
    if (n + 1 >= static_cast<int>(hb.reps.size())) return d;
    for (std::size_t j = 0; j < hb.reps[sz(n + 1)].size(); ++j)
        for (const auto& [cell, v] : x.boundary(hb.cells[sz(n + 1)][sz(hb.reps[sz(n + 1)][j])])) {
            const auto [orbit, g] = wedge.locate(n, cell);
            if (orbit < 0) continue;
            d.block(static_cast<Index>(j) * r, orbit * r, r, r) += v * m.map({h, h, p[sz(g)]});
        }
    return d;
}

IntMatrix change_of_groups_cochain_map(const GCWComplex& x, const CoefficientSystem& m, const EquivariantCochains& wedge,
                                       const LocalBlock& lb, int h, int n) {
    const auto& lat = x.lattice();
    const auto& grp = x.group();
    const int l = lb.label;
    if (!lat.le(h, l)) throw std::invalid_argument("change of groups: H is not contained in L");
    const Index rh = wedge.module_rank;
    const Index rl = lb.module.module.generators;
    const Index wn = n >= 0 && sz(n) < wedge.reps.size() ? static_cast<Index>(wedge.reps[sz(n)].size()) * rh : 0;
    IntMatrix f = IntMatrix::Zero(wn, lb.complex.rank(n));
    if (wn == 0) return f;
    const IntMatrix& mu = m.map({h, l, 0});
    const auto& nh = lat.at(lat.normalizer(h)).members;
    for (std::size_t o = 0; o < wedge.reps[sz(n)].size(); ++o) {
        const auto& y = wedge.cells[sz(n)][sz(wedge.reps[sz(n)][o])];
        const int iso = x.isotropy(y);
        int a = -1;
        for (int c : nh)
            if (lat.conjugate(c, l) == iso) {
                a = c;
                break;
            }
        if (a < 0) continue;  // not N H-conjugate to L: zero
        const auto z = x.act(grp.inv(a), y);
        const auto [j, gam] = lb.locate(n, z);
        if (j < 0) throw std::logic_error("change of groups: translated cell is not in the L block");
        const int s = lb.gamma.rep[sz(gam)];
        f.block(static_cast<Index>(o) * rh, j * rl, rh, rl) += m.map({h, h, a}) * mu * m.map({l, l, s});
    }
    return f;
}

AbHom connecting_homomorphism(const GCWComplex& x, const CoefficientSystem& m, int h, int k, int n) {
    const auto& lat = x.lattice();
    if (lat.length(h) != k + 1)
        throw std::invalid_argument("connecting homomorphism: subgroup is not in stratum " + std::to_string(k + 1));
    const auto w = wedge_complex(x, m, h, k);
    const auto hb = local_block(x, m, Labelling::isotropy(x), h);
    IntMatrix f = connecting_cochain_map(x, m, w, hb, n);
    if (n >= 0 && sz(n) < w.admissible.size()) f = product(f, w.admissible[sz(n)].basis());
    else f = IntMatrix::Zero(hb.complex.rank(n + 1), 0);
    return cohomology_map(w.complex, hb.complex, f, n, 1);
}

AbHom change_of_groups(const GCWComplex& x, const CoefficientSystem& m, int h, int l, int n) {
    const auto& lat = x.lattice();
    if (!lat.lt(h, l)) throw std::invalid_argument("change of groups: H must be a proper subgroup of L");
    if (lat.length(h) != lat.length(l) + 1) throw std::invalid_argument("change of groups: H and L are not in adjacent strata");
    const auto w = wedge_complex(x, m, h, lat.length(l));
    const auto lb = local_block(x, m, Labelling::isotropy(x), l);
    IntMatrix f = change_of_groups_cochain_map(x, m, w, lb, h, n);
    if (n >= 0 && sz(n) < w.admissible.size()) f = w.to_coordinates(n, f);
    return cohomology_map(lb.complex, w.complex, f, n);
}

bool exact_at(const AbHom& f, const AbHom& g) {
    if (f.target.generators != g.source.generators) return false;
    const Lattice ker = preimage(g.matrix, g.target.relation_lattice());
    const Lattice im = image(f.matrix, Lattice::full(f.source.generators)) + f.target.relation_lattice();
    return ker == im;
}

namespace {

/// Ambient matrix sending representative values of `from` to those of `to`
/// at the orbits they share (zero elsewhere).
IntMatrix transfer(const EquivariantCochains& from, const EquivariantCochains& to, int n) {
    const Index r = from.module_rank;
    const auto fr = static_cast<Index>(from.reps[sz(n)].size());
    const auto tr = static_cast<Index>(to.reps[sz(n)].size());
    IntMatrix t = IntMatrix::Zero(tr * r, fr * r);
    for (Index i = 0; i < fr; ++i) {
        const auto& cell = from.cells[sz(n)][sz(from.reps[sz(n)][sz(static_cast<int>(i))])];
        const auto [o, g] = to.locate(n, cell);
        if (o < 0) continue;
        if (g != 0) throw std::logic_error("orbit representatives disagree");
        t.block(o * r, i * r, r, r) = IntMatrix::Identity(r, r);
    }
    return t;
}

AbHom zero_hom(const FgAbPresentation& src, const FgAbPresentation& tgt) {
    return {src, tgt, IntMatrix::Zero(tgt.generators, src.generators)};
}

}  // namespace

ExactnessReport check_long_exact_sequence(const GCWComplex& x, const CoefficientSystem& m, int h) {
    auto all = [](const EquivariantCell&) { return true; };
    auto exact_h = [&](const EquivariantCell& c) { return x.isotropy(c) == h; };
    auto bigger = [&](const EquivariantCell& c) { return x.isotropy(c) != h; };
    const auto a = equivariant_cochain_complex(x, m, h, h, all);
    const auto r = equivariant_cochain_complex(x, m, h, h, exact_h);
    const auto b = equivariant_cochain_complex(x, m, h, h, bigger);
    ExactnessReport rep;
    const int top = x.dim();
    if (top < 0) return rep;
    for (const auto* c : {&a, &r, &b})
        if (auto e = c->complex.validate(); !e.empty()) {
            rep.exact = false;
            rep.failures.push_back("equivariant cochains invalid: " + e);
            return rep;
        }

    std::vector<AbHom> i_map, p_map, d_map;  // H^n(R)->H^n(A), H^n(A)->H^n(B), H^n(B)->H^{n+1}(R)
    for (int n = 0; n <= top; ++n) {
        const IntMatrix i_amb = transfer(r, a, n);
        i_map.push_back(cohomology_map(r.complex, a.complex, a.to_coordinates(n, product(i_amb, r.admissible[sz(n)].basis())), n));
        const IntMatrix p_amb = transfer(a, b, n);
        p_map.push_back(cohomology_map(a.complex, b.complex, b.to_coordinates(n, product(p_amb, a.admissible[sz(n)].basis())), n));
        if (n < top) {
            const IntMatrix s = transfer(b, a, n);
            const IntMatrix rr = transfer(a, r, n + 1);
            const IntMatrix d_amb = product(product(product(rr, a.ambient_d[sz(n)]), s), b.admissible[sz(n)].basis());
            d_map.push_back(cohomology_map(b.complex, r.complex, r.to_coordinates(n + 1, d_amb), n, 1));
        } else {
            d_map.push_back(zero_hom(b.complex.cohomology(n).presentation(), FgAbPresentation()));
        }
    }
    for (int n = 0; n <= top; ++n) {
        const AbHom into_r = n == 0 ? zero_hom(FgAbPresentation(), i_map[0].source) : d_map[sz(n - 1)];
        if (!exact_at(into_r, i_map[sz(n)])) rep.failures.push_back("not exact at H^" + std::to_string(n) + " of X^H_H");
        if (!exact_at(i_map[sz(n)], p_map[sz(n)])) rep.failures.push_back("not exact at H^" + std::to_string(n) + " of X^H");
        if (!exact_at(p_map[sz(n)], d_map[sz(n)])) rep.failures.push_back("not exact at H^" + std::to_string(n) + " of X_H");
    }
    rep.exact = rep.failures.empty();
    return rep;
}

}  // namespace bredon

#include "bredon/complex.hpp"

#include <algorithm>
#include <set>

namespace bredon {

GCWComplex::GCWComplex(std::shared_ptr<const SubgroupLattice> lattice, std::vector<OrbitCell> cells)
    : lat_(std::move(lattice)), cells_(std::move(cells)) {
    const auto& lat = *lat_;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        auto& c = cells_[static_cast<std::size_t>(i)];
        if (c.dim < 0) throw ComplexError("cell " + std::to_string(i) + " has negative dimension", i);
        if (c.isotropy < 0 || c.isotropy >= lat.size())
            throw ComplexError("cell " + std::to_string(i) + " has an unknown isotropy subgroup", i);
        dim_ = std::max(dim_, c.dim);
        std::map<std::pair<int, int>, Integer> merged;
        for (const auto& t : c.boundary) {
            if (t.cell < 0 || t.cell >= n)
                throw ComplexError("cell " + std::to_string(i) + " has a boundary term on unknown cell " + std::to_string(t.cell), i);
            const auto& b = cells_[static_cast<std::size_t>(t.cell)];
            if (b.dim != c.dim - 1)
                throw ComplexError("cell " + std::to_string(i) + " has a boundary term of wrong dimension", i);
            if (t.coset < 0 || t.coset >= lat.group().order())
                throw ComplexError("cell " + std::to_string(i) + " has a boundary coset out of range", i);
            if (!admissible(lat, c.isotropy, b.isotropy, t.coset))
                throw ComplexError("cell " + std::to_string(i) + ": boundary term on cell " + std::to_string(t.cell) +
                                       " with coset " + std::to_string(t.coset) + " is not admissible",
                                   i, c.isotropy);
            merged[{t.cell, lat.coset_rep(t.coset, b.isotropy)}] += t.coeff;
        }
        c.boundary.clear();
        for (const auto& [key, coeff] : merged)
            if (coeff != Integer(0)) c.boundary.push_back({key.first, key.second, coeff});
    }
    by_dim_.assign(static_cast<std::size_t>(dim_ + 1), {});
    pos_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        auto& v = by_dim_[static_cast<std::size_t>(cells_[static_cast<std::size_t>(i)].dim)];
        pos_[static_cast<std::size_t>(i)] = static_cast<int>(v.size());
        v.push_back(i);
    }
    // dd == 0 on canonical cells; equivariance carries it to every cell, and
    // each fixed complex X^K is a subcomplex
    for (int i = 0; i < n; ++i) {
        if (cells_[static_cast<std::size_t>(i)].dim < 2) continue;
        CellChain dd;
        for (const auto& [c, a] : boundary(cell_at(i, 0)))
            for (const auto& [c2, b] : boundary(c)) dd[c2] += a * b;
        for (const auto& [c2, v] : dd)
            if (v != Integer(0))
                throw ComplexError("dd != 0 on the fixed complex of subgroup " + std::to_string(cells_[static_cast<std::size_t>(i)].isotropy) +
                                       " at cell " + std::to_string(i),
                                   i, cells_[static_cast<std::size_t>(i)].isotropy);
    }
}

const std::vector<int>& GCWComplex::cells_of_dim(int n) const {
    static const std::vector<int> none;
    if (n < 0 || n > dim_) return none;
    return by_dim_[static_cast<std::size_t>(n)];
}

EquivariantCell GCWComplex::cell_at(int orbit, int g) const {
    return {orbit, lat_->coset_rep(g, cells_[static_cast<std::size_t>(orbit)].isotropy)};
}

int GCWComplex::isotropy(const EquivariantCell& c) const {
    return lat_->conjugate(c.coset, cells_[static_cast<std::size_t>(c.orbit)].isotropy);
}

CellChain GCWComplex::boundary(const EquivariantCell& c) const {
    CellChain out;
    for (const auto& t : cells_[static_cast<std::size_t>(c.orbit)].boundary)
        out[cell_at(t.cell, lat_->group().mul(c.coset, t.coset))] += t.coeff;
    return out;
}

int FixedComplex::index(int n, const EquivariantCell& c) const {
    const auto& v = cells[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    return (it != v.end() && *it == c) ? static_cast<int>(it - v.begin()) : -1;
}

std::size_t FixedComplex::cell_count() const {
    std::size_t s = 0;
    for (const auto& v : cells) s += v.size();
    return s;
}

FixedComplex fixed_complex(const GCWComplex& x, int k) {
    const auto& lat = x.lattice();
    FixedComplex f;
    f.subgroup = k;
    f.cells.assign(static_cast<std::size_t>(x.dim() + 1), {});
    for (int a = 0; a < x.size(); ++a)
        for (int g = 0; g < x.group().order(); ++g) {
            const auto c = x.cell_at(a, g);
            if (c.coset == g && lat.le(k, x.isotropy(c))) f.cells[static_cast<std::size_t>(x.cell(a).dim)].push_back(c);
        }
    for (auto& v : f.cells) std::sort(v.begin(), v.end());
    for (int n = 0; n <= x.dim(); ++n) {
        const Index rows = n > 0 ? static_cast<Index>(f.cells[static_cast<std::size_t>(n - 1)].size()) : 0;
        IntMatrix d = IntMatrix::Zero(rows, static_cast<Index>(f.cells[static_cast<std::size_t>(n)].size()));
        if (n > 0)
            for (std::size_t j = 0; j < f.cells[static_cast<std::size_t>(n)].size(); ++j)
                for (const auto& [c, v] : x.boundary(f.cells[static_cast<std::size_t>(n)][j]))
                    d(f.index(n - 1, c), static_cast<Index>(j)) += v;
        f.boundary.push_back(std::move(d));
    }
    f.acting = lat.at(lat.normalizer(k)).members;
    for (int g : f.acting) {
        std::vector<std::vector<int>> per;
        for (int n = 0; n <= x.dim(); ++n) {
            std::vector<int> p;
            for (const auto& c : f.cells[static_cast<std::size_t>(n)]) p.push_back(f.index(n, x.act(g, c)));
            per.push_back(std::move(p));
        }
        f.action.push_back(std::move(per));
    }
    return f;
}

ModifiedFixedComplex modified_fixed_complex(const GCWComplex& x, int h) {
    const auto& lat = x.lattice();
    ModifiedFixedComplex m;
    m.subgroup = h;
    m.weyl = lat.weyl(h);
    const int w = m.weyl.group.order();
    const auto top = static_cast<std::size_t>(x.dim() + 1);
    m.cells.assign(top, {});
    for (int a = 0; a < x.size(); ++a)
        for (int g = 0; g < x.group().order(); ++g) {
            const auto c = x.cell_at(a, g);
            if (c.coset == g && x.isotropy(c) == h) m.cells[static_cast<std::size_t>(x.cell(a).dim)].push_back(c);
        }
    for (auto& v : m.cells) std::sort(v.begin(), v.end());

    // orbit of each cell: (orbit number, element w with w . rep == cell)
    std::vector<std::vector<std::pair<int, int>>> where(top);
    m.orbit_reps.assign(top, {});
    for (std::size_t n = 0; n < top; ++n) {
        const auto& v = m.cells[n];
        where[n].assign(v.size(), {-1, 0});
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (where[n][j].first >= 0) continue;
            const int orbit = static_cast<int>(m.orbit_reps[n].size());
            m.orbit_reps[n].push_back(static_cast<int>(j));
            for (int e = 0; e < w; ++e) {
                const auto c = x.act(m.weyl.rep[static_cast<std::size_t>(e)], v[j]);
                const auto idx = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
                if (e != 0 && c == v[j])
                    m.freeness_violations.push_back("W H element " + std::to_string(e) + " fixes cell (" +
                                                    std::to_string(c.orbit) + "," + std::to_string(c.coset) + ")");
                if (where[n][idx].first < 0) where[n][idx] = {orbit, e};
            }
        }
    }
    m.chains.group = m.weyl.group;
    for (std::size_t n = 0; n < top; ++n) m.chains.rank.push_back(static_cast<Index>(m.orbit_reps[n].size()));
    m.chains.boundary.assign(top, {});
    for (std::size_t n = 1; n < top; ++n) {
        m.chains.boundary[n].assign(static_cast<std::size_t>(w), IntMatrix::Zero(m.chains.rank[n - 1], m.chains.rank[n]));
        for (std::size_t j = 0; j < m.orbit_reps[n].size(); ++j) {
            const auto& rep = m.cells[n][static_cast<std::size_t>(m.orbit_reps[n][j])];
            for (const auto& [c, v] : x.boundary(rep)) {
                if (x.isotropy(c) != h) continue;  // collapsed into the basepoint
                const auto& lower = m.cells[n - 1];
                const auto idx = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), c) - lower.begin());
                const auto [orbit, e] = where[n - 1][idx];
                m.chains.boundary[n][static_cast<std::size_t>(e)](orbit, static_cast<Index>(j)) += v;
            }
        }
    }
    return m;
}

std::vector<IntMatrix> orbit_quotient_boundaries(const GCWComplex& x) {
    std::vector<IntMatrix> out;
    for (int n = 0; n <= x.dim(); ++n) {
        const auto& cols = x.cells_of_dim(n);
        const auto& rows = x.cells_of_dim(n - 1);
        IntMatrix d = IntMatrix::Zero(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& t : x.cell(cols[j]).boundary) d(x.position(t.cell), static_cast<Index>(j)) += t.coeff;
        out.push_back(std::move(d));
    }
    return out;
}

WeylFixedComplex weyl_fixed_complex(const GCWComplex& x, int h) {
    const auto& lat = x.lattice();
    WeylFixedComplex y;
    y.weyl = weyl_lattice(lat, h);
    const auto& wl = y.weyl;
    const int nh = lat.normalizer(h);

    const FixedComplex f = fixed_complex(x, h);
    // N H-orbits; the minimal cell of each orbit is its representative
    std::map<EquivariantCell, std::pair<int, int>> where;  // cell -> (orbit cell, w)
    std::vector<EquivariantCell> reps;
    std::vector<EquivariantCell> all;
    for (const auto& v : f.cells) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    for (const auto& c : all) {
        if (where.count(c)) continue;
        const int o = static_cast<int>(reps.size());
        reps.push_back(c);
        for (int w = 0; w < wl.weyl.group.order(); ++w) {
            const auto d = x.act(wl.lift(w), c);
            if (!where.count(d)) where[d] = {o, w};
        }
    }
    std::vector<OrbitCell> cells;
    for (const auto& c : reps) {
        OrbitCell oc;
        oc.dim = x.cell(c.orbit).dim;
        const int k = x.isotropy(c);
        y.label.push_back(k);
        y.origin.push_back(c);
        oc.isotropy = wl.to_weyl[static_cast<std::size_t>(lat.intersection(nh, k))];
        for (const auto& [d, v] : x.boundary(c)) {
            const auto [o, w] = where.at(d);
            oc.boundary.push_back({o, w, v});
        }
        cells.push_back(std::move(oc));
    }
    y.complex = std::make_shared<GCWComplex>(wl.lattice, std::move(cells));
    return y;
}

}  // namespace bredon

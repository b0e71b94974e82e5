#include "bredon/coefficients.hpp"

#include <deque>
#include <tuple>

namespace bredon {

void CoefficientSystem::init(std::shared_ptr<const SubgroupLattice> lat, std::vector<FgAbPresentation> values) {
    lat_ = std::move(lat);
    const int c = lat_->class_count();
    if (static_cast<int>(values.size()) != c) {
        const int missing = static_cast<int>(values.size()) < c ? lat_->class_reps()[values.size()] : -1;
        throw SystemError("coefficient system needs one value per conjugacy class representative", missing);
    }
    values_ = std::move(values);
    rel_.clear();
    for (const auto& v : values_) rel_.push_back(v.relation_lattice());
    maps_.assign(static_cast<std::size_t>(c), std::vector<std::map<int, IntMatrix>>(static_cast<std::size_t>(c)));
}

std::string CoefficientSystem::describe(int i, int j, int a) const {
    const auto& reps = lat_->class_reps();
    return "G/H" + std::to_string(reps[i]) + " -> G/H" + std::to_string(reps[j]) + " (coset " +
           lat_->group().element_name(a) + ")";
}

CoefficientSystem CoefficientSystem::from_generators(std::shared_ptr<const SubgroupLattice> lat,
                                                     std::vector<FgAbPresentation> values,
                                                     const std::vector<GeneratorMap>& generators) {
    CoefficientSystem m;
    m.init(std::move(lat), std::move(values));
    const auto& l = *m.lat_;
    const int c = l.class_count();

    using Key = std::tuple<int, int, int>;
    std::deque<Key> work;
    auto insert = [&](int i, int j, int a, IntMatrix mat) {
        auto& slot = m.maps_[i][j];
        auto it = slot.find(a);
        if (it == slot.end()) {
            slot.emplace(a, std::move(mat));
            work.emplace_back(i, j, a);
        } else if (!equal_modulo(it->second, mat, m.rel_[i])) {
            throw SystemError("inconsistent structure maps for " + m.describe(i, j, a), l.class_reps()[i]);
        }
    };
    for (int i = 0; i < c; ++i) {
        const Index r = m.values_[i].generators;
        insert(i, i, 0, IntMatrix::Identity(r, r));
    }
    for (const auto& g : generators) {
        const auto& f = g.morphism;
        if (f.source < 0 || f.source >= l.size() || l.rep(f.source) != f.source)
            throw SystemError("structure map source is not a class representative", f.source);
        if (f.target < 0 || f.target >= l.size() || l.rep(f.target) != f.target)
            throw SystemError("structure map target is not a class representative", f.target);
        if (!admissible(l, f.source, f.target, f.coset))
            throw SystemError("structure map coset is not admissible", f.source);
        const int i = l.class_of(f.source), j = l.class_of(f.target);
        if (g.matrix.rows() != m.values_[i].generators || g.matrix.cols() != m.values_[j].generators)
            throw SystemError("structure map has wrong shape for " + m.describe(i, j, f.coset), f.source);
        insert(i, j, l.coset_rep(f.coset, f.target), g.matrix);
    }
    while (!work.empty()) {
        const auto [i, j, a] = work.front();
        work.pop_front();
        const IntMatrix ma = m.maps_[i][j].at(a);
        std::vector<std::tuple<int, int, int, IntMatrix>> found;
        for (int k = 0; k < c; ++k)
            for (const auto& [b, mb] : m.maps_[j][k])
                found.emplace_back(i, k, l.coset_rep(l.group().mul(a, b), l.class_reps()[k]), ma * mb);
        for (int h = 0; h < c; ++h)
            for (const auto& [b, mb] : m.maps_[h][i])
                found.emplace_back(h, j, l.coset_rep(l.group().mul(b, a), l.class_reps()[j]), mb * ma);
        for (auto& [x, y, z, mat] : found) insert(x, y, z, std::move(mat));
    }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            for (const auto& f : hom_set(l, l.class_reps()[i], l.class_reps()[j]))
                if (!m.maps_[i][j].count(f.coset))
                    throw SystemError("no structure map derivable for " + m.describe(i, j, f.coset), l.class_reps()[i]);
    if (auto e = m.validate(); !e.empty()) throw SystemError(e);
    return m;
}

CoefficientSystem CoefficientSystem::from_functor(std::shared_ptr<const SubgroupLattice> lat,
                                                  std::vector<FgAbPresentation> values, const Functor& fn) {
    CoefficientSystem m;
    m.init(std::move(lat), std::move(values));
    const auto& l = *m.lat_;
    const auto& reps = l.class_reps();
    for (int i = 0; i < l.class_count(); ++i)
        for (int j = 0; j < l.class_count(); ++j)
            for (const auto& f : hom_set(l, reps[i], reps[j])) m.maps_[i][j][f.coset] = fn(f);
    if (auto e = m.validate(); !e.empty()) throw SystemError(e);
    return m;
}

CoefficientSystem CoefficientSystem::constant(std::shared_ptr<const SubgroupLattice> lat, const FgAbPresentation& a) {
    const int c = lat->class_count();
    const Index r = a.generators;
    return from_functor(std::move(lat), std::vector<FgAbPresentation>(static_cast<std::size_t>(c), a),
                        [r](const OrbitMorphism&) { return IntMatrix(IntMatrix::Identity(r, r)); });
}

CoefficientSystem CoefficientSystem::fixed_points(std::shared_ptr<const SubgroupLattice> lat, const GroupModule& a) {
    if (!(a.group == lat->group())) throw SystemError("fixed point system: module group differs from the lattice group");
    if (auto e = a.validate(); !e.empty()) throw SystemError("fixed point system: " + e);
    const Index n = a.module.generators;
    const Lattice rel = a.module.relation_lattice();
    const auto& reps = lat->class_reps();
    std::vector<Lattice> fixed;
    std::vector<FgAbPresentation> values;
    for (int h : reps) {
        const auto& mem = lat->at(h).members;
        const auto k = static_cast<Index>(mem.size());
        IntMatrix s(k * n, n);
        std::vector<IntMatrix> rels;
        for (Index i = 0; i < k; ++i) {
            s.middleRows(i * n, n) = a.action[static_cast<std::size_t>(mem[static_cast<std::size_t>(i)])] - IntMatrix::Identity(n, n);
            rels.push_back(a.module.relations);
        }
        Lattice f = preimage(s, Lattice::span(block_diagonal(rels)));
        values.emplace_back(f.rank(), coordinates(f, a.module.relations));
        fixed.push_back(std::move(f));
    }
    auto lp = lat;
    return from_functor(std::move(lat), std::move(values), [&](const OrbitMorphism& f) {
        const auto& src = fixed[static_cast<std::size_t>(lp->class_of(f.source))];
        const auto& tgt = fixed[static_cast<std::size_t>(lp->class_of(f.target))];
        return coordinates(src, IntMatrix(a.action[static_cast<std::size_t>(f.coset)] * tgt.basis()));
    });
}

const FgAbPresentation& CoefficientSystem::value(int subgroup) const {
    return values_[static_cast<std::size_t>(lat_->class_of(subgroup))];
}

const IntMatrix& CoefficientSystem::map(const OrbitMorphism& f) const {
    const auto& l = *lat_;
    const auto& g = l.group();
    const int i = l.class_of(f.source), j = l.class_of(f.target);
    const int c = g.mul(g.mul(g.inv(l.transporter(f.source)), f.coset), l.transporter(f.target));
    const int a = l.coset_rep(c, l.class_reps()[j]);
    auto it = maps_[i][j].find(a);
    if (it == maps_[i][j].end())
        throw SystemError("structure map requested for a non-existent morphism " + describe(i, j, a), f.source);
    return it->second;
}

AbHom CoefficientSystem::hom(const OrbitMorphism& f) const { return {value(f.target), value(f.source), map(f)}; }

std::string CoefficientSystem::validate() const {
    const auto& l = *lat_;
    const auto& reps = l.class_reps();
    const int c = l.class_count();
    for (int i = 0; i < c; ++i) {
        const Index r = values_[i].generators;
        auto it = maps_[i][i].find(0);
        if (it == maps_[i][i].end() || !equal_modulo(it->second, IntMatrix::Identity(r, r), rel_[i]))
            return "identity of G/H" + std::to_string(reps[i]) + " is not sent to the identity";
    }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            for (const auto& [a, mat] : maps_[i][j]) {
                if (mat.rows() != values_[i].generators || mat.cols() != values_[j].generators)
                    return "structure map for " + describe(i, j, a) + " has wrong shape";
                if (!rel_[i].contains_columns(IntMatrix(mat * values_[j].relations)))
                    return "structure map for " + describe(i, j, a) + " does not respect relations";
            }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            for (const auto& [a, ma] : maps_[i][j])
                for (int k = 0; k < c; ++k)
                    for (const auto& [b, mb] : maps_[j][k]) {
                        const int ab = l.coset_rep(l.group().mul(a, b), reps[k]);
                        auto it = maps_[i][k].find(ab);
                        if (it == maps_[i][k].end()) return "missing structure map for " + describe(i, k, ab);
                        if (!equal_modulo(it->second, IntMatrix(ma * mb), rel_[i]))
                            return "functoriality fails for the pair " + describe(i, j, a) + " then " + describe(j, k, b);
                    }
    return {};
}

GroupModule weyl_module(const CoefficientSystem& m, int h) {
    const Quotient w = m.lattice().weyl(h);
    GroupModule g{w.group, m.value(h), {}};
    for (int r : w.rep) g.action.push_back(m.map({h, h, r}));
    return g;
}

CoefficientSystem induced_system(const CoefficientSystem& m, const WeylLattice& w) {
    const auto& wl = *w.lattice;
    std::vector<FgAbPresentation> values;
    for (int r : wl.class_reps()) values.push_back(m.value(w.from_weyl[static_cast<std::size_t>(r)]));
    return CoefficientSystem::from_functor(w.lattice, std::move(values), [&](const OrbitMorphism& f) {
        return m.map({w.from_weyl[static_cast<std::size_t>(f.source)], w.from_weyl[static_cast<std::size_t>(f.target)],
                      w.lift(f.coset)});
    });
}

}  // namespace bredon

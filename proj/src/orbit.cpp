#include "bredon/orbit.hpp"

#include <algorithm>
#include <set>

namespace bredon {

bool admissible(const SubgroupLattice& lat, int h, int k, int a) {
    return lat.le(h, lat.conjugate(a, k));
}

OrbitMorphism make_morphism(const SubgroupLattice& lat, int h, int k, int a) {
    if (!admissible(lat, h, k, a)) throw GroupError("orbit morphism: H is not contained in aKa^-1");
    return {h, k, lat.coset_rep(a, k)};
}

OrbitMorphism identity_morphism(int h) { return {h, h, 0}; }

std::vector<OrbitMorphism> hom_set(const SubgroupLattice& lat, int h, int k) {
    std::vector<OrbitMorphism> out;
    for (int a = 0; a < lat.group().order(); ++a)
        if (lat.coset_rep(a, k) == a && admissible(lat, h, k, a)) out.push_back({h, k, a});
    return out;
}

OrbitMorphism compose(const SubgroupLattice& lat, const OrbitMorphism& f, const OrbitMorphism& g) {
    if (f.target != g.source) throw GroupError("compose: target of the first map is not the source of the second");
    return make_morphism(lat, f.source, g.target, lat.group().mul(f.coset, g.coset));
}

bool is_isomorphism(const SubgroupLattice& lat, const OrbitMorphism& f) {
    return lat.at(f.source).order() == lat.at(f.target).order();
}

int apply(const SubgroupLattice& lat, const OrbitMorphism& f, int g) {
    return lat.coset_rep(lat.group().mul(g, f.coset), f.target);
}

SliceSkeleton slice_skeleton(const SubgroupLattice& lat, int h, int m) {
    SliceSkeleton s{h, m, {}};
    for (int k = 0; k < lat.size(); ++k)
        if (lat.le(h, k) && lat.length(k) <= m) s.objects.push_back(k);
    return s;
}

std::pair<int, int> skeleton_representative(const SubgroupLattice& lat, const OrbitMorphism& f) {
    // f = (G/H -> G/K coset e) then (G/K -> G/K' coset a) with K = aK'a^-1
    const int k = lat.conjugate(f.coset, f.target);
    return {k, f.coset};
}

TwistedCategory twisted_category(const SubgroupLattice& lat, int h, int m) {
    TwistedCategory t;
    t.h = h;
    t.level = m;
    t.objects = slice_skeleton(lat, h, m).objects;
    const auto& nh = lat.at(lat.normalizer(h));
    const std::size_t n = t.objects.size();
    t.hom.assign(n, std::vector<std::vector<int>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int k = t.objects[i], l = t.objects[j];
            for (const auto& f : hom_set(lat, k, l)) {
                // bL must meet N H
                bool meets = false;
                for (int x : lat.at(l).members)
                    if (nh.contains(lat.group().mul(f.coset, x))) {
                        meets = true;
                        break;
                    }
                if (meets) t.hom[i][j].push_back(f.coset);
            }
        }
    return t;
}

std::vector<int> conjugacy_orbit_class(const SubgroupLattice& lat, int h, int l) {
    std::set<int> out;
    for (int a : lat.at(lat.normalizer(h)).members) out.insert(lat.conjugate(a, l));
    return {out.begin(), out.end()};
}

}  // namespace bredon

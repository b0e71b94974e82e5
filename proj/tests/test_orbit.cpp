#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace bredon;

namespace {

std::vector<std::pair<std::string, FiniteGroup>> groups() {
    return {{"Z/2", FiniteGroup::cyclic(2)}, {"Z/4", FiniteGroup::cyclic(4)}, {"Z/6", FiniteGroup::cyclic(6)},
            {"S3", FiniteGroup::symmetric(3)}, {"D4", FiniteGroup::dihedral(4)}};
}

/// Cosets gK fixed by every h in H.
int fixed_cosets(const SubgroupLattice& lat, int h, int k) {
    const auto& g = lat.group();
    std::set<int> found;
    for (int a = 0; a < g.order(); ++a) {
        bool fixed = true;
        for (int x : lat.at(h).members)
            if (lat.coset_rep(g.mul(x, a), k) != lat.coset_rep(a, k)) fixed = false;
        if (fixed) found.insert(lat.coset_rep(a, k));
    }
    return static_cast<int>(found.size());
}

}  // namespace

TEST_CASE("hom-sets are the H-fixed cosets") {
    for (const auto& [name, g] : groups()) {
        CAPTURE(name);
        const SubgroupLattice lat(g);
        for (int h = 0; h < lat.size(); ++h)
            for (int k = 0; k < lat.size(); ++k) CHECK(static_cast<int>(hom_set(lat, h, k).size()) == fixed_cosets(lat, h, k));
    }
}

TEST_CASE("automorphisms of G/H form the Weyl group") {
    for (const auto& [name, g] : groups()) {
        CAPTURE(name);
        const SubgroupLattice lat(g);
        for (int h = 0; h < lat.size(); ++h) {
            const auto aut = hom_set(lat, h, h);
            const Quotient w = lat.weyl(h);
            REQUIRE(aut.size() == static_cast<std::size_t>(w.group.order()));
            for (const auto& f : aut) {
                CHECK(is_isomorphism(lat, f));
                for (const auto& k : aut) {
                    const auto fk = compose(lat, f, k);
                    CHECK(w.proj[static_cast<std::size_t>(fk.coset)] ==
                          w.group.mul(w.proj[static_cast<std::size_t>(f.coset)], w.proj[static_cast<std::size_t>(k.coset)]));
                }
            }
        }
    }
}

TEST_CASE("composition is associative and evaluates correctly") {
    const SubgroupLattice lat(FiniteGroup::symmetric(3));
    const auto& g = lat.group();
    for (int h = 0; h < lat.size(); ++h)
        for (int k = 0; k < lat.size(); ++k)
            for (int l = 0; l < lat.size(); ++l)
                for (const auto& f : hom_set(lat, h, k))
                    for (const auto& e : hom_set(lat, k, l)) {
                        const auto fe = compose(lat, f, e);
                        for (int x = 0; x < g.order(); ++x) CHECK(apply(lat, fe, x) == apply(lat, e, apply(lat, f, x)));
                        for (int m = 0; m < lat.size(); ++m)
                            for (const auto& d : hom_set(lat, l, m))
                                CHECK(compose(lat, compose(lat, f, e), d) == compose(lat, f, compose(lat, e, d)));
                    }
}

TEST_CASE("non-isomorphisms strictly increase length") {
    for (const auto& [name, g] : groups()) {
        CAPTURE(name);
        const SubgroupLattice lat(g);
        for (int h = 0; h < lat.size(); ++h)
            for (int k = 0; k < lat.size(); ++k)
                for (const auto& f : hom_set(lat, h, k)) {
                    if (is_isomorphism(lat, f)) CHECK(lat.length(h) == lat.length(k));
                    else CHECK(lat.length(h) > lat.length(k));
                }
    }
}

TEST_CASE("slice skeleton and twisted category") {
    const SubgroupLattice lat(FiniteGroup::dihedral(4));
    for (int h = 0; h < lat.size(); ++h) {
        const auto sk = slice_skeleton(lat, h, lat.max_length());
        std::vector<int> over;
        for (int l = 0; l < lat.size(); ++l)
            if (lat.le(h, l)) over.push_back(l);
        CHECK(sk.objects == over);
        // every map out of G/H factors as an inclusion followed by an isomorphism
        for (int k = 0; k < lat.size(); ++k)
            for (const auto& f : hom_set(lat, h, k)) {
                const auto [obj, coset] = skeleton_representative(lat, f);
                CHECK(lat.le(h, obj));
                const auto iso = make_morphism(lat, obj, k, coset);
                CHECK(is_isomorphism(lat, iso));
                CHECK(compose(lat, make_morphism(lat, h, obj, 0), iso) == f);
            }
        const auto tc = twisted_category(lat, h, lat.max_length());
        for (std::size_t i = 0; i < tc.objects.size(); ++i) {
            const auto& aut = tc.automorphisms(static_cast<int>(i));
            CHECK(!aut.empty());
            CHECK(aut.front() == 0);
        }
    }
}

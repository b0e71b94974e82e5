#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace bredon;

namespace {

std::vector<std::pair<std::string, FiniteGroup>> groups() {
    return {{"Z/2", FiniteGroup::cyclic(2)},   {"Z/4", FiniteGroup::cyclic(4)},
            {"Z/6", FiniteGroup::cyclic(6)},   {"S3", FiniteGroup::symmetric(3)},
            {"D4", FiniteGroup::dihedral(4)},  {"S4", FiniteGroup::symmetric(4)}};
}

/// All subsets closed under multiplication, by exhaustive search over generating pairs.
std::set<std::vector<int>> brute_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> out;
    auto closure = [&](std::vector<int> gens) {
        std::set<int> s{0};
        std::vector<int> todo{0};
        while (!todo.empty()) {
            const int x = todo.back();
            todo.pop_back();
            for (int y : gens) {
                const int z = g.mul(x, y);
                if (s.insert(z).second) todo.push_back(z);
            }
        }
        return std::vector<int>(s.begin(), s.end());
    };
    // every subgroup of these small groups is generated by at most two elements
    for (int a = 0; a < g.order(); ++a)
        for (int b = a; b < g.order(); ++b) out.insert(closure({a, b}));
    return out;
}

int brute_length(const SubgroupLattice& lat, int h) {
    if (h == lat.whole()) return 0;
    int best = -1;
    for (int k = 0; k < lat.size(); ++k)
        if (lat.lt(h, k)) best = std::max(best, 1 + brute_length(lat, k));
    return best;
}

}  // namespace

TEST_CASE("group construction") {
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK(FiniteGroup::symmetric(4).order() == 24);
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), GroupError);
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), GroupError);  // 0 is not the identity
    const auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
    CHECK(s3 == FiniteGroup::symmetric(3));
    for (int a = 0; a < s3.order(); ++a) {
        CHECK(s3.mul(a, s3.inv(a)) == 0);
        for (int b = 0; b < s3.order(); ++b) {
            const auto& pa = s3.permutations()[static_cast<std::size_t>(a)];
            const auto& pb = s3.permutations()[static_cast<std::size_t>(b)];
            const auto& pab = s3.permutations()[static_cast<std::size_t>(s3.mul(a, b))];
            for (int x = 0; x < 3; ++x) CHECK(pab[static_cast<std::size_t>(x)] == pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(x)])]);
        }
    }
}

TEST_CASE("subgroup lattices match exhaustive enumeration") {
    for (const auto& [name, g] : groups()) {
        CAPTURE(name);
        const SubgroupLattice lat(g);
        const auto brute = brute_subgroups(g);
        CHECK(static_cast<std::size_t>(lat.size()) == brute.size());
        for (const auto& s : lat.subgroups()) CHECK(brute.count(s.members) == 1);
        CHECK(lat.at(lat.trivial()).order() == 1);
        CHECK(lat.at(lat.whole()).order() == g.order());
    }
    CHECK(SubgroupLattice(FiniteGroup::symmetric(3)).class_count() == 4);
    CHECK(SubgroupLattice(FiniteGroup::dihedral(4)).class_count() == 8);
    CHECK(SubgroupLattice(FiniteGroup::symmetric(4)).size() == 30);
    CHECK(SubgroupLattice(FiniteGroup::symmetric(4)).class_count() == 11);
}

TEST_CASE("normalizers, conjugation and class representatives") {
    for (const auto& [name, g] : groups()) {
        CAPTURE(name);
        const SubgroupLattice lat(g);
        for (int h = 0; h < lat.size(); ++h) {
            std::vector<int> norm;
            for (int a = 0; a < g.order(); ++a)
                if (lat.conjugate(a, h) == h) norm.push_back(a);
            CHECK(lat.at(lat.normalizer(h)).members == norm);
            const int r = lat.rep(h);
            CHECK(r <= h);
            CHECK(lat.conjugate(lat.transporter(h), r) == h);
            for (int a = 0; a < g.order(); ++a) CHECK(lat.class_of(lat.conjugate(a, h)) == lat.class_of(h));
            const Quotient w = lat.weyl(h);
            CHECK(w.group.order() * lat.at(h).order() == static_cast<int>(norm.size()));
        }
    }
}

TEST_CASE("length: brute force over chains, strictly decreasing along inclusions") {
    for (const auto& [name, g] : groups()) {
        CAPTURE(name);
        const SubgroupLattice lat(g);
        std::set<int> seen;
        for (int k = 0; k <= lat.max_length(); ++k)
            for (int h : lat.stratum(k)) {
                CHECK(lat.length(h) == k);
                CHECK(seen.insert(h).second);
            }
        CHECK(static_cast<int>(seen.size()) == lat.size());
        for (int h = 0; h < lat.size(); ++h) {
            CHECK(lat.length(h) == brute_length(lat, h));
            for (int k = 0; k < lat.size(); ++k)
                if (lat.lt(h, k)) CHECK(lat.length(h) > lat.length(k));
        }
        CHECK(lat.max_length() == lat.length(lat.trivial()));
    }
}

TEST_CASE("Weyl lattice correspondence") {
    const SubgroupLattice lat(FiniteGroup::dihedral(4));
    for (int h = 0; h < lat.size(); ++h) {
        const WeylLattice w = weyl_lattice(lat, h);
        CHECK(w.lattice->group().order() == w.weyl.group.order());
        for (int l = 0; l < lat.size(); ++l) {
            const bool between = lat.le(h, l) && lat.le(l, lat.normalizer(h));
            CHECK((w.to_weyl[static_cast<std::size_t>(l)] >= 0) == between);
            if (between) CHECK(w.from_weyl[static_cast<std::size_t>(w.to_weyl[static_cast<std::size_t>(l)])] == l);
        }
    }
}

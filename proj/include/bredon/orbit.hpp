#pragma once

#include "bredon/group.hpp"

#include <vector>

namespace bredon {

/// A G-map G/H -> G/K, gH -> gaK, stored by its minimal coset representative.
/// Well-defined exactly when H <= aKa^-1.
struct OrbitMorphism {
    int source = -1;  ///< H
    int target = -1;  ///< K
    int coset = 0;    ///< a

    friend bool operator==(const OrbitMorphism&, const OrbitMorphism&) = default;
    friend auto operator<=>(const OrbitMorphism&, const OrbitMorphism&) = default;
};

bool admissible(const SubgroupLattice& lat, int h, int k, int a);
/// Canonicalizes the coset; throws if the pair is not admissible.
OrbitMorphism make_morphism(const SubgroupLattice& lat, int h, int k, int a);
OrbitMorphism identity_morphism(int h);
/// All maps G/H -> G/K in increasing coset order.
std::vector<OrbitMorphism> hom_set(const SubgroupLattice& lat, int h, int k);
/// "f then g": G/H -> G/K -> G/L, coset a*b.
OrbitMorphism compose(const SubgroupLattice& lat, const OrbitMorphism& f, const OrbitMorphism& g);
bool is_isomorphism(const SubgroupLattice& lat, const OrbitMorphism& f);
/// gH -> gaK evaluated on the coset with representative g; returns the minimal
/// representative of gaK.
int apply(const SubgroupLattice& lat, const OrbitMorphism& f, int g);

/// Objects of the skeleton of the slice over G/H at level m: subgroups K >= H
/// with len K <= m, each standing for the inclusion-induced map G/H -> G/K.
struct SliceSkeleton {
    int h = -1;
    int level = 0;
    std::vector<int> objects;
};

SliceSkeleton slice_skeleton(const SubgroupLattice& lat, int h, int m);

/// For a slice object f: G/H -> G/K', the unique skeleton object K and the
/// unique isomorphism G/K -> G/K' under G/H. Returns {K, coset}.
std::pair<int, int> skeleton_representative(const SubgroupLattice& lat, const OrbitMorphism& f);

/// The twisted category over G/H at level m on the skeleton objects; a
/// morphism i_K -> i_L is a map G/K -> G/L that commutes over G/H up to the
/// action of N H.
struct TwistedCategory {
    int h = -1;
    int level = 0;
    std::vector<int> objects;
    /// hom[i][j]: cosets b of the maps G/objects[i] -> G/objects[j]
    std::vector<std::vector<std::vector<int>>> hom;

    [[nodiscard]] const std::vector<int>& automorphisms(int i) const { return hom[i][i]; }
};

TwistedCategory twisted_category(const SubgroupLattice& lat, int h, int m);

/// The N H-conjugates of L >= H: the class of the inclusion G/H -> G/L.
std::vector<int> conjugacy_orbit_class(const SubgroupLattice& lat, int h, int l);

}  // namespace bredon

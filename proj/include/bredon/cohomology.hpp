#pragma once

#include "bredon/coefficients.hpp"
#include "bredon/complex.hpp"

#include <memory>
#include <vector>

namespace bredon {

/// Bredon cochains: the degree n term is the sum of M(G/H_alpha) over orbit
/// cells of dimension n, and (dc)_alpha = sum coeff * M(G/H_alpha -> G/H_beta)(c_beta)
/// over the boundary terms of alpha.
struct BredonCochainComplex {
    CochainComplex complex;
    std::vector<std::vector<int>> stratum;  ///< per degree, per coordinate
    std::vector<std::vector<int>> cell;     ///< per degree, per coordinate: orbit cell
    std::vector<std::vector<Index>> offset; ///< per degree, per position in cells_of_dim: first coordinate
};

/// `strata` gives the filtration tag of each orbit cell; by default the length
/// of its isotropy group.
BredonCochainComplex bredon_cochain_complex(const GCWComplex& x, const CoefficientSystem& m,
                                            std::vector<int> strata = {});
NormalForm bredon_cohomology(const GCWComplex& x, const CoefficientSystem& m, int n);

/// Ordinary cellular cochains with coefficients in A, from boundary matrices
/// boundaries[n] : C_n -> C_{n-1}.
CochainComplex cellular_cochain_complex(const std::vector<IntMatrix>& boundaries, const FgAbPresentation& a);

/// H~^n of a modified fixed point set with coefficients in a W H-module.
NormalForm reduced_local_cohomology(const ModifiedFixedComplex& xhh, const GroupModule& mod, int n);

/// Filtration labels of the orbit cells of a Q-complex by subgroups of an
/// ambient group G. For the main spectral sequence Q = G and the labels are the
/// isotropy groups; for X^H as a W H-complex they are the G-isotropy groups.
struct Labelling {
    std::shared_ptr<const SubgroupLattice> glat;
    std::vector<int> label;  ///< per orbit cell: G-subgroup of the canonical cell
    std::vector<int> lift;   ///< Q element -> G element

    static Labelling isotropy(const GCWComplex& x);
    static Labelling fixed_points(const WeylFixedComplex& y, std::shared_ptr<const SubgroupLattice> glat);
    [[nodiscard]] int of(const GCWComplex& y, const EquivariantCell& c) const;
    [[nodiscard]] std::vector<int> lengths() const;
};

/// Reduced cochains of the cells with label exactly L, over the group ring of
/// Gamma = S/C: S is the stabilizer of L in Q and C the common Q-isotropy of
/// those cells. The coefficient module is m(Q/C) with s acting through the
/// translation of Q/C.
struct LocalBlock {
    int label = -1;     ///< L (G-subgroup)
    int acting = -1;    ///< S (Q-subgroup)
    int isotropy = -1;  ///< C (Q-subgroup)
    Quotient gamma;
    std::vector<std::vector<EquivariantCell>> cells;     ///< per dimension, sorted
    std::vector<std::vector<int>> reps;                  ///< per dimension: orbit representatives
    std::vector<std::vector<std::pair<int, int>>> where; ///< per cell: (orbit, gamma element)
    GroupRingModuleMap chains;
    GroupModule module;
    CochainComplex complex;

    /// (orbit number, gamma element) of a cell, or (-1, -1) if outside the block.
    [[nodiscard]] std::pair<int, int> locate(int n, const EquivariantCell& c) const;
};

LocalBlock local_block(const GCWComplex& y, const CoefficientSystem& m, const Labelling& lab, int l);

/// Degree n block isomorphism from the full Bredon cochains onto the local
/// block (zero on coordinates outside the block), and its inverse embedding.
IntMatrix block_projection(const GCWComplex& y, const CoefficientSystem& m, const Labelling& lab,
                           const BredonCochainComplex& c, const LocalBlock& b, int n);
IntMatrix block_embedding(const GCWComplex& y, const CoefficientSystem& m, const Labelling& lab,
                          const BredonCochainComplex& c, const LocalBlock& b, int n);

/// Cochains of a set of cells of X (closed under the action of a subgroup P)
/// that are P-equivariant with values in a P-module, where P acts through
/// `rho`. Non-free orbits contribute the fixed vectors of their stabilizer.
struct EquivariantCochains {
    int acting = -1;
    std::vector<std::vector<EquivariantCell>> cells;
    std::vector<std::vector<int>> reps;
    std::vector<std::vector<std::pair<int, int>>> where;  ///< per cell: (orbit, element of P)
    Index module_rank = 0;
    std::vector<Lattice> admissible;  ///< per degree: fixed vectors at the representatives (plus relations)
    std::vector<IntMatrix> ambient_d; ///< per degree: differential on representative values
    CochainComplex complex;           ///< in coordinates of `admissible`

    [[nodiscard]] std::pair<int, int> locate(int n, const EquivariantCell& c) const;
    /// Coordinates in `admissible` of ambient representative values.
    [[nodiscard]] IntMatrix to_coordinates(int n, const IntMatrix& ambient) const;
};

/// `select` decides which cells of X^K take part; `module_subgroup` is the
/// subgroup whose value carries the coefficients, P its normalizer.
EquivariantCochains equivariant_cochain_complex(const GCWComplex& x, const CoefficientSystem& m, int k,
                                                int module_subgroup,
                                                const std::function<bool(const EquivariantCell&)>& select);

/// The wedge of X^{L'}_{L'} over H < L' with len L' = k, as cells of X^H.
EquivariantCochains wedge_complex(const GCWComplex& x, const CoefficientSystem& m, int h, int k);

/// Connecting map at cochain level: wedge ambient values -> local H block cochains.
IntMatrix connecting_cochain_map(const GCWComplex& x, const CoefficientSystem& m, const EquivariantCochains& wedge,
                                 const LocalBlock& hb, int n);
/// Change of groups at cochain level: local L block cochains -> wedge ambient values.
IntMatrix change_of_groups_cochain_map(const GCWComplex& x, const CoefficientSystem& m, const EquivariantCochains& wedge,
                                       const LocalBlock& lb, int h, int n);

/// H~^n(wedge) -> H~^{n+1}(X^H_H) with local coefficients; H must lie in stratum k+1.
AbHom connecting_homomorphism(const GCWComplex& x, const CoefficientSystem& m, int h, int k, int n);
/// H~^n_{W L}(X^L_L; M_L) -> H~^n_{W H}(wedge; M_H) for H < L in adjacent strata.
AbHom change_of_groups(const GCWComplex& x, const CoefficientSystem& m, int h, int l, int n);

/// Exactness of the long sequence of the cofibration X_H -> X^H -> X^H_H in
/// equivariant cohomology with coefficients M_H.
struct ExactnessReport {
    bool exact = true;
    std::vector<std::string> failures;
};

ExactnessReport check_long_exact_sequence(const GCWComplex& x, const CoefficientSystem& m, int h);

/// Exactness of A -f-> B -g-> C at B for maps of presented groups.
bool exact_at(const AbHom& f, const AbHom& g);

}  // namespace bredon

#pragma once

#include "bredon/abgrp.hpp"
#include "bredon/orbit.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace bredon {

class ComplexError : public std::runtime_error {
public:
    ComplexError(const std::string& what, int cell = -1, int subgroup = -1)
        : std::runtime_error(what), cell(cell), subgroup(subgroup) {}
    int cell;
    int subgroup;
};

/// coeff * (a . e_cell), the cell of orbit `cell` at coset a H_cell.
struct BoundaryTerm {
    int cell = -1;
    int coset = 0;
    Integer coeff;
};

struct OrbitCell {
    int dim = 0;
    int isotropy = 0;  ///< subgroup index
    std::vector<BoundaryTerm> boundary;  ///< boundary of the canonical cell e H_alpha
};

/// A single cell (orbit, g H_orbit) of the underlying complex.
struct EquivariantCell {
    int orbit = -1;
    int coset = 0;
    friend auto operator<=>(const EquivariantCell&, const EquivariantCell&) = default;
};

using CellChain = std::map<EquivariantCell, Integer>;

/// A finite G-CW complex described by its orbit cells.
///
/// Boundaries are given on the canonical cell of each orbit and extended by
/// equivariance. Construction canonicalizes cosets, merges repeated terms and
/// checks admissibility and dd == 0.
class GCWComplex {
public:
    GCWComplex(std::shared_ptr<const SubgroupLattice> lattice, std::vector<OrbitCell> cells);

    [[nodiscard]] const SubgroupLattice& lattice() const { return *lat_; }
    [[nodiscard]] std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lat_; }
    [[nodiscard]] const FiniteGroup& group() const { return lat_->group(); }
    [[nodiscard]] int size() const { return static_cast<int>(cells_.size()); }
    [[nodiscard]] const OrbitCell& cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::vector<OrbitCell>& cells() const { return cells_; }
    [[nodiscard]] int dim() const { return dim_; }
    /// Orbit cells of dimension n, in index order.
    [[nodiscard]] const std::vector<int>& cells_of_dim(int n) const;
    /// Position of orbit cell i within cells_of_dim(dim(i)).
    [[nodiscard]] int position(int i) const { return pos_[static_cast<std::size_t>(i)]; }

    /// g . e_orbit.
    [[nodiscard]] EquivariantCell cell_at(int orbit, int g) const;
    /// Isotropy g H g^-1 of the cell.
    [[nodiscard]] int isotropy(const EquivariantCell& c) const;
    [[nodiscard]] EquivariantCell act(int g, const EquivariantCell& c) const { return cell_at(c.orbit, lat_->group().mul(g, c.coset)); }
    [[nodiscard]] CellChain boundary(const EquivariantCell& c) const;

private:
    std::shared_ptr<const SubgroupLattice> lat_;
    std::vector<OrbitCell> cells_;
    std::vector<std::vector<int>> by_dim_;
    std::vector<int> pos_;
    int dim_ = -1;
};

/// The subcomplex X^K, its cells graded by dimension, and the N K-action.
struct FixedComplex {
    int subgroup = -1;
    std::vector<std::vector<EquivariantCell>> cells;  ///< per dimension, sorted
    std::vector<IntMatrix> boundary;                  ///< boundary[n]: C_n -> C_{n-1}
    std::vector<int> acting;                          ///< elements of N K
    /// action[i][n][j]: index of acting[i] . cells[n][j]
    std::vector<std::vector<std::vector<int>>> action;

    [[nodiscard]] int index(int n, const EquivariantCell& c) const;
    [[nodiscard]] std::size_t cell_count() const;
};

FixedComplex fixed_complex(const GCWComplex& x, int k);

/// X^H_H = X^H / X_H: a basepoint plus the cells of isotropy exactly H, with
/// the action of W H, presented as a free complex over the group ring.
struct ModifiedFixedComplex {
    int subgroup = -1;
    Quotient weyl;
    std::vector<std::vector<EquivariantCell>> cells;  ///< non-basepoint cells per dimension
    std::vector<std::vector<int>> orbit_reps;         ///< per dimension: indices into cells[n]
    GroupRingModuleMap chains;                         ///< reduced chains, one generator per orbit
    std::vector<std::string> freeness_violations;

    [[nodiscard]] bool free() const { return freeness_violations.empty(); }
};

ModifiedFixedComplex modified_fixed_complex(const GCWComplex& x, int h);

/// Cellular boundary matrices of the orbit space X/G.
std::vector<IntMatrix> orbit_quotient_boundaries(const GCWComplex& x);

/// X^H regarded as a W H-complex.
struct WeylFixedComplex {
    WeylLattice weyl;
    std::shared_ptr<const GCWComplex> complex;
    std::vector<EquivariantCell> origin;  ///< per W H-orbit cell, the G-cell it stands for
    std::vector<int> label;               ///< G-isotropy of the origin cell
};

WeylFixedComplex weyl_fixed_complex(const GCWComplex& x, int h);

}  // namespace bredon

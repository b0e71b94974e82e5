#pragma once

#include "bredon/linalg.hpp"

#include <optional>
#include <vector>

namespace bredon {

/// A sublattice of Z^n, stored by its column Hermite basis.
///
/// Because the Hermite basis is canonical, two lattices are equal exactly when
/// their bases are equal as matrices.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(Index ambient);

    /// Lattice spanned by the columns of `generators`.
    static Lattice span(const IntMatrix& generators);
    static Lattice zero(Index ambient) { return Lattice(ambient); }
    static Lattice full(Index ambient);
    /// Span of the standard basis vectors e_i with mask[i] true.
    static Lattice coordinate(const std::vector<bool>& mask);

    [[nodiscard]] Index ambient() const { return ambient_; }
    [[nodiscard]] Index rank() const { return basis_.cols(); }
    [[nodiscard]] const IntMatrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<Index>& pivots() const { return pivots_; }

    [[nodiscard]] std::optional<IntVector> coordinates(const IntVector& v) const;
    [[nodiscard]] bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
    [[nodiscard]] bool contains(const Lattice& other) const;
    /// True if every column of m lies in the lattice.
    [[nodiscard]] bool contains_columns(const IntMatrix& m) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Index ambient_ = 0;
    IntMatrix basis_;
    std::vector<Index> pivots_;
};

Lattice operator+(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);
/// m(L) for a matrix m with m.cols() == L.ambient().
Lattice image(const IntMatrix& m, const Lattice& l);
/// {x : m x in L}.
Lattice preimage(const IntMatrix& m, const Lattice& l);
/// Coordinates of every column of m with respect to the lattice basis.
IntMatrix coordinates(const Lattice& l, const IntMatrix& m);

}  // namespace bredon

#include "bredon/lattice.hpp"

#include <stdexcept>

namespace bredon {

Lattice::Lattice(Index ambient) : ambient_(ambient), basis_(ambient, 0) {}

Lattice Lattice::span(const IntMatrix& generators) {
    Lattice l(generators.rows());
    auto h = column_hermite(generators);
    l.basis_ = std::move(h.basis);
    l.pivots_ = std::move(h.pivots);
    return l;
}

Lattice Lattice::full(Index ambient) {
    Lattice l(ambient);
    l.basis_ = IntMatrix::Identity(ambient, ambient);
    for (Index i = 0; i < ambient; ++i) l.pivots_.push_back(i);
    return l;
}

Lattice Lattice::coordinate(const std::vector<bool>& mask) {
    const auto n = static_cast<Index>(mask.size());
    Lattice l(n);
    Index r = 0;
    for (bool b : mask) r += b ? 1 : 0;
    l.basis_ = IntMatrix::Zero(n, r);
    Index j = 0;
    for (Index i = 0; i < n; ++i)
        if (mask[static_cast<std::size_t>(i)]) {
            l.basis_(i, j++) = 1;
            l.pivots_.push_back(i);
        }
    return l;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("lattice: ambient dimension mismatch");
    return hermite_coordinates(basis_, pivots_, v);
}

bool Lattice::contains(const Lattice& other) const { return contains_columns(other.basis_); }

bool Lattice::contains_columns(const IntMatrix& m) const {
    for (Index j = 0; j < m.cols(); ++j)
        if (!contains(IntVector(m.col(j)))) return false;
    return true;
}

Lattice operator+(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("lattice sum: ambient mismatch");
    if (a.rank() == 0) return b;
    if (b.rank() == 0) return a;
    IntMatrix g(a.ambient(), a.rank() + b.rank());
    g << a.basis(), b.basis();
    return Lattice::span(g);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("lattice meet: ambient mismatch");
    if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(a.ambient());
    IntMatrix m(a.ambient(), a.rank() + b.rank());
    m << a.basis(), -b.basis();
    const IntMatrix k = integer_kernel(m);
    return Lattice::span(product(a.basis(), k.topRows(a.rank())));
}

Lattice image(const IntMatrix& m, const Lattice& l) {
    if (m.cols() != l.ambient()) throw std::invalid_argument("lattice image: shape mismatch");
    return Lattice::span(product(m, l.basis()));
}

Lattice preimage(const IntMatrix& m, const Lattice& l) {
    if (m.rows() != l.ambient()) throw std::invalid_argument("lattice preimage: shape mismatch");
    IntMatrix s(m.rows(), m.cols() + l.rank());
    s << m, -l.basis();
    const IntMatrix k = integer_kernel(s);
    return Lattice::span(IntMatrix(k.topRows(m.cols())));
}

IntMatrix coordinates(const Lattice& l, const IntMatrix& m) {
    IntMatrix c(l.rank(), m.cols());
    for (Index j = 0; j < m.cols(); ++j) {
        auto x = l.coordinates(IntVector(m.col(j)));
        if (!x) throw std::domain_error("coordinates: vector outside lattice");
        c.col(j) = *x;
    }
    return c;
}

}  // namespace bredon

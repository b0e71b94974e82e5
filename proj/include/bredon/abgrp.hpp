#pragma once

#include "bredon/group.hpp"
#include "bredon/lattice.hpp"

#include <string>
#include <vector>

namespace bredon {

/// Isomorphism type of a finitely generated abelian group: Z^rank plus
/// Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k.
struct NormalForm {
    Index rank = 0;
    std::vector<Integer> torsion;

    [[nodiscard]] bool is_zero() const { return rank == 0 && torsion.empty(); }
    [[nodiscard]] std::string str() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm direct_sum(const NormalForm& a, const NormalForm& b);
/// Normal form of the group Z^n / span(relation columns).
NormalForm normal_form_of(const IntMatrix& relations, Index generators);

/// Cokernel presentation Z^generators / span(columns of relations).
struct FgAbPresentation {
    Index generators = 0;
    IntMatrix relations;

    FgAbPresentation() : relations(0, 0) {}
    FgAbPresentation(Index gens, IntMatrix rels);
    static FgAbPresentation free(Index n) { return {n, IntMatrix(n, 0)}; }
    static FgAbPresentation cyclic(const Integer& order);

    [[nodiscard]] Lattice relation_lattice() const { return Lattice::span(relations); }
    [[nodiscard]] NormalForm normal_form() const { return normal_form_of(relations, generators); }
};

FgAbPresentation direct_sum(const std::vector<FgAbPresentation>& parts);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// True if every column of a - b lies in the lattice.
bool equal_modulo(const IntMatrix& a, const IntMatrix& b, const Lattice& relations);

/// Homomorphism of presented groups, given on generators.
struct AbHom {
    FgAbPresentation source, target;
    IntMatrix matrix;

    /// Relations of the source are carried into relations of the target.
    [[nodiscard]] bool well_defined() const;
    [[nodiscard]] bool equals(const AbHom& other) const;
    [[nodiscard]] bool is_zero() const;
};

AbHom compose(const AbHom& g, const AbHom& f);  // g after f

/// The subquotient A/B of two lattices B <= A <= Z^n, with an adapted basis.
///
/// The SNF of the coordinates of B in A gives a basis a'_i of A with
/// B = span(d_i a'_i). Generators with d_i == 1 are dropped; the rest are the
/// generators of the quotient, of order d_i (0 meaning infinite).
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(Lattice numerator, const Lattice& denominator);

    [[nodiscard]] Index size() const { return gens_.cols(); }
    [[nodiscard]] const IntMatrix& generators() const { return gens_; }
    [[nodiscard]] const std::vector<Integer>& orders() const { return orders_; }
    [[nodiscard]] const Lattice& numerator() const { return num_; }
    [[nodiscard]] NormalForm normal_form() const;
    [[nodiscard]] FgAbPresentation presentation() const;

    /// Coordinates of x (which must lie in the numerator) in the quotient
    /// generators, reduced into [0, d_i) on torsion generators.
    [[nodiscard]] IntVector reduce(const IntVector& x) const;
    [[nodiscard]] IntMatrix reduce(const IntMatrix& x) const;

private:
    Lattice num_;
    IntMatrix U_;
    std::vector<Index> keep_;
    std::vector<Integer> orders_;
    IntMatrix gens_;
};

/// Matrix of the map src -> tgt induced by an ambient matrix d.
IntMatrix induced_map(const IntMatrix& d, const Subquotient& src, const Subquotient& tgt);

/// Cochain complex of presented groups in degrees 0..top.
class CochainComplex {
public:
    CochainComplex() = default;
    /// differentials[n] maps terms[n] to terms[n+1]; missing ones are zero.
    CochainComplex(std::vector<FgAbPresentation> terms, std::vector<IntMatrix> differentials);

    [[nodiscard]] int top() const { return static_cast<int>(terms_.size()) - 1; }
    [[nodiscard]] const FgAbPresentation& term(int n) const;
    [[nodiscard]] Index rank(int n) const { return term(n).generators; }
    /// Matrix of d^n : C^n -> C^{n+1}, with zero shapes outside the range.
    [[nodiscard]] IntMatrix differential(int n) const;
    [[nodiscard]] Lattice relations(int n) const;

    /// Well-definedness of every differential and d d == 0. Returns "" when valid.
    [[nodiscard]] std::string validate() const;

    [[nodiscard]] Lattice cocycles(int n) const;
    [[nodiscard]] Lattice coboundaries(int n) const;
    [[nodiscard]] Subquotient cohomology(int n) const;
    [[nodiscard]] NormalForm cohomology_group(int n) const { return cohomology(n).normal_form(); }

private:
    std::vector<FgAbPresentation> terms_;
    std::vector<IntMatrix> d_;
    std::vector<Lattice> rel_;
};

bool is_chain_map(const CochainComplex& a, const CochainComplex& b, const std::vector<IntMatrix>& f,
                  int degree_shift = 0);
/// H^n(a) -> H^{n+shift}(b) induced by the cochain-level matrix f.
AbHom cohomology_map(const CochainComplex& a, const CochainComplex& b, const IntMatrix& f, int n,
                     int degree_shift = 0);

/// A module over a finite group: a presented abelian group with an action
/// matrix for every group element.
struct GroupModule {
    FiniteGroup group;
    FgAbPresentation module;
    std::vector<IntMatrix> action;

    static GroupModule trivial(FiniteGroup g, FgAbPresentation m);
    /// Actions preserve relations, identity acts trivially, action is multiplicative.
    [[nodiscard]] std::string validate() const;
};

using WeylModule = GroupModule;

/// Based complex of free modules over the integral group ring of a finite group.
///
/// boundary[n][g] is the integer matrix (rank[n-1] x rank[n]) of coefficients of
/// the group element g, so that d(x_j) = sum_{i,g} boundary[n][g](i,j) g.x_i.
struct GroupRingModuleMap {
    FiniteGroup group;
    std::vector<Index> rank;
    std::vector<std::vector<IntMatrix>> boundary;

    [[nodiscard]] std::string validate() const;
};

/// Hom over the group ring from a free chain complex into a module. The degree
/// n term is one copy of the module per basis element of C_n.
CochainComplex hom_over_group_ring(const GroupRingModuleMap& chains, const GroupModule& m);

}  // namespace bredon

#pragma once

#include "bredon/abgrp.hpp"
#include "bredon/orbit.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bredon {

class SystemError : public std::runtime_error {
public:
    explicit SystemError(const std::string& what, int subgroup = -1)
        : std::runtime_error(what), subgroup(subgroup) {}
    int subgroup;
};

/// One generating structure map: M(f) : M(G/target) -> M(G/source) for a map
/// f : G/source -> G/target between conjugacy class representatives.
struct GeneratorMap {
    OrbitMorphism morphism;
    IntMatrix matrix;
};

/// A coefficient system: a contravariant functor from the orbit category to
/// finitely generated abelian groups.
///
/// Values and maps are stored on conjugacy class representatives only. A
/// non-representative subgroup H = x H_r x^-1 (x = lattice transporter) is
/// identified with its representative through the isomorphism G/H_r -> G/H of
/// coset x^-1, so M(f) for f : G/H -> G/K with coset a is the stored map for
/// the coset x_H^-1 a x_K.
class CoefficientSystem {
public:
    using Functor = std::function<IntMatrix(const OrbitMorphism&)>;

    CoefficientSystem() = default;

    /// Completes generators (plus identities) under composition and validates
    /// the result. values[c] is the value at the c-th class representative.
    static CoefficientSystem from_generators(std::shared_ptr<const SubgroupLattice> lat,
                                             std::vector<FgAbPresentation> values,
                                             const std::vector<GeneratorMap>& generators);
    /// Evaluates `f` on every map between representatives and validates.
    static CoefficientSystem from_functor(std::shared_ptr<const SubgroupLattice> lat,
                                          std::vector<FgAbPresentation> values, const Functor& f);
    static CoefficientSystem constant(std::shared_ptr<const SubgroupLattice> lat, const FgAbPresentation& a);
    /// H -> A^H for a G-module A; structure maps are translations by the coset.
    static CoefficientSystem fixed_points(std::shared_ptr<const SubgroupLattice> lat, const GroupModule& a);

    [[nodiscard]] const SubgroupLattice& lattice() const { return *lat_; }
    [[nodiscard]] std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lat_; }
    [[nodiscard]] const FgAbPresentation& value(int subgroup) const;
    [[nodiscard]] Index rank(int subgroup) const { return value(subgroup).generators; }
    /// M(f) : M(G/f.target) -> M(G/f.source).
    [[nodiscard]] const IntMatrix& map(const OrbitMorphism& f) const;
    [[nodiscard]] AbHom hom(const OrbitMorphism& f) const;
    /// Every map is well defined and every composite of representable maps is
    /// respected. Returns "" on success.
    [[nodiscard]] std::string validate() const;

private:
    std::shared_ptr<const SubgroupLattice> lat_;
    std::vector<FgAbPresentation> values_;
    std::vector<Lattice> rel_;
    /// maps_[i][j][a]: M of the map between class reps i -> j with coset a
    std::vector<std::vector<std::map<int, IntMatrix>>> maps_;

    void init(std::shared_ptr<const SubgroupLattice> lat, std::vector<FgAbPresentation> values);
    [[nodiscard]] std::string describe(int i, int j, int a) const;
};

/// M_H = M(G/H) as a module over W H, w acting by M of the translation by a lift of w.
GroupModule weyl_module(const CoefficientSystem& m, int h);

/// The system on the orbit category of W H with value M(G/L) at (W H)/(L/H).
CoefficientSystem induced_system(const CoefficientSystem& m, const WeylLattice& w);

}  // namespace bredon

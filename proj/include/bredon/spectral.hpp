#pragma once

#include "bredon/cohomology.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bredon {

/// Decreasing filtration of a cochain complex by coordinate strata: F^s is
/// spanned by the coordinates of stratum >= s, together with the relations.
struct FilteredCochainComplex {
    CochainComplex complex;
    std::vector<std::vector<int>> stratum;  ///< per degree, per coordinate
    int top_stratum = 0;                    ///< N; F^{N+1} is the relations

    [[nodiscard]] int top_degree() const { return complex.top(); }
    [[nodiscard]] Lattice filtration(int s, int n) const;
};

/// Throws std::logic_error if the differential does not preserve the filtration.
FilteredCochainComplex build_filtration(CochainComplex c, std::vector<std::vector<int>> stratum, int top_stratum);
FilteredCochainComplex build_filtration(const BredonCochainComplex& c, int top_stratum);

using Position = std::pair<int, int>;  ///< (s, n)

/// One page: entries E_r^{s,n} as subquotients of cochains and
/// d_r : E_r^{s,n} -> E_r^{s+r,n+1} in the generators of the entries.
struct SpectralPage {
    int r = 1;
    std::map<Position, Subquotient> entries;
    std::map<Position, AbHom> differentials;

    [[nodiscard]] NormalForm entry(int s, int n) const;
    [[nodiscard]] bool zero_differentials() const;
};

/// Pages 1..r_max by the filtered complex zig-zag:
/// E_r^{s,n} = Z_r^s / (Z_{r-1}^{s+1} + d Z_{r-1}^{s-r+1}), Z_r^s = F^s and d^-1 F^{s+r}.
std::vector<SpectralPage> compute_pages(const FilteredCochainComplex& f, int r_max, bool parallel = false);

/// d_r d_r = 0, H(E_r, d_r) = E_{r+1}, and no change after r = N + 1.
struct PageCheck {
    bool squares_zero = true;
    bool recomputation = true;
    bool stabilized = true;
    std::vector<std::string> failures;

    [[nodiscard]] bool pass() const { return squares_zero && recomputation && stabilized; }
};

PageCheck check_pages(const FilteredCochainComplex& f, const std::vector<SpectralPage>& pages);

struct ConvergenceEntry {
    int s = 0, n = 0;
    NormalForm graded, e_inf;
    bool match = false;
};

/// Graded pieces of the filtration induced on H^n against E_infinity.
struct ConvergenceReport {
    std::vector<NormalForm> oracle;  ///< H^n
    std::vector<ConvergenceEntry> entries;
    bool pass = true;
};

ConvergenceReport certify_convergence(const FilteredCochainComplex& f, const SpectralPage& e_inf);

/// Label classes (smallest member of each conjugacy class under the lifted
/// Q action) per stratum s = 0..top.
std::vector<std::vector<int>> label_classes(const GCWComplex& y, const Labelling& lab, int top);

struct E1Block {
    int stratum = 0;
    int label = -1;
    int gamma_order = 1;
    bool cochain_iso = true;
    std::vector<NormalForm> local;  ///< H~^n of the block
};

struct E1Identification {
    std::vector<E1Block> blocks;
    bool pass = true;
    std::vector<std::string> failures;
};

/// Matrix-level check that each graded piece is the direct sum of the local
/// blocks, and that E_1 is the sum of their cohomology. With `modified` the
/// block cohomology is also compared with the reduced cochains of X^H_H.
E1Identification identify_e1(const GCWComplex& y, const CoefficientSystem& m, const Labelling& lab,
                             const BredonCochainComplex& c, const SpectralPage& e1, bool modified);

struct D1Component {
    int source = -1;  ///< L, stratum s
    int target = -1;  ///< H, stratum s + 1
    int degree = 0;
    bool subconjugate = false;
    bool zero = true;
    int sign = 0;  ///< for H < L: +1 or -1 if d_1 = sign * connecting o change of groups, 0 on mismatch
    bool cochain_level = false;
};

struct D1Report {
    std::vector<D1Component> components;
    bool pass = true;
    std::vector<std::string> failures;
};

D1Report check_d1_factorization(const GCWComplex& x, const CoefficientSystem& m, const BredonCochainComplex& c);

struct SpectralOptions {
    bool parallel = false;
    bool factorization = true;
};

struct SpectralReport {
    FilteredCochainComplex filtered;
    std::vector<SpectralPage> pages;  ///< r = 1 .. N + 2
    PageCheck checks;
    E1Identification e1;
    std::optional<D1Report> d1;
    ConvergenceReport convergence;

    [[nodiscard]] const SpectralPage& e_infinity() const;
    [[nodiscard]] bool degenerate_at_e1() const;
    [[nodiscard]] bool pass() const;
};

SpectralReport main_spectral_sequence(const GCWComplex& x, const CoefficientSystem& m, const SpectralOptions& opt = {});

struct FpsReport {
    int subgroup = -1;
    WeylFixedComplex fixed;
    SpectralReport report;
    bool structural = true;  ///< blocks with N_G H <= L are non-equivariant
    std::vector<std::string> structural_failures;
    std::optional<bool> coincides_with_main;  ///< set for H = {e}

    [[nodiscard]] bool pass() const;
};

FpsReport fps_spectral_sequence(const GCWComplex& x, const CoefficientSystem& m, int h, const SpectralOptions& opt = {});

/// Entrywise equality of pages and differentials.
bool same_pages(const std::vector<SpectralPage>& a, const std::vector<SpectralPage>& b);

}  // namespace bredon

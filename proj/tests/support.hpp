#pragma once

#include "bredon/io.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace bredon;

inline std::string fixture(const std::string& name) { return std::string(BREDON_FIXTURES) + "/" + name + ".json"; }

inline Bundle load(const std::string& name) { return load_bundle(fixture(name)); }

/// Valid complexes of the suite.
inline const std::vector<std::string>& complexes() {
    static const std::vector<std::string> v{"point",     "reflection_s2", "antipodal_s1",      "s3_circle",
                                            "s3_sphere", "trivial_rp2",   "s3_rotation_sphere", "d4_sphere"};
    return v;
}

/// Bundles with a valid coefficient system.
inline const std::vector<std::string>& bundles() {
    static const std::vector<std::string> v{"point",          "reflection_s2",      "reflection_s2_regular",
                                            "antipodal_s1",   "antipodal_s1_sign",  "s3_circle",
                                            "s3_sphere",      "s3_sphere_sign",     "s3_sphere_z2",
                                            "trivial_rp2",    "s3_rotation_sphere", "d4_sphere"};
    return v;
}

inline int parity(const Perm& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s ^= 1;
    return s;
}

/// H -> Z^H for Z twisted by the sign of the permutation (trivial without permutations).
inline CoefficientSystem sign_system(const std::shared_ptr<const SubgroupLattice>& lat) {
    const auto& g = lat->group();
    GroupModule m{g, FgAbPresentation::free(1), {}};
    for (int a = 0; a < g.order(); ++a) {
        const bool odd = !g.permutations().empty() && parity(g.permutations()[static_cast<std::size_t>(a)]);
        m.action.push_back(int_matrix({{odd ? -1 : 1}}));
    }
    return CoefficientSystem::fixed_points(lat, m);
}

/// Constant Z, constant Z/2 and the sign-twisted system.
inline std::vector<std::pair<std::string, CoefficientSystem>> standard_systems(
    const std::shared_ptr<const SubgroupLattice>& lat) {
    return {{"constant Z", CoefficientSystem::constant(lat, FgAbPresentation::free(1))},
            {"constant Z/2", CoefficientSystem::constant(lat, FgAbPresentation::cyclic(Integer(2)))},
            {"sign", sign_system(lat)}};
}

inline IntMatrix random_matrix(std::mt19937& rng, Index r, Index c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

/// A random finite CW complex with dd = 0: boundaries[n] : C_n -> C_{n-1}.
/// Each new boundary is a random combination of cycles of the previous degree.
inline std::vector<IntMatrix> random_cw_boundaries(std::mt19937& rng, int dim, int max_cells) {
    std::uniform_int_distribution<int> count(1, max_cells);
    std::vector<IntMatrix> b;
    std::vector<Index> cells;
    for (int n = 0; n <= dim; ++n) cells.push_back(count(rng));
    b.push_back(IntMatrix(0, cells[0]));
    for (int n = 1; n <= dim; ++n) {
        const auto k = cells[static_cast<std::size_t>(n)];
        if (n == 1) {
            // 1-cells attach to two vertices
            IntMatrix d = IntMatrix::Zero(cells[0], k);
            std::uniform_int_distribution<Index> v(0, cells[0] - 1);
            for (Index j = 0; j < k; ++j) {
                const Index a = v(rng), c = v(rng);
                d(a, j) += 1;
                d(c, j) -= 1;
            }
            b.push_back(d);
            continue;
        }
        const IntMatrix cycles = integer_kernel(b[static_cast<std::size_t>(n - 1)]);
        b.push_back(IntMatrix(cycles * random_matrix(rng, cycles.cols(), k, -2, 2)));
    }
    return b;
}

/// The same complex as a G-CW complex over the trivial group.
inline GCWComplex trivial_complex(const std::vector<IntMatrix>& boundaries) {
    auto lat = std::make_shared<const SubgroupLattice>(FiniteGroup::cyclic(1));
    std::vector<OrbitCell> cells;
    std::vector<std::vector<int>> ids;
    for (std::size_t n = 0; n < boundaries.size(); ++n) {
        ids.emplace_back();
        for (Index j = 0; j < boundaries[n].cols(); ++j) {
            OrbitCell c;
            c.dim = static_cast<int>(n);
            for (Index i = 0; i < boundaries[n].rows(); ++i)
                if (boundaries[n](i, j) != Integer(0))
                    c.boundary.push_back({ids[n - 1][static_cast<std::size_t>(i)], 0, boundaries[n](i, j)});
            ids.back().push_back(static_cast<int>(cells.size()));
            cells.push_back(std::move(c));
        }
    }
    return GCWComplex(lat, std::move(cells));
}

}  // namespace testing

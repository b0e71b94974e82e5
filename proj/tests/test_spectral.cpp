#include "support.hpp"

#include <doctest.h>

#include <chrono>

using namespace bredon;
using testing::load;

namespace {

/// Random cellular cochains with strata chosen so that d preserves the filtration.
FilteredCochainComplex random_filtered(std::mt19937& rng, const FgAbPresentation& a, int top) {
    const auto bd = testing::random_cw_boundaries(rng, 3, 4);
    auto c = cellular_cochain_complex(bd, a);
    std::vector<std::vector<int>> strata;
    for (int n = 0; n <= c.top(); ++n) {
        const Index r = c.rank(n);
        std::vector<int> s(static_cast<std::size_t>(r), 0);
        for (Index j = 0; j < r; ++j) {
            int lo = 0;
            if (n > 0) {
                const IntMatrix d = c.differential(n - 1);
                for (Index i = 0; i < d.cols(); ++i)
                    if (d(j, i) != Integer(0)) lo = std::max(lo, strata.back()[static_cast<std::size_t>(i)]);
            }
            s[static_cast<std::size_t>(j)] = std::uniform_int_distribution<int>(lo, top)(rng);
        }
        strata.push_back(std::move(s));
    }
    return build_filtration(std::move(c), std::move(strata), top);
}

}  // namespace

TEST_CASE("reflection sphere: E_1 and d_1") {
    const auto b = load("reflection_s2");
    const auto rep = main_spectral_sequence(*b.complex, *b.system);
    REQUIRE(rep.pages.size() == 3);
    const auto& e1 = rep.pages[0];
    for (const auto& [p, sq] : e1.entries) {
        CAPTURE(p.first);
        CAPTURE(p.second);
        const bool nonzero = p == Position{0, 0} || p == Position{0, 1} || p == Position{1, 2};
        CHECK(sq.normal_form().is_zero() != nonzero);
    }
    const auto& d = e1.differentials.at({0, 1});
    CHECK(d.matrix.rows() == 1);
    CHECK(d.matrix.cols() == 1);
    CHECK(d.matrix(0, 0) * d.matrix(0, 0) == Integer(1));
    CHECK(rep.pages[1].entry(0, 0).str() == "Z");
    CHECK(rep.pages[1].entry(0, 1).is_zero());
    CHECK(rep.pages[1].entry(1, 2).is_zero());
    CHECK(!rep.degenerate_at_e1());
    REQUIRE(rep.d1.has_value());
    for (const auto& c : rep.d1->components)
        if (c.subconjugate && !c.zero) CHECK(c.sign == 1);
    CHECK(rep.pass());
}

TEST_CASE("free and trivial actions degenerate at E_1") {
    const auto anti = load("antipodal_s1");
    const auto a = main_spectral_sequence(*anti.complex, *anti.system);
    CHECK(a.degenerate_at_e1());
    CHECK(a.pages[0].entry(1, 0).str() == "Z");
    CHECK(a.pages[0].entry(1, 1).str() == "Z");
    CHECK(a.pass());
    const auto rp2 = load("trivial_rp2");
    const auto t = main_spectral_sequence(*rp2.complex, *rp2.system);
    CHECK(t.degenerate_at_e1());
    CHECK(t.pages[0].entry(0, 2).str() == "Z/2");
    CHECK(t.pass());
}

TEST_CASE("every fixture and standard system: checks pass") {
    for (const auto& name : testing::complexes()) {
        CAPTURE(name);
        const auto b = load(name);
        for (const auto& [sys, m] : testing::standard_systems(b.lattice)) {
            CAPTURE(sys);
            const auto rep = main_spectral_sequence(*b.complex, m);
            CHECK(rep.checks.pass());
            CHECK(rep.e1.pass);
            for (const auto& f : rep.e1.failures) MESSAGE(f);
            REQUIRE(rep.d1.has_value());
            CHECK(rep.d1->pass);
            for (const auto& f : rep.d1->failures) MESSAGE(f);
            CHECK(rep.convergence.pass);
        }
    }
}

TEST_CASE("random filtered complexes") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 20; ++trial) {
        CAPTURE(trial);
        const auto a = trial % 2 ? FgAbPresentation::cyclic(Integer(4)) : FgAbPresentation::free(1);
        const int top = 1 + trial % 3;
        const auto f = random_filtered(rng, a, top);
        const auto pages = compute_pages(f, top + 2);
        const auto pc = check_pages(f, pages);
        CHECK(pc.squares_zero);
        CHECK(pc.recomputation);
        CHECK(pc.stabilized);
        for (const auto& x : pc.failures) MESSAGE(x);
        const auto conv = certify_convergence(f, pages[static_cast<std::size_t>(top)]);
        CHECK(conv.pass);
        // the total size of E_infinity in degree n is that of H^n
        for (int n = 0; n <= f.top_degree(); ++n) {
            NormalForm sum;
            for (int s = 0; s <= top; ++s) sum = direct_sum(sum, pages[static_cast<std::size_t>(top)].entry(s, n));
            const auto h = f.complex.cohomology_group(n);
            CHECK(sum.rank == h.rank);
        }
    }
}

TEST_CASE("a differential that breaks the filtration is rejected") {
    // an interval: two vertices and one edge
    const auto c = cellular_cochain_complex({IntMatrix(0, 2), int_matrix({{1}, {-1}})}, FgAbPresentation::free(1));
    // d^0 hits the edge, so the vertices may not sit above it
    CHECK_THROWS_AS(build_filtration(c, {{1, 1}, {0}}, 1), std::logic_error);
    CHECK_NOTHROW(build_filtration(c, {{0, 0}, {1}}, 1));
}

TEST_CASE("parallel pages agree with sequential ones") {
    const auto b = load("s3_sphere");
    const auto m = testing::sign_system(b.lattice);
    SpectralOptions par;
    par.parallel = true;
    const auto a = main_spectral_sequence(*b.complex, m);
    const auto p = main_spectral_sequence(*b.complex, m, par);
    CHECK(same_pages(a.pages, p.pages));
}

TEST_CASE("fixed point set spectral sequence") {
    for (const auto& name : testing::complexes()) {
        CAPTURE(name);
        const auto b = load(name);
        for (const auto& [sys, m] : testing::standard_systems(b.lattice)) {
            CAPTURE(sys);
            for (int h = 0; h < b.lattice->size(); ++h) {
                CAPTURE(h);
                const auto r = fps_spectral_sequence(*b.complex, m, h);
                CHECK(r.structural);
                CHECK(r.report.pass());
                if (h == b.lattice->trivial()) CHECK(r.coincides_with_main == std::optional<bool>(true));
                else CHECK(!r.coincides_with_main.has_value());
            }
        }
    }
}

TEST_CASE("fixed point set sequence of the reflection sphere at H = G") {
    const auto b = load("reflection_s2");
    const auto r = fps_spectral_sequence(*b.complex, *b.system, b.lattice->whole());
    // converges to the cohomology of the equator
    REQUIRE(r.report.convergence.oracle.size() >= 2);
    CHECK(r.report.convergence.oracle[0].str() == "Z");
    CHECK(r.report.convergence.oracle[1].str() == "Z");
}

TEST_CASE("a 201 cell S4 complex stays within the time budget") {
    // a G-fixed centre joined to 100 orbits of vertices with assorted isotropy: a tree of orbits
    const auto b = load("s4_star");
    CHECK(b.complex->size() == 201);
    const auto start = std::chrono::steady_clock::now();
    const auto r = main_spectral_sequence(*b.complex, *b.system);
    const auto f = fps_spectral_sequence(*b.complex, *b.system, b.lattice->trivial());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.pass());
    CHECK(f.pass());
    CHECK(r.convergence.oracle[0].str() == "Z");
    CHECK(r.convergence.oracle[1].is_zero());
    CHECK(secs < 10.0);
}

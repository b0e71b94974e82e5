#include "support.hpp"

#include <doctest.h>

using namespace bredon;
using testing::load;

namespace {

std::vector<std::string> bredon_strings(const GCWComplex& x, const CoefficientSystem& m) {
    std::vector<std::string> out;
    const auto c = bredon_cochain_complex(x, m).complex;
    for (int n = 0; n <= c.top(); ++n) out.push_back(c.cohomology_group(n).str());
    return out;
}

using S = std::vector<std::string>;

}  // namespace

TEST_CASE("hand-computed Bredon cohomology") {
    auto run = [](const std::string& name) {
        const auto b = load(name);
        return bredon_strings(*b.complex, *b.system);
    };
    CHECK(run("point") == S{"Z"});
    CHECK(run("reflection_s2") == S{"Z", "0", "0"});
    CHECK(run("antipodal_s1") == S{"Z", "Z"});
    // the sign module on RP^1: H^0 = 0, H^1 = Z/2
    CHECK(run("antipodal_s1_sign") == S{"0", "Z/2"});
    // coinduced coefficients give the non-equivariant cohomology of S^2
    CHECK(run("reflection_s2_regular") == S{"Z", "0", "Z"});
    CHECK(run("trivial_rp2") == S{"Z", "0", "Z/2"});
    CHECK(run("s3_rotation_sphere") == S{"Z", "0", "Z"});
}

TEST_CASE("Bredon cochains satisfy dd = 0 and are well defined") {
    for (const auto& name : testing::complexes()) {
        CAPTURE(name);
        const auto b = load(name);
        for (const auto& [sys, m] : testing::standard_systems(b.lattice)) {
            CAPTURE(sys);
            CHECK(bredon_cochain_complex(*b.complex, m).complex.validate().empty());
        }
    }
}

TEST_CASE("trivial group: Bredon cohomology is cellular cohomology") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 10; ++trial) {
        const auto bd = testing::random_cw_boundaries(rng, 3, 4);
        const auto x = testing::trivial_complex(bd);
        const auto m = CoefficientSystem::constant(x.lattice_ptr(), FgAbPresentation::free(1));
        const auto cell = cellular_cochain_complex(bd, FgAbPresentation::free(1));
        const auto br = bredon_cochain_complex(x, m).complex;
        for (int n = 0; n <= 3; ++n) CHECK(br.cohomology_group(n) == cell.cohomology_group(n));
    }
}

TEST_CASE("constant coefficients: Bredon cohomology is that of the orbit space") {
    for (const auto& name : testing::complexes()) {
        CAPTURE(name);
        const auto b = load(name);
        for (const auto& a : {FgAbPresentation::free(1), FgAbPresentation::cyclic(Integer(2))}) {
            const auto m = CoefficientSystem::constant(b.lattice, a);
            const auto br = bredon_cochain_complex(*b.complex, m).complex;
            const auto q = cellular_cochain_complex(orbit_quotient_boundaries(*b.complex), a);
            for (int n = 0; n <= br.top(); ++n) CHECK(br.cohomology_group(n) == q.cohomology_group(n));
        }
    }
}

TEST_CASE("local blocks of the reflection sphere") {
    const auto b = load("reflection_s2");
    const auto& x = *b.complex;
    const auto lab = Labelling::isotropy(x);
    const auto e = local_block(x, *b.system, lab, x.lattice().trivial());
    CHECK(e.gamma.group.order() == 2);
    CHECK(e.chains.rank == std::vector<Index>{0, 0, 1});
    CHECK(e.complex.cohomology_group(2).str() == "Z");
    const auto g = local_block(x, *b.system, lab, x.lattice().whole());
    CHECK(g.gamma.group.order() == 1);
    CHECK(g.complex.cohomology_group(0).str() == "Z");
    CHECK(g.complex.cohomology_group(1).str() == "Z");
}

TEST_CASE("long exact sequence of X_H -> X^H -> X^H_H") {
    for (const auto& name : testing::complexes()) {
        CAPTURE(name);
        const auto b = load(name);
        for (const auto& [sys, m] : testing::standard_systems(b.lattice)) {
            CAPTURE(sys);
            for (int h = 0; h < b.lattice->size(); ++h) {
                CAPTURE(h);
                const auto rep = check_long_exact_sequence(*b.complex, m, h);
                CHECK(rep.exact);
                for (const auto& f : rep.failures) MESSAGE(f);
            }
        }
    }
}

TEST_CASE("connecting and change of groups maps compose to d_1 on the reflection sphere") {
    const auto b = load("reflection_s2");
    const auto& x = *b.complex;
    const auto& lat = x.lattice();
    const int e = lat.trivial(), g = lat.whole();
    // H^1 of the wedge (the equator, Z) -> H^2 of X^e_e (Z): the boundary of a hemisphere
    const auto conn = connecting_homomorphism(x, *b.system, e, 0, 1);
    CHECK(conn.well_defined());
    CHECK(conn.source.normal_form().str() == "Z");
    CHECK(conn.target.normal_form().str() == "Z");
    const auto cg = change_of_groups(x, *b.system, e, g, 1);
    CHECK(cg.well_defined());
    const auto d1 = compose(conn, cg);
    CHECK(!d1.is_zero());
    CHECK_THROWS(connecting_homomorphism(x, *b.system, g, 0, 0));
}

TEST_CASE("exactness helper") {
    const auto z = FgAbPresentation::free(1);
    const auto z2 = FgAbPresentation::cyclic(Integer(2));
    // Z -2-> Z -> Z/2 is exact at the middle
    const AbHom two{z, z, int_matrix({{2}})};
    const AbHom red{z, z2, int_matrix({{1}})};
    CHECK(exact_at(two, red));
    const AbHom three{z, z, int_matrix({{3}})};
    CHECK(!exact_at(three, red));
}

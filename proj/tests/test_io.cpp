#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace bredon;
using testing::load;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("every valid fixture loads") {
    for (const auto& name : testing::bundles()) {
        CAPTURE(name);
        const auto b = load(name);
        CHECK(b.system.has_value());
        CHECK(b.complex->size() > 0);
    }
}

TEST_CASE("error classes") {
    try {
        (void)load("malformed");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(load("no_such_file"), ParseError);
    CHECK_THROWS_AS(load("reflection_s2_bad"), ComplexError);
    CHECK_THROWS_AS(load("reflection_s2_missing"), SystemError);
    CHECK_THROWS_AS(parse_bundle(R"({"group": {"cayley": [[0, 1], [0, 1]]}, "complex": {"cells": []}})"), GroupError);
    CHECK_THROWS_AS(parse_bundle(R"({"group": {"cayley": [[0]]}})"), ParseError);
    CHECK_THROWS_AS(parse_bundle(R"({"group": {"cayley": [[0]]}, "complex": {"cells": [{"dim": -1, "isotropy": 0}]}})"),
                    ComplexError);
}

TEST_CASE("a bundle without a coefficient system") {
    const auto b = parse_bundle(R"({"group": {"cayley": [[0]]}, "complex": {"cells": [{"dim": 0, "isotropy": 0}]}})");
    CHECK(!b.system.has_value());
    CHECK(report_validate(b, Format::table).find("coefficient system: absent") != std::string::npos);
}

TEST_CASE("JSON reports carry the computed groups") {
    const auto b = load("s3_sphere_sign");
    const auto forms = normal_forms_in(report_bredon(b, -1, Format::json));
    REQUIRE(forms.size() == 3);
    CHECK(forms[0].is_zero());
    CHECK(forms[1].is_zero());
    CHECK(forms[2].str() == "Z");
    const auto rp2 = load("trivial_rp2");
    const auto t = normal_forms_in(report_bredon(rp2, 1, Format::json));
    CHECK(t.size() == 2);
}

TEST_CASE("reports are deterministic") {
    for (const auto& name : testing::bundles()) {
        CAPTURE(name);
        const auto a = load(name);
        const auto b = parse_bundle(slurp(testing::fixture(name)));
        CHECK(report_validate(a, Format::json) == report_validate(b, Format::json));
        CHECK(report_bredon(a, -1, Format::table) == report_bredon(b, -1, Format::table));
        const auto ra = main_spectral_sequence(*a.complex, *a.system);
        const auto rb = main_spectral_sequence(*b.complex, *b.system);
        CHECK(report_spectral(ra, *a.lattice, -1, Format::json) == report_spectral(rb, *b.lattice, -1, Format::json));
        CHECK(report_spectral(ra, *a.lattice, -1, Format::table) ==
              report_spectral(rb, *b.lattice, -1, Format::table));
    }
}

TEST_CASE("spectral JSON convergence agrees with the direct computation") {
    const auto b = load("reflection_s2");
    const auto r = main_spectral_sequence(*b.complex, *b.system);
    const auto text = report_spectral(r, *b.lattice, -1, Format::json);
    CHECK(text.find("\"degenerate_at_e1\": false") != std::string::npos);
    CHECK(text.find("\"pass\": true") != std::string::npos);
    const auto direct = bredon_cohomology(*b.complex, *b.system, 0);
    CHECK(direct.str() == "Z");
}

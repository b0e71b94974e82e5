#pragma once

#include "bredon/spectral.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace bredon {

/// Unreadable file, malformed JSON or schema violation.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A group, a G-CW complex over it and (optionally) a coefficient system.
struct Bundle {
    std::shared_ptr<const SubgroupLattice> lattice;
    std::shared_ptr<const GCWComplex> complex;
    std::optional<CoefficientSystem> system;
};

/// Throws ParseError, GroupError, ComplexError or SystemError.
Bundle parse_bundle(const std::string& text);
Bundle load_bundle(const std::string& path);

enum class Format { table, json };

/// Subgroup ids, lengths and hom-set sizes between class representatives.
std::string report_validate(const Bundle& b, Format f);
std::string report_bredon(const Bundle& b, int max_degree, Format f);
std::string report_spectral(const SpectralReport& r, const SubgroupLattice& lat, int max_degree, Format f);
std::string report_fps(const FpsReport& r, const SubgroupLattice& lat, int max_degree, Format f);

/// Normal forms stored under "rank"/"torsion" in a JSON text, in document order.
std::vector<NormalForm> normal_forms_in(const std::string& json_text);

}  // namespace bredon

#pragma once

#include "qkcf/constructions.hpp"
#include "qkcf/forms.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qkcf {

/*
 * Algebra files are JSON with 1-based indices:
 *
 *   { "dim": 6, "field": "Q",
 *     "brackets": [ {"i": 1, "j": 2, "out": [ {"k": 3, "coeff": "1"} ]} ],
 *     "J": [["0","-1"], ...] }
 *
 * "J" is optional. A bare JSON string "@name" (or the string "@name" passed
 * directly to load_algebra) refers to the built-in catalog.
 */
struct LoadedAlgebra {
  std::string source;
  AlmostComplexLieAlgebra pair;
  std::optional<AdvertisedVerdicts> advertised; // catalog entries only
};

LoadedAlgebra parse_algebra(std::string_view text,
                            std::string source = "<string>");

/// "@name" resolves through the catalog; anything else is read as a file.
LoadedAlgebra load_algebra(const std::string &path_or_name);

/// Pretty JSON, two-space indent, brackets in (i, j) order.
std::string write_algebra(const LieAlgebra &g,
                          const std::optional<AlmostComplexStructure> &j);

/// JSON matrix of scalar strings, or {"metric": matrix}.
HermitianMetric parse_metric(std::string_view text);
HermitianMetric load_metric(const std::filesystem::path &path);

/// Rows of scalar strings.
std::string matrix_json(const Matrix &m);

} // namespace qkcf

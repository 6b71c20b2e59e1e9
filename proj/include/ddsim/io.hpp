#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ddsim/classify.hpp"
#include "ddsim/construct.hpp"
#include "ddsim/matrix.hpp"
#include "ddsim/oracle.hpp"
#include "ddsim/special.hpp"
#include "ddsim/spectral.hpp"

namespace ddsim::io {

enum class MatrixFormat { Json, Csv };

/// {"n": int, "rows": [[...], ...]}
RealMatrix parse_matrix_json(std::string_view text);

/// n lines of n comma-separated decimal literals.  Blank trailing lines are
/// ignored.  Errors carry 1-based line and column.
RealMatrix parse_matrix_csv(std::string_view text);

MatrixFormat format_for_path(const std::string& path);
RealMatrix read_matrix_file(const std::string& path, std::optional<MatrixFormat> format = {});

nlohmann::json to_json(const RealMatrix& m);
nlohmann::json to_json(const SplitComplexMatrix& m);
nlohmann::json to_json(const DominanceReport& r);
nlohmann::json to_json(const EigenStructure& es);
nlohmann::json to_json(const DDClassification& c);
nlohmann::json to_json(const RealJordanForm& jf);
nlohmann::json to_json(const SimilarityCertificate& c);
nlohmann::json to_json(const ComplexSimilarityCertificate& c);
nlohmann::json to_json(const ScalingCertificate& c);
nlohmann::json to_json(const RandomSearchResult& r);
nlohmann::json to_json(const std::vector<GershgorinDisc>& discs);

RealMatrix matrix_from_json(const nlohmann::json& rows);
SplitComplexMatrix complex_matrix_from_json(const nlohmann::json& j);

/// 800x800 SVG with one circle per disc, eigenvalues as crosses and the
/// origin marked.  Output is byte-deterministic for a given input.
std::string render_gershgorin_svg(const RealMatrix& a, Axis axis);

}  // namespace ddsim::io

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tpht/matrix.hpp"

namespace tpht {

/// {"rows": r, "cols": c, "data": [[...], ...]}; doubles round-trip
/// bit-exactly through nlohmann's shortest-representation output.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// One line per row, comma-separated, 17 significant digits.
std::string matrix_to_csv(const Matrix& m);
std::string vector_to_csv(const std::vector<double>& v);

std::string format_full(double v);

} // namespace tpht

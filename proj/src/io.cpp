#include "tpht/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace tpht {

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& data = j.at("data");
    if (data.size() != rows) throw std::invalid_argument("matrix_from_json: row count mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (data[i].size() != cols)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (std::size_t jj = 0; jj < cols; ++jj) m(i, jj) = data[i][jj].get<double>();
    }
    return m;
}

std::string matrix_to_csv(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += format_full(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string vector_to_csv(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_full(v[i]);
    }
    out += '\n';
    return out;
}

} // namespace tpht

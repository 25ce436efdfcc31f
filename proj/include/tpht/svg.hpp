#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpht/matrix.hpp"

namespace tpht::svg {

/// Bar chart of histogram counts over the given bin edges. With log_x the
/// bins are positioned by log10 of their edges (nonpositive edges clipped).
void write_histogram(const std::string& path, const std::vector<double>& edges,
                     const std::vector<std::size_t>& counts, const std::string& title,
                     bool log_x = false,
                     const std::vector<std::pair<double, std::string>>& marks = {});

/// Scatter of (x, y) points with an optional overlay polyline.
void write_scatter(const std::string& path, const std::vector<double>& xs,
                   const std::vector<double>& ys, const std::vector<double>& curve_x,
                   const std::vector<double>& curve_y, const std::string& title);

/// One vertical panel per eigenvector column: the piecewise-linear
/// interpolant of its entries with bars at the zero crossings.
void write_oscillation(const std::string& path, const Matrix& vectors,
                       const std::vector<std::vector<double>>& nodes, const std::string& title);

} // namespace tpht::svg

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "projbar/barcode.hpp"
#include "projbar/fields.hpp"

namespace projbar {

// Line-based complex + filtration text format (UTF-8):
//   v <id> <x1> ... <xn>     vertex with its n filtration values
//   s <v0> <v1> ... <vk>     simplex by vertex ids
// Loading face-closes the simplex lines.
void write_filtration_file(const std::filesystem::path& path, const FilteredComplex& fc);
FilteredComplex read_filtration_file(const std::filesystem::path& path);

// Point cloud CSV with an `x,y` header.
void write_cloud_csv(const std::filesystem::path& path, const PointCloud2D& cloud);
PointCloud2D read_cloud_csv(const std::filesystem::path& path);

// Barcode CSV: degree,birth,death,birth_vertex,death_vertex with inf/-inf
// for infinite endpoints and an empty field for a missing vertex.
void write_barcode_csv(const std::filesystem::path& path, const GradedBarcode& barcode);

// Minimal SVG line plot (polyline, axes, ticks).
void write_svg_line_plot(const std::filesystem::path& path, const std::vector<double>& xs,
                         const std::vector<double>& ys, const std::string& x_label,
                         const std::string& y_label);

}  // namespace projbar

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "projbar/projected.hpp"

namespace projbar {

// Batch runners behind the CLI subcommands; each writes its files and
// returns the JSON object that also lands on disk. All runs are
// deterministic under a fixed seed, and every JSON output embeds the
// effective configuration.

struct GenConfig {
	int n = 300;
	double radius = 1.0;
	double noise = 0.1;
	int outliers = 10;
	std::uint64_t seed = 42;
	std::filesystem::path out_dir = ".";
};

struct GenResult {
	std::filesystem::path x_path;
	std::filesystem::path y_path;
};

// Writes X.csv (clean circle sample, the given seed) and Y.csv (fresh circle
// sample at seed+1 with the outliers appended).
GenResult run_gen_dataset(const GenConfig& cfg);

struct BuildConfig {
	std::filesystem::path cloud_csv;
	int grid_resolution = 64;
	std::optional<double> bandwidth;  // Scott's rule when unset
	std::filesystem::path out_path;
};

// Freudenthal grid on [-1,1]^2 carrying the (distance, -density) pair.
void run_build(const BuildConfig& cfg);

struct IsmRunConfig {
	std::filesystem::path f_path, g_path;
	OptimizerConfig opt;
	std::optional<std::pair<int, int>> degrees;  // truncation window
	std::filesystem::path out_dir = ".";
	std::string stem = "ism";
};

// Writes <stem>.json, <stem>_upsilon.csv (grid sweep) and, for two
// parameters, <stem>_upsilon.svg. Returns the JSON text.
std::string run_ism(const IsmRunConfig& cfg);

struct SlicedRunConfig {
	std::filesystem::path f_path, g_path;
	std::vector<int> orders = {1, 2, 3, 4};
	QuadratureSpec quad;
	std::filesystem::path out_dir = ".";
	std::string stem = "sliced";
};

std::string run_sliced(const SlicedRunConfig& cfg);

struct MatchingRunConfig {
	std::filesystem::path f_path, g_path;
	int h_count = 10;  // directions per family
	int c_count = 10;  // offsets per axis
	std::filesystem::path out_dir = ".";
	std::string stem = "matching";
};

std::string run_matching(const MatchingRunConfig& cfg);

struct ProjectRunConfig {
	std::filesystem::path f_path;
	std::vector<double> u;
	std::filesystem::path out_csv;
};

std::string run_project(const ProjectRunConfig& cfg);

}  // namespace projbar

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "projbar/simplicial_complex.hpp"

namespace projbar {

struct PointCloud2D {
	std::vector<std::array<double, 2>> points;
	std::optional<std::uint64_t> seed;
};

// n points at radius + U[0,noise] with uniform angle, followed by
// n_outliers points uniform in [-1,1]^2. Bit-identical for equal seeds.
PointCloud2D sample_circle_dataset(int n, double radius, double noise, int n_outliers,
                                   std::uint64_t seed);

// Per-node min Euclidean distance to the cloud.
std::vector<double> distance_field(const PointCloud2D& cloud, const GridSpec& grid);

// Per-node Gaussian density (1/(n 2pi h^2)) sum_p exp(-|v-p|^2 / (2h^2)).
std::vector<double> gaussian_kde(const PointCloud2D& cloud, double bandwidth,
                                 const GridSpec& grid);

// Scott's rule h = n^(-1/6) * sigma, sigma the root mean of the coordinate
// standard deviations.
double scott_bandwidth(const PointCloud2D& cloud);

// Per-vertex map into R^n; vertex-major storage with stride n.
struct MultiFiltration {
	int parameter_count = 0;
	std::vector<double> values;

	int vertex_count() const {
		return parameter_count == 0 ? 0 : (int)values.size() / parameter_count;
	}
	double value(int vertex, int coord) const {
		return values[(size_t)vertex * parameter_count + coord];
	}
	// Scalar field of one coordinate, for corner projections.
	std::vector<double> coordinate(int coord) const;
};

// Stacks per-vertex scalar fields into an n-filtration, in order; fields with
// the negate flag set enter with flipped sign (codensity).
MultiFiltration make_bifiltration(const SimplicialComplex& complex,
                                  const std::vector<std::vector<double>>& fields,
                                  const std::vector<bool>& negate = {});

// A complex together with its multi-filtration; the unit the distance
// computations operate on.
struct FilteredComplex {
	SimplicialComplex complex;
	MultiFiltration filtration;
};

// Deterministic uniform double in [0,1) from a 64-bit generator state;
// shared by every sampling routine so outputs are reproducible across
// platforms.
struct SplitMix64 {
	std::uint64_t state;
	explicit SplitMix64(std::uint64_t seed) : state(seed) {}
	std::uint64_t next_u64() {
		std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}
	double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }
};

}  // namespace projbar

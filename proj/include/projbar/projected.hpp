#pragma once

#include <cstdint>
#include <vector>

#include "projbar/bottleneck.hpp"
#include "projbar/fields.hpp"
#include "projbar/persistence.hpp"

namespace projbar {

// Nonnegative linear form on the dual simplex {sum u_i = 1}.
struct ProjectionVector {
	std::vector<double> coords;

	static ProjectionVector normalized(std::vector<double> coords);
	int n() const { return (int)coords.size(); }
	bool interior() const;
	double dot(const MultiFiltration& f, int vertex) const;
};

// Graded barcode of the lower-star persistence of v -> sum_i u_i f_i(v),
// with provenance vertices retained. Boundary u (a vanishing coordinate) is
// admitted with the same formula; negative coordinates are rejected.
GradedBarcode projected_barcode(const FilteredComplex& fc, const ProjectionVector& u);

// Graded bottleneck between the two projected barcodes at u, optionally
// restricted to degrees in [degree_lo, degree_hi].
double upsilon(const FilteredComplex& f, const FilteredComplex& g, const ProjectionVector& u,
               int degree_lo = INT_MIN, int degree_hi = INT_MAX);

// Value plus the optimal-matching witness, for gradient use.
BottleneckResult upsilon_with_witness(const FilteredComplex& f, const FilteredComplex& g,
                                      const ProjectionVector& u, int degree_lo = INT_MIN,
                                      int degree_hi = INT_MAX);

// Subgradient of Upsilon at an interior point, from the active term of the
// deterministically tie-broken optimal matching, projected onto the tangent
// space of the simplex (mean subtracted).
std::vector<double> upsilon_subgradient(const FilteredComplex& f, const FilteredComplex& g,
                                        const ProjectionVector& u, int degree_lo = INT_MIN,
                                        int degree_hi = INT_MAX);

struct OptimizerConfig {
	int grid_points = 201;        // per simplex axis, corners included
	int ascent_iterations = 100;  // per start
	double step0 = 0.1;           // diminishing step step0/(1+k)
	double interior_margin = 1e-4;
	int multistart = 4;
	std::uint64_t seed = 0;
};

struct IsmResult {
	double value = 0.0;
	std::vector<double> argmax;
	// every evaluated (u, Upsilon(u)) pair, grid sweep first
	std::vector<std::pair<std::vector<double>, double>> trace;
};

// Lower-bound estimate of sup over the closed simplex of Upsilon: dense grid
// pass followed by projected subgradient ascent from the best grid points.
// The returned value is always an evaluated Upsilon.
IsmResult ism_gamma(const FilteredComplex& f, const FilteredComplex& g,
                    const OptimizerConfig& cfg);

// Same search with Upsilon restricted to degrees in [p, q].
IsmResult ism_truncated(const FilteredComplex& f, const FilteredComplex& g, int p, int q,
                        const OptimizerConfig& cfg);

struct QuadratureSpec {
	int trapezoid_points = 201;  // n = 2 composite trapezoid nodes
	int mc_samples = 4000;       // n >= 3 Monte Carlo draws
	std::uint64_t seed = 1;
	bool mean_normalization = false;  // ((1/vol) int T^p)^(1/p) instead
};

// p-th sliced distance (1/vol) (int_Q Upsilon^p du)^(1/p) over the positive
// dual simplex with its Riemannian measure.
double sliced_gamma(const FilteredComplex& f, const FilteredComplex& g, int p,
                    const QuadratureSpec& quad);

// Riemannian volume of the open dual simplex in R^n.
double simplex_volume(int n);

// A positive line {c + t h} with max_i h_i = 1.
struct LineSpec {
	std::vector<double> h;
	std::vector<double> c;
};

struct MatchingEstimate {
	double value = 0.0;
	LineSpec argmax;
};

// Matching-distance lower bound: max over the sampled lines of
// (min_i h_i) x bottleneck of the barcodes of the push-function coordinate
// v -> max_i (f_i(v) - c_i)/h_i.
MatchingEstimate fibered_matching_distance(const FilteredComplex& f, const FilteredComplex& g,
                                           const std::vector<LineSpec>& lines);

// All lattice points of the closed simplex with the given per-axis count
// (n = 2: {(t, 1-t)} for t on a uniform grid, ascending).
std::vector<std::vector<double>> simplex_grid(int n, int points_per_axis);

}  // namespace projbar

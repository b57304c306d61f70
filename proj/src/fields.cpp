#include "projbar/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace projbar {

PointCloud2D sample_circle_dataset(int n, double radius, double noise, int n_outliers,
                                   std::uint64_t seed) {
	if (n < 0 || n_outliers < 0) throw std::invalid_argument("negative point count");
	if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
	if (noise < 0.0) throw std::invalid_argument("negative noise amplitude");

	PointCloud2D cloud;
	cloud.seed = seed;
	cloud.points.reserve((size_t)n + n_outliers);
	SplitMix64 rng(seed);
	const double two_pi = 2.0 * M_PI;
	for (int i = 0; i < n; ++i) {
		double theta = two_pi * rng.next_unit();
		double r = radius + noise * rng.next_unit();
		cloud.points.push_back({r * std::cos(theta), r * std::sin(theta)});
	}
	for (int i = 0; i < n_outliers; ++i) {
		double x = 2.0 * rng.next_unit() - 1.0;
		double y = 2.0 * rng.next_unit() - 1.0;
		cloud.points.push_back({x, y});
	}
	return cloud;
}

std::vector<double> distance_field(const PointCloud2D& cloud, const GridSpec& grid) {
	grid.check();
	if (cloud.points.empty()) throw std::invalid_argument("distance field of empty cloud");
	std::vector<double> field((size_t)grid.node_count());
	for (int j = 0; j < grid.ny; ++j) {
		double y = grid.node_y(j);
		for (int i = 0; i < grid.nx; ++i) {
			double x = grid.node_x(i);
			double best = std::numeric_limits<double>::infinity();
			for (const auto& p : cloud.points) {
				double dx = x - p[0], dy = y - p[1];
				double d2 = dx * dx + dy * dy;
				if (d2 < best) best = d2;
			}
			field[grid.node_id(i, j)] = std::sqrt(best);
		}
	}
	return field;
}

std::vector<double> gaussian_kde(const PointCloud2D& cloud, double bandwidth,
                                 const GridSpec& grid) {
	grid.check();
	if (bandwidth <= 0.0) throw std::invalid_argument("bandwidth must be positive");
	if (cloud.points.empty()) throw std::invalid_argument("kde of empty cloud");
	const double h2 = bandwidth * bandwidth;
	const double norm = 1.0 / (cloud.points.size() * 2.0 * M_PI * h2);
	std::vector<double> field((size_t)grid.node_count());
	for (int j = 0; j < grid.ny; ++j) {
		double y = grid.node_y(j);
		for (int i = 0; i < grid.nx; ++i) {
			double x = grid.node_x(i);
			double acc = 0.0;
			for (const auto& p : cloud.points) {
				double dx = x - p[0], dy = y - p[1];
				acc += std::exp(-(dx * dx + dy * dy) / (2.0 * h2));
			}
			field[grid.node_id(i, j)] = norm * acc;
		}
	}
	return field;
}

double scott_bandwidth(const PointCloud2D& cloud) {
	if (cloud.points.empty()) throw std::invalid_argument("bandwidth of empty cloud");
	double n = (double)cloud.points.size();
	double mx = 0.0, my = 0.0;
	for (const auto& p : cloud.points) { mx += p[0]; my += p[1]; }
	mx /= n;
	my /= n;
	double vx = 0.0, vy = 0.0;
	for (const auto& p : cloud.points) {
		vx += (p[0] - mx) * (p[0] - mx);
		vy += (p[1] - my) * (p[1] - my);
	}
	double sigma = std::sqrt((vx + vy) / (2.0 * n));
	return std::pow(n, -1.0 / 6.0) * sigma;
}

std::vector<double> MultiFiltration::coordinate(int coord) const {
	std::vector<double> out((size_t)vertex_count());
	for (int v = 0; v < vertex_count(); ++v) out[v] = value(v, coord);
	return out;
}

MultiFiltration make_bifiltration(const SimplicialComplex& complex,
                                  const std::vector<std::vector<double>>& fields,
                                  const std::vector<bool>& negate) {
	if (fields.empty()) throw std::invalid_argument("no fields given");
	if (!negate.empty() && negate.size() != fields.size())
		throw std::invalid_argument("negate flags do not match field count");
	const int n = (int)fields.size();
	const int nv = complex.vertex_count();
	for (const auto& f : fields)
		if ((int)f.size() != nv) throw std::invalid_argument("field does not cover every vertex");

	MultiFiltration mf;
	mf.parameter_count = n;
	mf.values.resize((size_t)nv * n);
	for (int v = 0; v < nv; ++v)
		for (int k = 0; k < n; ++k) {
			double x = fields[k][v];
			if (!std::isfinite(x)) throw std::invalid_argument("non-finite filtration value");
			mf.values[(size_t)v * n + k] = (!negate.empty() && negate[k]) ? -x : x;
		}
	return mf;
}

}  // namespace projbar

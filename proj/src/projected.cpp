#include "projbar/projected.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace projbar {

ProjectionVector ProjectionVector::normalized(std::vector<double> coords) {
	if (coords.empty()) throw std::invalid_argument("empty projection vector");
	double sum = 0.0;
	for (double c : coords) {
		if (!(c >= 0.0)) throw std::invalid_argument("projection coordinates must be nonnegative");
		sum += c;
	}
	if (sum <= 0.0) throw std::invalid_argument("zero projection vector");
	for (double& c : coords) c /= sum;
	return ProjectionVector{std::move(coords)};
}

bool ProjectionVector::interior() const {
	for (double c : coords)
		if (!(c > 0.0)) return false;
	return true;
}

double ProjectionVector::dot(const MultiFiltration& f, int vertex) const {
	double acc = 0.0;
	for (int i = 0; i < n(); ++i) acc += coords[i] * f.value(vertex, i);
	return acc;
}

namespace {

void check_compatible(const FilteredComplex& fc, const ProjectionVector& u) {
	if (u.n() != fc.filtration.parameter_count)
		throw std::invalid_argument("projection dimension does not match the filtration");
	for (double c : u.coords)
		if (c < 0.0) throw std::invalid_argument("projection coordinates must be nonnegative");
	double sum = std::accumulate(u.coords.begin(), u.coords.end(), 0.0);
	if (std::abs(sum - 1.0) > 1e-9)
		throw std::invalid_argument("projection vector is not normalized");
}

std::vector<double> projected_field(const FilteredComplex& fc, const ProjectionVector& u) {
	std::vector<double> field((size_t)fc.complex.vertex_count());
	for (int v = 0; v < fc.complex.vertex_count(); ++v) field[v] = u.dot(fc.filtration, v);
	return field;
}

}  // namespace

GradedBarcode projected_barcode(const FilteredComplex& fc, const ProjectionVector& u) {
	check_compatible(fc, u);
	auto field = projected_field(fc, u);
	return reduce_persistence(lower_star_filtration(fc.complex, field));
}

BottleneckResult upsilon_with_witness(const FilteredComplex& f, const FilteredComplex& g,
                                      const ProjectionVector& u, int degree_lo, int degree_hi) {
	return bottleneck(projected_barcode(f, u), projected_barcode(g, u), degree_lo, degree_hi);
}

double upsilon(const FilteredComplex& f, const FilteredComplex& g, const ProjectionVector& u,
               int degree_lo, int degree_hi) {
	return upsilon_with_witness(f, g, u, degree_lo, degree_hi).value;
}

namespace {

std::vector<double> gradient_from_active(const FilteredComplex& f, const FilteredComplex& g,
                                         const MatchWitness& witness, int n) {
	std::vector<double> grad(n, 0.0);
	if (!witness.active) return grad;
	const ActiveTerm& a = *witness.active;

	auto vertex_of = [](const Bar& bar, ActiveEndpoint e) {
		int v = e == ActiveEndpoint::Birth ? bar.birth_vertex : bar.death_vertex;
		if (v < 0) throw std::runtime_error("active endpoint without provenance vertex");
		return v;
	};

	if (a.matched) {
		double e = a.endpoint == ActiveEndpoint::Birth ? a.left.birth : a.left.death;
		double ep = a.endpoint == ActiveEndpoint::Birth ? a.right.birth : a.right.death;
		double s = e > ep ? 1.0 : (e < ep ? -1.0 : 0.0);
		if (s != 0.0) {
			int vf = vertex_of(a.left, a.endpoint);
			int vg = vertex_of(a.right, a.endpoint);
			for (int i = 0; i < n; ++i)
				grad[i] = s * (f.filtration.value(vf, i) - g.filtration.value(vg, i));
		}
	} else {
		const Bar& bar = a.left_side ? a.left : a.right;
		const FilteredComplex& side = a.left_side ? f : g;
		int vb = vertex_of(bar, ActiveEndpoint::Birth);
		int vd = vertex_of(bar, ActiveEndpoint::Death);
		double s = a.left_side ? 0.5 : -0.5;
		for (int i = 0; i < n; ++i)
			grad[i] = s * (side.filtration.value(vd, i) - side.filtration.value(vb, i));
	}
	double mean = std::accumulate(grad.begin(), grad.end(), 0.0) / n;
	for (double& gi : grad) gi -= mean;
	return grad;
}

}  // namespace

std::vector<double> upsilon_subgradient(const FilteredComplex& f, const FilteredComplex& g,
                                        const ProjectionVector& u, int degree_lo, int degree_hi) {
	if (!u.interior()) throw std::invalid_argument("subgradient requires an interior point");
	auto res = upsilon_with_witness(f, g, u, degree_lo, degree_hi);
	return gradient_from_active(f, g, res.witness, u.n());
}

std::vector<std::vector<double>> simplex_grid(int n, int points_per_axis) {
	if (n < 1 || points_per_axis < 2) throw std::invalid_argument("bad simplex grid spec");
	const int m = points_per_axis - 1;
	std::vector<std::vector<double>> out;
	if (n == 2) {
		for (int k = 0; k <= m; ++k)
			out.push_back({double(k) / m, double(m - k) / m});
		return out;
	}
	std::vector<int> parts(n, 0);
	// enumerate compositions of m into n nonnegative parts
	auto rec = [&](auto&& self, int coord, int remaining) -> void {
		if (coord == n - 1) {
			parts[coord] = remaining;
			std::vector<double> u(n);
			for (int i = 0; i < n; ++i) u[i] = double(parts[i]) / m;
			out.push_back(std::move(u));
			return;
		}
		for (int k = 0; k <= remaining; ++k) {
			parts[coord] = k;
			self(self, coord + 1, remaining - k);
		}
	};
	rec(rec, 0, m);
	return out;
}

namespace {

std::vector<double> clamp_to_interior(std::vector<double> u, double margin) {
	for (double& c : u) c = std::max(c, margin);
	double sum = std::accumulate(u.begin(), u.end(), 0.0);
	for (double& c : u) c /= sum;
	return u;
}

std::vector<double> dirichlet_point(SplitMix64& rng, int n) {
	std::vector<double> u(n);
	double sum = 0.0;
	for (int i = 0; i < n; ++i) {
		double x = rng.next_unit();
		u[i] = -std::log1p(-x);
		sum += u[i];
	}
	for (double& c : u) c /= sum;
	return u;
}

IsmResult ism_search(const FilteredComplex& f, const FilteredComplex& g,
                     const OptimizerConfig& cfg, int degree_lo, int degree_hi) {
	const int n = f.filtration.parameter_count;
	if (g.filtration.parameter_count != n)
		throw std::invalid_argument("filtrations have different parameter counts");
	if (!(cfg.interior_margin > 0.0) || !(cfg.interior_margin < 1.0 / n))
		throw std::invalid_argument("interior margin out of range");

	IsmResult res;
	res.value = -std::numeric_limits<double>::infinity();
	auto record = [&](const std::vector<double>& u, double val) {
		res.trace.push_back({u, val});
		if (val > res.value) {
			res.value = val;
			res.argmax = u;
		}
	};
	auto eval = [&](const std::vector<double>& u) {
		double val = upsilon(f, g, ProjectionVector{u}, degree_lo, degree_hi);
		record(u, val);
		return val;
	};

	auto grid = simplex_grid(n, cfg.grid_points);
	for (const auto& u : grid) eval(u);

	// ascent starts: best grid points, padded with random interior draws
	std::vector<size_t> idx(grid.size());
	std::iota(idx.begin(), idx.end(), 0);
	std::stable_sort(idx.begin(), idx.end(),
	                 [&](size_t a, size_t b) { return res.trace[a].second > res.trace[b].second; });
	std::vector<std::vector<double>> starts;
	for (size_t k = 0; k < idx.size() && (int)starts.size() < cfg.multistart; ++k)
		starts.push_back(grid[idx[k]]);
	SplitMix64 rng(cfg.seed);
	while ((int)starts.size() < cfg.multistart) starts.push_back(dirichlet_point(rng, n));

	for (auto u : starts) {
		u = clamp_to_interior(std::move(u), cfg.interior_margin);
		for (int k = 0; k < cfg.ascent_iterations; ++k) {
			auto res_u = upsilon_with_witness(f, g, ProjectionVector{u}, degree_lo, degree_hi);
			record(u, res_u.value);
			auto grad = gradient_from_active(f, g, res_u.witness, n);
			double step = cfg.step0 / (1.0 + k);
			bool moved = false;
			for (int i = 0; i < n; ++i) {
				u[i] += step * grad[i];
				moved = moved || grad[i] != 0.0;
			}
			u = clamp_to_interior(std::move(u), cfg.interior_margin);
			if (!moved) break;
		}
		eval(u);
	}
	if (res.trace.empty()) throw std::logic_error("empty search trace");
	return res;
}

}  // namespace

IsmResult ism_gamma(const FilteredComplex& f, const FilteredComplex& g,
                    const OptimizerConfig& cfg) {
	return ism_search(f, g, cfg, INT_MIN, INT_MAX);
}

IsmResult ism_truncated(const FilteredComplex& f, const FilteredComplex& g, int p, int q,
                        const OptimizerConfig& cfg) {
	if (p > q) throw std::invalid_argument("empty degree window");
	return ism_search(f, g, cfg, p, q);
}

double simplex_volume(int n) {
	// sqrt(n) / (n-1)!
	double fact = 1.0;
	for (int k = 2; k <= n - 1; ++k) fact *= k;
	return std::sqrt((double)n) / fact;
}

double sliced_gamma(const FilteredComplex& f, const FilteredComplex& g, int p,
                    const QuadratureSpec& quad) {
	if (p < 1) throw std::invalid_argument("sliced order must be >= 1");
	const int n = f.filtration.parameter_count;
	if (g.filtration.parameter_count != n)
		throw std::invalid_argument("filtrations have different parameter counts");
	const double vol = simplex_volume(n);

	double integral = 0.0;  // int_Q Upsilon^p du
	if (n == 2) {
		const int K = std::max(2, quad.trapezoid_points);
		double acc = 0.0;
		for (int k = 0; k < K; ++k) {
			double t = double(k) / (K - 1);
			double v = upsilon(f, g, ProjectionVector{{t, 1.0 - t}});
			double w = (k == 0 || k == K - 1) ? 0.5 : 1.0;
			acc += w * std::pow(v, p);
		}
		double param_integral = acc / (K - 1);  // over t in [0,1]
		integral = std::sqrt(2.0) * param_integral;  // arclength element
	} else {
		SplitMix64 rng(quad.seed);
		double acc = 0.0;
		for (int k = 0; k < quad.mc_samples; ++k) {
			auto u = dirichlet_point(rng, n);
			acc += std::pow(upsilon(f, g, ProjectionVector{u}), p);
		}
		integral = vol * acc / quad.mc_samples;
	}

	if (quad.mean_normalization) return std::pow(integral / vol, 1.0 / p);
	return std::pow(integral, 1.0 / p) / vol;
}

MatchingEstimate fibered_matching_distance(const FilteredComplex& f, const FilteredComplex& g,
                                           const std::vector<LineSpec>& lines) {
	const int n = f.filtration.parameter_count;
	if (g.filtration.parameter_count != n)
		throw std::invalid_argument("filtrations have different parameter counts");
	if (lines.empty()) throw std::invalid_argument("no lines sampled");

	MatchingEstimate best;
	best.value = -1.0;
	for (const auto& line : lines) {
		if ((int)line.h.size() != n || (int)line.c.size() != n)
			throw std::invalid_argument("line dimension does not match the filtration");
		double hmax = 0.0, hmin = std::numeric_limits<double>::infinity();
		for (double hi : line.h) {
			if (!(hi > 0.0)) throw std::invalid_argument("line direction must be strictly positive");
			hmax = std::max(hmax, hi);
			hmin = std::min(hmin, hi);
		}
		if (std::abs(hmax - 1.0) > 1e-9)
			throw std::invalid_argument("line direction must satisfy max h_i = 1");

		auto push_field = [&](const FilteredComplex& fc) {
			std::vector<double> field((size_t)fc.complex.vertex_count());
			for (int v = 0; v < fc.complex.vertex_count(); ++v) {
				double m = -std::numeric_limits<double>::infinity();
				for (int i = 0; i < n; ++i)
					m = std::max(m, (fc.filtration.value(v, i) - line.c[i]) / line.h[i]);
				field[v] = m;
			}
			return field;
		};
		auto bf = reduce_persistence(lower_star_filtration(f.complex, push_field(f)));
		auto bg = reduce_persistence(lower_star_filtration(g.complex, push_field(g)));
		double d = hmin * bottleneck(bf, bg).value;
		if (d > best.value) {
			best.value = d;
			best.argmax = line;
		}
	}
	return best;
}

}  // namespace projbar

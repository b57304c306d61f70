#include "projbar/pipeline.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "projbar/io.hpp"

namespace projbar {

using nlohmann::json;

namespace {

void dump_json(const std::filesystem::path& path, const json& j) {
	std::ofstream out(path);
	if (!out) throw std::runtime_error("cannot write " + path.string());
	out << j.dump(2) << '\n';
}

FilteredComplex load(const std::filesystem::path& path) {
	if (!std::filesystem::exists(path))
		throw std::invalid_argument("missing input file: " + path.string());
	return read_filtration_file(path);
}

std::pair<FilteredComplex, FilteredComplex> load_pair(const std::filesystem::path& f,
                                                      const std::filesystem::path& g) {
	auto a = load(f);
	auto b = load(g);
	if (a.filtration.parameter_count != b.filtration.parameter_count)
		throw std::invalid_argument("filtration dimension mismatch between inputs");
	return {std::move(a), std::move(b)};
}

}  // namespace

GenResult run_gen_dataset(const GenConfig& cfg) {
	std::filesystem::create_directories(cfg.out_dir);
	auto x = sample_circle_dataset(cfg.n, cfg.radius, cfg.noise, 0, cfg.seed);
	auto y = sample_circle_dataset(cfg.n, cfg.radius, cfg.noise, cfg.outliers, cfg.seed + 1);
	GenResult res{cfg.out_dir / "X.csv", cfg.out_dir / "Y.csv"};
	write_cloud_csv(res.x_path, x);
	write_cloud_csv(res.y_path, y);
	return res;
}

void run_build(const BuildConfig& cfg) {
	auto cloud = read_cloud_csv(cfg.cloud_csv);
	if (cloud.points.empty()) throw std::invalid_argument("empty point cloud");
	GridSpec grid;
	grid.nx = grid.ny = cfg.grid_resolution;
	double h = cfg.bandwidth ? *cfg.bandwidth : scott_bandwidth(cloud);
	auto dist = distance_field(cloud, grid);
	auto dens = gaussian_kde(cloud, h, grid);
	FilteredComplex fc;
	fc.complex = freudenthal_grid(grid);
	fc.filtration = make_bifiltration(fc.complex, {dist, dens}, {false, true});
	write_filtration_file(cfg.out_path, fc);
}

std::string run_ism(const IsmRunConfig& cfg) {
	auto [f, g] = load_pair(cfg.f_path, cfg.g_path);
	std::filesystem::create_directories(cfg.out_dir);

	IsmResult res = cfg.degrees ? ism_truncated(f, g, cfg.degrees->first, cfg.degrees->second,
	                                            cfg.opt)
	                            : ism_gamma(f, g, cfg.opt);
	const int n = f.filtration.parameter_count;

	// grid sweep portion of the trace is the Upsilon curve
	size_t grid_size = simplex_grid(n, cfg.opt.grid_points).size();
	auto curve_path = cfg.out_dir / (cfg.stem + "_upsilon.csv");
	{
		std::ofstream out(curve_path);
		out.precision(17);
		for (int i = 1; i <= n; ++i) out << 'u' << i << ',';
		out << "upsilon\n";
		for (size_t k = 0; k < grid_size && k < res.trace.size(); ++k) {
			for (double c : res.trace[k].first) out << c << ',';
			out << res.trace[k].second << '\n';
		}
	}
	std::filesystem::path svg_path;
	if (n == 2) {
		std::vector<double> ts, vals;
		for (size_t k = 0; k < grid_size && k < res.trace.size(); ++k) {
			ts.push_back(res.trace[k].first[0]);
			vals.push_back(res.trace[k].second);
		}
		svg_path = cfg.out_dir / (cfg.stem + "_upsilon.svg");
		write_svg_line_plot(svg_path, ts, vals, "t", "bottleneck distance");
	}

	json j;
	j["value"] = res.value;
	j["argmax"] = res.argmax;
	j["evaluations"] = res.trace.size();
	j["config"] = {{"grid_points", cfg.opt.grid_points},
	               {"ascent_iterations", cfg.opt.ascent_iterations},
	               {"step0", cfg.opt.step0},
	               {"interior_margin", cfg.opt.interior_margin},
	               {"multistart", cfg.opt.multistart},
	               {"seed", cfg.opt.seed}};
	if (cfg.degrees) j["config"]["degrees"] = {cfg.degrees->first, cfg.degrees->second};
	j["inputs"] = {cfg.f_path.string(), cfg.g_path.string()};
	j["curve_csv"] = curve_path.string();
	if (!svg_path.empty()) j["curve_svg"] = svg_path.string();
	dump_json(cfg.out_dir / (cfg.stem + ".json"), j);
	return j.dump(2);
}

std::string run_sliced(const SlicedRunConfig& cfg) {
	auto [f, g] = load_pair(cfg.f_path, cfg.g_path);
	std::filesystem::create_directories(cfg.out_dir);
	json j;
	j["values"] = json::object();
	for (int p : cfg.orders)
		j["values"]["p" + std::to_string(p)] = sliced_gamma(f, g, p, cfg.quad);
	j["config"] = {{"trapezoid_points", cfg.quad.trapezoid_points},
	               {"mc_samples", cfg.quad.mc_samples},
	               {"seed", cfg.quad.seed},
	               {"normalization", cfg.quad.mean_normalization ? "mean" : "paper"}};
	j["inputs"] = {cfg.f_path.string(), cfg.g_path.string()};
	dump_json(cfg.out_dir / (cfg.stem + ".json"), j);
	return j.dump(2);
}

std::string run_matching(const MatchingRunConfig& cfg) {
	auto [f, g] = load_pair(cfg.f_path, cfg.g_path);
	if (f.filtration.parameter_count != 2)
		throw std::invalid_argument("matching estimator supports two parameters");
	std::filesystem::create_directories(cfg.out_dir);

	// value range of both filtrations, padded, for the offset grid
	double lo = std::numeric_limits<double>::infinity(), hi = -lo;
	for (const auto* fc : {&f, &g})
		for (double v : fc->filtration.values) {
			lo = std::min(lo, v);
			hi = std::max(hi, v);
		}
	double pad = 0.05 * (hi - lo + 1e-12);
	lo -= pad;
	hi += pad;

	std::vector<LineSpec> lines;
	for (int k = 1; k <= cfg.h_count; ++k) {
		double a = double(k) / cfg.h_count;
		std::vector<std::vector<double>> dirs = {{a, 1.0}};
		if (a != 1.0) dirs.push_back({1.0, a});
		for (auto& h : dirs)
			for (int ci = 0; ci < cfg.c_count; ++ci)
				for (int cj = 0; cj < cfg.c_count; ++cj) {
					double cx = lo + (hi - lo) * ci / std::max(1, cfg.c_count - 1);
					double cy = lo + (hi - lo) * cj / std::max(1, cfg.c_count - 1);
					lines.push_back({h, {cx, cy}});
				}
	}
	auto res = fibered_matching_distance(f, g, lines);

	json j;
	j["value"] = res.value;
	j["argmax"] = {{"h", res.argmax.h}, {"c", res.argmax.c}};
	j["config"] = {{"h_count", cfg.h_count}, {"c_count", cfg.c_count},
	               {"offset_range", {lo, hi}}, {"lines", lines.size()}};
	j["inputs"] = {cfg.f_path.string(), cfg.g_path.string()};
	dump_json(cfg.out_dir / (cfg.stem + ".json"), j);
	return j.dump(2);
}

std::string run_project(const ProjectRunConfig& cfg) {
	auto f = load(cfg.f_path);
	auto u = ProjectionVector::normalized(cfg.u);
	auto barcode = projected_barcode(f, u);
	write_barcode_csv(cfg.out_csv, barcode);
	json j;
	j["u"] = u.coords;
	j["bars"] = barcode.total_bars();
	j["out"] = cfg.out_csv.string();
	return j.dump(2);
}

}  // namespace projbar

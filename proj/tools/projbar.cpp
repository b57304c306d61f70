// Command-line front end: dataset generation, filtration construction and
// the projected-barcode distance computations.

#include <cstdio>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "projbar/pipeline.hpp"

namespace {

std::pair<int, int> parse_degrees(const std::string& spec) {
	auto colon = spec.find(':');
	if (colon == std::string::npos) throw CLI::ValidationError("--degrees expects P:Q");
	return {std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"projected barcodes and sliced distances for bifiltrations"};
	app.require_subcommand(1);

	projbar::GenConfig gen;
	auto* cmd_gen = app.add_subcommand("gen-dataset", "sample the circle datasets X and Y");
	cmd_gen->add_option("--n", gen.n, "points on the circle");
	cmd_gen->add_option("--radius", gen.radius, "circle radius");
	cmd_gen->add_option("--noise", gen.noise, "radial noise amplitude");
	cmd_gen->add_option("--outliers", gen.outliers, "outliers appended to Y");
	cmd_gen->add_option("--seed", gen.seed, "random seed");
	cmd_gen->add_option("--out", gen.out_dir, "output directory");

	projbar::BuildConfig build;
	double bandwidth = -1.0;
	auto* cmd_build = app.add_subcommand("build", "grid bifiltration (distance, -density)");
	cmd_build->add_option("--cloud", build.cloud_csv, "point cloud csv")->required();
	cmd_build->add_option("--grid", build.grid_resolution, "grid nodes per axis");
	cmd_build->add_option("--bandwidth", bandwidth, "kde bandwidth (default: Scott's rule)");
	cmd_build->add_option("--out", build.out_path, "output filtration file")->required();

	projbar::IsmRunConfig ism;
	std::string degrees;
	auto* cmd_ism = app.add_subcommand("ism", "gamma-linear integral sheaf metric");
	cmd_ism->add_option("--f", ism.f_path, "first filtration file")->required();
	cmd_ism->add_option("--g", ism.g_path, "second filtration file")->required();
	cmd_ism->add_option("--grid-points", ism.opt.grid_points, "simplex grid points per axis");
	cmd_ism->add_option("--multistart", ism.opt.multistart, "ascent starts");
	cmd_ism->add_option("--iterations", ism.opt.ascent_iterations, "ascent iterations");
	cmd_ism->add_option("--seed", ism.opt.seed, "random seed");
	cmd_ism->add_option("--degrees", degrees, "degree window P:Q");
	cmd_ism->add_option("--out", ism.out_dir, "output directory");

	projbar::SlicedRunConfig sliced;
	std::string normalization = "paper";
	auto* cmd_sliced = app.add_subcommand("sliced", "gamma-sliced convolution distances");
	cmd_sliced->add_option("--f", sliced.f_path, "first filtration file")->required();
	cmd_sliced->add_option("--g", sliced.g_path, "second filtration file")->required();
	cmd_sliced->add_option("--p", sliced.orders, "orders p (repeatable)");
	cmd_sliced->add_option("--grid-points", sliced.quad.trapezoid_points, "quadrature nodes");
	cmd_sliced->add_option("--mc-samples", sliced.quad.mc_samples, "Monte Carlo draws (n>2)");
	cmd_sliced->add_option("--seed", sliced.quad.seed, "random seed");
	cmd_sliced->add_option("--normalization", normalization, "paper|mean")
	    ->check(CLI::IsMember({"paper", "mean"}));
	cmd_sliced->add_option("--out", sliced.out_dir, "output directory");

	projbar::MatchingRunConfig matching;
	auto* cmd_matching = app.add_subcommand("matching", "fibered matching-distance estimate");
	cmd_matching->add_option("--f", matching.f_path, "first filtration file")->required();
	cmd_matching->add_option("--g", matching.g_path, "second filtration file")->required();
	cmd_matching->add_option("--grid-points", matching.h_count, "directions per family");
	cmd_matching->add_option("--offsets", matching.c_count, "offsets per axis");
	cmd_matching->add_option("--out", matching.out_dir, "output directory");

	projbar::ProjectRunConfig project;
	auto* cmd_project = app.add_subcommand("project", "barcode of one projection");
	cmd_project->add_option("--f", project.f_path, "filtration file")->required();
	cmd_project->add_option("--u", project.u, "projection coordinates")->required();
	cmd_project->add_option("--out", project.out_csv, "barcode csv")->required();

	CLI11_PARSE(app, argc, argv);

	try {
		if (*cmd_gen) {
			auto res = projbar::run_gen_dataset(gen);
			std::cout << res.x_path.string() << '\n' << res.y_path.string() << '\n';
		} else if (*cmd_build) {
			if (bandwidth > 0) build.bandwidth = bandwidth;
			projbar::run_build(build);
			std::cout << build.out_path.string() << '\n';
		} else if (*cmd_ism) {
			if (!degrees.empty()) ism.degrees = parse_degrees(degrees);
			std::cout << projbar::run_ism(ism) << '\n';
		} else if (*cmd_sliced) {
			sliced.quad.mean_normalization = (normalization == "mean");
			std::cout << projbar::run_sliced(sliced) << '\n';
		} else if (*cmd_matching) {
			std::cout << projbar::run_matching(matching) << '\n';
		} else if (*cmd_project) {
			std::cout << projbar::run_project(project) << '\n';
		}
	} catch (const std::invalid_argument& e) {
		std::cerr << "input error: " << e.what() << '\n';
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 3;
	}
	return 0;
}

#include "projbar/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace projbar {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
	std::ofstream out(path);
	if (!out) throw std::runtime_error("cannot write " + path.string());
	out << std::setprecision(17);
	return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
	std::ifstream in(path);
	if (!in) throw std::runtime_error("cannot read " + path.string());
	return in;
}

}  // namespace

void write_filtration_file(const std::filesystem::path& path, const FilteredComplex& fc) {
	auto out = open_out(path);
	const auto& mf = fc.filtration;
	for (int v = 0; v < fc.complex.vertex_count(); ++v) {
		out << "v " << v;
		for (int i = 0; i < mf.parameter_count; ++i) out << ' ' << mf.value(v, i);
		out << '\n';
	}
	for (const auto& s : fc.complex.simplices()) {
		if (s.dim() == 0) continue;
		out << 's';
		for (int v : s.vertices) out << ' ' << v;
		out << '\n';
	}
}

FilteredComplex read_filtration_file(const std::filesystem::path& path) {
	auto in = open_in(path);
	std::vector<std::vector<double>> vertex_values;
	std::vector<std::vector<int>> simplices;
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		std::istringstream ls(line);
		std::string tag;
		if (!(ls >> tag) || tag[0] == '#') continue;
		if (tag == "v") {
			int id;
			if (!(ls >> id) || id < 0)
				throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
				                         ": bad vertex line");
			std::vector<double> vals;
			double x;
			while (ls >> x) vals.push_back(x);
			if (vals.empty())
				throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
				                         ": vertex without filtration values");
			if ((size_t)id >= vertex_values.size()) vertex_values.resize(id + 1);
			vertex_values[id] = std::move(vals);
		} else if (tag == "s") {
			std::vector<int> verts;
			int v;
			while (ls >> v) verts.push_back(v);
			if (verts.empty())
				throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
				                         ": empty simplex line");
			simplices.push_back(std::move(verts));
		} else {
			throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
			                         ": unknown record '" + tag + "'");
		}
	}
	if (vertex_values.empty()) throw std::runtime_error(path.string() + ": no vertices");
	// every vertex is a simplex even when no `s` line mentions it
	for (size_t v = 0; v < vertex_values.size(); ++v) simplices.push_back({(int)v});

	FilteredComplex fc;
	fc.complex = build_complex(simplices);
	const int n = (int)vertex_values.front().size();
	std::vector<std::vector<double>> fields(n, std::vector<double>(vertex_values.size()));
	for (size_t v = 0; v < vertex_values.size(); ++v) {
		if ((int)vertex_values[v].size() != n)
			throw std::runtime_error(path.string() + ": inconsistent filtration arity at vertex " +
			                         std::to_string(v));
		for (int i = 0; i < n; ++i) fields[i][v] = vertex_values[v][i];
	}
	fc.filtration = make_bifiltration(fc.complex, fields);
	return fc;
}

void write_cloud_csv(const std::filesystem::path& path, const PointCloud2D& cloud) {
	auto out = open_out(path);
	out << "x,y\n";
	for (const auto& p : cloud.points) out << p[0] << ',' << p[1] << '\n';
}

PointCloud2D read_cloud_csv(const std::filesystem::path& path) {
	auto in = open_in(path);
	PointCloud2D cloud;
	std::string line;
	bool first = true;
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		if (first) {
			first = false;
			continue;  // header
		}
		auto comma = line.find(',');
		if (comma == std::string::npos)
			throw std::runtime_error(path.string() + ": malformed csv row");
		cloud.points.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
	}
	return cloud;
}

void write_barcode_csv(const std::filesystem::path& path, const GradedBarcode& barcode) {
	auto out = open_out(path);
	out << "degree,birth,death,birth_vertex,death_vertex\n";
	auto endpoint = [](double x) -> std::string {
		if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
		std::ostringstream s;
		s << std::setprecision(17) << x;
		return s.str();
	};
	auto vertex = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
	for (const auto& [d, bars] : barcode.degrees)
		for (const Bar& b : bars)
			out << d << ',' << endpoint(b.birth) << ',' << endpoint(b.death) << ','
			    << vertex(b.birth_vertex) << ',' << vertex(b.death_vertex) << '\n';
}

void write_svg_line_plot(const std::filesystem::path& path, const std::vector<double>& xs,
                         const std::vector<double>& ys, const std::string& x_label,
                         const std::string& y_label) {
	if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("bad plot data");
	const double W = 640, H = 420, ml = 70, mr = 20, mt = 20, mb = 50;
	double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
	for (double x : xs) { xmin = std::min(xmin, x); xmax = std::max(xmax, x); }
	for (double y : ys) { ymin = std::min(ymin, y); ymax = std::max(ymax, y); }
	if (xmax == xmin) xmax = xmin + 1;
	if (ymax == ymin) ymax = ymin + 1;
	ymin = std::min(ymin, 0.0);
	auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
	auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

	auto out = open_out(path);
	out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
	    << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
	out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	// axes
	out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
	    << H - mb << "\" stroke=\"black\"/>\n";
	out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
	    << "\" stroke=\"black\"/>\n";
	const int ticks = 5;
	out << std::setprecision(4);
	for (int k = 0; k <= ticks; ++k) {
		double x = xmin + (xmax - xmin) * k / ticks;
		double y = ymin + (ymax - ymin) * k / ticks;
		out << "<line x1=\"" << px(x) << "\" y1=\"" << H - mb << "\" x2=\"" << px(x) << "\" y2=\""
		    << H - mb + 5 << "\" stroke=\"black\"/>\n";
		out << "<text x=\"" << px(x) << "\" y=\"" << H - mb + 18
		    << "\" font-size=\"11\" text-anchor=\"middle\">" << x << "</text>\n";
		out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(y) << "\" x2=\"" << ml << "\" y2=\""
		    << py(y) << "\" stroke=\"black\"/>\n";
		out << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4
		    << "\" font-size=\"11\" text-anchor=\"end\">" << y << "</text>\n";
	}
	out << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
	    << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n";
	out << "<text x=\"16\" y=\"" << (mt + H - mb) / 2
	    << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
	    << (mt + H - mb) / 2 << ")\">" << y_label << "</text>\n";
	out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
	out << std::setprecision(8);
	for (size_t k = 0; k < xs.size(); ++k) out << px(xs[k]) << ',' << py(ys[k]) << ' ';
	out << "\"/>\n</svg>\n";
}

}  // namespace projbar

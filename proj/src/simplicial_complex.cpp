#include "projbar/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace projbar {

int SimplicialComplex::top_dimension() const {
	int top = -1;
	for (const auto& s : simplices_) top = std::max(top, s.dim());
	return top;
}

int SimplicialComplex::count_of_dimension(int d) const {
	int c = 0;
	for (const auto& s : simplices_) c += (s.dim() == d);
	return c;
}

int SimplicialComplex::find(const std::vector<int>& vertices) const {
	Simplex probe{vertices};
	auto cmp = [](const Simplex& a, const Simplex& b) {
		if (a.dim() != b.dim()) return a.dim() < b.dim();
		return a.vertices < b.vertices;
	};
	auto it = std::lower_bound(simplices_.begin(), simplices_.end(), probe, cmp);
	if (it == simplices_.end() || it->vertices != vertices) return -1;
	return (int)(it - simplices_.begin());
}

std::string SimplicialComplex::validate() const {
	std::set<std::vector<int>> seen;
	for (const auto& s : simplices_) {
		if (s.vertices.empty()) return "empty simplex";
		for (size_t k = 0; k + 1 < s.vertices.size(); ++k)
			if (s.vertices[k] >= s.vertices[k + 1]) return "vertex tuple not strictly increasing";
		if (s.vertices.back() >= vertex_count_) return "vertex id out of range";
		if (!seen.insert(s.vertices).second) return "duplicate simplex";
	}
	for (int i = 0; i < size(); ++i) {
		const auto& s = simplices_[i];
		if (s.dim() == 0) {
			if (!facets_[i].empty()) return "vertex with facets";
			continue;
		}
		if ((int)facets_[i].size() != s.dim() + 1) return "facet count mismatch";
		for (size_t drop = 0; drop < s.vertices.size(); ++drop) {
			std::vector<int> face = s.vertices;
			face.erase(face.begin() + drop);
			int fi = find(face);
			if (fi < 0) return "missing facet (complex not face-closed)";
			if (std::find(facets_[i].begin(), facets_[i].end(), fi) == facets_[i].end())
				return "facet index not recorded";
		}
	}
	return {};
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& input) {
	std::set<std::vector<int>> closure;
	for (const auto& tuple : input) {
		if (tuple.empty()) throw std::invalid_argument("empty simplex tuple");
		std::vector<int> s = tuple;
		std::sort(s.begin(), s.end());
		if (std::adjacent_find(s.begin(), s.end()) != s.end())
			throw std::invalid_argument("simplex tuple with repeated vertex");
		if (s.front() < 0) throw std::invalid_argument("negative vertex id");
		// enumerate all nonempty subsets (simplices here are tiny)
		size_t m = s.size();
		for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
			std::vector<int> face;
			for (size_t b = 0; b < m; ++b)
				if (mask & (size_t(1) << b)) face.push_back(s[b]);
			closure.insert(std::move(face));
		}
	}

	SimplicialComplex out;
	for (const auto& s : closure)
		out.vertex_count_ = std::max(out.vertex_count_, s.back() + 1);
	out.simplices_.reserve(closure.size());
	for (const auto& s : closure) out.simplices_.push_back({s});
	std::sort(out.simplices_.begin(), out.simplices_.end(),
	          [](const SimplicialComplex::Simplex& a, const SimplicialComplex::Simplex& b) {
		          if (a.dim() != b.dim()) return a.dim() < b.dim();
		          return a.vertices < b.vertices;
	          });

	std::map<std::vector<int>, int> index;
	for (int i = 0; i < out.size(); ++i) index[out.simplices_[i].vertices] = i;
	out.facets_.resize(out.size());
	for (int i = 0; i < out.size(); ++i) {
		const auto& v = out.simplices_[i].vertices;
		if (v.size() == 1) continue;
		for (size_t drop = 0; drop < v.size(); ++drop) {
			std::vector<int> face = v;
			face.erase(face.begin() + drop);
			out.facets_[i].push_back(index.at(face));
		}
	}
	return out;
}

void GridSpec::check() const {
	if (!(xmin < xmax) || !(ymin < ymax)) throw std::invalid_argument("grid box is degenerate");
	if (nx < 2 || ny < 2) throw std::invalid_argument("grid resolution must be >= 2 per axis");
}

SimplicialComplex freudenthal_grid(const GridSpec& spec) {
	spec.check();
	std::vector<std::vector<int>> top;
	top.reserve(2 * (spec.nx - 1) * (spec.ny - 1));
	for (int j = 0; j + 1 < spec.ny; ++j) {
		for (int i = 0; i + 1 < spec.nx; ++i) {
			int a = spec.node_id(i, j);
			int b = spec.node_id(i + 1, j);
			int c = spec.node_id(i, j + 1);
			int d = spec.node_id(i + 1, j + 1);
			top.push_back({a, b, d});
			top.push_back({a, c, d});
		}
	}
	if (top.empty()) {
		// cannot happen with nx, ny >= 2
		throw std::logic_error("empty grid");
	}
	return build_complex(top);
}

}  // namespace projbar

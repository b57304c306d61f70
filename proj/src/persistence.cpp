#include "projbar/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace projbar {

bool GradedBarcode::same_bars(const GradedBarcode& other) const {
	auto normalize = [](const GradedBarcode& g) {
		std::map<int, std::vector<Bar>> out;
		for (const auto& [d, bars] : g.degrees) {
			if (bars.empty()) continue;
			auto sorted = bars;
			std::sort(sorted.begin(), sorted.end());
			out[d] = std::move(sorted);
		}
		return out;
	};
	auto a = normalize(*this), b = normalize(other);
	if (a.size() != b.size()) return false;
	for (const auto& [d, bars] : a) {
		auto it = b.find(d);
		if (it == b.end() || it->second.size() != bars.size()) return false;
		for (size_t k = 0; k < bars.size(); ++k)
			if (!(bars[k] == it->second[k])) return false;
	}
	return true;
}

int GradedBarcode::stalk_dim(int degree, double t) const {
	int n = 0;
	for (const Bar& b : at(degree)) n += (b.birth <= t && t < b.death);
	return n;
}

GradedBarcode superlevel_from_sublevel(const GradedBarcode& sub) {
	GradedBarcode out;
	for (const auto& [d, bars] : sub.degrees)
		for (const Bar& b : bars)
			out.add(d, Bar{-b.death, -b.birth, b.death_vertex, b.birth_vertex});
	return out;
}

Filtration1D lower_star_filtration(const SimplicialComplex& complex,
                                   std::span<const double> field) {
	if ((int)field.size() != complex.vertex_count())
		throw std::invalid_argument("field does not cover every vertex");
	for (double x : field)
		if (!std::isfinite(x)) throw std::invalid_argument("non-finite field value");

	const int m = complex.size();
	std::vector<double> value(m);
	std::vector<int> argmax(m);
	for (int i = 0; i < m; ++i) {
		const auto& verts = complex.simplex(i).vertices;
		int best = verts[0];
		for (int v : verts)
			if (field[v] > field[best]) best = v;  // ties keep the smallest id
		value[i] = field[best];
		argmax[i] = best;
	}

	Filtration1D filt;
	filt.complex = &complex;
	filt.order.resize(m);
	std::iota(filt.order.begin(), filt.order.end(), 0);
	std::sort(filt.order.begin(), filt.order.end(), [&](int a, int b) {
		if (value[a] != value[b]) return value[a] < value[b];
		const auto& sa = complex.simplex(a);
		const auto& sb = complex.simplex(b);
		if (sa.dim() != sb.dim()) return sa.dim() < sb.dim();
		return sa.vertices < sb.vertices;
	});
	filt.position.resize(m);
	filt.values.resize(m);
	filt.argmax.resize(m);
	for (int pos = 0; pos < m; ++pos) {
		int s = filt.order[pos];
		filt.position[s] = pos;
		filt.values[pos] = value[s];
		filt.argmax[pos] = argmax[s];
	}
	return filt;
}

namespace {

// Symmetric difference of two sorted index vectors (addition over F2).
void add_column(std::vector<int>& dst, const std::vector<int>& src, std::vector<int>& scratch) {
	scratch.clear();
	std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
	                              std::back_inserter(scratch));
	dst.swap(scratch);
}

}  // namespace

GradedBarcode reduce_persistence(const Filtration1D& filt, int max_degree) {
	const SimplicialComplex& K = *filt.complex;
	const int m = filt.size();
	const int top = K.top_dimension();
	const int dim_cap = max_degree < 0 ? top : std::min(top, max_degree + 1);

	// boundary columns in filtration positions
	std::vector<std::vector<int>> column(m);
	std::vector<int> dim_of(m);
	for (int pos = 0; pos < m; ++pos) {
		int s = filt.order[pos];
		dim_of[pos] = K.simplex(s).dim();
		if (dim_of[pos] == 0 || dim_of[pos] > dim_cap) continue;
		auto& col = column[pos];
		col.reserve(K.facets(s).size());
		for (int f : K.facets(s)) col.push_back(filt.position[f]);
		std::sort(col.begin(), col.end());
	}

	std::vector<int> owner(m, -1);       // pivot position -> killing column
	std::vector<char> cleared(m, 0);     // known-zero columns (twist)
	std::vector<int> scratch;

	for (int d = dim_cap; d >= 1; --d) {
		for (int pos = 0; pos < m; ++pos) {
			if (dim_of[pos] != d || cleared[pos]) continue;
			auto& col = column[pos];
			while (!col.empty()) {
				int pivot = col.back();
				int other = owner[pivot];
				if (other < 0) break;
				add_column(col, column[other], scratch);
			}
			if (!col.empty()) {
				int pivot = col.back();
				owner[pivot] = pos;
				cleared[pivot] = 1;
			}
		}
	}

	GradedBarcode out;
	for (int pos = 0; pos < m; ++pos) {
		int d = dim_of[pos];
		if (max_degree >= 0 && d > max_degree) continue;
		bool positive = (d == 0) || cleared[pos] || column[pos].empty();
		if (!positive) continue;
		if (owner[pos] >= 0) {
			int killer = owner[pos];
			if (filt.values[pos] == filt.values[killer]) continue;  // zero-length
			out.add(d, Bar{filt.values[pos], filt.values[killer], filt.argmax[pos],
			               filt.argmax[killer]});
		} else {
			out.add(d, Bar{filt.values[pos], std::numeric_limits<double>::infinity(),
			               filt.argmax[pos], -1});
		}
	}
	return out;
}

}  // namespace projbar

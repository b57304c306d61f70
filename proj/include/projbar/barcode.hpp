#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace projbar {

// Half-open bar [birth, death); either end may be infinite. The provenance
// vertices are the lower-star argmax vertices of the creating / killing
// simplices (-1 when absent, e.g. essential deaths or synthetic barcodes).
struct Bar {
	double birth = 0.0;
	double death = std::numeric_limits<double>::infinity();
	int birth_vertex = -1;
	int death_vertex = -1;

	friend bool operator==(const Bar& a, const Bar& b) {
		return a.birth == b.birth && a.death == b.death;
	}
	friend bool operator<(const Bar& a, const Bar& b) {
		if (a.birth != b.birth) return a.birth < b.birth;
		return a.death < b.death;
	}
};

// Per-cohomological-degree multiset of bars.
struct GradedBarcode {
	std::map<int, std::vector<Bar>> degrees;

	void add(int degree, Bar bar) { degrees[degree].push_back(bar); }
	const std::vector<Bar>& at(int degree) const {
		static const std::vector<Bar> empty;
		auto it = degrees.find(degree);
		return it == degrees.end() ? empty : it->second;
	}
	size_t total_bars() const {
		size_t n = 0;
		for (const auto& [d, bars] : degrees) n += bars.size();
		return n;
	}
	// Multiset equality on endpoints, ignoring provenance.
	bool same_bars(const GradedBarcode& other) const;
	// Number of bars of the degree containing t (stalk dimension).
	int stalk_dim(int degree, double t) const;
};

// Superlevel-set barcode expressed through sublevel persistence of the
// negated field: every sublevel bar [b,d) maps to [-d,-b), so essential
// classes acquire birth -inf.
GradedBarcode superlevel_from_sublevel(const GradedBarcode& sublevel_of_negated);

}  // namespace projbar

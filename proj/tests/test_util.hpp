#pragma once

// Shared seeded generators for randomized tests.

#include <vector>

#include "projbar/fields.hpp"
#include "projbar/simplicial_complex.hpp"

namespace projbar::testutil {

inline std::vector<double> random_field(SplitMix64& rng, int count, double lo = 0.0,
                                        double hi = 1.0) {
	std::vector<double> f(count);
	for (double& x : f) x = lo + (hi - lo) * rng.next_unit();
	return f;
}

// Random face-closed complex: a vertex pool plus random edges and triangles.
inline SimplicialComplex random_complex(SplitMix64& rng, int vertices, int extra_edges,
                                        int triangles) {
	std::vector<std::vector<int>> simplices;
	for (int v = 0; v < vertices; ++v) simplices.push_back({v});
	auto pick = [&](int n) { return (int)(rng.next_u64() % n); };
	for (int e = 0; e < extra_edges; ++e) {
		int a = pick(vertices), b = pick(vertices);
		if (a == b) continue;
		simplices.push_back({a, b});
	}
	for (int t = 0; t < triangles; ++t) {
		int a = pick(vertices), b = pick(vertices), c = pick(vertices);
		if (a == b || b == c || a == c) continue;
		simplices.push_back({a, b, c});
	}
	return build_complex(simplices);
}

}  // namespace projbar::testutil

#pragma once

#include <span>
#include <vector>

#include "projbar/barcode.hpp"
#include "projbar/simplicial_complex.hpp"

namespace projbar {

// Lower-star total order of a complex under a vertex scalar field. Position
// k holds the k-th simplex of the filtration; values are nondecreasing and
// faces precede cofaces (equal values break ties by dimension, then lex
// vertex tuple).
struct Filtration1D {
	const SimplicialComplex* complex = nullptr;
	std::vector<int> order;        // position -> simplex index
	std::vector<int> position;     // simplex index -> position
	std::vector<double> values;    // by position
	std::vector<int> argmax;       // by position; smallest maximizing vertex id

	int size() const { return (int)order.size(); }
	int dim_at(int pos) const { return complex->simplex(order[pos]).dim(); }
};

Filtration1D lower_star_filtration(const SimplicialComplex& complex,
                                   std::span<const double> field);

// Persistent homology over F2 via column reduction with the twist/clearing
// optimization. Bars are [b,d) per degree, zero-length bars dropped,
// essential classes get death +inf; endpoints carry argmax vertices.
// max_degree < 0 means all degrees.
GradedBarcode reduce_persistence(const Filtration1D& filt, int max_degree = -1);

}  // namespace projbar

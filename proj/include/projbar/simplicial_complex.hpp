#pragma once

#include <string>
#include <vector>

namespace projbar {

// Abstract simplicial complex over integer vertex ids. Simplices are stored
// with strictly increasing vertex tuples, sorted by (dimension, lex order),
// and the complex is always face-closed. Immutable once built.
class SimplicialComplex {
public:
	struct Simplex {
		std::vector<int> vertices;  // strictly increasing
		int dim() const { return (int)vertices.size() - 1; }
	};

	int vertex_count() const { return vertex_count_; }
	int size() const { return (int)simplices_.size(); }
	int top_dimension() const;
	const Simplex& simplex(int i) const { return simplices_[i]; }
	const std::vector<Simplex>& simplices() const { return simplices_; }

	// Indices of the codimension-1 faces of simplex i (empty for vertices).
	const std::vector<int>& facets(int i) const { return facets_[i]; }

	int count_of_dimension(int d) const;

	// Index of a simplex given its sorted vertex tuple, -1 if absent.
	int find(const std::vector<int>& vertices) const;

	// Face-closure invariants; returns a diagnostic message, empty when valid.
	std::string validate() const;

	friend SimplicialComplex build_complex(const std::vector<std::vector<int>>& simplices);

private:
	int vertex_count_ = 0;
	std::vector<Simplex> simplices_;
	std::vector<std::vector<int>> facets_;
};

// Face closure of the given simplices, deduplicated. Vertex ids must be
// nonnegative and tuples free of repeats; tuples need not be sorted.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& simplices);

// Axis-aligned grid over a bounding box; carrier of the point-cloud
// filtrations. Node (i,j) has id j*nx + i.
struct GridSpec {
	double xmin = -1.0, xmax = 1.0;
	double ymin = -1.0, ymax = 1.0;
	int nx = 64, ny = 64;

	void check() const;
	double node_x(int i) const { return xmin + (xmax - xmin) * i / (nx - 1); }
	double node_y(int j) const { return ymin + (ymax - ymin) * j / (ny - 1); }
	int node_id(int i, int j) const { return j * nx + i; }
	int node_count() const { return nx * ny; }
};

// Triangulation of the grid: every cell split along the (+1,+1) diagonal.
SimplicialComplex freudenthal_grid(const GridSpec& spec);

}  // namespace projbar

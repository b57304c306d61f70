#include "projbar/simplicial_complex.hpp"

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace projbar;

TEST_CASE("face closure of one triangle") {
	auto K = build_complex({{0, 1, 2}});
	CHECK(K.vertex_count() == 3);
	CHECK(K.count_of_dimension(0) == 3);
	CHECK(K.count_of_dimension(1) == 3);
	CHECK(K.count_of_dimension(2) == 1);
	CHECK(K.validate().empty());
}

TEST_CASE("empty input gives the empty complex") {
	auto K = build_complex({});
	CHECK(K.vertex_count() == 0);
	CHECK(K.size() == 0);
	CHECK(K.validate().empty());
}

TEST_CASE("hollow triangle stays hollow") {
	auto K = build_complex({{0, 1}, {1, 2}, {0, 2}});
	CHECK(K.vertex_count() == 3);
	CHECK(K.count_of_dimension(1) == 3);
	CHECK(K.count_of_dimension(2) == 0);
}

TEST_CASE("duplicate and unsorted input tuples are merged") {
	auto K = build_complex({{2, 0, 1}, {0, 1, 2}, {1, 0}});
	CHECK(K.count_of_dimension(2) == 1);
	CHECK(K.count_of_dimension(1) == 3);
}

TEST_CASE("repeated vertex in a tuple is rejected") {
	CHECK_THROWS_AS(build_complex({{0, 1, 0}}), std::invalid_argument);
	CHECK_THROWS_AS(build_complex({{}}), std::invalid_argument);
	CHECK_THROWS_AS(build_complex({{-1, 2}}), std::invalid_argument);
}

TEST_CASE("freudenthal grid counts") {
	GridSpec spec;
	spec.nx = spec.ny = 2;
	auto K = freudenthal_grid(spec);
	CHECK(K.count_of_dimension(0) == 4);
	CHECK(K.count_of_dimension(1) == 5);
	CHECK(K.count_of_dimension(2) == 2);

	// (r-1)^2 cells, two triangles each; edges split into horizontal,
	// vertical and diagonal families
	spec.nx = spec.ny = 3;
	K = freudenthal_grid(spec);
	CHECK(K.count_of_dimension(0) == 9);
	CHECK(K.count_of_dimension(1) == 16);
	CHECK(K.count_of_dimension(2) == 8);

	spec.nx = 2;
	spec.ny = 3;
	K = freudenthal_grid(spec);
	CHECK(K.count_of_dimension(0) == 6);
	CHECK(K.count_of_dimension(1) == 9);
	CHECK(K.count_of_dimension(2) == 4);
}

TEST_CASE("freudenthal grids are face-closed across resolutions") {
	for (int nx : {2, 3, 5}) {
		for (int ny : {2, 4}) {
			GridSpec spec;
			spec.nx = nx;
			spec.ny = ny;
			auto K = freudenthal_grid(spec);
			CAPTURE(nx);
			CAPTURE(ny);
			CHECK(K.validate().empty());
			int cells = (nx - 1) * (ny - 1);
			CHECK(K.count_of_dimension(2) == 2 * cells);
			int edges = (nx - 1) * ny + (ny - 1) * nx + cells;
			CHECK(K.count_of_dimension(1) == edges);
		}
	}
}

TEST_CASE("grid spec invariants") {
	GridSpec bad;
	bad.nx = 1;
	CHECK_THROWS_AS(freudenthal_grid(bad), std::invalid_argument);
	GridSpec flipped;
	flipped.xmin = 1.0;
	flipped.xmax = -1.0;
	CHECK_THROWS_AS(freudenthal_grid(flipped), std::invalid_argument);
}

TEST_CASE("random complexes validate") {
	SplitMix64 rng(11);
	for (int trial = 0; trial < 10; ++trial) {
		auto K = testutil::random_complex(rng, 8, 10, 4);
		CHECK(K.validate().empty());
	}
}

#pragma once

// Independent brute-force implementations, used by tests only. Clarity over
// speed; hard size caps keep them off large inputs.

#include <vector>

#include "projbar/interval_sheaf.hpp"
#include "projbar/persistence.hpp"

namespace projbar::oracles {

// Textbook left-to-right column reduction, no optimizations; same output
// contract as reduce_persistence.
GradedBarcode naive_reduce(const Filtration1D& filt);

// Minimum over all partial matchings of the max per-term cost, degree by
// degree; throws beyond 8 bars per side per degree.
double exhaustive_bottleneck(const GradedBarcode& b1, const GradedBarcode& b2);

// Fiber of a support under a nonnegative linear form, as segments with
// boundary flags. Infinite ends count as open.
struct FiberSegment {
	ExtRat lo, hi;
	bool closed_lo = false, closed_hi = false;
};

struct StalkDims {
	int deg0 = 0;
	int deg1 = 0;

	bool operator==(const StalkDims&) const = default;
};

struct RectSupport {
	IntervalQ x, y;  // half-open, possibly right-unbounded
};

std::vector<FiberSegment> fiber_segments(const RectSupport& rect, const Rational& u1,
                                         const Rational& u2, const Rational& t);
std::vector<FiberSegment> fiber_segments(const StaircaseSupport& staircase, const Rational& u1,
                                         const Rational& u2, const Rational& t);

// Segment rule: closed -> (1,0), half-open -> (0,0), open -> (0,1), summed
// over segments.
StalkDims stalk_of_segments(const std::vector<FiberSegment>& segments);
StalkDims fiber_cohomology(const RectSupport& rect, const Rational& u1, const Rational& u2,
                           const Rational& t);
StalkDims fiber_cohomology(const StaircaseSupport& staircase, const Rational& u1,
                           const Rational& u2, const Rational& t);

// Compactly supported Euler characteristic of one segment.
int euler_characteristic_c(const FiberSegment& segment);

}  // namespace projbar::oracles

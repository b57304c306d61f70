#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "projbar/barcode.hpp"
#include "projbar/rational.hpp"

namespace projbar {

// One-dimensional interval sheaf with rational endpoints. Intervals are
// closed-left open-right [left, right); the degenerate `point` form {left}
// exists only as the convolution unit.
struct IntervalQ {
	ExtRat left;
	ExtRat right;
	bool point = false;
	int shift = 0;

	static IntervalQ half_open(ExtRat left, ExtRat right, int shift = 0);
	static IntervalQ at_point(Rational x, int shift = 0);
};

// k_{I x J} placed in cohomological degree `degree`.
struct RectangleSummand {
	IntervalQ x;
	IntervalQ y;
	int degree = 0;
};

struct RectangleModuleSum {
	std::vector<RectangleSummand> summands;
};

// Outer rectangle minus a strictly smaller notch rectangle sharing its
// lower-left corner; all boundaries closed-left open-right. Used for line
// restriction only.
struct StaircaseSupport {
	Rational x0, y0;       // lower-left corner
	ExtRat x1, y1;         // outer open-right bounds
	Rational notch_x, notch_y;  // notch open-right bounds

	void check() const;
};

// Exact graded barcode; degree -> multiset of [left, right) endpoint pairs.
struct RatBarcode {
	std::map<int, std::vector<std::pair<ExtRat, ExtRat>>> degrees;

	void add(int degree, ExtRat left, ExtRat right);
	bool operator==(const RatBarcode& other) const;
	GradedBarcode to_graded() const;
	size_t total_bars() const;
};

// Direct image under x -> lambda x: a scaled interval for lambda > 0, the
// zero object (nullopt) for lambda = 0 on any half-open or unbounded
// interval. Negative lambda is rejected.
std::optional<IntervalQ> scale_interval(const IntervalQ& interval, const Rational& lambda);

// Interval convolution k_I * k_J decomposed into degree-shifted intervals.
// For finite [a,b), [c,d): a degree-0 part [a+c, min(a+d,b+c)) and a
// degree-1 part [max(a+d,b+c), b+d), empty parts dropped; right-unbounded
// inputs contribute only the degree-0 part.
std::vector<IntervalQ> convolve_intervals(const IntervalQ& lhs, const IntervalQ& rhs);

// Pushforward of a rectangle direct sum along the nonnegative linear form
// (u1, u2): summand-wise scale-then-convolve with the summand's degree shift
// added. u = 0 is rejected.
RatBarcode pushforward_rectangles(const RectangleModuleSum& module, const Rational& u1,
                                  const Rational& u2);

// Restriction of the support to the positive line {c + t h}: each summand
// meets the line in one [t_in, t_out) interval (or not at all).
std::vector<std::pair<ExtRat, ExtRat>> restrict_to_line(const RectangleModuleSum& module,
                                                        const Rational& hx, const Rational& hy,
                                                        const Rational& cx, const Rational& cy);
std::optional<std::pair<ExtRat, ExtRat>> restrict_to_line(const StaircaseSupport& staircase,
                                                          const Rational& hx, const Rational& hy,
                                                          const Rational& cx, const Rational& cy);

// Text format: one summand per line, `rect <deg> <a1> <b1> <a2> <b2>`,
// with `inf` allowed for the b's. Tokens are integers, fractions `p/q`, or
// finite decimals.
RectangleModuleSum parse_rectangle_sum(std::istream& in);
std::string format_rectangle_sum(const RectangleModuleSum& module);
Rational parse_rational(const std::string& token);
ExtRat parse_ext_rat(const std::string& token);

}  // namespace projbar

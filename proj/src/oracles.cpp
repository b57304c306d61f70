#include "projbar/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "projbar/bottleneck.hpp"

namespace projbar::oracles {

GradedBarcode naive_reduce(const Filtration1D& filt) {
	const SimplicialComplex& K = *filt.complex;
	const int m = filt.size();

	std::vector<std::vector<int>> column(m);
	for (int pos = 0; pos < m; ++pos) {
		int s = filt.order[pos];
		for (int f : K.facets(s)) column[pos].push_back(filt.position[f]);
		std::sort(column[pos].begin(), column[pos].end());
	}

	std::vector<int> owner(m, -1);
	for (int pos = 0; pos < m; ++pos) {
		auto& col = column[pos];
		while (!col.empty() && owner[col.back()] >= 0) {
			const auto& other = column[owner[col.back()]];
			std::vector<int> merged;
			std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
			                              std::back_inserter(merged));
			col = std::move(merged);
		}
		if (!col.empty()) owner[col.back()] = pos;
	}

	GradedBarcode out;
	for (int pos = 0; pos < m; ++pos) {
		if (!column[pos].empty()) continue;  // negative simplex
		int d = K.simplex(filt.order[pos]).dim();
		int killer = owner[pos];
		if (killer >= 0) {
			if (filt.values[pos] == filt.values[killer]) continue;
			out.add(d, Bar{filt.values[pos], filt.values[killer], filt.argmax[pos],
			               filt.argmax[killer]});
		} else {
			out.add(d, Bar{filt.values[pos], std::numeric_limits<double>::infinity(),
			               filt.argmax[pos], -1});
		}
	}
	return out;
}

namespace {

double degree_exhaustive(const std::vector<Bar>& b1, const std::vector<Bar>& b2) {
	if (b1.size() > 8 || b2.size() > 8)
		throw std::invalid_argument("exhaustive bottleneck capped at 8 bars per side");
	const int n1 = (int)b1.size(), n2 = (int)b2.size();
	// state: next b1 index, mask of used b2 bars
	std::map<std::pair<int, unsigned>, double> memo;
	auto rec = [&](auto&& self, int i, unsigned mask) -> double {
		auto key = std::make_pair(i, mask);
		auto it = memo.find(key);
		if (it != memo.end()) return it->second;
		double best;
		if (i == n1) {
			best = 0.0;
			for (int j = 0; j < n2; ++j)
				if (!(mask & (1u << j))) best = std::max(best, unmatched_cost(b2[j]));
		} else {
			best = std::max(unmatched_cost(b1[i]), self(self, i + 1, mask));
			for (int j = 0; j < n2; ++j) {
				if (mask & (1u << j)) continue;
				double c = std::max(pair_cost(b1[i], b2[j]), self(self, i + 1, mask | (1u << j)));
				best = std::min(best, c);
			}
		}
		memo[key] = best;
		return best;
	};
	return rec(rec, 0, 0u);
}

}  // namespace

double exhaustive_bottleneck(const GradedBarcode& b1, const GradedBarcode& b2) {
	std::set<int> degrees;
	for (const auto& [d, bars] : b1.degrees)
		if (!bars.empty()) degrees.insert(d);
	for (const auto& [d, bars] : b2.degrees)
		if (!bars.empty()) degrees.insert(d);
	double worst = 0.0;
	for (int d : degrees) worst = std::max(worst, degree_exhaustive(b1.at(d), b2.at(d)));
	return worst;
}

namespace {

struct Constraint {
	ExtRat value;
	bool closed;
};

// Fiber of [xa,xb) x [ya,yb) over u1 x + u2 y = t, parameterized by the
// coordinate with a nonzero weight on the other one.
std::optional<FiberSegment> rect_fiber(const IntervalQ& xi, const IntervalQ& yi,
                                       const Rational& u1, const Rational& u2,
                                       const Rational& t) {
	if (u1 < Rational(0) || u2 < Rational(0))
		throw std::invalid_argument("linear form must be nonnegative");
	if (u1 == Rational(0) && u2 == Rational(0))
		throw std::invalid_argument("zero linear form");

	auto fixed_coordinate_case = [&](const IntervalQ& fixed, const IntervalQ& free,
	                                 const Rational& weight) -> std::optional<FiberSegment> {
		Rational at = t / weight;
		if (ExtRat(at) < fixed.left || !(ExtRat(at) < fixed.right)) return std::nullopt;
		return FiberSegment{free.left, free.right, true, false};
	};
	if (u1 == Rational(0)) return fixed_coordinate_case(yi, xi, u2);
	if (u2 == Rational(0)) return fixed_coordinate_case(xi, yi, u1);

	// parameterize by x: y = (t - u1 x)/u2
	Constraint lo{xi.left, true};
	Constraint hi{xi.right, false};
	if (yi.right.finite()) {
		// y < yb  <=>  x > (t - u2 yb)/u1
		Constraint c{ExtRat((t - u2 * yi.right.value()) / u1), false};
		if (lo.value < c.value || (lo.value == c.value && lo.closed)) lo = c;
	}
	{
		// y >= ya  <=>  x <= (t - u2 ya)/u1
		Constraint c{ExtRat((t - u2 * yi.left.value()) / u1), true};
		if (c.value < hi.value || (c.value == hi.value && hi.closed)) hi = c;
	}
	if (lo.value > hi.value) return std::nullopt;
	if (lo.value == hi.value && !(lo.closed && hi.closed)) return std::nullopt;
	if (!lo.value.finite() || (!hi.value.finite() && hi.value.is_neg_inf())) return std::nullopt;
	return FiberSegment{lo.value, hi.value, lo.value.finite() && lo.closed,
	                    hi.value.finite() && hi.closed};
}

}  // namespace

std::vector<FiberSegment> fiber_segments(const RectSupport& rect, const Rational& u1,
                                         const Rational& u2, const Rational& t) {
	auto seg = rect_fiber(rect.x, rect.y, u1, u2, t);
	if (!seg) return {};
	return {*seg};
}

std::vector<FiberSegment> fiber_segments(const StaircaseSupport& staircase, const Rational& u1,
                                         const Rational& u2, const Rational& t) {
	staircase.check();
	IntervalQ outer_x = IntervalQ::half_open(ExtRat(staircase.x0), staircase.x1);
	IntervalQ outer_y = IntervalQ::half_open(ExtRat(staircase.y0), staircase.y1);
	IntervalQ notch_x = IntervalQ::half_open(ExtRat(staircase.x0), ExtRat(staircase.notch_x));
	IntervalQ notch_y = IntervalQ::half_open(ExtRat(staircase.y0), ExtRat(staircase.notch_y));
	auto outer = rect_fiber(outer_x, outer_y, u1, u2, t);
	if (!outer) return {};
	auto notch = rect_fiber(notch_x, notch_y, u1, u2, t);
	if (!notch) return {*outer};

	// subtract the notch segment; both live in the same parameterization
	std::vector<FiberSegment> out;
	auto keep = [&](FiberSegment s) {
		if (s.lo > s.hi) return;
		if (s.lo == s.hi && !(s.closed_lo && s.closed_hi)) return;
		out.push_back(s);
	};
	// left piece: points of outer strictly before the notch starts
	keep({outer->lo, notch->lo, outer->closed_lo && outer->lo.finite(), !notch->closed_lo});
	// right piece: points of outer past the notch end
	keep({notch->hi, outer->hi, !notch->closed_hi, outer->closed_hi && outer->hi.finite()});
	// clip pieces to the outer segment
	std::vector<FiberSegment> clipped;
	for (auto& s : out) {
		FiberSegment c = s;
		if (c.lo < outer->lo || (c.lo == outer->lo && !outer->closed_lo && c.closed_lo)) {
			c.lo = outer->lo;
			c.closed_lo = outer->closed_lo;
		}
		if (outer->hi < c.hi || (c.hi == outer->hi && !outer->closed_hi && c.closed_hi)) {
			c.hi = outer->hi;
			c.closed_hi = outer->closed_hi;
		}
		if (c.lo > c.hi) continue;
		if (c.lo == c.hi && !(c.closed_lo && c.closed_hi)) continue;
		clipped.push_back(c);
	}
	return clipped;
}

StalkDims stalk_of_segments(const std::vector<FiberSegment>& segments) {
	StalkDims dims;
	for (const auto& s : segments) {
		bool lo_closed = s.closed_lo && s.lo.finite();
		bool hi_closed = s.closed_hi && s.hi.finite();
		if (lo_closed && hi_closed) dims.deg0 += 1;
		else if (!lo_closed && !hi_closed) dims.deg1 += 1;
		// half-open: no compactly supported cohomology
	}
	return dims;
}

StalkDims fiber_cohomology(const RectSupport& rect, const Rational& u1, const Rational& u2,
                           const Rational& t) {
	return stalk_of_segments(fiber_segments(rect, u1, u2, t));
}

StalkDims fiber_cohomology(const StaircaseSupport& staircase, const Rational& u1,
                           const Rational& u2, const Rational& t) {
	return stalk_of_segments(fiber_segments(staircase, u1, u2, t));
}

int euler_characteristic_c(const FiberSegment& segment) {
	bool lo_closed = segment.closed_lo && segment.lo.finite();
	bool hi_closed = segment.closed_hi && segment.hi.finite();
	if (lo_closed && hi_closed) return 1;
	if (!lo_closed && !hi_closed) return -1;
	return 0;
}

}  // namespace projbar::oracles

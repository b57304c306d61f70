#include "projbar/interval_sheaf.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace projbar {

IntervalQ IntervalQ::half_open(ExtRat left, ExtRat right, int shift) {
	if (left.is_pos_inf() || right.is_neg_inf() || !(left < right))
		throw std::invalid_argument("empty or reversed interval");
	return IntervalQ{left, right, false, shift};
}

IntervalQ IntervalQ::at_point(Rational x, int shift) {
	return IntervalQ{ExtRat(x), ExtRat(x), true, shift};
}

void StaircaseSupport::check() const {
	if (!(ExtRat(x0) < x1) || !(ExtRat(y0) < y1))
		throw std::invalid_argument("degenerate outer rectangle");
	if (!(x0 < notch_x) || !(y0 < notch_y))
		throw std::invalid_argument("empty notch");
	if (!(ExtRat(notch_x) < x1) || !(ExtRat(notch_y) < y1))
		throw std::invalid_argument("notch must be strictly smaller than the outer rectangle");
}

void RatBarcode::add(int degree, ExtRat left, ExtRat right) {
	degrees[degree].push_back({left, right});
}

bool RatBarcode::operator==(const RatBarcode& other) const {
	auto canon = [](const RatBarcode& b) {
		std::map<int, std::vector<std::pair<ExtRat, ExtRat>>> out;
		for (const auto& [d, bars] : b.degrees) {
			if (bars.empty()) continue;
			auto v = bars;
			std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
				if (a.first != b.first) return a.first < b.first;
				return a.second < b.second;
			});
			out[d] = std::move(v);
		}
		return out;
	};
	return canon(*this) == canon(other);
}

GradedBarcode RatBarcode::to_graded() const {
	GradedBarcode g;
	for (const auto& [d, bars] : degrees)
		for (const auto& [l, r] : bars) g.add(d, Bar{l.to_double(), r.to_double(), -1, -1});
	return g;
}

size_t RatBarcode::total_bars() const {
	size_t n = 0;
	for (const auto& [d, bars] : degrees) n += bars.size();
	return n;
}

std::optional<IntervalQ> scale_interval(const IntervalQ& interval, const Rational& lambda) {
	if (lambda < Rational(0)) throw std::invalid_argument("negative scaling");
	if (lambda == Rational(0)) {
		if (interval.point) return IntervalQ::at_point(Rational(0), interval.shift);
		// compactly supported cohomology of a half-open or unbounded
		// interval vanishes, so the constant map sends it to zero
		return std::nullopt;
	}
	if (interval.point)
		return IntervalQ::at_point(interval.left.value() * lambda, interval.shift);
	return IntervalQ::half_open(interval.left.scaled(lambda), interval.right.scaled(lambda),
	                            interval.shift);
}

std::vector<IntervalQ> convolve_intervals(const IntervalQ& lhs, const IntervalQ& rhs) {
	const int shift = lhs.shift + rhs.shift;
	if (lhs.point) {
		Rational t = lhs.left.value();
		if (rhs.point) return {IntervalQ::at_point(rhs.left.value() + t, shift)};
		return {IntervalQ::half_open(rhs.left + t, rhs.right + t, shift)};
	}
	if (rhs.point) return convolve_intervals(rhs, lhs);

	if (!lhs.left.finite() || !rhs.left.finite())
		throw std::invalid_argument("convolution requires finite left endpoints");
	const Rational a = lhs.left.value();
	const Rational c = rhs.left.value();
	std::vector<IntervalQ> out;

	if (!lhs.right.finite() && !rhs.right.finite()) {
		out.push_back(IntervalQ::half_open(ExtRat(a + c), ExtRat::pos_inf(), shift));
		return out;
	}
	if (!rhs.right.finite()) {
		// [a,b) * [c,inf) -> degree 0 on [a+c, b+c)
		Rational b = lhs.right.value();
		out.push_back(IntervalQ::half_open(ExtRat(a + c), ExtRat(b + c), shift));
		return out;
	}
	if (!lhs.right.finite()) return convolve_intervals(rhs, lhs);

	const Rational b = lhs.right.value();
	const Rational d = rhs.right.value();
	Rational lo0 = a + c;
	Rational hi0 = std::min(a + d, b + c);
	Rational lo1 = std::max(a + d, b + c);
	Rational hi1 = b + d;
	if (lo0 < hi0) out.push_back(IntervalQ::half_open(ExtRat(lo0), ExtRat(hi0), shift));
	if (lo1 < hi1) out.push_back(IntervalQ::half_open(ExtRat(lo1), ExtRat(hi1), shift + 1));
	return out;
}

RatBarcode pushforward_rectangles(const RectangleModuleSum& module, const Rational& u1,
                                  const Rational& u2) {
	if (u1 < Rational(0) || u2 < Rational(0))
		throw std::invalid_argument("projection coordinates must be nonnegative");
	if (u1 == Rational(0) && u2 == Rational(0))
		throw std::invalid_argument("zero projection vector");
	RatBarcode out;
	for (const auto& s : module.summands) {
		auto sx = scale_interval(s.x, u1);
		auto sy = scale_interval(s.y, u2);
		if (!sx || !sy) continue;
		for (const auto& bar : convolve_intervals(*sx, *sy))
			out.add(s.degree + bar.shift, bar.left, bar.right);
	}
	return out;
}

namespace {

struct LineWindow {
	ExtRat entry = ExtRat::neg_inf();
	ExtRat exit = ExtRat::pos_inf();

	// closed-left constraint coordinate >= a: t >= (a - c)/h
	void enter_at(const Rational& a, const Rational& c, const Rational& h) {
		entry = max(entry, ExtRat((a - c) / h));
	}
	// open-right constraint coordinate < b
	void exit_at(const ExtRat& b, const Rational& c, const Rational& h) {
		if (!b.finite()) return;
		exit = min(exit, ExtRat((b.value() - c) / h));
	}
	std::optional<std::pair<ExtRat, ExtRat>> interval() const {
		if (!(entry < exit)) return std::nullopt;
		return std::make_pair(entry, exit);
	}
};

void check_direction(const Rational& hx, const Rational& hy) {
	if (!(Rational(0) < hx) || !(Rational(0) < hy))
		throw std::invalid_argument("line direction must be strictly positive");
}

}  // namespace

std::vector<std::pair<ExtRat, ExtRat>> restrict_to_line(const RectangleModuleSum& module,
                                                        const Rational& hx, const Rational& hy,
                                                        const Rational& cx, const Rational& cy) {
	check_direction(hx, hy);
	std::vector<std::pair<ExtRat, ExtRat>> out;
	for (const auto& s : module.summands) {
		if (s.x.point || s.y.point)
			throw std::invalid_argument("line restriction expects half-open rectangles");
		LineWindow w;
		w.enter_at(s.x.left.value(), cx, hx);
		w.exit_at(s.x.right, cx, hx);
		w.enter_at(s.y.left.value(), cy, hy);
		w.exit_at(s.y.right, cy, hy);
		if (auto iv = w.interval()) out.push_back(*iv);
	}
	return out;
}

std::optional<std::pair<ExtRat, ExtRat>> restrict_to_line(const StaircaseSupport& staircase,
                                                          const Rational& hx, const Rational& hy,
                                                          const Rational& cx, const Rational& cy) {
	check_direction(hx, hy);
	staircase.check();
	LineWindow w;
	w.enter_at(staircase.x0, cx, hx);
	w.exit_at(staircase.x1, cx, hx);
	w.enter_at(staircase.y0, cy, hy);
	w.exit_at(staircase.y1, cy, hy);
	// outside the notch means x >= notch_x or y >= notch_y; along a positive
	// line that threshold is cleared at the earlier of the two times and
	// never re-entered
	ExtRat clear = min(ExtRat((staircase.notch_x - cx) / hx), ExtRat((staircase.notch_y - cy) / hy));
	w.entry = max(w.entry, clear);
	return w.interval();
}

Rational parse_rational(const std::string& token) {
	auto slash = token.find('/');
	if (slash != std::string::npos) {
		return Rational(std::stoll(token.substr(0, slash)), std::stoll(token.substr(slash + 1)));
	}
	auto dot = token.find('.');
	if (dot != std::string::npos) {
		std::string digits = token.substr(0, dot) + token.substr(dot + 1);
		std::int64_t den = 1;
		for (size_t k = dot + 1; k < token.size(); ++k) den *= 10;
		return Rational(std::stoll(digits), den);
	}
	return Rational(std::stoll(token));
}

ExtRat parse_ext_rat(const std::string& token) {
	if (token == "inf" || token == "+inf") return ExtRat::pos_inf();
	if (token == "-inf") return ExtRat::neg_inf();
	return ExtRat(parse_rational(token));
}

RectangleModuleSum parse_rectangle_sum(std::istream& in) {
	RectangleModuleSum out;
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		std::istringstream ls(line);
		std::string tag;
		if (!(ls >> tag) || tag[0] == '#') continue;
		if (tag != "rect")
			throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'rect'");
		int deg;
		std::string a1, b1, a2, b2;
		if (!(ls >> deg >> a1 >> b1 >> a2 >> b2))
			throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed summand");
		out.summands.push_back({IntervalQ::half_open(parse_ext_rat(a1), parse_ext_rat(b1)),
		                        IntervalQ::half_open(parse_ext_rat(a2), parse_ext_rat(b2)), deg});
	}
	return out;
}

std::string format_rectangle_sum(const RectangleModuleSum& module) {
	std::ostringstream os;
	for (const auto& s : module.summands)
		os << "rect " << s.degree << ' ' << s.x.left.str() << ' ' << s.x.right.str() << ' '
		   << s.y.left.str() << ' ' << s.y.right.str() << '\n';
	return os.str();
}

}  // namespace projbar

#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace projbar {

// Exact rational on int64 with gcd normalization (den > 0). Endpoint
// arithmetic in the rectangle calculus stays within a few digits, but
// products are still guarded through __int128 so silent wraparound cannot
// corrupt an "exact" result.
class Rational {
public:
	Rational() : num_(0), den_(1) {}
	Rational(std::int64_t n) : num_(n), den_(1) {}
	Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

	std::int64_t num() const { return num_; }
	std::int64_t den() const { return den_; }

	friend Rational operator+(const Rational& a, const Rational& b) {
		return from_i128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
		                 (__int128)a.den_ * b.den_);
	}
	friend Rational operator-(const Rational& a, const Rational& b) {
		return from_i128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
		                 (__int128)a.den_ * b.den_);
	}
	friend Rational operator*(const Rational& a, const Rational& b) {
		return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
	}
	friend Rational operator/(const Rational& a, const Rational& b) {
		if (b.num_ == 0) throw std::domain_error("rational division by zero");
		return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
	}
	Rational operator-() const { return Rational(-num_, den_); }

	friend bool operator==(const Rational& a, const Rational& b) {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
	friend bool operator<(const Rational& a, const Rational& b) {
		return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
	}
	friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
	friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
	friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

	double to_double() const { return double(num_) / double(den_); }

	std::string str() const {
		if (den_ == 1) return std::to_string(num_);
		return std::to_string(num_) + "/" + std::to_string(den_);
	}

private:
	static Rational from_i128(__int128 n, __int128 d) {
		if (d == 0) throw std::domain_error("rational with zero denominator");
		if (d < 0) { n = -n; d = -d; }
		__int128 g = gcd128(n < 0 ? -n : n, d);
		if (g > 1) { n /= g; d /= g; }
		if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
			throw std::overflow_error("rational overflow");
		Rational r;
		r.num_ = (std::int64_t)n;
		r.den_ = (std::int64_t)d;
		return r;
	}
	static __int128 gcd128(__int128 a, __int128 b) {
		while (b != 0) { __int128 t = a % b; a = b; b = t; }
		return a == 0 ? 1 : a;
	}
	void normalize() {
		if (den_ == 0) throw std::domain_error("rational with zero denominator");
		if (den_ < 0) { num_ = -num_; den_ = -den_; }
		std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
		if (g > 1) { num_ /= g; den_ /= g; }
	}

	std::int64_t num_;
	std::int64_t den_;
};

// Rational extended with the two infinities; the only values interval
// endpoints range over.
class ExtRat {
public:
	enum class Kind { NegInf, Finite, PosInf };

	ExtRat() : kind_(Kind::Finite), value_() {}
	ExtRat(Rational v) : kind_(Kind::Finite), value_(v) {}
	ExtRat(std::int64_t v) : kind_(Kind::Finite), value_(v) {}
	static ExtRat pos_inf() { ExtRat e; e.kind_ = Kind::PosInf; return e; }
	static ExtRat neg_inf() { ExtRat e; e.kind_ = Kind::NegInf; return e; }

	bool finite() const { return kind_ == Kind::Finite; }
	bool is_pos_inf() const { return kind_ == Kind::PosInf; }
	bool is_neg_inf() const { return kind_ == Kind::NegInf; }
	const Rational& value() const {
		if (!finite()) throw std::domain_error("infinite endpoint has no value");
		return value_;
	}

	friend bool operator==(const ExtRat& a, const ExtRat& b) {
		if (a.kind_ != b.kind_) return false;
		return a.kind_ != Kind::Finite || a.value_ == b.value_;
	}
	friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
	friend bool operator<(const ExtRat& a, const ExtRat& b) {
		if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.value_ < b.value_;
		if (a.kind_ == Kind::NegInf) return true;
		if (b.kind_ == Kind::PosInf) return true;
		return false;
	}
	friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
	friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
	friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

	// Addition with a finite rational; infinite endpoints absorb.
	friend ExtRat operator+(const ExtRat& a, const Rational& b) {
		if (!a.finite()) return a;
		return ExtRat(a.value_ + b);
	}
	// Scaling by a strictly positive rational preserves infinities.
	ExtRat scaled(const Rational& lambda) const {
		if (!finite()) return *this;
		return ExtRat(value_ * lambda);
	}

	double to_double() const {
		if (kind_ == Kind::PosInf) return std::numeric_limits<double>::infinity();
		if (kind_ == Kind::NegInf) return -std::numeric_limits<double>::infinity();
		return value_.to_double();
	}

	std::string str() const {
		if (kind_ == Kind::PosInf) return "inf";
		if (kind_ == Kind::NegInf) return "-inf";
		return value_.str();
	}

private:
	Kind kind_;
	Rational value_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

}  // namespace projbar

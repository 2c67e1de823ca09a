#pragma once
#include "errors.hpp"
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace ainfb {

// Exact fraction over int64. Coefficients in this library are sums of small
// integers, so reduced arithmetic never gets near overflow.
class Rational {
  public:
	Rational() = default;
	Rational(long long n) : num_(n) {}
	Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

	long long num() const { return num_; }
	long long den() const { return den_; }
	bool is_zero() const { return num_ == 0; }
	bool is_integer() const { return den_ == 1; }

	friend Rational operator+(const Rational &a, const Rational &b) {
		return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
	}
	friend Rational operator-(const Rational &a, const Rational &b) {
		return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
	}
	friend Rational operator*(const Rational &a, const Rational &b) {
		return Rational(a.num_ * b.num_, a.den_ * b.den_);
	}
	Rational operator-() const { return Rational(-num_, den_, nocheck{}); }
	bool operator==(const Rational &) const = default;

	std::string str() const {
		if (den_ == 1)
			return std::to_string(num_);
		return std::to_string(num_) + "/" + std::to_string(den_);
	}

  private:
	struct nocheck {};
	Rational(long long n, long long d, nocheck) : num_(n), den_(d) {}
	void normalize() {
		if (den_ == 0)
			fail(Errc::bad_argument, "rational with zero denominator");
		if (den_ < 0) {
			num_ = -num_;
			den_ = -den_;
		}
		long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
		if (g > 1) {
			num_ /= g;
			den_ /= g;
		}
	}
	long long num_ = 0;
	long long den_ = 1;
};

enum class RingKind { mod2, rationals, exterior };
enum class BaseField { mod2, rationals };

// Coefficient ring. "exterior" is base[x]/(x^2) with one generator x of
// degree x_degree >= 1 over the chosen base field.
struct Ring {
	RingKind kind = RingKind::mod2;
	BaseField base = BaseField::mod2;
	int x_degree = 0;

	static Ring mod2() { return {RingKind::mod2, BaseField::mod2, 0}; }
	static Ring rationals() { return {RingKind::rationals, BaseField::rationals, 0}; }
	static Ring exterior(BaseField b, int xdeg) {
		if (xdeg < 1)
			fail(Errc::bad_argument, "exterior coefficient degree must be >= 1");
		return {RingKind::exterior, b, xdeg};
	}

	bool has_x() const { return kind == RingKind::exterior; }
	// true when 1 + 1 = 0, i.e. omitted relation signs cannot matter
	bool char2() const {
		return kind == RingKind::mod2 || (kind == RingKind::exterior && base == BaseField::mod2);
	}
	bool operator==(const Ring &) const = default;
	std::string str() const;
};

// Ring element c + cx*x, with x^2 = 0. cx stays 0 outside exterior rings.
class Scalar {
  public:
	explicit Scalar(Ring r) : ring_(r) {}
	Scalar(Ring r, Rational c, Rational cx = Rational()) : ring_(r), c_(c), x_(cx) { normalize(); }

	static Scalar zero(Ring r) { return Scalar(r); }
	static Scalar one(Ring r) { return Scalar(r, Rational(1)); }
	static Scalar integer(Ring r, long long v) { return Scalar(r, Rational(v)); }
	// coef * x
	static Scalar x(Ring r, Rational coef = Rational(1));

	const Ring &ring() const { return ring_; }
	const Rational &constant_part() const { return c_; }
	const Rational &x_part() const { return x_; }
	bool is_zero() const { return c_.is_zero() && x_.is_zero(); }
	bool is_one() const { return c_ == Rational(1) && x_.is_zero(); }

	friend Scalar operator+(const Scalar &a, const Scalar &b) {
		check_rings(a, b);
		return Scalar(a.ring_, a.c_ + b.c_, a.x_ + b.x_);
	}
	// x^2 = 0 drops the x*x cross term
	friend Scalar operator*(const Scalar &a, const Scalar &b) {
		check_rings(a, b);
		return Scalar(a.ring_, a.c_ * b.c_, a.c_ * b.x_ + a.x_ * b.c_);
	}
	Scalar operator-() const { return Scalar(ring_, -c_, -x_); }
	friend Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }
	bool operator==(const Scalar &) const = default;

	// homogeneous pieces: (constant, degree 0) and (x part, degree |x|)
	std::vector<std::pair<Scalar, long long>> homogeneous_parts() const;

	std::string str() const; // "1", "-2", "x", "2x", "1/2", "1+x", "2-x"...

  private:
	void normalize();
	static void check_rings(const Scalar &a, const Scalar &b) {
		if (!(a.ring_ == b.ring_))
			fail(Errc::ring_mismatch, "scalar arithmetic across different rings");
	}
	Ring ring_;
	Rational c_;
	Rational x_;
};

} // namespace ainfb

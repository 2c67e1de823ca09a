#include "ainfb/ring.hpp"

namespace ainfb {

std::string Ring::str() const {
	switch (kind) {
	case RingKind::mod2:
		return "Z2";
	case RingKind::rationals:
		return "Q";
	case RingKind::exterior:
		return std::string(base == BaseField::mod2 ? "Z2" : "Q") + "[x]/(x^2), |x|=" +
		       std::to_string(x_degree);
	}
	return "?";
}

Scalar Scalar::x(Ring r, Rational coef) {
	if (!r.has_x())
		fail(Errc::bad_argument, "coefficient x only exists over an exterior ring");
	return Scalar(r, Rational(), coef);
}

// Reduce a rational mod 2. Odd denominators are units (== 1 mod 2); even
// denominators have no meaning here.
static Rational mod2(const Rational &r) {
	if (r.den() % 2 == 0)
		fail(Errc::bad_argument, "coefficient " + r.str() + " has no value mod 2");
	long long v = r.num() % 2;
	return Rational(v < 0 ? -v : v);
}

void Scalar::normalize() {
	bool b2 = ring_.kind == RingKind::mod2 ||
	          (ring_.kind == RingKind::exterior && ring_.base == BaseField::mod2);
	if (b2) {
		c_ = mod2(c_);
		x_ = mod2(x_);
	}
	if (!ring_.has_x() && !x_.is_zero())
		fail(Errc::bad_argument, "x coefficient over a non-exterior ring");
}

std::vector<std::pair<Scalar, long long>> Scalar::homogeneous_parts() const {
	std::vector<std::pair<Scalar, long long>> out;
	if (!c_.is_zero())
		out.emplace_back(Scalar(ring_, c_), 0);
	if (!x_.is_zero())
		out.emplace_back(Scalar(ring_, Rational(), x_), ring_.x_degree);
	return out;
}

std::string Scalar::str() const {
	if (is_zero())
		return "0";
	std::string cs;
	if (!c_.is_zero())
		cs = c_.str();
	if (!x_.is_zero()) {
		std::string xs;
		if (x_ == Rational(1))
			xs = "x";
		else if (x_ == Rational(-1))
			xs = "-x";
		else
			xs = x_.str() + "x";
		if (cs.empty())
			cs = xs;
		else if (xs[0] == '-')
			cs += "-" + xs.substr(1);
		else
			cs += "+" + xs;
	}
	return cs;
}

} // namespace ainfb

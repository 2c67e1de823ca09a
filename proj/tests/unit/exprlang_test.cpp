#include "ainfb/exprlang.hpp"
#include "ainfb/element.hpp"
#include <doctest.h>

using namespace ainfb;

namespace {

Element ev(const HopfAlgebra &h, const char *text) {
	return evaluate_expression(h, Conventions{}, text);
}

Element lit(const HopfAlgebra &h, const char *text, int arity) {
	return parse_element(h.module, text, arity);
}

} // namespace

TEST_CASE("plain operations on the z2 structure") {
	HopfAlgebra h = make_z2_type23_example();
	CHECK(ev(h, "Delta(y)") == lit(h, "y|1 + 1|y", 2));
	CHECK(ev(h, "mu(y|1)") == lit(h, "y", 1));
	CHECK(ev(h, "mu(y|y)").is_zero());
	CHECK(ev(h, "omega(y|y)") == lit(h, "y|1|1 + 1|1|y", 3));
	CHECK(ev(h, "g2(1|1)") == lit(h, "1", 1));
	CHECK(ev(h, "f3(y)") == lit(h, "y|1|1 + 1|y|1 + 1|1|y", 3));
	CHECK(ev(h, "partial2(y|y|1)") == lit(h, "y|y", 2));
	CHECK(ev(h, "sigma2_2(y|y|y|y)") == lit(h, "y|y|y|y", 4));
}

TEST_CASE("bare literals evaluate to themselves") {
	HopfAlgebra h = make_z2_type23_example();
	CHECK(ev(h, "y|y") == lit(h, "y|y", 2));
	CHECK(ev(h, "y|1 + 1|y") == lit(h, "1|y + y|1", 2));
	CHECK(ev(h, "1") == lit(h, "1", 1));
}

TEST_CASE("nested applications") {
	HopfAlgebra h = make_z2_type23_example();
	Element spread = lit(h, "y|1|1|1 + 1|y|1|1 + 1|1|y|1 + 1|1|1|y", 4);
	CHECK(ev(h, "delta3(omega(y|y))") == spread);
	CHECK(ev(h, " delta3( omega( y|y ) ) ") == spread);
	CHECK(ev(h, "g2(Delta(y))").is_zero()); // y + y over characteristic 2
}

TEST_CASE("signed evaluation over the exterior family") {
	HopfAlgebra h = make_exterior_family(3, 4, 1, 3);
	CHECK(ev(h, "x(y|y|y)") == lit(h, "x(y|y|y)", 3));
	CHECK(ev(h, "1/2(y) + 1/2(y)") == lit(h, "y", 1));
	// both tensor factors have odd degree, so the block swap flips the sign
	CHECK(ev(h, "sigma2_2(y|y|y|y)") == lit(h, "y|y|y|y", 4).scaled_int(-1));
	CHECK(ev(h, "omega(y|y|y)") == lit(h, "x(y|y|y|y)", 4));
	CHECK(ev(h, "delta4(omega(y|y|y))") == lit(h, "x(1|y|y|y|y) - x(y|y|y|y|1)", 5));
	CHECK(ev(h, "partial3(y|y|y|1)") == lit(h, "y|y|y", 3));

	Conventions neg;
	neg.bar_sign = BarSign::negated;
	CHECK(evaluate_expression(h, neg, "partial3(y|y|y|1)") == lit(h, "y|y|y", 3).scaled_int(-1));
}

TEST_CASE("expression errors") {
	HopfAlgebra h = make_z2_type23_example();
	auto message = [&](const char *text) {
		try {
			ev(h, text);
		} catch (const Error &e) {
			return std::string(e.what());
		}
		return std::string();
	};
	CHECK(message("").find("empty expression") != std::string::npos);
	CHECK(message("bogus(y|y)").find("one nested application") != std::string::npos);
	// arguments are one literal or one call, not a mix
	CHECK(message("mu(mu(y|1)|1)").find("one nested application") != std::string::npos);
	CHECK(message("delta1000001(y)").find("index too large") != std::string::npos);
	CHECK_THROWS_AS(ev(h, "omega(y)"), Error);      // literal has the wrong arity
	CHECK_THROWS_AS(ev(h, "mu(omega(y|y))"), Error); // inner result has the wrong arity
	CHECK_THROWS_AS(ev(h, "omega(z|z)"), Error);

	HopfAlgebra bare = make_structure(h.module, trivial_product(h.module),
	                                  primitive_coproduct(h.module));
	CHECK(message("omega(y|y)").empty()); // fine on h
	try {
		evaluate_expression(bare, Conventions{}, "omega(y|y)");
		FAIL("expected an error");
	} catch (const Error &e) {
		CHECK(std::string(e.what()).find("no omega") != std::string::npos);
	}
}

#include "ainfb/structfile.hpp"
#include "ainfb/relations.hpp"
#include <doctest.h>
#include <sstream>

using namespace ainfb;

namespace {

HopfAlgebra parse(const std::string &text) {
	std::istringstream in(text);
	return parse_structure(in, "mem");
}

// the thrown message, or "" when nothing was thrown
std::string parse_error(const std::string &text) {
	try {
		parse(text);
	} catch (const Error &e) {
		return e.what();
	}
	return "";
}

const char *example_text = R"(# comment line
ring z2

generator y -2   # inline comment
omega 2 3
y|y -> y|1|1 + 1|1|y
)";

} // namespace

TEST_CASE("a structure file reproduces the built-in structure") {
	HopfAlgebra h = parse(example_text);
	HopfAlgebra b = make_z2_type23_example();
	CHECK(*h.module == *b.module);
	CHECK(h.m == 2);
	CHECK(h.n == 3);
	REQUIRE(h.omega.has_value());
	CHECK(op_equal(h.product, b.product));
	CHECK(op_equal(h.coproduct, b.coproduct));
	CHECK(op_equal(*h.omega, *b.omega));
	CHECK(verify(h).all_passed());
}

TEST_CASE("a file without omega still yields the product and coproduct") {
	HopfAlgebra h = parse("ring z2\ngenerator y -2\n");
	CHECK(!h.omega.has_value());
	CHECK(h.m == 0);
	CHECK(h.n == 0);
	VerificationResult r = verify(h);
	CHECK(r.all_passed());
	CHECK(r.reports.size() == 3); // nothing beyond the algebra axioms to check
}

TEST_CASE("ring variants") {
	CHECK(parse("ring q\n").module->ring == Ring::rationals());
	CHECK(parse("ring rationals\n").module->ring == Ring::rationals());
	CHECK(parse("ring exterior rationals 1\n").module->ring ==
	      Ring::exterior(BaseField::rationals, 1));
	CHECK(parse("ring exterior z2 3\n").module->ring == Ring::exterior(BaseField::mod2, 3));
}

TEST_CASE("degree shift is read off the first nonzero entry") {
	HopfAlgebra h = parse("ring z2\ngenerator y -2\nomega 2 2\ny|y -> y|y\n");
	REQUIRE(h.omega.has_value());
	CHECK(h.omega->degree() == 0); // wrong for the relations, but loadable
	CHECK(!verify(h).degree_ok);

	HopfAlgebra x = parse("ring exterior rationals 1\ngenerator y 3\nomega 3 4\n"
	                      "y|y|y -> x(y|y|y|y)\n");
	CHECK(x.omega->degree() == 4); // 12+1 upstairs vs 9 downstairs
	CHECK(verify(x).all_passed());
}

TEST_CASE("an omega declaration with no rows is the zero operation") {
	HopfAlgebra h = parse("ring z2\ngenerator y -2\nomega 2 3\n");
	REQUIRE(h.omega.has_value());
	CHECK(h.omega->degree() == 2); // zero map graded as the relations demand
	CHECK(h.omega->apply_word(parse_word(*h.module, "y|y")).is_zero());
	CHECK(verify(h).all_passed());
}

TEST_CASE("explicit zero rows work and keep the default grading") {
	HopfAlgebra h = parse("ring z2\ngenerator y -2\nomega 2 3\ny|y -> 0\n");
	CHECK(h.omega->degree() == 2);
	CHECK(verify(h).all_passed());
}

TEST_CASE("structure file error reporting") {
	auto has = [](const std::string &msg, const char *part) {
		CAPTURE(msg);
		CAPTURE(part);
		CHECK(msg.find(part) != std::string::npos);
	};
	has(parse_error(""), "mem:0: missing ring line");
	has(parse_error("generator y -2\n"), "mem:1: generator before the ring line");
	has(parse_error("ring z2\nring z2\n"), "mem:2: ring declared twice");
	has(parse_error("generator y -2\nring z2\n"), "mem:1: generator before the ring line");
	has(parse_error("ring z2\ngenerator y -2\nomega 2 2\ngenerator z 1\n"),
	    "mem:4: generator after the omega line");
	has(parse_error("omega 2 2\n"), "mem:1: omega before the ring line");
	has(parse_error("ring z2\nomega 2 2\nomega 2 2\n"), "mem:3: omega declared twice");
	has(parse_error("ring z2\nomega 2\n"), "mem:2: omega needs two arities");
	has(parse_error("ring z2\nomega 0 4\n"), "mem:2: omega arities must be >= 1");
	has(parse_error("ring z2\nomega 2 1\n"), "mem:2: omega needs m+n >= 4");
	has(parse_error("ring z2\ny|y -> y\n"), "mem:2: entry row before an omega declaration");
	has(parse_error("ring z2\ngenerator y -2\nomega 2 3\ny|y -> y|1|1\ny|y -> 0\n"),
	    "mem:5: duplicate entry for y|y");
	has(parse_error("ring z2\ngenerator y -2\nomega 2 3\ny -> y|1|1\n"),
	    "mem:4: entry key has arity 1, omega expects 2");
	has(parse_error("ring z2 junk\n"), "mem:1: trailing text 'junk'");
	has(parse_error("ring z2\ngenerator y -2 extra\n"), "mem:2: trailing text 'extra'");
	has(parse_error("frobnicate\n"), "mem:1: unknown directive 'frobnicate'");
	has(parse_error("ring z3\n"), "mem:1: unknown ring 'z3'");
	has(parse_error("ring exterior gf9 2\n"), "mem:1: unknown base field 'gf9'");
	has(parse_error("ring exterior rationals\n"),
	    "mem:1: exterior ring needs a base and a coefficient degree");
	has(parse_error("ring z2\ngenerator 2y -2\n"),
	    "mem:2: generator name '2y' may not start with a digit");
	has(parse_error("ring z2\ngenerator y\n"), "mem:2: generator needs a name and a degree");
	has(parse_error("ring z2\ngenerator y -2\nomega 2 3\ny|z -> 0\n"), "mem:4:");
	has(parse_error("ring z2\ngenerator y -2\nomega 2 3\ny|y -> y|&\n"), "mem:4:");
}

TEST_CASE("rows of inconsistent degree are refused") {
	try {
		parse("ring z2\ngenerator y -2\nomega 2 3\ny|y -> y|1|1\n1|1 -> y|1|1\n");
		FAIL("expected a degree error");
	} catch (const Error &e) {
		CHECK(e.code() == Errc::degree_mismatch);
	}
}

TEST_CASE("a missing file is a parse error") {
	try {
		load_structure_file("/nonexistent/structure.struct");
		FAIL("expected an open error");
	} catch (const Error &e) {
		CHECK(e.code() == Errc::parse);
		CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
	}
}

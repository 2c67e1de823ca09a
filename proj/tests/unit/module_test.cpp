#include "ainfb/module.hpp"
#include <doctest.h>

using namespace ainfb;

TEST_CASE("the unit generator comes first") {
	ModulePtr m = make_module(Ring::mod2(), {{"y", -2}});
	REQUIRE(m->generators.size() == 2);
	CHECK(m->generators.at(0).name == "1");
	CHECK(m->generators.at(0).degree == 0);
	CHECK(m->generators.at(1).name == "y");
	CHECK(m->generators.index_of("y") == 1);
	CHECK(m->generators.index_of("z") == -1);
}

TEST_CASE("word degree, printing, parsing") {
	ModulePtr m = make_module(Ring::rationals(), {{"y", 3}, {"z", -1}});
	Word w = parse_word(*m, "y|1|z|z");
	CHECK(w.size() == 4);
	CHECK(word_degree(*m, w) == 1);
	CHECK(word_str(*m, w) == "y|1|z|z");
	CHECK(word_degree(*m, Word()) == 0);
	CHECK(parse_word(*m, "1").size() == 1);
	CHECK_THROWS_AS(parse_word(*m, "y|w"), Error);
	CHECK_THROWS_AS(parse_word(*m, ""), Error);
}

TEST_CASE("word enumeration is lexicographic and complete") {
	ModulePtr m = make_module(Ring::mod2(), {{"y", -2}});
	CHECK(basis_size(*m, 3) == 8);
	auto ws = all_words(*m, 2);
	REQUIRE(ws.size() == 4);
	CHECK(word_str(*m, ws[0]) == "1|1");
	CHECK(word_str(*m, ws[1]) == "1|y");
	CHECK(word_str(*m, ws[2]) == "y|1");
	CHECK(word_str(*m, ws[3]) == "y|y");
	CHECK(all_words(*m, 0).size() == 1);
	CHECK(all_words(*m, 0)[0].empty());
}

TEST_CASE("word enumeration refuses absurd sizes") {
	ModulePtr m = make_module(Ring::mod2(), {{"y", -2}});
	CHECK_THROWS_AS(all_words(*m, 40), Error);
}

TEST_CASE("module identity is structural") {
	ModulePtr a = make_module(Ring::mod2(), {{"y", -2}});
	ModulePtr b = make_module(Ring::mod2(), {{"y", -2}});
	ModulePtr c = make_module(Ring::mod2(), {{"y", -1}});
	CHECK(same_module(a, a));
	CHECK(same_module(a, b));
	CHECK(!same_module(a, c));
}

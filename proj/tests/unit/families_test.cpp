#include "ainfb/hopf.hpp"
#include <doctest.h>

using namespace ainfb;

namespace {

// the two structures every differential identity is exercised on
HopfAlgebra z2_example() { return make_z2_type23_example(); }
HopfAlgebra family_example() { return make_exterior_family(3, 4, 1, 3); }

Element ypow(const ModulePtr &m, int k, int at0 = -1, int at1 = -1) {
	// word of k y's, optionally with the unit spliced in at the given spots
	Word w;
	for (int i = 0; i < k; ++i)
		w.push_back((char)1);
	if (at0 >= 0)
		w.insert(w.begin() + at0, (char)0);
	if (at1 >= 0)
		w.insert(w.begin() + at1, (char)0);
	return Element::monomial(m, w, Scalar::one(m->ring));
}

} // namespace

TEST_CASE("single-slot coproduct sums square to zero") {
	for (const HopfAlgebra &h : {z2_example(), family_example()}) {
		for (int k = 1; k <= 4; ++k) {
			MultiOp dk = cobar_component(h.coproduct, k);
			MultiOp dk1 = cobar_component(h.coproduct, k + 1);
			CHECK(check_zero(compose2(dk1, dk)).ok);
		}
	}
}

TEST_CASE("single-slot product sums square to zero") {
	for (const HopfAlgebra &h : {z2_example(), family_example()}) {
		for (BarSign s : {BarSign::positive, BarSign::negated}) {
			for (int k = 1; k <= 4; ++k) {
				MultiOp pk = bar_component(h.product, k, s);
				MultiOp pk1 = bar_component(h.product, k + 1, s);
				CHECK(check_zero(compose2(pk, pk1)).ok);
			}
		}
	}
}

TEST_CASE("negated bar sign is the global flip") {
	HopfAlgebra h = family_example();
	for (int k = 1; k <= 3; ++k)
		CHECK(op_equal(bar_component(h.product, k, BarSign::negated),
		               MultiOp::scaled(-1, bar_component(h.product, k, BarSign::positive))));
}

TEST_CASE("iterated coproducts and products are side independent") {
	for (const HopfAlgebra &h : {z2_example(), family_example()}) {
		for (int n = 1; n <= 5; ++n)
			CHECK(op_equal(iterated_coproduct(h.coproduct, n),
			               iterated_coproduct_right(h.coproduct, n)));
		for (int m = 1; m <= 5; ++m)
			CHECK(op_equal(iterated_product(h.product, m),
			               iterated_product_right(h.product, m)));
	}
}

TEST_CASE("first iterates are the operations themselves") {
	HopfAlgebra h = z2_example();
	CHECK(op_equal(iterated_coproduct(h.coproduct, 1), MultiOp::identity(h.module, 1)));
	CHECK(op_equal(iterated_product(h.product, 1), MultiOp::identity(h.module, 1)));
	CHECK(op_equal(iterated_coproduct(h.coproduct, 2), h.coproduct));
	CHECK(op_equal(iterated_product(h.product, 2), h.product));
}

TEST_CASE("block transposes invert each other") {
	ModulePtr plain = make_module(Ring::mod2(), {{"y", -2}});
	ModulePtr signed_mod = make_module(Ring::rationals(), {{"y", 1}});
	for (const ModulePtr &m : {plain, signed_mod})
		for (int p = 1; p <= 4; ++p)
			for (int q = 1; q <= 4; ++q)
				CHECK(op_equal(compose2(MultiOp::sigma(m, p, q), MultiOp::sigma(m, q, p)),
				               MultiOp::identity(m, p * q)));
}

TEST_CASE("the alternating coproduct sum telescopes on powers") {
	// on y|...|y every middle insertion cancels, leaving the two outer terms
	HopfAlgebra h = family_example();
	const ModulePtr &m = h.module;
	for (int k = 1; k <= 5; ++k) {
		Element lhs = cobar_component(h.coproduct, k).apply(ypow(m, k));
		Element expect = ypow(m, k, 0) + ypow(m, k, k).scaled_int(k % 2 == 0 ? -1 : 1);
		CHECK(lhs == expect);
	}
}

TEST_CASE("hopf compatibility of the builtin structures") {
	for (const HopfAlgebra &h : {z2_example(), family_example()}) {
		MultiOp lhs = compose2(h.coproduct, h.product);
		MultiOp rhs = MultiOp::compose({tensor2(h.product, h.product),
		                                MultiOp::sigma(h.module, 2, 2),
		                                tensor2(h.coproduct, h.coproduct)});
		CHECK(check_equal(lhs, rhs).ok);
	}
}

TEST_CASE("hopf compatibility fails for an even generator over the rationals") {
	HopfAlgebra h = make_exterior_family(3, 4, 2, 2, BaseChoice::rationals);
	MultiOp lhs = compose2(h.coproduct, h.product);
	MultiOp rhs = MultiOp::compose({tensor2(h.product, h.product),
	                                MultiOp::sigma(h.module, 2, 2),
	                                tensor2(h.coproduct, h.coproduct)});
	OpCheck c = check_equal(lhs, rhs);
	CHECK(!c.ok);
	CHECK(word_str(*h.module, c.witness) == "y|y");
}

#include "ainfb/hopf.hpp"
#include <algorithm>

namespace ainfb {

static void check_shapes(const HopfAlgebra &h) {
	if (!h.module)
		fail(Errc::bad_argument, "structure needs a module");
	if (!same_module(h.product.module_ptr(), h.module) ||
	    !same_module(h.coproduct.module_ptr(), h.module))
		fail(Errc::ring_mismatch, "product and coproduct must live over the structure's module");
	if (h.product.inputs() != 2 || h.product.outputs() != 1)
		fail(Errc::arity_mismatch, "product must map 2 factors to 1");
	if (h.coproduct.inputs() != 1 || h.coproduct.outputs() != 2)
		fail(Errc::arity_mismatch, "coproduct must map 1 factor to 2");
	if (h.product.degree() != 0 || h.coproduct.degree() != 0)
		fail(Errc::degree_mismatch, "product and coproduct must preserve degree");
	if (h.omega) {
		if (!same_module(h.omega->module_ptr(), h.module))
			fail(Errc::ring_mismatch, "omega must live over the structure's module");
		if (h.m != h.omega->inputs() || h.n != h.omega->outputs())
			fail(Errc::arity_mismatch, "omega shape disagrees with the declared type");
		if (h.m + h.n < 4)
			fail(Errc::bad_argument, "omega type needs m+n >= 4");
	}
}

HopfAlgebra make_structure(ModulePtr module, MultiOp product, MultiOp coproduct) {
	HopfAlgebra h{std::move(module), std::move(product), std::move(coproduct), std::nullopt, 0, 0};
	check_shapes(h);
	return h;
}

HopfAlgebra make_structure(ModulePtr module, MultiOp product, MultiOp coproduct, MultiOp omega) {
	int m = omega.inputs(), n = omega.outputs();
	HopfAlgebra h{std::move(module), std::move(product), std::move(coproduct), std::move(omega), m, n};
	check_shapes(h);
	return h;
}

MultiOp trivial_product(const ModulePtr &module) {
	std::map<Word, Element> entries;
	int g = module->generators.size();
	Scalar one = Scalar::one(module->ring);
	for (int i = 0; i < g; ++i) {
		Word key;
		key.push_back((char)i);
		key.push_back((char)0);
		entries.emplace(key, Element::monomial(module, Word(1, (char)i), one));
		if (i != 0) {
			Word key2;
			key2.push_back((char)0);
			key2.push_back((char)i);
			entries.emplace(key2, Element::monomial(module, Word(1, (char)i), one));
		}
	}
	return MultiOp::table(module, 2, 1, 0, std::move(entries));
}

MultiOp primitive_coproduct(const ModulePtr &module) {
	std::map<Word, Element> entries;
	int g = module->generators.size();
	Scalar one = Scalar::one(module->ring);
	entries.emplace(Word(1, (char)0), Element::monomial(module, Word(2, (char)0), one));
	for (int i = 1; i < g; ++i) {
		Word left, right;
		left.push_back((char)i);
		left.push_back((char)0);
		right.push_back((char)0);
		right.push_back((char)i);
		Element v = Element::monomial(module, left, one) + Element::monomial(module, right, one);
		entries.emplace(Word(1, (char)i), std::move(v));
	}
	return MultiOp::table(module, 1, 2, 0, std::move(entries));
}

const char *type_case_name(TypeCase c) {
	switch (c) {
	case TypeCase::i:
		return "i";
	case TypeCase::ii:
		return "ii";
	case TypeCase::iii:
		return "iii";
	case TypeCase::custom:
		return "custom";
	}
	return "?";
}

bool degree_condition(int m, int n, int p, int q) {
	return (long long)m * (q + 1) == (long long)n * (q - 1) + p + 3;
}

std::optional<Rational> q_of_n(int m, int p, int n) {
	if (m == n)
		return std::nullopt;
	return Rational(p + 3 - m - n, m - n);
}

TypeCase classify_type(int m, int n, int p, int q) {
	if (m == 2 && n == 2 && p == 1 && q >= 2)
		return TypeCase::i;
	if (q == 1 && p == 2 * m - 3)
		return TypeCase::ii;
	if (m >= 3 && n >= m + 1 && p <= 2 * m - 4 && q >= 2)
		return TypeCase::iii;
	return TypeCase::custom;
}

std::vector<TypeParams> enumerate_types(int m_max, int q_cap, int n_cap) {
	if (m_max < 1 || q_cap < 1 || n_cap < 1)
		fail(Errc::bad_argument, "enumeration bounds must be >= 1");
	std::vector<TypeParams> out;
	for (int m = 1; m <= m_max; ++m)
		for (int n = 1; n <= n_cap; ++n) {
			if (m + n < 4)
				continue;
			for (int q = 1; q <= q_cap; ++q) {
				long long p = (long long)m * (q + 1) - (long long)n * (q - 1) - 3;
				if (p < 1 || p > 1'000'000)
					continue;
				out.push_back({m, n, (int)p, q, classify_type(m, n, (int)p, q)});
			}
		}
	std::sort(out.begin(), out.end(), [](const TypeParams &a, const TypeParams &b) {
		return std::tie(a.m, a.n, a.p, a.q) < std::tie(b.m, b.n, b.p, b.q);
	});
	return out;
}

HopfAlgebra make_z2_type23_example() {
	ModulePtr mod = make_module(Ring::mod2(), {{"y", -2}});
	Scalar one = Scalar::one(mod->ring);
	Word yy(2, (char)1);
	Element val = Element::monomial(mod, parse_word(*mod, "y|1|1"), one) +
	              Element::monomial(mod, parse_word(*mod, "1|1|y"), one);
	std::map<Word, Element> entries;
	entries.emplace(yy, std::move(val));
	MultiOp omega = MultiOp::table(mod, 2, 3, 2, std::move(entries));
	return make_structure(mod, trivial_product(mod), primitive_coproduct(mod), std::move(omega));
}

HopfAlgebra make_exterior_family(int m, int n, int p, int q, BaseChoice base) {
	if (m < 1 || n < 1 || p < 1 || q < 1)
		fail(Errc::bad_argument, "family parameters must be >= 1");
	if (m + n < 4)
		fail(Errc::degree_mismatch, "type (" + std::to_string(m) + "," + std::to_string(n) +
		                                ") needs m+n >= 4");
	if (!degree_condition(m, n, p, q))
		fail(Errc::degree_mismatch,
		     "parameters m=" + std::to_string(m) + " n=" + std::to_string(n) +
		         " p=" + std::to_string(p) + " q=" + std::to_string(q) +
		         " violate m(q+1) = n(q-1) + p + 3");
	BaseField bf;
	switch (base) {
	case BaseChoice::automatic:
		bf = (q % 2 == 1) ? BaseField::rationals : BaseField::mod2;
		break;
	case BaseChoice::mod2:
		bf = BaseField::mod2;
		break;
	case BaseChoice::rationals:
		bf = BaseField::rationals;
		break;
	}
	ModulePtr mod = make_module(Ring::exterior(bf, p), {{"y", q}});
	std::map<Word, Element> entries;
	entries.emplace(Word(m, (char)1),
	                Element::monomial(mod, Word(n, (char)1), Scalar::x(mod->ring)));
	MultiOp omega = MultiOp::table(mod, m, n, m + n - 3, std::move(entries));
	return make_structure(mod, trivial_product(mod), primitive_coproduct(mod), std::move(omega));
}

} // namespace ainfb

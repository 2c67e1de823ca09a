#include "ainfb/relations.hpp"
#include <algorithm>

namespace ainfb {

const char *relation_name(RelationId id) {
	switch (id) {
	case RelationId::assoc:
		return "Assoc";
	case RelationId::coassoc:
		return "Coassoc";
	case RelationId::hopf:
		return "Hopf";
	case RelationId::r1:
		return "R1";
	case RelationId::r2:
		return "R2";
	case RelationId::r3:
		return "R3";
	case RelationId::r4a:
		return "R4a";
	case RelationId::r4b:
		return "R4b";
	case RelationId::r4c:
		return "R4c";
	case RelationId::r4d:
		return "R4d";
	case RelationId::r5a:
		return "R5a";
	case RelationId::r5b:
		return "R5b";
	case RelationId::r5c:
		return "R5c";
	case RelationId::r5d:
		return "R5d";
	case RelationId::r6:
		return "R6";
	}
	return "?";
}

std::string relation_label(const RelationReport &r) {
	std::string s = relation_name(r.id);
	if (r.item >= 0)
		s += "(k=" + std::to_string(r.item) + ")";
	return s;
}

bool VerificationResult::relations_passed() const {
	for (const RelationReport &r : reports)
		if (!r.passed)
			return false;
	return true;
}

RelationSides build_relation1(const HopfAlgebra &h) {
	const MultiOp &w = *h.omega;
	MultiOp gm = iterated_product(h.product, h.m);
	MultiOp lhs = compose2(cobar_component(h.coproduct, h.n), w);
	int swap_sign = (h.n % 2 == 0) ? -1 : 1; // -(-1)^n on omega⊗g_m
	MultiOp pair = MultiOp::sum({tensor2(gm, w), MultiOp::scaled(swap_sign, tensor2(w, gm))});
	MultiOp rhs = MultiOp::compose({pair, MultiOp::sigma(h.module, 2, h.m),
	                                MultiOp::tensor(std::vector<MultiOp>(h.m, h.coproduct))});
	return {std::move(lhs), std::move(rhs)};
}

RelationSides build_relation2(const HopfAlgebra &h, const Conventions &c) {
	const MultiOp &w = *h.omega;
	MultiOp fn = iterated_coproduct(h.coproduct, h.n);
	MultiOp lhs = compose2(w, bar_component(h.product, h.m, c.bar_sign));
	MultiOp mun = MultiOp::tensor(std::vector<MultiOp>(h.n, h.product));
	MultiOp sig = MultiOp::sigma(h.module, h.n, 2);
	int swap_sign = (h.m % 2 == 0) ? -1 : 1; // -(-1)^m on the swapped term
	MultiOp rhs = [&]() {
		if (c.r2_form == R2Form::standard) {
			MultiOp pair =
			    MultiOp::sum({tensor2(fn, w), MultiOp::scaled(swap_sign, tensor2(w, fn))});
			return MultiOp::compose({mun, sig, pair});
		}
		MultiOp pair = MultiOp::sum({tensor2(w, fn), MultiOp::scaled(swap_sign, tensor2(fn, w))});
		int pre = (((h.n + 1) / 2) % 2 == 0) ? 1 : -1;
		return MultiOp::scaled(pre, MultiOp::compose({mun, sig, pair}));
	}();
	return {std::move(lhs), std::move(rhs)};
}

std::vector<MultiOp> relation3_terms(const HopfAlgebra &h) {
	const MultiOp &w = *h.omega;
	MultiOp gm = iterated_product(h.product, h.m);
	MultiOp fn = iterated_coproduct(h.coproduct, h.n);
	MultiOp sig = MultiOp::sigma(h.module, h.n, h.m);
	std::vector<MultiOp> terms;
	for (int i = 0; i < h.n; ++i) {
		std::vector<MultiOp> outer_factors;
		for (int t = 0; t < h.n; ++t)
			outer_factors.push_back(t == i ? w : gm);
		MultiOp outer = MultiOp::tensor(std::move(outer_factors));
		for (int j = 0; j < h.m; ++j) {
			std::vector<MultiOp> inner_factors;
			for (int t = 0; t < h.m; ++t)
				inner_factors.push_back(t == j ? w : fn);
			terms.push_back(MultiOp::compose({outer, sig, MultiOp::tensor(std::move(inner_factors))}));
		}
	}
	return terms;
}

std::vector<MultiOp> relation4a_terms(const HopfAlgebra &h) {
	const MultiOp &w = *h.omega;
	return {MultiOp::compose({tensor2(w, w), MultiOp::sigma(h.module, 2, 2),
	                          tensor2(h.coproduct, h.coproduct)})};
}

// subsets of {0..slots-1} of the given size, lexicographic
static std::vector<std::vector<int>> placements(int slots, int size) {
	std::vector<std::vector<int>> out;
	std::vector<int> cur(size);
	for (int i = 0; i < size; ++i)
		cur[i] = i;
	while (true) {
		out.push_back(cur);
		int i = size - 1;
		while (i >= 0 && cur[i] == slots - size + i)
			--i;
		if (i < 0)
			return out;
		++cur[i];
		for (int j = i + 1; j < size; ++j)
			cur[j] = cur[j - 1] + 1;
	}
}

// sign of the term with the single omega at slot i among k+1 slots: + when an
// even number of mixed-in maps follows it, -(-1)^parity_src otherwise
static int lone_omega_sign(int slot, int slots, int parity_src) {
	int trailing = slots - 1 - slot;
	if (trailing % 2 == 0)
		return 1;
	return (parity_src % 2 == 0) ? -1 : 1;
}

std::vector<MultiOp> relation4_family_terms(const HopfAlgebra &h, int k) {
	const MultiOp &w = *h.omega;
	if (h.m != 2)
		fail(Errc::bad_argument, "this relation family needs m = 2");
	if (k < 0 || k > h.n - 1)
		fail(Errc::bad_argument, "mixed family index out of range");
	MultiOp fn = iterated_coproduct(h.coproduct, h.n);
	MultiOp sig = MultiOp::sigma(h.module, h.n, 2);
	std::vector<MultiOp> inner = {tensor2(fn, w), MultiOp::scaled(-1, tensor2(w, fn))};
	std::vector<MultiOp> terms;
	for (const std::vector<int> &mu_at : placements(h.n, k)) {
		std::vector<MultiOp> factors;
		int omega_slot = -1;
		for (int t = 0, u = 0; t < h.n; ++t) {
			if (u < k && mu_at[u] == t) {
				factors.push_back(h.product);
				++u;
			} else {
				factors.push_back(w);
				omega_slot = t;
			}
		}
		int sign = (k == h.n - 1) ? lone_omega_sign(omega_slot, h.n, h.n) : 1;
		MultiOp outer = MultiOp::scaled(sign, MultiOp::tensor(std::move(factors)));
		for (const MultiOp &in : inner)
			terms.push_back(MultiOp::compose({outer, sig, in}));
	}
	return terms;
}

std::vector<MultiOp> relation5a_terms(const HopfAlgebra &h) {
	const MultiOp &w = *h.omega;
	return {MultiOp::compose({tensor2(h.product, h.product), MultiOp::sigma(h.module, 2, 2),
	                          tensor2(w, w)})};
}

std::vector<MultiOp> relation5_family_terms(const HopfAlgebra &h, int k) {
	const MultiOp &w = *h.omega;
	if (h.n != 2)
		fail(Errc::bad_argument, "this relation family needs n = 2");
	if (k < 0 || k > h.m - 1)
		fail(Errc::bad_argument, "mixed family index out of range");
	MultiOp gm = iterated_product(h.product, h.m);
	MultiOp sig = MultiOp::sigma(h.module, 2, h.m);
	std::vector<MultiOp> outer = {tensor2(gm, w), MultiOp::scaled(-1, tensor2(w, gm))};
	std::vector<MultiOp> terms;
	for (const std::vector<int> &delta_at : placements(h.m, k)) {
		std::vector<MultiOp> factors;
		int omega_slot = -1;
		for (int t = 0, u = 0; t < h.m; ++t) {
			if (u < k && delta_at[u] == t) {
				factors.push_back(h.coproduct);
				++u;
			} else {
				factors.push_back(w);
				omega_slot = t;
			}
		}
		int sign = (k == h.m - 1) ? lone_omega_sign(omega_slot, h.m, h.m) : 1;
		MultiOp in = MultiOp::scaled(sign, MultiOp::tensor(std::move(factors)));
		for (const MultiOp &out : outer)
			terms.push_back(MultiOp::compose({out, sig, in}));
	}
	return terms;
}

std::vector<MultiOp> relation6_terms(const HopfAlgebra &h) {
	const MultiOp &w = *h.omega;
	return {MultiOp::compose({tensor2(w, w), MultiOp::sigma(h.module, 2, 2), tensor2(w, w)})};
}

VerificationResult verify(const HopfAlgebra &h, const VerifyOptions &opts) {
	bool c2 = h.module->ring.char2();
	VerifyMode mode = opts.mode;
	if (mode == VerifyMode::automatic)
		mode = c2 ? VerifyMode::exact : VerifyMode::termwise;
	if (mode == VerifyMode::exact && !c2)
		fail(Errc::bad_argument,
		     "exact mode sums relation terms whose signs are only determined over "
		     "characteristic 2; use termwise mode over " +
		         h.module->ring.str());

	VerificationResult res;
	if (h.omega) {
		long long want = h.m + h.n - 3;
		long long got = h.omega->degree();
		if (got == want) {
			res.degree_message = "omega raises degree by m+n-3 = " + std::to_string(want);
		} else {
			res.degree_ok = false;
			res.degree_message = "omega must raise degree by m+n-3 = " + std::to_string(want) +
			                     " but raises it by " + std::to_string(got);
		}
	} else {
		res.degree_message = "no omega operation to check";
	}

	auto add_equal = [&](RelationId id, const MultiOp &lhs, const MultiOp &rhs, std::string note) {
		OpCheck c = check_equal(lhs, rhs, opts.cap);
		RelationReport r;
		r.id = id;
		r.passed = c.ok;
		r.scanned = c.scanned;
		r.support_scan = c.support_scan;
		r.note = std::move(note);
		if (!c.ok)
			r.witness = Witness{c.witness, c.lhs, c.rhs, -1};
		res.reports.push_back(std::move(r));
	};
	auto add_terms = [&](RelationId id, int item, const std::vector<MultiOp> &terms) {
		RelationReport r;
		r.id = id;
		r.item = item;
		if (mode == VerifyMode::exact) {
			OpCheck c = check_zero(MultiOp::sum(terms), opts.cap);
			r.passed = c.ok;
			r.scanned = c.scanned;
			r.support_scan = c.support_scan;
			if (!c.ok)
				r.witness = Witness{c.witness, c.lhs, c.rhs, -1};
		} else {
			r.termwise = true;
			for (size_t t = 0; t < terms.size(); ++t) {
				OpCheck c = check_zero(terms[t], opts.cap);
				r.scanned += c.scanned;
				r.support_scan = r.support_scan || c.support_scan;
				if (!c.ok) {
					r.passed = false;
					r.witness = Witness{c.witness, c.lhs, c.rhs, (int)t};
					break;
				}
			}
		}
		res.reports.push_back(std::move(r));
	};

	MultiOp id1 = MultiOp::identity(h.module, 1);
	add_equal(RelationId::assoc, compose2(h.product, tensor2(h.product, id1)),
	          compose2(h.product, tensor2(id1, h.product)), "");
	add_equal(RelationId::coassoc, compose2(tensor2(h.coproduct, id1), h.coproduct),
	          compose2(tensor2(id1, h.coproduct), h.coproduct), "");
	add_equal(RelationId::hopf, compose2(h.coproduct, h.product),
	          MultiOp::compose({tensor2(h.product, h.product), MultiOp::sigma(h.module, 2, 2),
	                            tensor2(h.coproduct, h.coproduct)}),
	          "");

	if (h.omega) {
		RelationSides r1 = build_relation1(h);
		add_equal(RelationId::r1, r1.lhs, r1.rhs, "");
		RelationSides r2 = build_relation2(h, opts.conventions);
		add_equal(RelationId::r2, r2.lhs, r2.rhs,
		          opts.conventions.r2_form == R2Form::standard ? "" : "alternate right side");
		add_terms(RelationId::r3, -1, relation3_terms(h));
		if (h.m == 2) {
			add_terms(RelationId::r4a, -1, relation4a_terms(h));
			add_terms(RelationId::r4b, -1, relation4_family_terms(h, 0));
			for (int k = 1; k <= h.n - 2; ++k)
				add_terms(RelationId::r4c, k, relation4_family_terms(h, k));
			add_terms(RelationId::r4d, -1, relation4_family_terms(h, h.n - 1));
		}
		if (h.n == 2) {
			add_terms(RelationId::r5a, -1, relation5a_terms(h));
			add_terms(RelationId::r5b, -1, relation5_family_terms(h, 0));
			for (int k = 1; k <= h.m - 2; ++k)
				add_terms(RelationId::r5c, k, relation5_family_terms(h, k));
			add_terms(RelationId::r5d, -1, relation5_family_terms(h, h.m - 1));
		}
		if (h.m == 2 && h.n == 2)
			add_terms(RelationId::r6, -1, relation6_terms(h));
	}
	return res;
}

} // namespace ainfb

#include "ainfb/multiop.hpp"
#include <algorithm>

namespace ainfb {

static bool odd(long long v) { return (v & 1) != 0; }

struct MultiOp::Node {
	OpKind kind = OpKind::identity;
	ModulePtr module;
	int inputs = 0, outputs = 0;
	long long degree = 0;
	std::map<Word, Element> entries; // table
	std::vector<MultiOp> parts;      // tensor factors, compose chain, sum terms, scaled inner
	std::vector<int> in_offsets;     // tensor: where each factor's input chunk starts
	int q = 0, p = 0;                // sigma
	std::vector<int> perm;           // sigma: input letter i lands at output position perm[i]
	int sign = 1;                    // scaled
};

OpKind MultiOp::kind() const { return node_->kind; }
int MultiOp::inputs() const { return node_->inputs; }
int MultiOp::outputs() const { return node_->outputs; }
long long MultiOp::degree() const { return node_->degree; }
const ModulePtr &MultiOp::module_ptr() const { return node_->module; }
const GradedModule &MultiOp::module() const { return *node_->module; }
const std::map<Word, Element> &MultiOp::table_entries() const { return node_->entries; }

MultiOp MultiOp::identity(ModulePtr m, int k) {
	if (!m)
		fail(Errc::bad_argument, "identity needs a module");
	if (k < 0)
		fail(Errc::bad_argument, "identity arity must be >= 0");
	auto n = std::make_shared<Node>();
	n->kind = OpKind::identity;
	n->module = std::move(m);
	n->inputs = n->outputs = k;
	return MultiOp(std::move(n));
}

MultiOp MultiOp::table(ModulePtr m, int inputs, int outputs, long long degree,
                       std::map<Word, Element> entries, bool validate_degrees) {
	if (!m)
		fail(Errc::bad_argument, "table needs a module");
	if (inputs < 1 || outputs < 1)
		fail(Errc::bad_argument, "table arities must be >= 1");
	for (auto it = entries.begin(); it != entries.end();) {
		const Word &w = it->first;
		const Element &val = it->second;
		if ((int)w.size() != inputs)
			fail(Errc::arity_mismatch, "table key " + word_str(*m, w) + " has arity " +
			                               std::to_string(w.size()) + ", expected " +
			                               std::to_string(inputs));
		for (char c : w)
			if ((unsigned char)c >= (unsigned)m->generators.size())
				fail(Errc::bad_argument, "table key uses an unknown generator index");
		if (!same_module(val.module_ptr(), m))
			fail(Errc::ring_mismatch, "table value lives over a different module");
		if (val.arity() != outputs)
			fail(Errc::arity_mismatch, "table value for " + word_str(*m, w) + " has arity " +
			                               std::to_string(val.arity()) + ", expected " +
			                               std::to_string(outputs));
		if (validate_degrees) {
			long long want = word_degree(*m, w) + degree;
			for (const auto &[ow, s] : val.terms())
				for (const auto &[part, d] : s.homogeneous_parts())
					if (word_degree(*m, ow) + d != want)
						fail(Errc::degree_mismatch,
						     "table entry " + word_str(*m, w) + " -> " + val.str() +
						         " breaks the degree shift " + std::to_string(degree));
		}
		if (val.is_zero())
			it = entries.erase(it);
		else
			++it;
	}
	auto n = std::make_shared<Node>();
	n->kind = OpKind::table;
	n->module = std::move(m);
	n->inputs = inputs;
	n->outputs = outputs;
	n->degree = degree;
	n->entries = std::move(entries);
	return MultiOp(std::move(n));
}

MultiOp MultiOp::tensor(std::vector<MultiOp> factors) {
	if (factors.empty())
		fail(Errc::bad_argument, "tensor of no factors");
	if (factors.size() == 1)
		return factors[0];
	auto n = std::make_shared<Node>();
	n->kind = OpKind::tensor;
	n->module = factors[0].module_ptr();
	for (const MultiOp &f : factors) {
		if (!same_module(f.module_ptr(), n->module))
			fail(Errc::ring_mismatch, "tensor factors over different modules");
		n->in_offsets.push_back(n->inputs);
		n->inputs += f.inputs();
		n->outputs += f.outputs();
		n->degree += f.degree();
	}
	n->parts = std::move(factors);
	return MultiOp(std::move(n));
}

MultiOp MultiOp::compose(std::vector<MultiOp> chain) {
	if (chain.empty())
		fail(Errc::bad_argument, "composition of no operations");
	std::vector<MultiOp> flat;
	for (MultiOp &op : chain) {
		if (op.kind() == OpKind::compose)
			for (const MultiOp &inner : op.node_->parts)
				flat.push_back(inner);
		else
			flat.push_back(std::move(op));
	}
	if (flat.size() == 1)
		return flat[0];
	auto n = std::make_shared<Node>();
	n->kind = OpKind::compose;
	n->module = flat[0].module_ptr();
	for (size_t i = 0; i + 1 < flat.size(); ++i) {
		if (!same_module(flat[i].module_ptr(), n->module))
			fail(Errc::ring_mismatch, "composition stages over different modules");
		if (flat[i].inputs() != flat[i + 1].outputs())
			fail(Errc::arity_mismatch,
			     "composition stage expects " + std::to_string(flat[i].inputs()) +
			         " inputs but the next stage produces " + std::to_string(flat[i + 1].outputs()));
	}
	if (!same_module(flat.back().module_ptr(), n->module))
		fail(Errc::ring_mismatch, "composition stages over different modules");
	n->inputs = flat.back().inputs();
	n->outputs = flat.front().outputs();
	for (const MultiOp &op : flat)
		n->degree += op.degree();
	n->parts = std::move(flat);
	return MultiOp(std::move(n));
}

MultiOp MultiOp::sigma(ModulePtr m, int q, int p) {
	if (!m)
		fail(Errc::bad_argument, "sigma needs a module");
	if (q < 1 || p < 1)
		fail(Errc::bad_argument, "sigma block sizes must be >= 1");
	auto n = std::make_shared<Node>();
	n->kind = OpKind::sigma;
	n->module = std::move(m);
	n->inputs = n->outputs = q * p;
	n->q = q;
	n->p = p;
	n->perm.resize((size_t)q * p);
	for (int b = 0; b < p; ++b)
		for (int s = 0; s < q; ++s)
			n->perm[(size_t)b * q + s] = s * p + b;
	return MultiOp(std::move(n));
}

MultiOp MultiOp::scaled(int sign, MultiOp op) {
	if (sign != 1 && sign != -1)
		fail(Errc::bad_argument, "scale sign must be +1 or -1");
	if (op.kind() == OpKind::scaled) {
		sign *= op.node_->sign;
		op = op.node_->parts[0];
	}
	if (sign == 1)
		return op;
	auto n = std::make_shared<Node>();
	n->kind = OpKind::scaled;
	n->module = op.module_ptr();
	n->inputs = op.inputs();
	n->outputs = op.outputs();
	n->degree = op.degree();
	n->sign = sign;
	n->parts.push_back(std::move(op));
	return MultiOp(std::move(n));
}

MultiOp MultiOp::sum(std::vector<MultiOp> terms) {
	if (terms.empty())
		fail(Errc::bad_argument, "sum of no operations");
	std::vector<MultiOp> flat;
	for (MultiOp &op : terms) {
		if (op.kind() == OpKind::sum)
			for (const MultiOp &inner : op.node_->parts)
				flat.push_back(inner);
		else
			flat.push_back(std::move(op));
	}
	if (flat.size() == 1)
		return flat[0];
	auto n = std::make_shared<Node>();
	n->kind = OpKind::sum;
	n->module = flat[0].module_ptr();
	n->inputs = flat[0].inputs();
	n->outputs = flat[0].outputs();
	n->degree = flat[0].degree();
	for (const MultiOp &op : flat) {
		if (!same_module(op.module_ptr(), n->module))
			fail(Errc::ring_mismatch, "sum terms over different modules");
		if (op.inputs() != n->inputs || op.outputs() != n->outputs)
			fail(Errc::arity_mismatch, "sum terms with different arities");
		if (op.degree() != n->degree)
			fail(Errc::degree_mismatch, "sum terms with different degrees");
	}
	n->parts = std::move(flat);
	return MultiOp(std::move(n));
}

MultiOp tensor2(const MultiOp &a, const MultiOp &b) { return MultiOp::tensor({a, b}); }
MultiOp compose2(const MultiOp &f, const MultiOp &g) { return MultiOp::compose({f, g}); }

Element MultiOp::apply_word(const Word &w) const {
	const Node &n = *node_;
	if ((int)w.size() != n.inputs)
		fail(Errc::arity_mismatch, "operation expects " + std::to_string(n.inputs) +
		                               " inputs, got a word of " + std::to_string(w.size()));
	switch (n.kind) {
	case OpKind::identity:
		return Element::monomial(n.module, w, Scalar::one(n.module->ring));
	case OpKind::table: {
		auto it = n.entries.find(w);
		if (it == n.entries.end())
			return Element(n.module, n.outputs);
		return it->second;
	}
	case OpKind::sigma: {
		Word out(w.size(), '\0');
		for (size_t i = 0; i < w.size(); ++i)
			out[(size_t)n.perm[i]] = w[i];
		// Koszul sign: one -1 per inversion of two odd-degree letters,
		// so only positions holding odd letters matter
		std::vector<size_t> odd_pos;
		for (size_t i = 0; i < w.size(); ++i)
			if (odd(n.module->generators.at((unsigned char)w[i]).degree))
				odd_pos.push_back(i);
		int flips = 0;
		for (size_t a = 0; a < odd_pos.size(); ++a)
			for (size_t b = a + 1; b < odd_pos.size(); ++b)
				if (n.perm[odd_pos[a]] > n.perm[odd_pos[b]])
					++flips;
		return Element::monomial(n.module, out, Scalar::integer(n.module->ring, odd(flips) ? -1 : 1));
	}
	case OpKind::scaled:
		return n.parts[0].apply_word(w).scaled_int(n.sign);
	case OpKind::sum: {
		Element acc(n.module, n.outputs);
		for (const MultiOp &t : n.parts)
			acc += t.apply_word(w);
		return acc;
	}
	case OpKind::compose: {
		Element cur = n.parts.back().apply_word(w);
		for (size_t i = n.parts.size() - 1; i-- > 0;)
			cur = n.parts[i].apply(cur);
		return cur;
	}
	case OpKind::tensor: {
		// (f_1⊗...⊗f_k)(u_1⊗...⊗u_k) picks up (-1)^{deg f_j * (deg u_1+...+deg u_{j-1})}
		// per factor; coefficient crossings inside the element tensor handle the rest
		long long left_degree = 0;
		Element acc = Element::monomial(n.module, Word(), Scalar::one(n.module->ring));
		for (size_t j = 0; j < n.parts.size(); ++j) {
			const MultiOp &f = n.parts[j];
			Word chunk = w.substr((size_t)n.in_offsets[j], (size_t)f.inputs());
			Element r = f.apply_word(chunk);
			if (odd(f.degree()) && odd(left_degree))
				r = r.scaled_int(-1);
			acc = ainfb::tensor(acc, r);
			if (acc.is_zero())
				return Element(n.module, n.outputs);
			left_degree += word_degree(*n.module, chunk);
		}
		return acc;
	}
	}
	fail(Errc::bad_argument, "unreachable operation kind");
}

Element MultiOp::apply(const Element &e) const {
	const Node &n = *node_;
	if (!same_module(e.module_ptr(), n.module))
		fail(Errc::ring_mismatch, "applying an operation to an element over a different module");
	if (e.arity() != n.inputs)
		fail(Errc::arity_mismatch, "operation expects " + std::to_string(n.inputs) +
		                               " inputs, element has arity " + std::to_string(e.arity()));
	// buffer everything and sort once instead of merging term by term
	std::vector<std::pair<Word, Scalar>> buf;
	for (const auto &[w, s] : e.terms()) {
		Element image = apply_word(w);
		if (image.is_zero())
			continue;
		// op(c*w) = (-1)^{deg op * deg c} c * op(w), per homogeneous piece of c
		for (const auto &[part, d] : s.homogeneous_parts()) {
			bool flip = odd(n.degree) && odd(d);
			Scalar c = flip ? -part : part;
			for (const auto &[iw, ic] : image.terms())
				buf.emplace_back(iw, c * ic);
		}
	}
	return Element::from_terms(n.module, n.outputs, std::move(buf), false);
}

std::optional<std::vector<Word>> MultiOp::support(unsigned long long cap) const {
	const Node &n = *node_;
	switch (n.kind) {
	case OpKind::identity:
	case OpKind::sigma:
		return std::nullopt;
	case OpKind::table: {
		std::vector<Word> keys;
		keys.reserve(n.entries.size());
		for (const auto &[w, _] : n.entries)
			keys.push_back(w);
		return keys;
	}
	case OpKind::scaled:
		return n.parts[0].support(cap);
	case OpKind::compose:
		return n.parts.back().support(cap);
	case OpKind::sum: {
		std::vector<Word> acc;
		for (const MultiOp &t : n.parts) {
			auto s = t.support(cap);
			if (!s)
				return std::nullopt;
			std::vector<Word> merged;
			std::set_union(acc.begin(), acc.end(), s->begin(), s->end(), std::back_inserter(merged));
			acc = std::move(merged);
			if (acc.size() > cap)
				return std::nullopt;
		}
		return acc;
	}
	case OpKind::tensor: {
		std::vector<std::vector<Word>> lists;
		unsigned long long total = 1;
		for (const MultiOp &f : n.parts) {
			auto s = f.support(cap);
			unsigned long long sz = s ? s->size() : basis_size(*n.module, f.inputs());
			if (sz == 0) // some factor is identically zero
				return std::vector<Word>{};
			if (sz > cap || total > cap / sz)
				return std::nullopt;
			total *= sz;
			if (s)
				lists.push_back(std::move(*s));
			else
				lists.push_back(all_words(*n.module, f.inputs(), cap));
		}
		// odometer, rightmost factor fastest: lexicographic since chunk widths are fixed
		std::vector<Word> out;
		out.reserve(total);
		std::vector<size_t> idx(lists.size(), 0);
		while (true) {
			Word w;
			for (size_t j = 0; j < lists.size(); ++j)
				w += lists[j][idx[j]];
			out.push_back(std::move(w));
			size_t j = lists.size();
			while (j-- > 0) {
				if (++idx[j] < lists[j].size())
					break;
				idx[j] = 0;
				if (j == 0)
					return out;
			}
		}
	}
	}
	fail(Errc::bad_argument, "unreachable operation kind");
}

OpCheck check_zero(const MultiOp &op, unsigned long long cap) {
	OpCheck res;
	auto s = op.support(cap);
	std::vector<Word> words;
	if (s) {
		words = std::move(*s);
		res.support_scan = true;
	} else {
		words = all_words(op.module(), op.inputs(), cap);
	}
	res.scanned = words.size();
	for (const Word &w : words) {
		Element r = op.apply_word(w);
		if (!r.is_zero()) {
			res.ok = false;
			res.witness = w;
			res.lhs = r.str();
			res.rhs = "0";
			return res;
		}
	}
	return res;
}

OpCheck check_equal(const MultiOp &a, const MultiOp &b, unsigned long long cap) {
	if (!same_module(a.module_ptr(), b.module_ptr()))
		fail(Errc::ring_mismatch, "comparing operations over different modules");
	if (a.inputs() != b.inputs() || a.outputs() != b.outputs())
		fail(Errc::arity_mismatch, "comparing operations of different arities");
	OpCheck res;
	std::vector<Word> words;
	auto sa = a.support(cap), sb = b.support(cap);
	if (sa && sb && sa->size() + sb->size() <= cap) {
		std::set_union(sa->begin(), sa->end(), sb->begin(), sb->end(), std::back_inserter(words));
		res.support_scan = true;
	} else {
		words = all_words(a.module(), a.inputs(), cap);
	}
	res.scanned = words.size();
	for (const Word &w : words) {
		Element ra = a.apply_word(w);
		Element rb = b.apply_word(w);
		if (!(ra == rb)) {
			res.ok = false;
			res.witness = w;
			res.lhs = ra.str();
			res.rhs = rb.str();
			return res;
		}
	}
	return res;
}

bool op_equal(const MultiOp &a, const MultiOp &b, unsigned long long cap) {
	return check_equal(a, b, cap).ok;
}

static void need_shape(const MultiOp &op, int in, int out, const char *what) {
	if (op.inputs() != in || op.outputs() != out)
		fail(Errc::arity_mismatch, std::string(what) + " must map " + std::to_string(in) +
		                               " factors to " + std::to_string(out));
}

MultiOp iterated_coproduct(const MultiOp &coproduct, int n) {
	need_shape(coproduct, 1, 2, "a coproduct");
	if (n < 1)
		fail(Errc::bad_argument, "iterated coproduct needs n >= 1");
	if (n == 1)
		return MultiOp::identity(coproduct.module_ptr(), 1);
	MultiOp cur = coproduct;
	for (int k = 2; k < n; ++k)
		cur = compose2(tensor2(coproduct, MultiOp::identity(coproduct.module_ptr(), k - 1)), cur);
	return cur;
}

MultiOp iterated_coproduct_right(const MultiOp &coproduct, int n) {
	need_shape(coproduct, 1, 2, "a coproduct");
	if (n < 1)
		fail(Errc::bad_argument, "iterated coproduct needs n >= 1");
	if (n == 1)
		return MultiOp::identity(coproduct.module_ptr(), 1);
	MultiOp cur = coproduct;
	for (int k = 2; k < n; ++k)
		cur = compose2(tensor2(MultiOp::identity(coproduct.module_ptr(), k - 1), coproduct), cur);
	return cur;
}

MultiOp iterated_product(const MultiOp &product, int m) {
	need_shape(product, 2, 1, "a product");
	if (m < 1)
		fail(Errc::bad_argument, "iterated product needs m >= 1");
	if (m == 1)
		return MultiOp::identity(product.module_ptr(), 1);
	MultiOp cur = product;
	for (int k = 2; k < m; ++k)
		cur = compose2(cur, tensor2(product, MultiOp::identity(product.module_ptr(), k - 1)));
	return cur;
}

MultiOp iterated_product_right(const MultiOp &product, int m) {
	need_shape(product, 2, 1, "a product");
	if (m < 1)
		fail(Errc::bad_argument, "iterated product needs m >= 1");
	if (m == 1)
		return MultiOp::identity(product.module_ptr(), 1);
	MultiOp cur = product;
	for (int k = 2; k < m; ++k)
		cur = compose2(cur, tensor2(MultiOp::identity(product.module_ptr(), k - 1), product));
	return cur;
}

// Σ_{i=1..k} (-1)^{i+1} 1^{⊗i-1} ⊗ op ⊗ 1^{⊗k-i}
static MultiOp alternating_insertion(const MultiOp &op, int k, int extra_sign) {
	std::vector<MultiOp> terms;
	for (int i = 1; i <= k; ++i) {
		std::vector<MultiOp> factors;
		if (i > 1)
			factors.push_back(MultiOp::identity(op.module_ptr(), i - 1));
		factors.push_back(op);
		if (i < k)
			factors.push_back(MultiOp::identity(op.module_ptr(), k - i));
		int sign = (i % 2 == 1 ? 1 : -1) * extra_sign;
		terms.push_back(MultiOp::scaled(sign, MultiOp::tensor(std::move(factors))));
	}
	return MultiOp::sum(std::move(terms));
}

MultiOp cobar_component(const MultiOp &coproduct, int k) {
	need_shape(coproduct, 1, 2, "a coproduct");
	if (k < 1)
		fail(Errc::bad_argument, "cobar component needs k >= 1");
	return alternating_insertion(coproduct, k, 1);
}

MultiOp bar_component(const MultiOp &product, int k, BarSign sign) {
	need_shape(product, 2, 1, "a product");
	if (k < 1)
		fail(Errc::bad_argument, "bar component needs k >= 1");
	return alternating_insertion(product, k, sign == BarSign::positive ? 1 : -1);
}

MultiOp signed_power(const MultiOp &op, int k) {
	if (k < 1)
		fail(Errc::bad_argument, "signed power needs k >= 1");
	long long half;
	if (op.inputs() == 2 && op.outputs() == 1)
		half = (k + 1) / 2;
	else if (op.inputs() == 1 && op.outputs() == 2)
		half = k / 2;
	else
		fail(Errc::arity_mismatch, "signed power only applies to 2->1 or 1->2 operations");
	std::vector<MultiOp> copies(k, op);
	return MultiOp::scaled(odd(half) ? -1 : 1, MultiOp::tensor(std::move(copies)));
}

} // namespace ainfb

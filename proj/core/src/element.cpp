#include "ainfb/element.hpp"
#include <algorithm>
#include <cctype>

namespace ainfb {

Element::Element(ModulePtr module, int arity) : module_(std::move(module)), arity_(arity) {
	if (arity_ < 0)
		fail(Errc::arity_mismatch, "negative arity");
}

Element Element::monomial(ModulePtr module, Word w, Scalar coef) {
	Element e(std::move(module), (int)w.size());
	for (unsigned char c : w)
		if (c >= e.module().generators.size())
			fail(Errc::bad_argument, "word letter outside the generator table");
	if (!(coef.ring() == e.ring()))
		fail(Errc::ring_mismatch, "coefficient ring differs from module ring");
	if (!coef.is_zero())
		e.terms_.emplace_back(std::move(w), std::move(coef));
	return e;
}

Element Element::from_terms(ModulePtr module, int arity,
                            std::vector<std::pair<Word, Scalar>> terms, bool terms_distinct) {
	Element e(std::move(module), arity);
	std::sort(terms.begin(), terms.end(),
	          [](const auto &a, const auto &b) { return a.first < b.first; });
	if (terms_distinct) {
		std::erase_if(terms, [](const auto &t) { return t.second.is_zero(); });
		e.terms_ = std::move(terms);
	} else {
		for (auto &t : terms) {
			if (!e.terms_.empty() && e.terms_.back().first == t.first)
				e.terms_.back().second = e.terms_.back().second + t.second;
			else
				e.terms_.push_back(std::move(t));
			if (e.terms_.back().second.is_zero())
				e.terms_.pop_back();
		}
	}
	return e;
}

Element &Element::operator+=(const Element &o) {
	if (!same_module(module_, o.module_))
		fail(Errc::ring_mismatch, "adding elements over different modules");
	if (arity_ != o.arity_)
		fail(Errc::arity_mismatch, "adding elements of different arities");
	std::vector<std::pair<Word, Scalar>> merged;
	merged.reserve(terms_.size() + o.terms_.size());
	size_t i = 0, j = 0;
	while (i < terms_.size() || j < o.terms_.size()) {
		if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first))
			merged.push_back(std::move(terms_[i++]));
		else if (i == terms_.size() || o.terms_[j].first < terms_[i].first)
			merged.push_back(o.terms_[j++]);
		else {
			Scalar s = terms_[i].second + o.terms_[j].second;
			if (!s.is_zero())
				merged.emplace_back(terms_[i].first, std::move(s));
			++i, ++j;
		}
	}
	terms_ = std::move(merged);
	return *this;
}

bool Element::operator==(const Element &o) const {
	return arity_ == o.arity_ && same_module(module_, o.module_) && terms_ == o.terms_;
}

Element Element::scaled(const Scalar &s) const {
	Element out(module_, arity_);
	if (s.is_zero())
		return out;
	out.terms_.reserve(terms_.size());
	for (auto &[w, c] : terms_) {
		Scalar sc = s * c;
		if (!sc.is_zero())
			out.terms_.emplace_back(w, std::move(sc));
	}
	return out;
}

ElementDegree Element::degree() const {
	ElementDegree d;
	for (auto &[w, c] : terms_) {
		long long wd = word_degree(*module_, w);
		for (auto &[part, pd] : c.homogeneous_parts()) {
			long long td = wd + pd;
			if (d.kind == ElementDegree::Kind::zero)
				d = {ElementDegree::Kind::defined, td};
			else if (d.value != td)
				return {ElementDegree::Kind::mixed, 0};
		}
	}
	return d;
}

Element tensor(const Element &u, const Element &v) {
	if (!same_module(u.module_ptr(), v.module_ptr()))
		fail(Errc::ring_mismatch, "tensor of elements over different modules");
	const Ring &ring = u.ring();
	std::vector<std::pair<Word, Scalar>> out;
	out.reserve(u.terms().size() * v.terms().size());
	for (auto &[wu, su] : u.terms()) {
		long long du = word_degree(u.module(), wu);
		bool flip = ring.has_x() && ((ring.x_degree * du) & 1);
		for (auto &[wv, sv] : v.terms()) {
			Scalar shifted = flip ? Scalar(ring, sv.constant_part(), -sv.x_part()) : sv;
			Scalar c = su * shifted;
			if (!c.is_zero())
				out.emplace_back(wu + wv, std::move(c));
		}
	}
	return Element::from_terms(u.module_ptr(), u.arity() + v.arity(), std::move(out), true);
}

std::string Element::str() const {
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto &[w, c] : terms_) {
		std::string t;
		if (c.is_one())
			t = word_str(*module_, w);
		else if (c == -Scalar::one(ring()))
			t = "-" + word_str(*module_, w);
		else {
			std::string cs = c.str();
			// mixed coefficients keep their own parentheses: (1+x)(y|y)
			if (!c.constant_part().is_zero() && !c.x_part().is_zero())
				cs = "(" + cs + ")";
			t = cs + "(" + word_str(*module_, w) + ")";
		}
		if (first) {
			out = t;
			first = false;
		} else if (t[0] == '-')
			out += " - " + t.substr(1);
		else
			out += " + " + t;
	}
	return out;
}

// ---- parsing ----

namespace {

struct Cursor {
	std::string_view s;
	size_t i = 0;
	void skip_ws() {
		while (i < s.size() && std::isspace((unsigned char)s[i]))
			++i;
	}
	bool done() {
		skip_ws();
		return i >= s.size();
	}
	char peek() {
		skip_ws();
		return i < s.size() ? s[i] : '\0';
	}
	bool eat(char c) {
		if (peek() == c) {
			++i;
			return true;
		}
		return false;
	}
};

bool name_char(char c) {
	return std::isalnum((unsigned char)c) || c == '_' || c == '\'';
}

long long parse_int(Cursor &c) {
	c.skip_ws();
	size_t start = c.i;
	while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i]))
		++c.i;
	if (c.i == start)
		fail(Errc::parse, "expected a number in '" + std::string(c.s) + "'");
	return std::stoll(std::string(c.s.substr(start, c.i - start)));
}

Rational parse_rational(Cursor &c) {
	long long n = parse_int(c);
	if (c.eat('/'))
		return Rational(n, parse_int(c));
	return Rational(n);
}

// [rational] ['x']  |  'x', the optional numeric part of a term coefficient
Scalar parse_coef_body(Cursor &c, const Ring &ring) {
	Rational r(1);
	bool have_num = false;
	if (std::isdigit((unsigned char)c.peek())) {
		r = parse_rational(c);
		have_num = true;
	}
	// an 'x' here is the exterior coefficient only if it is not a generator-name start
	if (c.peek() == 'x' && (c.i + 1 >= c.s.size() || !name_char(c.s[c.i + 1]))) {
		++c.i;
		return Scalar::x(ring, r);
	}
	if (!have_num)
		fail(Errc::parse, "expected coefficient");
	return Scalar(ring, r);
}

Word parse_word_tokens(Cursor &c, const GradedModule &m) {
	Word w;
	for (;;) {
		c.skip_ws();
		size_t start = c.i;
		while (c.i < c.s.size() && name_char(c.s[c.i]))
			++c.i;
		if (c.i == start)
			fail(Errc::parse, "expected a generator name in '" + std::string(c.s) + "'");
		std::string_view name = c.s.substr(start, c.i - start);
		int idx = m.generators.index_of(name);
		if (idx < 0)
			fail(Errc::parse, "unknown generator '" + std::string(name) + "'");
		w.push_back((char)idx);
		if (!c.eat('|'))
			break;
	}
	return w;
}

// "1" is also the unit letter, so digits open a coefficient only when a term body follows
bool digits_start_coef(const Cursor &c) {
	size_t j = c.i;
	while (j < c.s.size() && std::isdigit((unsigned char)c.s[j]))
		++j;
	if (j >= c.s.size())
		return false;
	return c.s[j] == '(' || c.s[j] == '/' || name_char(c.s[j]);
}

// one term: [coef] word | coef '(' word ')' | '(' c '+' cx ')' '(' word ')'
std::pair<Word, Scalar> parse_term(Cursor &c, const GradedModule &m) {
	const Ring &ring = m.ring;
	Scalar coef = Scalar::one(ring);
	if (c.peek() == '(') {
		// parenthesized mixed coefficient "(a+bx)(word)"
		size_t save = c.i;
		++c.i;
		bool neg = c.eat('-');
		Scalar a = parse_coef_body(c, ring);
		if (neg)
			a = -a;
		while (c.peek() == '+' || c.peek() == '-') {
			bool minus = c.eat('-');
			if (!minus)
				c.eat('+');
			Scalar b = parse_coef_body(c, ring);
			a = minus ? a - b : a + b;
		}
		if (!c.eat(')'))
			fail(Errc::parse, "unclosed coefficient parenthesis");
		if (c.peek() == '(') {
			coef = a;
		} else {
			c.i = save; // it was not a coefficient after all
			fail(Errc::parse, "expected '(word)' after coefficient");
		}
	} else if ((std::isdigit((unsigned char)c.peek()) && digits_start_coef(c)) ||
	           (c.peek() == 'x' && (c.i + 1 >= c.s.size() || !name_char(c.s[c.i + 1])))) {
		coef = parse_coef_body(c, ring);
	}
	Word w;
	if (c.eat('(')) {
		w = parse_word_tokens(c, m);
		if (!c.eat(')'))
			fail(Errc::parse, "unclosed word parenthesis");
	} else {
		w = parse_word_tokens(c, m);
	}
	return {std::move(w), std::move(coef)};
}

} // namespace

Element parse_element(ModulePtr module, std::string_view text, int expected_arity) {
	Cursor c{text};
	if (c.peek() == '0') {
		size_t save = c.i;
		++c.i;
		if (c.done()) {
			if (expected_arity < 0)
				fail(Errc::parse, "'0' literal needs a context fixing its arity");
			return Element(std::move(module), expected_arity);
		}
		c.i = save;
	}
	bool neg = c.eat('-');
	auto [w, s] = parse_term(c, *module);
	Element out = Element::monomial(module, std::move(w), neg ? -s : s);
	while (!c.done()) {
		bool minus = c.eat('-');
		if (!minus && !c.eat('+'))
			fail(Errc::parse, "expected '+' or '-' between terms");
		auto [w2, s2] = parse_term(c, *module);
		if ((int)w2.size() != out.arity())
			fail(Errc::arity_mismatch, "terms of different arities in one element");
		out += Element::monomial(module, std::move(w2), minus ? -s2 : s2);
	}
	if (expected_arity >= 0 && out.arity() != expected_arity)
		fail(Errc::arity_mismatch, "element arity " + std::to_string(out.arity()) +
		                               ", expected " + std::to_string(expected_arity));
	return out;
}

} // namespace ainfb

#include "ainfb/exprlang.hpp"
#include "ainfb/element.hpp"
#include <cctype>

namespace ainfb {

namespace {

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
		s.remove_prefix(1);
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
		s.remove_suffix(1);
	return s;
}

bool all_digits(std::string_view s) {
	if (s.empty())
		return false;
	for (char c : s)
		if (c < '0' || c > '9')
			return false;
	return true;
}

int to_int(std::string_view s) {
	long long v = 0;
	for (char c : s) {
		v = v * 10 + (c - '0');
		if (v > 1'000'000)
			fail(Errc::bad_argument, "operation index too large");
	}
	return (int)v;
}

std::optional<MultiOp> resolve_op(const HopfAlgebra &h, const Conventions &c,
                                  std::string_view name) {
	if (name == "mu")
		return h.product;
	if (name == "Delta")
		return h.coproduct;
	if (name == "omega") {
		if (!h.omega)
			fail(Errc::bad_argument, "this structure has no omega operation");
		return *h.omega;
	}
	auto indexed = [&](std::string_view prefix) -> std::optional<int> {
		if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
			return std::nullopt;
		std::string_view rest = name.substr(prefix.size());
		if (!all_digits(rest))
			return std::nullopt;
		return to_int(rest);
	};
	// longer prefixes first so "delta3" is not read as an element word
	if (auto k = indexed("delta"))
		return cobar_component(h.coproduct, *k);
	if (auto k = indexed("partial"))
		return bar_component(h.product, *k, c.bar_sign);
	if (name.size() > 5 && name.substr(0, 5) == "sigma") {
		std::string_view rest = name.substr(5);
		size_t us = rest.find('_');
		if (us != std::string_view::npos && all_digits(rest.substr(0, us)) &&
		    all_digits(rest.substr(us + 1)))
			return MultiOp::sigma(h.module, to_int(rest.substr(0, us)), to_int(rest.substr(us + 1)));
		return std::nullopt;
	}
	if (auto k = indexed("f"))
		return iterated_coproduct(h.coproduct, *k);
	if (auto k = indexed("g"))
		return iterated_product(h.product, *k);
	return std::nullopt;
}

Element eval(const HopfAlgebra &h, const Conventions &c, std::string_view s, int expected_arity) {
	s = trim(s);
	if (s.empty())
		fail(Errc::parse, "empty expression");
	size_t name_end = 0;
	while (name_end < s.size() &&
	       (std::isalnum((unsigned char)s[name_end]) || s[name_end] == '_'))
		++name_end;
	if (name_end > 0 && name_end < s.size() && s[name_end] == '(' && s.back() == ')') {
		// the parenthesis must close at the very end for this to be a call
		int depth = 0;
		size_t close = std::string_view::npos;
		for (size_t i = name_end; i < s.size(); ++i) {
			if (s[i] == '(')
				++depth;
			else if (s[i] == ')' && --depth == 0) {
				close = i;
				break;
			}
		}
		if (close == s.size() - 1) {
			if (auto op = resolve_op(h, c, s.substr(0, name_end))) {
				Element inner = eval(h, c, s.substr(name_end + 1, close - name_end - 1), op->inputs());
				return op->apply(inner);
			}
		}
	}
	if (name_end > 0 && name_end < s.size() && s[name_end] == '(') {
		std::string head(s.substr(0, name_end));
		if (head != "x" && !all_digits(head) && h.module->generators.index_of(head) < 0)
			fail(Errc::parse, "cannot read '" + std::string(s) +
			                      "': an expression is one nested application, like "
			                      "delta3(omega(y|y))");
	}
	return parse_element(h.module, s, expected_arity);
}

} // namespace

Element evaluate_expression(const HopfAlgebra &h, const Conventions &c, std::string_view text) {
	return eval(h, c, text, -1);
}

} // namespace ainfb

#pragma once
#include "module.hpp"

namespace ainfb {

struct ElementDegree {
	enum class Kind { zero, defined, mixed } kind = Kind::zero;
	long long value = 0; // meaningful when kind == defined
};

// Linear combination of basis words of H^{⊗arity}, kept in normal form:
// terms sorted by word, no zero coefficients, exterior coefficients factored
// to the front of each word.
class Element {
  public:
	Element(ModulePtr module, int arity);
	static Element monomial(ModulePtr module, Word w, Scalar coef);
	// bulk constructor; terms_distinct means no two entries share a word
	static Element from_terms(ModulePtr module, int arity,
	                          std::vector<std::pair<Word, Scalar>> terms, bool terms_distinct);

	const GradedModule &module() const { return *module_; }
	const ModulePtr &module_ptr() const { return module_; }
	const Ring &ring() const { return module_->ring; }
	int arity() const { return arity_; }
	bool is_zero() const { return terms_.empty(); }
	const std::vector<std::pair<Word, Scalar>> &terms() const { return terms_; }

	Element &operator+=(const Element &o);
	friend Element operator+(Element a, const Element &b) { return a += b; }
	friend Element operator-(const Element &a, const Element &b) { return a + b.scaled_int(-1); }
	bool operator==(const Element &o) const;

	// left multiplication by a scalar (lands in front, no word crossing)
	Element scaled(const Scalar &s) const;
	Element scaled_int(long long v) const { return scaled(Scalar::integer(ring(), v)); }

	ElementDegree degree() const;
	std::string str() const;

  private:
	ModulePtr module_;
	int arity_;
	std::vector<std::pair<Word, Scalar>> terms_;
};

// Graded tensor product. Moving v's exterior coefficient across u's word
// costs (-1)^{|x| * deg(word of u)} on the x part of each coefficient of v.
Element tensor(const Element &u, const Element &v);

// parses the canonical element syntax: "y|1|1 + 1|1|y", "x(y|y|y)",
// "2(y|1) - 1/2(y|y)", "(1+x)(y)", "0". expected_arity >= 0 pins the arity
// (required to give the "0" literal one) and rejects mismatches.
Element parse_element(ModulePtr module, std::string_view text, int expected_arity = -1);

} // namespace ainfb

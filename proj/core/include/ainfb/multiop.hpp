#pragma once
#include "element.hpp"
#include <map>
#include <optional>

namespace ainfb {

enum class OpKind { table, identity, tensor, compose, sigma, scaled, sum };

// A graded multilinear operation H^{⊗inputs} -> H^{⊗outputs}, held as a lazy
// expression tree and evaluated per basis word. Sign conventions:
//   (f⊗g)(u⊗v) = (-1)^{deg(g)·deg(u)} f(u)⊗g(v)
//   f(c·w)     = (-1)^{deg(f)·deg(c)} c·f(w)   for a coefficient c
//   sigma(q,p) moves the letter at (block b, slot s) of (H^{⊗q})^{⊗p} to
//   output position s·p + b, with the Koszul sign of the letter permutation.
class MultiOp {
  public:
	static MultiOp identity(ModulePtr m, int k);
	static MultiOp table(ModulePtr m, int inputs, int outputs, long long degree,
	                     std::map<Word, Element> entries, bool validate_degrees = true);
	static MultiOp tensor(std::vector<MultiOp> factors);
	static MultiOp compose(std::vector<MultiOp> chain); // chain[0] ∘ chain[1] ∘ ... (rightmost applied first)
	static MultiOp sigma(ModulePtr m, int q, int p);
	static MultiOp scaled(int sign, MultiOp op); // sign ∈ {+1, -1}
	static MultiOp sum(std::vector<MultiOp> terms);

	OpKind kind() const;
	int inputs() const;
	int outputs() const;
	long long degree() const;
	const ModulePtr &module_ptr() const;
	const GradedModule &module() const;

	Element apply(const Element &e) const;
	Element apply_word(const Word &w) const; // basis word with implicit coefficient 1

	// Superset of basis words on which this operation can be nonzero, sorted;
	// nullopt when that is (or may be) the whole basis. Composites restrict to
	// the first applied stage; off-support words evaluate to zero exactly.
	std::optional<std::vector<Word>> support(unsigned long long cap = 1ull << 20) const;

	// table access (diagnostics); empty for other kinds
	const std::map<Word, Element> &table_entries() const;

  private:
	struct Node;
	std::shared_ptr<const Node> node_;
	explicit MultiOp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

// convenience wrappers around the factories
MultiOp tensor2(const MultiOp &a, const MultiOp &b);
MultiOp compose2(const MultiOp &f, const MultiOp &g); // f ∘ g

struct OpCheck {
	bool ok = true;
	Word witness;                    // lexicographically first failing input word
	std::string lhs, rhs;            // printed values at the witness
	unsigned long long scanned = 0;  // input words evaluated
	bool support_scan = false;       // scan was restricted to the structural support
};

// equality / vanishing on every basis word of the input power (enumeration is
// lexicographic; the reported witness is the first failure)
OpCheck check_equal(const MultiOp &a, const MultiOp &b, unsigned long long cap = 1ull << 22);
OpCheck check_zero(const MultiOp &op, unsigned long long cap = 1ull << 22);
bool op_equal(const MultiOp &a, const MultiOp &b, unsigned long long cap = 1ull << 22);

// iterated (co)products: f^n = (Δ⊗1^{⊗n-2})···(Δ⊗1)Δ, g_m = μ(μ⊗1)···(μ⊗1^{⊗m-2}),
// with f^1 = g_1 = identity; *_right builds the mirrored composition
MultiOp iterated_coproduct(const MultiOp &coproduct, int n);
MultiOp iterated_coproduct_right(const MultiOp &coproduct, int n);
MultiOp iterated_product(const MultiOp &product, int m);
MultiOp iterated_product_right(const MultiOp &product, int m);

// δ^k = Σ_{i=1}^k (-1)^{i+1} 1^{⊗i-1}⊗Δ⊗1^{⊗k-i} : k inputs, k+1 outputs
MultiOp cobar_component(const MultiOp &coproduct, int k);

// global sign convention for the bar components
enum class BarSign {
	positive, // ∂_k = +Σ (-1)^{i+1} 1^{⊗i-1}⊗μ⊗1^{⊗k-i}
	negated,  // ∂_k = -Σ (-1)^{i+1} ...
};
// ∂_k : k+1 inputs, k outputs
MultiOp bar_component(const MultiOp &product, int k, BarSign sign = BarSign::positive);

// (-1)^{⌊(k+1)/2⌋} μ^{⊗k} for a product-shaped op, (-1)^{⌊k/2⌋} Δ^{⊗k} for a
// coproduct-shaped one
MultiOp signed_power(const MultiOp &op, int k);

} // namespace ainfb

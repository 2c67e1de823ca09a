#pragma once
#include "multiop.hpp"

namespace ainfb {

// A Hopf algebra presented by tables, optionally carrying one extra operation
// omega : H^{⊗m} -> H^{⊗n}. Construction checks shapes only; whether the
// axioms and structure relations actually hold is verify()'s job, so broken
// inputs can still be loaded and reported on.
struct HopfAlgebra {
	ModulePtr module;
	MultiOp product;   // 2 -> 1, degree 0
	MultiOp coproduct; // 1 -> 2, degree 0
	std::optional<MultiOp> omega;
	int m = 0, n = 0; // omega's shape when present
};

HopfAlgebra make_structure(ModulePtr module, MultiOp product, MultiOp coproduct);
HopfAlgebra make_structure(ModulePtr module, MultiOp product, MultiOp coproduct, MultiOp omega);

// unit acts as identity, any other product of generators is 0
MultiOp trivial_product(const ModulePtr &module);
// Δ(1) = 1|1 and Δ(g) = g|1 + 1|g for every other generator
MultiOp primitive_coproduct(const ModulePtr &module);

// Classification of the (m,n,p,q) parameter solutions of
// m(q+1) = n(q-1) + p + 3, the degree constraint for an operation
// y^{⊗m} -> x·y^{⊗n} with |y| = q over coefficients with |x| = p.
enum class TypeCase { i, ii, iii, custom };
const char *type_case_name(TypeCase c);

struct TypeParams {
	int m = 0, n = 0, p = 0, q = 0;
	TypeCase kind = TypeCase::custom;
	bool operator==(const TypeParams &) const = default;
};

bool degree_condition(int m, int n, int p, int q);

// the q solving the degree constraint for given m, p, n; nullopt when m == n
// leaves q unconstrained
std::optional<Rational> q_of_n(int m, int p, int n);

TypeCase classify_type(int m, int n, int p, int q);

// all solutions with 1 <= m <= m_max, 1 <= n <= n_cap, 1 <= q <= q_cap,
// p >= 1 and m+n >= 4, ordered lexicographically by (m, n, p, q)
std::vector<TypeParams> enumerate_types(int m_max, int q_cap, int n_cap);

// ground field choice for the one-parameter family below
enum class BaseChoice { automatic, mod2, rationals };

// Z2 Hopf algebra on one generator y of degree -2 with omega : H^{⊗2} -> H^{⊗3},
// omega(y|y) = y|1|1 + 1|1|y
HopfAlgebra make_z2_type23_example();

// exterior Hopf algebra on y (|y| = q) over base[x]/(x^2) (|x| = p) with
// omega(y^{⊗m}) = x·y^{⊗n}; requires the degree constraint, else fails with
// Errc::degree_mismatch. automatic picks Q for odd q and Z2 for even q, where
// the Hopf axiom needs 2 = 0; forcing rationals there still constructs, and
// verification reports the failure.
HopfAlgebra make_exterior_family(int m, int n, int p, int q,
                                 BaseChoice base = BaseChoice::automatic);

} // namespace ainfb

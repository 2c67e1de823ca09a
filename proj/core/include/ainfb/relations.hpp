#pragma once
#include "hopf.hpp"

namespace ainfb {

enum class RelationId {
	assoc,
	coassoc,
	hopf,
	r1,
	r2,
	r3,
	r4a,
	r4b,
	r4c,
	r4d,
	r5a,
	r5b,
	r5c,
	r5d,
	r6,
};
const char *relation_name(RelationId id);

// R1 and R2 have fully pinned signs and are always checked as equations.
// The remaining identities come with unspecified ±'s on most terms, so the
// exact mode (sum the terms, unspecified signs as +) is only meaningful over
// characteristic 2; termwise mode instead demands every composite vanish on
// its own, which is sign-independent and holds for the exterior family.
enum class VerifyMode { automatic, exact, termwise };

// R2's right side appears in two renditions that differ by an overall
// (-1)^{floor((n+1)/2)+m+1}; standard is the one the equation checks pin down.
enum class R2Form { standard, alternate };

struct Conventions {
	BarSign bar_sign = BarSign::positive;
	R2Form r2_form = R2Form::standard;
};

struct Witness {
	Word input;
	std::string lhs, rhs;
	int term = -1; // failing term index for termwise checks
};

struct RelationReport {
	RelationId id = RelationId::assoc;
	int item = -1;         // k for the mixed families (R4c/R5c), else -1
	bool termwise = false; // whether this check ran term by term
	bool passed = true;
	unsigned long long scanned = 0;
	bool support_scan = false;
	std::optional<Witness> witness;
	std::string note;
};

std::string relation_label(const RelationReport &r); // "R1", "R4c(k=2)", ...

struct VerificationResult {
	bool degree_ok = true;
	std::string degree_message;
	std::vector<RelationReport> reports;
	bool relations_passed() const;
	bool all_passed() const { return degree_ok && relations_passed(); }
};

struct VerifyOptions {
	VerifyMode mode = VerifyMode::automatic;
	Conventions conventions;
	unsigned long long cap = 1ull << 22;
};

struct RelationSides {
	MultiOp lhs, rhs;
};
RelationSides build_relation1(const HopfAlgebra &h);
RelationSides build_relation2(const HopfAlgebra &h, const Conventions &c);

// Signed composite terms of the zero-sum identities, in the deterministic
// order verification scans them. Unspecified signs are +.
std::vector<MultiOp> relation3_terms(const HopfAlgebra &h);
std::vector<MultiOp> relation4a_terms(const HopfAlgebra &h);
// k products and n-k omegas on the outgoing side; k = 0 is R4b, k = n-1 is R4d
std::vector<MultiOp> relation4_family_terms(const HopfAlgebra &h, int k);
std::vector<MultiOp> relation5a_terms(const HopfAlgebra &h);
// k coproducts and m-k omegas on the incoming side; k = 0 is R5b, k = m-1 is R5d
std::vector<MultiOp> relation5_family_terms(const HopfAlgebra &h, int k);
std::vector<MultiOp> relation6_terms(const HopfAlgebra &h);

// Checks associativity, coassociativity, the Hopf compatibility, and (when an
// omega is present) the structure relations that apply to its type. Also
// diagnoses omega's degree shift against m+n-3; a wrong shift does not stop
// the relation checks. Requesting exact mode away from characteristic 2 is an
// input error.
VerificationResult verify(const HopfAlgebra &h, const VerifyOptions &opts = {});

} // namespace ainfb

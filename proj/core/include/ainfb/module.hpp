#pragma once
#include "ring.hpp"
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ainfb {

struct Generator {
	std::string name;
	long long degree = 0;
	bool operator==(const Generator &) const = default;
};

// Generator list of the underlying graded module. Index 0 is always the unit
// symbol "1" at degree 0; further generators keep declaration order.
class GeneratorTable {
  public:
	explicit GeneratorTable(std::vector<Generator> extra = {});
	int size() const { return (int)gens_.size(); }
	const Generator &at(int i) const { return gens_.at(i); }
	int index_of(std::string_view name) const; // -1 when absent
	bool operator==(const GeneratorTable &) const;

  private:
	std::vector<Generator> gens_;
	std::map<std::string, int, std::less<>> index_;
};

struct GradedModule {
	Ring ring;
	GeneratorTable generators;
	bool operator==(const GradedModule &o) const {
		return ring == o.ring && generators == o.generators;
	}
};

using ModulePtr = std::shared_ptr<const GradedModule>;

ModulePtr make_module(Ring ring, std::vector<Generator> extra_generators);

inline bool same_module(const ModulePtr &a, const ModulePtr &b) {
	return a == b || (a && b && *a == *b);
}

// A basis word of H^{⊗k}: k generator indices, one byte each.
using Word = std::string;

long long word_degree(const GradedModule &m, const Word &w);
std::string word_str(const GradedModule &m, const Word &w); // "y|1|y"
Word parse_word(const GradedModule &m, std::string_view text);

// #generators ^ arity, saturating at uint64 max
unsigned long long basis_size(const GradedModule &m, int arity);
// all basis words of the given arity in lexicographic (index) order
std::vector<Word> all_words(const GradedModule &m, int arity,
                            unsigned long long cap = 1ull << 22);

} // namespace ainfb

#include "ainfb/module.hpp"

namespace ainfb {

GeneratorTable::GeneratorTable(std::vector<Generator> extra) {
	gens_.push_back({"1", 0});
	for (auto &g : extra) {
		if (g.name.empty() || g.name.find_first_of("|()+-> \t") != std::string::npos)
			fail(Errc::bad_argument, "bad generator name '" + g.name + "'");
		if (g.name == "x")
			fail(Errc::bad_argument, "'x' is reserved for the exterior coefficient");
		gens_.push_back(std::move(g));
	}
	if (gens_.size() > 120)
		fail(Errc::bad_argument, "too many generators");
	for (int i = 0; i < (int)gens_.size(); ++i) {
		if (!index_.emplace(gens_[i].name, i).second)
			fail(Errc::bad_argument, "duplicate generator '" + gens_[i].name + "'");
	}
}

int GeneratorTable::index_of(std::string_view name) const {
	auto it = index_.find(name);
	return it == index_.end() ? -1 : it->second;
}

bool GeneratorTable::operator==(const GeneratorTable &o) const { return gens_ == o.gens_; }

ModulePtr make_module(Ring ring, std::vector<Generator> extra) {
	return std::make_shared<GradedModule>(GradedModule{ring, GeneratorTable(std::move(extra))});
}

long long word_degree(const GradedModule &m, const Word &w) {
	long long d = 0;
	for (unsigned char c : w)
		d += m.generators.at(c).degree;
	return d;
}

std::string word_str(const GradedModule &m, const Word &w) {
	std::string out;
	for (size_t i = 0; i < w.size(); ++i) {
		if (i)
			out += '|';
		out += m.generators.at((unsigned char)w[i]).name;
	}
	return out;
}

Word parse_word(const GradedModule &m, std::string_view text) {
	Word w;
	size_t pos = 0;
	while (pos <= text.size()) {
		size_t bar = text.find('|', pos);
		std::string_view name = text.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
		int idx = m.generators.index_of(name);
		if (idx < 0)
			fail(Errc::parse, "unknown generator '" + std::string(name) + "'");
		w.push_back((char)idx);
		if (bar == std::string_view::npos)
			break;
		pos = bar + 1;
	}
	return w;
}

unsigned long long basis_size(const GradedModule &m, int arity) {
	unsigned long long n = 1, g = (unsigned long long)m.generators.size();
	for (int i = 0; i < arity; ++i) {
		if (n > ~0ull / g)
			return ~0ull;
		n *= g;
	}
	return n;
}

std::vector<Word> all_words(const GradedModule &m, int arity, unsigned long long cap) {
	unsigned long long total = basis_size(m, arity);
	if (total > cap)
		fail(Errc::too_large, "basis of size " + std::to_string(total) + " exceeds enumeration cap");
	std::vector<Word> out;
	out.reserve(total);
	Word w(arity, (char)0);
	int g = m.generators.size();
	for (;;) {
		out.push_back(w);
		int i = arity - 1;
		while (i >= 0 && (unsigned char)w[i] == g - 1)
			w[i--] = 0;
		if (i < 0)
			break;
		w[i]++;
	}
	return out;
}

} // namespace ainfb

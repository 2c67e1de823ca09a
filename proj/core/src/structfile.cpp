#include "ainfb/structfile.hpp"
#include "ainfb/element.hpp"
#include <cctype>
#include <fstream>
#include <sstream>

namespace ainfb {

namespace {

struct Parser {
	std::string name;
	int lineno = 0;

	[[noreturn]] void err(const std::string &msg) const {
		fail(Errc::parse, name + ":" + std::to_string(lineno) + ": " + msg);
	}

	std::optional<Ring> ring;
	std::vector<Generator> gens;
	bool saw_omega = false;
	int m = 0, n = 0;
	std::vector<std::pair<std::string, std::string>> pending_rows;
	std::vector<int> pending_lines;

	static std::string trim(std::string s) {
		size_t a = s.find_first_not_of(" \t\r");
		size_t b = s.find_last_not_of(" \t\r");
		return a == std::string::npos ? "" : s.substr(a, b - a + 1);
	}

	void handle(const std::string &raw) {
		std::string line = raw.substr(0, raw.find('#'));
		line = trim(line);
		if (line.empty())
			return;
		size_t arrow = line.find("->");
		if (arrow != std::string::npos) {
			if (!saw_omega)
				err("entry row before an omega declaration");
			pending_rows.emplace_back(trim(line.substr(0, arrow)), trim(line.substr(arrow + 2)));
			pending_lines.push_back(lineno);
			return;
		}
		std::istringstream in(line);
		std::string kw;
		in >> kw;
		if (kw == "ring") {
			if (ring)
				err("ring declared twice");
			if (!gens.empty() || saw_omega)
				err("ring must come first");
			std::string kind;
			in >> kind;
			if (kind == "z2")
				ring = Ring::mod2();
			else if (kind == "rationals" || kind == "q")
				ring = Ring::rationals();
			else if (kind == "exterior") {
				std::string base;
				int xdeg = 0;
				if (!(in >> base >> xdeg))
					err("exterior ring needs a base and a coefficient degree");
				if (base == "z2")
					ring = Ring::exterior(BaseField::mod2, xdeg);
				else if (base == "rationals" || base == "q")
					ring = Ring::exterior(BaseField::rationals, xdeg);
				else
					err("unknown base field '" + base + "'");
			} else
				err("unknown ring '" + kind + "'");
		} else if (kw == "generator") {
			if (!ring)
				err("generator before the ring line");
			if (saw_omega)
				err("generator after the omega line");
			std::string gname;
			long long deg = 0;
			if (!(in >> gname >> deg))
				err("generator needs a name and a degree");
			if (std::isdigit((unsigned char)gname[0]))
				err("generator name '" + gname + "' may not start with a digit");
			gens.push_back({gname, deg});
		} else if (kw == "omega") {
			if (!ring)
				err("omega before the ring line");
			if (saw_omega)
				err("omega declared twice");
			if (!(in >> m >> n))
				err("omega needs two arities");
			if (m < 1 || n < 1)
				err("omega arities must be >= 1");
			if (m + n < 4)
				err("omega needs m+n >= 4");
			saw_omega = true;
		} else {
			err("unknown directive '" + kw + "'");
		}
		std::string rest;
		if (in >> rest)
			err("trailing text '" + rest + "'");
	}
};

} // namespace

HopfAlgebra parse_structure(std::istream &in, const std::string &name) {
	Parser p;
	p.name = name;
	std::string line;
	while (std::getline(in, line)) {
		++p.lineno;
		p.handle(line);
	}
	if (!p.ring) {
		p.lineno = 0;
		p.err("missing ring line");
	}
	ModulePtr mod;
	try {
		mod = make_module(*p.ring, p.gens);
	} catch (const Error &e) {
		p.lineno = 0;
		p.err(e.what());
	}
	if (!p.saw_omega)
		return make_structure(mod, trivial_product(mod), primitive_coproduct(mod));

	std::map<Word, Element> entries;
	bool have_shift = false;
	long long shift = 0;
	for (size_t i = 0; i < p.pending_rows.size(); ++i) {
		p.lineno = p.pending_lines[i];
		Word key;
		Element val(mod, p.n);
		try {
			key = parse_word(*mod, p.pending_rows[i].first);
			val = parse_element(mod, p.pending_rows[i].second, p.n);
		} catch (const Error &e) {
			p.err(e.what());
		}
		if ((int)key.size() != p.m)
			p.err("entry key has arity " + std::to_string(key.size()) + ", omega expects " +
			      std::to_string(p.m));
		if (entries.count(key))
			p.err("duplicate entry for " + word_str(*mod, key));
		if (!have_shift && !val.is_zero()) {
			const auto &[ow, s] = val.terms().front();
			shift = word_degree(*mod, ow) + s.homogeneous_parts().front().second -
			        word_degree(*mod, key);
			have_shift = true;
		}
		entries.emplace(std::move(key), std::move(val));
	}
	if (!have_shift)
		shift = p.m + p.n - 3; // all entries zero: grade the zero map as required
	MultiOp omega = MultiOp::table(mod, p.m, p.n, shift, std::move(entries));
	return make_structure(mod, trivial_product(mod), primitive_coproduct(mod), std::move(omega));
}

HopfAlgebra load_structure_file(const std::string &path) {
	std::ifstream in(path);
	if (!in)
		fail(Errc::parse, "cannot open " + path);
	return parse_structure(in, path);
}

} // namespace ainfb

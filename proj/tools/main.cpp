#include "CLI11.hpp"
#include <ainfb/exprlang.hpp>
#include <ainfb/report.hpp>
#include <ainfb/structfile.hpp>
#include <cctype>
#include <iostream>
#include <set>

using namespace ainfb;

namespace {

struct SourceFlags {
	std::string builtin;
	std::string file;
	int m = 0, n = 0, p = 0, q = 0;
	bool m_set = false, n_set = false, p_set = false, q_set = false;
	std::string base = "auto";
};

void add_family_params(CLI::App *cmd, SourceFlags &s) {
	cmd->add_option("--m", s.m, "omega input arity (theorem1)")->each([&](const std::string &) { s.m_set = true; });
	cmd->add_option("--n", s.n, "omega output arity (theorem1)")->each([&](const std::string &) { s.n_set = true; });
	cmd->add_option("--p", s.p, "coefficient generator degree (theorem1)")->each([&](const std::string &) { s.p_set = true; });
	cmd->add_option("--q", s.q, "module generator degree (theorem1)")->each([&](const std::string &) { s.q_set = true; });
	cmd->add_option("--base", s.base, "ground field for theorem1: auto, z2, q")
	    ->check(CLI::IsMember({"auto", "z2", "q"}));
}

BaseChoice parse_base(const std::string &b) {
	if (b == "z2")
		return BaseChoice::mod2;
	if (b == "q")
		return BaseChoice::rationals;
	return BaseChoice::automatic;
}

HopfAlgebra resolve_source(const SourceFlags &s) {
	bool family_params = s.m_set || s.n_set || s.p_set || s.q_set;
	if (s.builtin == "ex1") {
		if (family_params || s.base != "auto")
			fail(Errc::bad_argument, "--m/--n/--p/--q/--base only apply to theorem1");
		return make_z2_type23_example();
	}
	if (s.builtin == "theorem1") {
		if (!(s.m_set && s.n_set && s.p_set && s.q_set))
			fail(Errc::bad_argument, "theorem1 needs --m, --n, --p and --q");
		return make_exterior_family(s.m, s.n, s.p, s.q, parse_base(s.base));
	}
	if (!s.file.empty()) {
		if (family_params || s.base != "auto")
			fail(Errc::bad_argument, "--m/--n/--p/--q/--base only apply to theorem1");
		return load_structure_file(s.file);
	}
	fail(Errc::bad_argument, "pick a structure: --builtin ex1|theorem1 or --file <path>");
}

Conventions parse_conventions(const std::string &bar, const std::string &r2) {
	Conventions c;
	c.bar_sign = (bar == "negated") ? BarSign::negated : BarSign::positive;
	c.r2_form = (r2 == "alternate") ? R2Form::alternate : R2Form::standard;
	return c;
}

VerifyMode parse_mode(const std::string &m) {
	if (m == "exact")
		return VerifyMode::exact;
	if (m == "termwise")
		return VerifyMode::termwise;
	return VerifyMode::automatic;
}

std::string lower(std::string s) {
	for (char &c : s)
		c = (char)std::tolower((unsigned char)c);
	return s;
}

std::set<std::string> parse_relation_filter(const std::string &list) {
	static const RelationId all[] = {
	    RelationId::assoc, RelationId::coassoc, RelationId::hopf, RelationId::r1,
	    RelationId::r2,    RelationId::r3,      RelationId::r4a,  RelationId::r4b,
	    RelationId::r4c,   RelationId::r4d,     RelationId::r5a,  RelationId::r5b,
	    RelationId::r5c,   RelationId::r5d,     RelationId::r6,
	};
	std::set<std::string> known;
	for (RelationId id : all)
		known.insert(lower(relation_name(id)));
	std::set<std::string> out;
	size_t pos = 0;
	while (pos <= list.size()) {
		size_t comma = list.find(',', pos);
		std::string item = lower(list.substr(pos, comma == std::string::npos ? comma : comma - pos));
		if (!item.empty()) {
			if (!known.count(item))
				fail(Errc::bad_argument, "unknown relation '" + item + "' in --relations");
			out.insert(item);
		}
		if (comma == std::string::npos)
			break;
		pos = comma + 1;
	}
	if (out.empty())
		fail(Errc::bad_argument, "--relations selected nothing");
	return out;
}

int run_verify(const SourceFlags &src, const std::string &mode, const std::string &bar,
               const std::string &r2, const std::string &relations, bool json) {
	HopfAlgebra h = resolve_source(src);
	VerifyOptions opts;
	opts.mode = parse_mode(mode);
	opts.conventions = parse_conventions(bar, r2);
	VerificationResult res = verify(h, opts);
	if (!relations.empty()) {
		std::set<std::string> keep = parse_relation_filter(relations);
		std::erase_if(res.reports, [&](const RelationReport &r) {
			return !keep.count(lower(relation_name(r.id)));
		});
	}
	std::cout << (json ? render_json(res, *h.module) : render_text(res, *h.module));
	if (!res.degree_ok)
		return 3;
	return res.relations_passed() ? 0 : 1;
}

int run_enumerate(int m_max, int q_cap, int n_cap, bool json) {
	if (m_max < 2)
		fail(Errc::bad_argument, "--m-max must be >= 2");
	std::vector<TypeParams> rows = enumerate_types(m_max, q_cap, n_cap);
	std::cout << (json ? render_enumeration_json(rows) : render_enumeration_text(rows));
	return 0;
}

int run_show(const SourceFlags &src, const std::string &bar, const std::string &r2,
             const std::string &expression) {
	HopfAlgebra h = resolve_source(src);
	Element e = evaluate_expression(h, parse_conventions(bar, r2), expression);
	std::cout << e.str() << "\n";
	return 0;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"graded Hopf algebra structure relation checker"};
	app.require_subcommand(1);

	SourceFlags vsrc;
	std::string vmode = "auto", vbar = "positive", vr2 = "standard", vrelations;
	bool vjson = false;
	CLI::App *cmd_verify = app.add_subcommand("verify", "check the structure relations");
	cmd_verify->add_option("--builtin", vsrc.builtin, "built-in structure: ex1 or theorem1")
	    ->check(CLI::IsMember({"ex1", "theorem1"}));
	cmd_verify->add_option("--file", vsrc.file, "structure description file")
	    ->excludes("--builtin");
	add_family_params(cmd_verify, vsrc);
	cmd_verify->add_option("--mode", vmode, "relation check mode: auto, exact, termwise")
	    ->check(CLI::IsMember({"auto", "exact", "termwise"}));
	cmd_verify->add_option("--bar-sign", vbar, "global sign of the bar differential components")
	    ->check(CLI::IsMember({"positive", "negated"}));
	cmd_verify
	    ->add_option("--r2-convention", vr2, "which rendition of relation 2's right side to check")
	    ->check(CLI::IsMember({"standard", "alternate"}));
	cmd_verify->add_option("--relations", vrelations,
	                       "comma-separated relation names to report (default: all)");
	cmd_verify->add_flag("--json", vjson, "newline-delimited JSON records instead of text");

	int m_max = 0, q_cap = 0, n_cap = 8;
	bool ejson = false;
	CLI::App *cmd_enum = app.add_subcommand("enumerate", "list admissible (m,n,p,q) types");
	cmd_enum->add_option("--m-max", m_max, "largest m to scan")->required();
	cmd_enum->add_option("--q-cap", q_cap, "largest q to scan")->required();
	cmd_enum->add_option("--n-cap", n_cap, "largest n to scan (default 8)");
	cmd_enum->add_flag("--json", ejson, "newline-delimited JSON records instead of text");

	SourceFlags ssrc;
	std::string sbar = "positive", sr2 = "standard", source, expression;
	CLI::App *cmd_show = app.add_subcommand("show", "evaluate an operation expression");
	cmd_show->add_option("source", source, "ex1, theorem1, or a structure file path")->required();
	cmd_show->add_option("expression", expression, "e.g. \"delta3(omega(y|y))\"")->required();
	add_family_params(cmd_show, ssrc);
	cmd_show->add_option("--bar-sign", sbar, "global sign of the bar differential components")
	    ->check(CLI::IsMember({"positive", "negated"}));
	cmd_show
	    ->add_option("--r2-convention", sr2, "which rendition of relation 2's right side to check")
	    ->check(CLI::IsMember({"standard", "alternate"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : 2;
	}

	try {
		if (cmd_verify->parsed())
			return run_verify(vsrc, vmode, vbar, vr2, vrelations, vjson);
		if (cmd_enum->parsed())
			return run_enumerate(m_max, q_cap, n_cap, ejson);
		if (cmd_show->parsed()) {
			if (source == "ex1" || source == "theorem1")
				ssrc.builtin = source;
			else
				ssrc.file = source;
			return run_show(ssrc, sbar, sr2, expression);
		}
	} catch (const Error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return e.code() == Errc::degree_mismatch ? 3 : 2;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}

// Drives the installed command line binary end to end: spawns it with the
// scenarios below and checks exit codes, output fragments, and determinism.
// Usage: ainfb_cli_check <path-to-cli> <data-dir>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
	int exit_code = -1;
	std::string output;
};

RunResult run(const std::string &cli, const std::string &args) {
	std::string cmd = cli + " " + args + " 2>&1";
	FILE *pipe = popen(cmd.c_str(), "r");
	if (!pipe) {
		std::perror("popen");
		std::exit(99);
	}
	RunResult r;
	char buf[4096];
	size_t got;
	while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
		r.output.append(buf, got);
	int status = pclose(pipe);
	r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

struct Case {
	const char *name;
	std::string args;
	int want_exit;
	std::vector<std::string> want;        // substrings that must appear
	std::vector<std::string> want_absent; // substrings that must not
	std::string want_exact;               // full output when nonempty
};

int failures = 0;

void report(const Case &c, const RunResult &r, const std::string &why) {
	++failures;
	std::fprintf(stderr, "FAIL %s: %s\n  args: %s\n  exit: %d\n  output:\n%s\n", c.name,
	             why.c_str(), c.args.c_str(), r.exit_code, r.output.c_str());
}

void check(const std::string &cli, const Case &c) {
	RunResult r = run(cli, c.args);
	if (r.exit_code != c.want_exit) {
		report(c, r, "expected exit " + std::to_string(c.want_exit));
		return;
	}
	for (const std::string &w : c.want)
		if (r.output.find(w) == std::string::npos) {
			report(c, r, "missing '" + w + "'");
			return;
		}
	for (const std::string &w : c.want_absent)
		if (r.output.find(w) != std::string::npos) {
			report(c, r, "unwanted '" + w + "'");
			return;
		}
	if (!c.want_exact.empty() && r.output != c.want_exact) {
		report(c, r, "expected exactly '" + c.want_exact + "'");
		return;
	}
	std::printf("ok %s\n", c.name);
}

void check_deterministic(const std::string &cli, const char *name, const std::string &args) {
	RunResult a = run(cli, args);
	RunResult b = run(cli, args);
	if (a.output != b.output || a.exit_code != b.exit_code) {
		++failures;
		std::fprintf(stderr, "FAIL %s: two runs differ\n  args: %s\n", name, args.c_str());
		return;
	}
	std::printf("ok %s\n", name);
}

} // namespace

int main(int argc, char **argv) {
	if (argc != 3) {
		std::fprintf(stderr, "usage: %s <cli> <data-dir>\n", argv[0]);
		return 99;
	}
	std::string cli = argv[1];
	std::string data = argv[2];

	std::vector<Case> cases = {
	    {"example passes", "verify --builtin ex1", 0,
	     {"[PASS] degree: omega raises degree by m+n-3 = 2", "[PASS] R1 mode=exact",
	      "[PASS] R4c(k=1)", "result: PASS"},
	     {"FAIL"}},
	    {"example termwise", "verify --builtin ex1 --mode termwise", 1,
	     {"[FAIL] R3 mode=termwise", "[PASS] R1 mode=exact", "  term:  0",
	      "  lhs:   1|1|y|1|1 + y|1|1|1|1", "result: FAIL"}},
	    {"family odd q", "verify --builtin theorem1 --m 3 --n 4 --p 1 --q 3", 0,
	     {"[PASS] R3 mode=termwise", "result: PASS"}},
	    {"family even q", "verify --builtin theorem1 --m 3 --n 4 --p 2 --q 2", 0,
	     {"[PASS] R3 mode=exact", "result: PASS"}},
	    {"family square type", "verify --builtin theorem1 --m 2 --n 2 --p 1 --q 3", 0,
	     {"[PASS] R6", "[PASS] R5b", "result: PASS"}},
	    {"family big quadratic", "verify --builtin theorem1 --m 4 --n 2 --p 5 --q 1", 0,
	     {"result: PASS"}},
	    {"file structure", "verify --file " + data + "/ex1.struct", 0, {"result: PASS"}},
	    {"perturbed structure", "verify --file " + data + "/perturbed.struct", 1,
	     {"[FAIL] R1", "  input: y|y", "result: FAIL"}},
	    {"broken structure", "verify --file " + data + "/broken.struct", 3,
	     {"[FAIL] degree: omega must raise degree by m+n-3 = 1 but raises it by 0", "[FAIL] R6",
	      "  input: y|y|y|y"}},
	    {"family structure file", "verify --file " + data + "/family_3_4.struct", 0,
	     {"result: PASS"}},
	    {"missing file", "verify --file /nonexistent/x.struct", 2, {"cannot open"}},
	    {"no source", "verify", 2, {"pick a structure: --builtin ex1|theorem1 or --file <path>"}},
	    {"incomplete family", "verify --builtin theorem1 --m 3 --n 4", 2,
	     {"theorem1 needs --m, --n, --p and --q"}},
	    {"family params on example", "verify --builtin ex1 --q 3", 2,
	     {"only apply to theorem1"}},
	    {"bad parameters", "verify --builtin theorem1 --m 3 --n 4 --p 1 --q 4", 3, {"violate"}},
	    {"exact off characteristic 2",
	     "verify --builtin theorem1 --m 3 --n 4 --p 1 --q 3 --mode exact", 2,
	     {"characteristic 2"}},
	    {"forced rational base breaks even q",
	     "verify --builtin theorem1 --m 3 --n 4 --p 2 --q 2 --base q", 1, {"[FAIL] Hopf"}},
	    {"forced mod2 base on odd q",
	     "verify --builtin theorem1 --m 3 --n 4 --p 1 --q 3 --base z2", 0, {"result: PASS"}},
	    {"alternate convention diverges",
	     "verify --builtin theorem1 --m 3 --n 2 --p 5 --q 3 --r2-convention alternate", 1,
	     {"[FAIL] R2", "(alternate right side)", "result: FAIL"}},
	    {"alternate convention agrees elsewhere",
	     "verify --builtin theorem1 --m 3 --n 4 --p 1 --q 3 --r2-convention alternate", 0,
	     {"result: PASS"}},
	    {"negated bar sign fails", "verify --builtin theorem1 --m 3 --n 4 --p 1 --q 3 --bar-sign negated",
	     1, {"[FAIL] R2"}},
	    {"relation filter", "verify --builtin ex1 --relations r1,hopf", 0,
	     {"[PASS] R1", "[PASS] Hopf"}, {"R4a", "Assoc"}},
	    {"unknown relation name", "verify --builtin ex1 --relations r9", 2,
	     {"unknown relation 'r9'"}},
	    {"json verify", "verify --builtin ex1 --json", 0,
	     {"{\"message\":\"omega raises degree by m+n-3 = 2\",\"ok\":true,\"record\":\"degree\"}",
	      "\"record\":\"summary\"", "\"passed\":true"}},
	    {"json witness", "verify --file " + data + "/perturbed.struct --json", 1,
	     {"\"witness\":{\"input\":\"y|y\"", "\"passed\":false"}},
	    {"enumerate small", "enumerate --m-max 3 --q-cap 4", 0,
	     {"m   n   p   q   case    q(n)", "total: 30"}},
	    {"enumerate json", "enumerate --m-max 2 --q-cap 1 --json", 0,
	     {"\"record\":\"type\"", "{\"count\":7,\"record\":\"summary\"}"}},
	    {"enumerate m too small", "enumerate --m-max 1 --q-cap 3", 2,
	     {"--m-max must be >= 2"}},
	    {"enumerate needs caps", "enumerate --m-max 3", 2, {}},
	    {"show omega", "show ex1 'omega(y|y)'", 0, {}, {}, "1|1|y + y|1|1\n"},
	    {"show nested", "show ex1 'delta3(omega(y|y))'", 0, {}, {},
	     "1|1|1|y + 1|1|y|1 + 1|y|1|1 + y|1|1|1\n"},
	    {"show unit product", "show ex1 'g2(1|1)'", 0, {}, {}, "1\n"},
	    {"show family value", "show theorem1 'omega(y|y|y)' --m 3 --n 4 --p 1 --q 3", 0, {}, {},
	     "x(y|y|y|y)\n"},
	    {"show family spread", "show theorem1 'delta4(omega(y|y|y))' --m 3 --n 4 --p 1 --q 3", 0,
	     {}, {}, "x(1|y|y|y|y) - x(y|y|y|y|1)\n"},
	    {"show from file", "show " + data + "/ex1.struct 'mu(y|1)'", 0, {}, {}, "y\n"},
	    {"show bad expression", "show ex1 'bogus(y|y)'", 2, {"one nested application"}},
	    {"show missing argument", "show ex1", 2, {}},
	    {"builtin and file exclude each other",
	     "verify --builtin ex1 --file " + data + "/ex1.struct", 2, {}},
	    {"unknown builtin", "verify --builtin nope", 2, {}},
	    {"unknown subcommand", "frobnicate", 2, {}},
	    {"help", "--help", 0, {"verify", "enumerate", "show"}},
	};

	for (const Case &c : cases)
		check(cli, c);

	check_deterministic(cli, "deterministic verify text", "verify --builtin ex1");
	check_deterministic(cli, "deterministic verify json",
	                    "verify --builtin theorem1 --m 3 --n 4 --p 1 --q 3 --json");
	check_deterministic(cli, "deterministic enumerate", "enumerate --m-max 4 --q-cap 6 --json");
	check_deterministic(cli, "deterministic failure report",
	                    "verify --file " + data + "/perturbed.struct");

	if (failures) {
		std::fprintf(stderr, "%d case(s) failed\n", failures);
		return 1;
	}
	std::printf("all cli cases passed\n");
	return 0;
}

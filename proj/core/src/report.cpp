#include "ainfb/report.hpp"
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

namespace ainfb {

using nlohmann::json;

std::string render_text(const VerificationResult &res, const GradedModule &mod) {
	std::ostringstream out;
	out << (res.degree_ok ? "[PASS] " : "[FAIL] ") << "degree: " << res.degree_message << "\n";
	for (const RelationReport &r : res.reports) {
		out << (r.passed ? "[PASS] " : "[FAIL] ") << relation_label(r)
		    << " mode=" << (r.termwise ? "termwise" : "exact") << " basis=" << r.scanned;
		if (r.support_scan)
			out << " support";
		if (!r.note.empty())
			out << " (" << r.note << ")";
		out << "\n";
		if (r.witness) {
			out << "  input: " << word_str(mod, r.witness->input) << "\n";
			if (r.witness->term >= 0)
				out << "  term:  " << r.witness->term << "\n";
			out << "  lhs:   " << r.witness->lhs << "\n";
			out << "  rhs:   " << r.witness->rhs << "\n";
		}
	}
	out << "result: " << (res.all_passed() ? "PASS" : "FAIL") << "\n";
	return out.str();
}

std::string render_json(const VerificationResult &res, const GradedModule &mod) {
	std::ostringstream out;
	json deg = {{"record", "degree"}, {"ok", res.degree_ok}, {"message", res.degree_message}};
	out << deg.dump() << "\n";
	for (const RelationReport &r : res.reports) {
		json rec = {
		    {"record", "relation"},
		    {"relation", relation_name(r.id)},
		    {"k", r.item >= 0 ? json(r.item) : json(nullptr)},
		    {"mode", r.termwise ? "termwise" : "exact"},
		    {"passed", r.passed},
		    {"basisSize", r.scanned},
		    {"supportScan", r.support_scan},
		};
		if (!r.note.empty())
			rec["note"] = r.note;
		if (r.witness) {
			json w = {{"input", word_str(mod, r.witness->input)},
			          {"lhs", r.witness->lhs},
			          {"rhs", r.witness->rhs}};
			if (r.witness->term >= 0)
				w["term"] = r.witness->term;
			rec["witness"] = w;
		} else {
			rec["witness"] = nullptr;
		}
		out << rec.dump() << "\n";
	}
	json summary = {{"record", "summary"}, {"passed", res.all_passed()}};
	out << summary.dump() << "\n";
	return out.str();
}

std::string render_enumeration_text(const std::vector<TypeParams> &rows) {
	std::ostringstream out;
	out << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(4) << "p"
	    << std::setw(4) << "q" << std::setw(8) << "case" << "q(n)\n";
	for (const TypeParams &t : rows) {
		auto qn = q_of_n(t.m, t.p, t.n);
		out << std::left << std::setw(4) << t.m << std::setw(4) << t.n << std::setw(4) << t.p
		    << std::setw(4) << t.q << std::setw(8) << type_case_name(t.kind)
		    << (qn ? qn->str() : "-") << "\n";
	}
	out << "total: " << rows.size() << "\n";
	return out.str();
}

std::string render_enumeration_json(const std::vector<TypeParams> &rows) {
	std::ostringstream out;
	for (const TypeParams &t : rows) {
		auto qn = q_of_n(t.m, t.p, t.n);
		json rec = {
		    {"record", "type"},
		    {"m", t.m},
		    {"n", t.n},
		    {"p", t.p},
		    {"q", t.q},
		    {"case", type_case_name(t.kind)},
		    {"qOfN", qn ? json(qn->str()) : json(nullptr)},
		};
		out << rec.dump() << "\n";
	}
	json summary = {{"record", "summary"}, {"count", rows.size()}};
	out << summary.dump() << "\n";
	return out.str();
}

} // namespace ainfb

#pragma once
#include <stdexcept>
#include <string>

namespace ainfb {

enum class Errc {
	ring_mismatch,
	arity_mismatch,
	degree_mismatch, // degree bookkeeping violated (tables, type parameters)
	bad_argument,
	parse,
	too_large, // basis enumeration above the safety cap
};

class Error : public std::runtime_error {
  public:
	Error(Errc c, const std::string &what) : std::runtime_error(what), code_(c) {}
	Errc code() const { return code_; }

  private:
	Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string &what) { throw Error(c, what); }

} // namespace ainfb

#pragma once

#include <stdexcept>
#include <string>

namespace detblow {

// Error categories mirror the CLI exit codes: 1 = bad input, 2 = degenerate
// sample, 3 = degree cap exceeded.
enum class Errc { invalid_input = 1, degenerate = 2, cap_exceeded = 3 };

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace detblow

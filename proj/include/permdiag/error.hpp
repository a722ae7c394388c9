#pragma once

#include <stdexcept>
#include <string>

namespace pd {

enum class Errc {
    invalid_argument = 1,
    parse_error = 2,
    precondition = 3,
    out_of_range = 4,
    overflow = 5,
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const char* what)
{
    if (!cond) fail(code, what);
}

}  // namespace pd

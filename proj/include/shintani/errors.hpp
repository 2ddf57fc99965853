#pragma once

#include <stdexcept>
#include <string>

namespace shintani {

// Maps onto the CLI exit codes: Config -> 1, Math -> 2, Budget -> 3.
enum class ErrorKind { Config = 1, Math = 2, Budget = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void config_error(const std::string& code, const std::string& what)
{
    throw Error(ErrorKind::Config, code, what);
}

[[noreturn]] inline void math_error(const std::string& code, const std::string& what)
{
    throw Error(ErrorKind::Math, code, what);
}

[[noreturn]] inline void budget_error(const std::string& what)
{
    throw Error(ErrorKind::Budget, "BudgetExceeded", what);
}

inline void invariant(bool ok, const std::string& what)
{
    if (!ok)
        math_error("InvariantViolation", what);
}

} // namespace shintani

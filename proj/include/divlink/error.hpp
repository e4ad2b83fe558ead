#pragma once

#include <stdexcept>
#include <string>

namespace divlink {

// Every failure surfaced by the library carries a short machine-readable code
// (used verbatim in JSON reports) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(std::string code, int line, const std::string& message)
        : Error(std::move(code), "line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace divlink

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kemeny {

/// Bad graph construction or an argument outside an operation's domain.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public GraphError {
public:
    DisconnectedGraph() : GraphError("graph is disconnected") {}
};

/// Edge-list text that cannot be read; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive search or sweep would exceed its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree exactly did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace kemeny

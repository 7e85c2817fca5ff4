#pragma once

#include <stdexcept>
#include <string>

namespace lensbound {

// Arguments outside an operation's mathematical domain (gcd, ranges, overflow).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A generated record disagrees with the certificate it is supposed to carry.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Malformed user input at the survey/CLI layer (unknown family tag, bad flag).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Survey CSV/JSON text that does not match the row schema.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lensbound

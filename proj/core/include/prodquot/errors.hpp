#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prodquot {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A permutation input is not a bijection or has the wrong degree.
class InvalidPermutation : public Error {
public:
    using Error::Error;
};

/// Group closure grew past the requested (or hard) element cap.
class OrderExceeded : public Error {
public:
    OrderExceeded(const std::string& what, std::uint32_t limit)
        : Error(what), limit(limit) {}
    std::uint32_t limit;
};

/// Presentation text failed to parse; carries 1-based line/column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// A relator mentions a symbol not in the generator list.
class UnknownGenerator : public Error {
public:
    UnknownGenerator(const std::string& name, int line, int column)
        : Error("unknown generator '" + name + "' (line " + std::to_string(line) +
                ", column " + std::to_string(column) + ")"),
          name(name),
          line(line),
          column(column) {}
    std::string name;
    int line;
    int column;
};

/// Coset enumeration hit its row allocation limit before closing.
class CosetLimitExceeded : public Error {
public:
    CosetLimitExceeded(const std::string& what, std::uint32_t max_cosets)
        : Error(what), max_cosets(max_cosets) {}
    std::uint32_t max_cosets;
};

/// A coset table was queried for data that only a closed table has.
class TableNotClosed : public Error {
public:
    using Error::Error;
};

/// alpha() was requested for a type whose theta is exactly zero.
class ThetaZero : public Error {
public:
    using Error::Error;
};

/// order * theta is not a positive even integer, so no genus exists.
class NonIntegralGenus : public Error {
public:
    using Error::Error;
};

/// An exact integer was required but the division left a remainder.
class NonIntegral : public Error {
public:
    using Error::Error;
};

/// A catalog entry realized a different order than it declared.
class OrderMismatch : public Error {
public:
    OrderMismatch(const std::string& name, std::uint64_t expected, std::uint64_t actual)
        : Error("group '" + name + "' declared order " + std::to_string(expected) +
                " but realized order " + std::to_string(actual)),
          name(name),
          expected(expected),
          actual(actual) {}
    std::string name;
    std::uint64_t expected;
    std::uint64_t actual;
};

/// Two catalog entries share a name.
class DuplicateName : public Error {
public:
    explicit DuplicateName(const std::string& name)
        : Error("duplicate group name '" + name + "'"), name(name) {}
    std::string name;
};

/// A group name was requested that the catalog does not define.
class UnknownGroup : public Error {
public:
    explicit UnknownGroup(const std::string& name)
        : Error("unknown group '" + name + "'"), name(name) {}
    std::string name;
};

/// A check id was requested that the registry does not define.
class UnknownCheck : public Error {
public:
    explicit UnknownCheck(const std::string& id)
        : Error("unknown check '" + id + "'"), id(id) {}
    std::string id;
};

/// A cache entry failed validation.  Loading code catches this and
/// rebuilds from source; it never escapes to callers of the catalog.
class CacheCorrupt : public Error {
public:
    using Error::Error;
};

}  // namespace prodquot

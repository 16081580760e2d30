#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwdyn {

/// A point or interval outside the map's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid map data (unsorted nodes, range escaping the domain, ...).
class MapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured resource cap. `achieved` is the
/// largest iterate (or horizon) reached before giving up.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    std::size_t achieved() const noexcept { return achieved_; }

private:
    std::size_t achieved_;
};

/// Map-file syntax error; `line` is 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pwdyn

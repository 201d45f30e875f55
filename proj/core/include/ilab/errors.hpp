#pragma once

#include <stdexcept>
#include <string>

namespace ilab {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or contract-violating input (duplicate points, bad parse, ...).
class invalid_input : public error {
public:
    explicit invalid_input(const std::string& what) : error(what) {}
};

/// A defining tuple is degenerate (collinear where a circle is needed, etc.).
class degeneracy_error : public error {
public:
    explicit degeneracy_error(const std::string& what) : error(what) {}
};

/// An operation's geometric hypotheses do not hold for the given set.
class hypothesis_error : public error {
public:
    explicit hypothesis_error(const std::string& what) : error(what) {}
};

/// Enumeration would exceed the configured work budget.
class cap_exceeded : public error {
public:
    explicit cap_exceeded(const std::string& what) : error(what) {}
};

/// Generator could not satisfy its constraints within the retry budget.
class generation_error : public error {
public:
    explicit generation_error(const std::string& what) : error(what) {}
};

} // namespace ilab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termrw {

/// Base of every error raised by the library. Strategy failure is not an
/// error; it travels as an empty std::optional.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class IllFormedRule : public Error {
public:
    IllFormedRule(const std::string& rule, const std::string& why)
        : Error("ill-formed rule '" + rule + "': " + why), rule_(rule) {}
    const std::string& rule() const { return rule_; }

private:
    std::string rule_;
};

class BadTemplate : public Error {
public:
    using Error::Error;
};

class BadContext : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name)
        : Error("unknown name '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class TimeLimitExceeded : public Error {
public:
    TimeLimitExceeded() : Error("time limit exceeded") {}
};

/// A strategy signalled Fail on a top-level action.
class StrategyFailed : public Error {
public:
    using Error::Error;
};

/// An `expect` statement did not hold. The message shows both sides.
class ExpectationFailed : public Error {
public:
    using Error::Error;
};

}  // namespace termrw

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vedom {

// Malformed text input (edge lists, DIMACS). Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, std::string const& what)
	    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
	std::size_t line() const { return line_; }

private:
	std::size_t line_;
};

// A structurally invalid argument, e.g. an edge list with a self-loop or a
// clause with a repeated variable.
class InvalidInput : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// An operation was called on an input outside its domain. code() is a short
// stable identifier such as "not-a-tree" or "endpoint-not-in-W".
class PreconditionError : public std::logic_error {
public:
	PreconditionError(std::string code, std::string const& detail)
	    : std::logic_error(code + ": " + detail), code_(std::move(code)) {}
	std::string const& code() const { return code_; }

private:
	std::string code_;
};

// Exhaustive search refused because the instance exceeds the configured guard.
class InstanceTooLarge : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace vedom

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittvir {

/// Base class of all library errors. `name()` is the stable identifier the
/// CLI prints on stderr (exit code 1).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what_arg)
        : std::runtime_error(what_arg), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error("DimensionError", msg) {}
};

class NotUnimodular : public Error {
public:
    explicit NotUnimodular(const std::string& msg) : Error("NotUnimodular", msg) {}
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& msg) : Error("UnsupportedDimension", msg) {}
};

class ZeroElement : public Error {
public:
    explicit ZeroElement(const std::string& msg) : Error("ZeroElement", msg) {}
};

class NotHomogeneous : public Error {
public:
    explicit NotHomogeneous(const std::string& msg) : Error("NotHomogeneous", msg) {}
};

class NotAUnit : public Error {
public:
    explicit NotAUnit(const std::string& msg) : Error("NotAUnit", msg) {}
};

class NotCartanPreserving : public Error {
public:
    explicit NotCartanPreserving(const std::string& msg) : Error("NotCartanPreserving", msg) {}
};

class NotDiagonalizable : public Error {
public:
    explicit NotDiagonalizable(const std::string& msg) : Error("NotDiagonalizable", msg) {}
};

class NotLiftable : public Error {
public:
    explicit NotLiftable(const std::string& msg) : Error("NotLiftable", msg) {}
};

class UniquenessViolation : public Error {
public:
    explicit UniquenessViolation(const std::string& msg) : Error("UniquenessViolation", msg) {}
};

class NotCentral : public Error {
public:
    explicit NotCentral(const std::string& msg) : Error("NotCentral", msg) {}
};

class NotAutomorphism : public Error {
public:
    explicit NotAutomorphism(const std::string& msg) : Error("NotAutomorphism", msg) {}
};

class InvalidStructureConstants : public Error {
public:
    explicit InvalidStructureConstants(const std::string& msg)
        : Error("InvalidStructureConstants", msg) {}
};

class InvalidWindow : public Error {
public:
    explicit InvalidWindow(const std::string& msg) : Error("InvalidWindow", msg) {}
};

/// Text-grammar error; carries the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error("ParseError", msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace wittvir

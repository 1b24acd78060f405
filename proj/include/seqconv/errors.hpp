#ifndef SEQCONV_ERRORS_HPP
#define SEQCONV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqconv {

// Base class for all library errors. Everything thrown on purpose derives
// from this, so callers (and the CLI) can distinguish library failures from
// genuine bugs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial has no well-defined roots") {}
};

// The input needs a root outside Q (we only work over the rationals).
class IrreducibleDenominator : public Error {
public:
    explicit IrreducibleDenominator(const std::string& msg) : Error(msg) {}
};

class PoleAtIndex : public Error {
public:
    explicit PoleAtIndex(const std::string& msg) : Error(msg) {}
};

class UndefinedTerm : public Error {
public:
    explicit UndefinedTerm(const std::string& msg) : Error(msg) {}
};

class InvalidAtom : public Error {
public:
    explicit InvalidAtom(const std::string& msg) : Error(msg) {}
};

class IrregularInput : public Error {
public:
    explicit IrregularInput(const std::string& msg) : Error(msg) {}
};

class SingularLeading : public Error {
public:
    explicit SingularLeading(const std::string& msg) : Error(msg) {}
};

class OrderTooSmall : public Error {
public:
    explicit OrderTooSmall(const std::string& msg) : Error(msg) {}
};

class UnsupportedOperand : public Error {
public:
    explicit UnsupportedOperand(const std::string& msg) : Error(msg) {}
};

class NonLaurentCoefficient : public Error {
public:
    explicit NonLaurentCoefficient(const std::string& msg) : Error(msg) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t pos, const std::string& expected)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + expected),
          position(pos),
          expected(expected) {}
    std::size_t position;
    std::string expected;
};

} // namespace seqconv

#endif

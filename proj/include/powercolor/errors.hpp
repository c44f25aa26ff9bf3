#ifndef POWERCOLOR_ERRORS_HPP
#define POWERCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powercolor {

// Error hierarchy: every domain error derives from Error so callers can
// catch the whole family at the CLI boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotPrimeError : public Error {
public:
    explicit NotPrimeError(int p)
        : Error("not prime: " + std::to_string(p)) {}
};

class SizeExceededError : public Error {
public:
    explicit SizeExceededError(const std::string& msg) : Error(msg) {}
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero in finite field") {}
};

class FieldMismatchError : public Error {
public:
    FieldMismatchError() : Error("elements belong to different fields") {}
};

class InvalidKError : public Error {
public:
    explicit InvalidKError(int k)
        : Error("power parameter must be at least 2, got " + std::to_string(k)) {}
};

class HintNotCliqueError : public Error {
public:
    HintNotCliqueError(int u, int v)
        : Error("hint is not a clique: vertices " + std::to_string(u) + " and " +
                std::to_string(v) + " are not adjacent") {}
};

class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

class KNotOddOrTooSmallError : public Error {
public:
    explicit KNotOddOrTooSmallError(int k)
        : Error("power parameter must be odd and >= 3, got " + std::to_string(k)) {}
};

class DisconnectedError : public Error {
public:
    DisconnectedError() : Error("graph is not connected") {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace powercolor

#endif

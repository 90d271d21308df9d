#ifndef LINIDEAL_ERRORS_HPP
#define LINIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linideal {

// Error categories map onto the CLI exit codes: bad_input -> 4,
// hypothesis -> 2, obstruction -> 3, internal -> 5.
enum class ErrorKind { bad_input, hypothesis, obstruction, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ModeMismatch : Error {
    explicit ModeMismatch(const std::string& msg = "scalar mode mismatch")
        : Error(ErrorKind::bad_input, msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch")
        : Error(ErrorKind::bad_input, msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(ErrorKind::bad_input, msg) {}
};

struct SingularLinearPart : Error {
    explicit SingularLinearPart(const std::string& msg = "singular linear part")
        : Error(ErrorKind::bad_input, msg) {}
};

struct NonzeroConstantTerm : Error {
    explicit NonzeroConstantTerm(const std::string& msg = "inner map has nonzero constant term")
        : Error(ErrorKind::bad_input, msg) {}
};

struct NotCommuting : Error {
    explicit NotCommuting(const std::string& msg = "family members do not commute")
        : Error(ErrorKind::hypothesis, msg) {}
};

struct NonDiagonalLinearPart : Error {
    explicit NonDiagonalLinearPart(const std::string& msg = "linear part is not diagonal")
        : Error(ErrorKind::hypothesis, msg) {}
};

struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& msg) : Error(ErrorKind::hypothesis, msg) {}
};

struct ObstructionFound : Error {
    explicit ObstructionFound(const std::string& msg) : Error(ErrorKind::obstruction, msg) {}
};

struct AllDivisorsVanish : Error {
    explicit AllDivisorsVanish(const std::string& msg = "all divisors vanish")
        : Error(ErrorKind::hypothesis, msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(ErrorKind::bad_input, msg) {}
};

} // namespace linideal

#endif

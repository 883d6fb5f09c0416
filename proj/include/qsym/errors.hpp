#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Every error carries a stable machine-readable code (the CLI prints it).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define QSYM_ERROR(Name)                                                    \
    struct Name : Error {                                                   \
        explicit Name(const std::string& detail) : Error(#Name, detail) {}  \
    };

QSYM_ERROR(PoleAtOne)
QSYM_ERROR(DivisionByZero)
QSYM_ERROR(ParseError)
QSYM_ERROR(InvalidType)
QSYM_ERROR(NotSimple)
QSYM_ERROR(NotDominant)
QSYM_ERROR(DegenerateForm)
QSYM_ERROR(NotFaithful)
QSYM_ERROR(NotAntisymmetric)
QSYM_ERROR(InconsistentConstraints)
QSYM_ERROR(NotCominuscule)
QSYM_ERROR(TripleTouchesNode)
QSYM_ERROR(InvalidTriple)
QSYM_ERROR(BudgetExceeded)
QSYM_ERROR(NotInSpan)
QSYM_ERROR(NotInLattice)
QSYM_ERROR(UsageError)

#undef QSYM_ERROR

}  // namespace qsym

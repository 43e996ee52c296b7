#pragma once

#include <stdexcept>
#include <string>

namespace relnum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NotRealField : Error {
    NotRealField() : Error("value does not embed in the reals (D < 0 with b != 0)") {}
};

struct NotComplexField : Error {
    NotComplexField() : Error("lambda is real; complex search requires D < 0 with b != 0") {}
};

struct MixedField : Error {
    MixedField() : Error("operands live in different quadratic fields") {}
};

struct NotWellDefined : Error {
    NotWellDefined() : Error("continued fraction layer infinity + infinity is not defined") {}
};

struct NegativeRadicand : Error {
    NegativeRadicand() : Error("square root of a negative rational") {}
};

struct ZeroLambda : Error {
    ZeroLambda() : Error("lambda must be nonzero") {}
};

struct InfiniteComponent : Error {
    InfiniteComponent() : Error("component continued fraction is infinite") {}
};

struct NotAWitness : Error {
    explicit NotAWitness(const std::string& what) : Error("not a witness: " + what) {}
};

struct ConditionViolated : Error {
    explicit ConditionViolated(const std::string& cond) : Error("family condition violated: " + cond) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace relnum

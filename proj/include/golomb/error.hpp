#ifndef GOLOMB_ERROR_HPP
#define GOLOMB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace golomb {

enum class Err {
    MixedFields,
    DivisionByZero,
    ZeroElement,
    NoSuchSubgroup,
    InfiniteField,
    ConstantPolynomial,
    UnsupportedDegree,
    UnsupportedField,
    ZeroPolynomial,
    NotCoprime,
    ZeroCenter,
    IncompatibleExtension,
    BadEvaluation,
    RootsNotInTruncation,
    NotBasic,
    ZeroGenerator,
    ZeroArgument,
    PreconditionViolated,
    InOrbit,
    RadicalMismatch,
    SearchExhausted,
    ParseError,
    ConfigError,
    ReportError,
};

const char* err_name(Err e);

/// Exception carrying a machine-checkable error kind next to the human message.
class Error : public std::runtime_error {
   public:
    Error(Err kind, const std::string& what)
        : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}

    Err kind() const noexcept { return kind_; }

   private:
    Err kind_;
};

}  // namespace golomb

#endif

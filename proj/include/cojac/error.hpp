#ifndef COJAC_ERROR_HPP
#define COJAC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cojac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DSL / structure-file errors (CLI exit code 2)
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};
struct UnknownIdentifierError : ParseError {
    using ParseError::ParseError;
};
struct NonIntegerExponentError : ParseError {
    using ParseError::ParseError;
};
struct FormatError : Error {
    using Error::Error;
};
struct UsageError : Error {
    using Error::Error;
};

// evaluation / policy errors
struct PoleError : Error {
    using Error::Error;
};
struct PolicyError : Error {
    using Error::Error;
};
struct DivisionByZeroPolynomial : Error {
    using Error::Error;
};

// tensor calculus errors
struct DegreeError : Error {
    using Error::Error;
};
struct ChartMismatchError : Error {
    using Error::Error;
};

// structure validation errors
struct NotClosedError : Error {
    using Error::Error;
};
struct DegenerateStructureError : Error {
    using Error::Error;
};
struct WitnessSearchFailedError : Error {
    using Error::Error;
};
struct NeedsChartRestrictionError : Error {
    using Error::Error;
};

// pair-algebra errors
struct MembershipError : Error {
    using Error::Error;
};
struct DomainMismatchError : Error {
    using Error::Error;
};

// raised when algebraically-equal routes disagree; indicates a convention bug
struct InternalConsistencyError : Error {
    using Error::Error;
};

}  // namespace cojac

#endif

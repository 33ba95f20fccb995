#pragma once
#include <stdexcept>
#include <string>

namespace cremona {

/* Error kinds mirror the failure modes of the public operations; the kind is
 * machine-checkable so tests can assert on the exact failure. */
enum class ErrKind {
    IncompatibleField,
    NotHomogeneous,
    SyntaxError,
    InvalidPoint,
    InvalidCluster,
    InvalidType,
    OutOfRange,
    HasFixedPart,
    NotThreeGenerated,
    NonRationalPoint,
    DepthCapExceeded,
    GenericityFailure,
    ConstructionFailed,
    NotApplicable,
    DivisionByZero,
    Internal,
};

struct Error : std::runtime_error {
    ErrKind kind;
    Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrKind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

} // namespace cremona

#pragma once

#include <stdexcept>
#include <string>

namespace relnum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("rational with zero denominator") {}
};

struct DivByZero : Error {
    DivByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

struct NotElliptic : Error {
    NotElliptic(const std::string& what) : Error("not elliptic: " + what) {}
};

struct DegenerateAlpha : Error {
    DegenerateAlpha() : Error("alpha = 0 generates a degenerate group") {}
};

struct DegenerateTarget : Error {
    DegenerateTarget() : Error("target 0 drops the preimage degree (infinity is a preimage)") {}
};

struct ZeroPoly : Error {
    ZeroPoly() : Error("zero polynomial") {}
};

struct NoRealRoot : Error {
    NoRealRoot() : Error("polynomial has no real root") {}
};

struct InvalidCertificate : Error {
    InvalidCertificate(const std::string& what) : Error("invalid certificate: " + what) {}
};

struct NotHalfOdd : Error {
    NotHalfOdd(const std::string& what) : Error("not a half-odd integer: " + what) {}
};

struct MissingData : Error {
    MissingData(const std::string& what) : Error("missing data: " + what) {}
};

struct PrecisionExhausted : Error {
    PrecisionExhausted(const std::string& what) : Error("precision exhausted: " + what) {}
};

struct InternalInconsistency : Error {
    InternalInconsistency(const std::string& what) : Error("internal inconsistency: " + what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace relnum

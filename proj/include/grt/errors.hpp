#pragma once

#include <stdexcept>
#include <string>

namespace grt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderCapExceeded : Error {
    explicit OrderCapExceeded(const std::string& what) : Error(what) {}
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& what) : Error(what) {}
};

struct NotNormal : Error {
    explicit NotNormal(const std::string& what) : Error(what) {}
};

struct NotAHomomorphism : Error {
    explicit NotAHomomorphism(const std::string& what) : Error(what) {}
};

struct NotNilpotent : Error {
    explicit NotNilpotent(const std::string& what) : Error(what) {}
};

struct PeifferViolated : Error {
    explicit PeifferViolated(const std::string& what) : Error(what) {}
};

struct TruncationTooShallow : Error {
    explicit TruncationTooShallow(const std::string& what) : Error(what) {}
};

struct TargetMismatch : Error {
    explicit TargetMismatch(const std::string& what) : Error(what) {}
};

struct SearchCapExceeded : Error {
    explicit SearchCapExceeded(const std::string& what) : Error(what) {}
};

struct ExpressionSearchExceeded : Error {
    explicit ExpressionSearchExceeded(const std::string& what) : Error(what) {}
};

struct PredicateFailsOnBase : Error {
    explicit PredicateFailsOnBase(const std::string& what) : Error(what) {}
};

struct WellDefinednessFailure : Error {
    explicit WellDefinednessFailure(const std::string& what) : Error(what) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct Unsupported : Error {
    explicit Unsupported(const std::string& what) : Error(what) {}
};

} // namespace grt

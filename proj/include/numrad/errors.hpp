#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

// All library failures derive from Error so callers can catch one base.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& w) : Error(w) {}
};
struct NotPsd : Error {
    explicit NotPsd(const std::string& w) : Error(w) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& w) : Error(w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(w) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error(w) {}
};
struct NegativeEntry : Error {
    explicit NegativeEntry(const std::string& w) : Error(w) {}
};
struct BadDim : Error {
    explicit BadDim(const std::string& w) : Error(w) {}
};
struct EnclosureTooWide : Error {
    explicit EnclosureTooWide(const std::string& w) : Error(w) {}
};
struct UnknownCheck : Error {
    explicit UnknownCheck(const std::string& w) : Error(w) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(w) {}
};
struct AssumptionViolated : Error {
    explicit AssumptionViolated(const std::string& w) : Error(w) {}
};
struct ParamOutOfRange : Error {
    explicit ParamOutOfRange(const std::string& w) : Error(w) {}
};
struct IoError : Error {
    explicit IoError(const std::string& w) : Error(w) {}
};

}  // namespace numrad

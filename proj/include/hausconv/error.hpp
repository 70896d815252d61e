#pragma once

#include <stdexcept>
#include <string>

namespace hausconv {

enum class ErrorCode {
    ParseError,
    DimensionMismatch,
    EmptySet,
    HypothesisViolated,
    NotPointed,
    NoFacet,
    DependentFunctionals,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NotPointed: return "NotPointed";
        case ErrorCode::NoFacet: return "NoFacet";
        case ErrorCode::DependentFunctionals: return "DependentFunctionals";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string file = {}, long index = -1)
        : std::runtime_error(std::move(message)), code_(code), file_(std::move(file)), index_(index) {}

    ErrorCode code() const { return code_; }
    const std::string& file() const { return file_; }
    long index() const { return index_; }

    // One-line machine-parsable form used by the CLI on exit code 2.
    std::string summary() const {
        std::string s = "error: ";
        s += error_code_name(code_);
        if (!file_.empty()) s += " file=" + file_;
        if (index_ >= 0) s += " index=" + std::to_string(index_);
        s += " msg=\"";
        s += what();
        s += "\"";
        return s;
    }

private:
    ErrorCode code_;
    std::string file_;
    long index_;
};

}  // namespace hausconv

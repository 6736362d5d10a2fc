#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hohoho {

/// Base of all library errors. `error_class()` is the stable machine-readable
/// name the CLI prints as `ERROR: <class>: <detail>`.
class Error : public std::runtime_error {
public:
    Error(std::string cls, const std::string& detail)
        : std::runtime_error(cls + ": " + detail), cls_(std::move(cls)) {}

    const std::string& error_class() const noexcept { return cls_; }

private:
    std::string cls_;
};

// notation

struct UnknownSyllableError : Error {
    UnknownSyllableError(std::size_t position, std::string fragment, const std::string& detail)
        : Error("UnknownSyllable", detail), position(position), fragment(std::move(fragment)) {}
    std::size_t position;  // byte offset into the source text
    std::string fragment;
};

struct MalformedTokenError : Error {
    MalformedTokenError(std::size_t token_index, std::string token, const std::string& detail)
        : Error("MalformedToken", detail), token_index(token_index), token(std::move(token)) {}
    std::size_t token_index;
    std::string token;
};

struct LeadingLowercaseError : Error {
    explicit LeadingLowercaseError(const std::string& detail) : Error("LeadingLowercase", detail) {}
};

// codec

struct LengthNotDivisibleError : Error {
    LengthNotDivisibleError(std::size_t length, std::size_t width, const std::string& detail)
        : Error("LengthNotDivisible", detail), length(length), width(width) {}
    std::size_t length;
    std::size_t width;
};

struct UnmappedCodeError : Error {
    UnmappedCodeError(std::string code_text, std::size_t code_index, const std::string& detail)
        : Error("UnmappedCode", detail), code_text(std::move(code_text)), code_index(code_index) {}
    std::string code_text;
    std::size_t code_index;  // position in the decoded command stream
};

struct CommandNotEncodableError : Error {
    CommandNotEncodableError(char command, const std::string& detail)
        : Error("CommandNotEncodable", detail), command(command) {}
    char command;
};

struct MappingIoError : Error {
    MappingIoError(std::size_t line, const std::string& detail)
        : Error("MappingIo", detail), line(line) {}
    std::size_t line;  // 1-based line number, 0 when not line-specific
};

// vm

struct UnbalancedBracketsError : Error {
    UnbalancedBracketsError(std::size_t index, const std::string& detail)
        : Error("UnbalancedBrackets", detail), index(index) {}
    std::size_t index;  // first offending bracket
};

// transpile

struct SubsetViolationError : Error {
    explicit SubsetViolationError(const std::string& detail) : Error("SubsetViolation", detail) {}
};

// recover

struct CorpusParseError : Error {
    explicit CorpusParseError(const std::string& detail) : Error("CorpusParseError", detail) {}
};

// mechcalc

struct DomainError : Error {
    explicit DomainError(const std::string& detail) : Error("DomainError", detail) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& detail) : Error("RangeError", detail) {}
};

}  // namespace hohoho

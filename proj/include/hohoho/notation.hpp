#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hohoho/errors.hpp"

namespace hohoho {

/// Ordered list of syllable spellings, e.g. {"Ho","ho"} or {"Ook.","Ook!","Ook?"}.
/// Symbols must be pairwise distinct, non-empty, and prefix-free so that
/// standard-notation scanning is unambiguous.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    static const Alphabet& ho();   // {"Ho","ho"}
    static const Alphabet& ook();  // {"Ook.","Ook!","Ook?"}

    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& spelling(std::uint8_t atom) const { return symbols_.at(atom); }

    /// True for the binary {Ho,ho} alphabet, the only one with an advanced notation.
    bool is_binary_ho() const noexcept;

    bool operator==(const Alphabet& other) const noexcept { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
};

/// A program's lexical substrate: syllable indices into an alphabet.
struct AtomSeq {
    Alphabet alphabet;
    std::vector<std::uint8_t> atoms;  // each < alphabet.size()

    bool operator==(const AtomSeq& other) const = default;
};

/// Scan concatenated syllables, whitespace permitted between (never inside) atoms.
/// Throws UnknownSyllableError on any run of characters matching no symbol.
AtomSeq parse_standard(std::string_view text, const Alphabet& alphabet);

/// Parse advanced notation over {Ho,ho}: whitespace-separated tokens, each one
/// "Ho", n >= 0 "ho", then "!". Throws MalformedTokenError.
AtomSeq parse_advanced(std::string_view text);

/// Inverse of parse_advanced. Each upper-case atom opens a token that absorbs
/// the following run of lower-case atoms; tokens end with "!" and are joined
/// by single spaces. Throws LeadingLowercaseError if seq starts with "ho",
/// DomainError if seq is not over the {Ho,ho} alphabet.
std::string print_advanced(const AtomSeq& seq);

/// Concatenated spellings with a single space after every `group` atoms.
/// parse_standard inverts it. group must be >= 1.
std::string print_standard(const AtomSeq& seq, std::size_t group);

}  // namespace hohoho

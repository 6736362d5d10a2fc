#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hohoho/notation.hpp"

namespace hohoho {

/// The eight tape-machine commands.
enum class Command : std::uint8_t {
    move_right,  // >
    move_left,   // <
    inc,         // +
    dec,         // -
    output,      // .
    input,       // ,
    loop_open,   // [
    loop_close,  // ]
};

inline constexpr std::size_t kCommandCount = 8;
inline constexpr std::array<Command, kCommandCount> kAllCommands = {
    Command::move_right, Command::move_left, Command::inc,       Command::dec,
    Command::output,     Command::input,     Command::loop_open, Command::loop_close,
};

char command_char(Command c);
const char* command_name(Command c);
std::optional<Command> command_from_char(char c);

/// A named subset of the eight commands.
struct CommandSet {
    std::string name;
    std::array<bool, kCommandCount> allowed{};

    static const CommandSet& full8();
    /// {MoveRight, Inc, Dec, Output}: no loops, no going back, no input.
    static const CommandSet& loopless4();

    bool contains(Command c) const { return allowed[static_cast<std::size_t>(c)]; }
    std::size_t count() const;
};

using Code = std::vector<std::uint8_t>;  // atom tuple of fixed width

/// Injective partial function from fixed-width atom tuples to commands.
class Mapping {
public:
    Mapping(Alphabet alphabet, std::size_t width);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Adds one code=command pair. Throws MappingIoError on width/alphabet
    /// mismatch or when injectivity would break.
    void add(Code code, Command cmd);

    std::optional<Command> find(std::span<const std::uint8_t> code) const;
    std::optional<Code> code_for(Command cmd) const;

    /// True when every command of `s` has a code.
    bool total_for(const CommandSet& s) const;

    /// Entries sorted by code (lexicographic atom order).
    const std::vector<std::pair<Code, Command>>& entries() const noexcept { return entries_; }

    std::string code_spelling(std::span<const std::uint8_t> code) const;

    bool operator==(const Mapping& other) const;

private:
    Alphabet alphabet_;
    std::size_t width_;
    std::vector<std::pair<Code, Command>> entries_;                    // kept code-sorted
    std::array<std::optional<Code>, kCommandCount> reverse_;
};

/// Split seq into consecutive width-sized codes and look each up.
/// Throws LengthNotDivisibleError / UnmappedCodeError.
std::vector<Command> decode(const AtomSeq& seq, const Mapping& m);

/// Concatenate each command's code. Throws CommandNotEncodableError.
AtomSeq encode(const std::vector<Command>& cmds, const Mapping& m);

/// One Command per command character; every other character is a comment.
std::vector<Command> parse_bf(std::string_view text);

/// One character per command, no separators.
std::string print_bf(const std::vector<Command>& cmds);

// Mapping file format: line-oriented text, '#' starts a comment.
// Header lines `alphabet=Ho,ho` and `width=3`, then one `CODE=C` line per
// entry where CODE is the concatenated syllable spellings of the code and C
// is one of `> < + - . , [ ]`.

Mapping read_mapping(std::istream& in);
Mapping read_mapping_text(std::string_view text);
Mapping read_mapping_file(const std::string& path);

std::string write_mapping(const Mapping& m);
void write_mapping_file(const Mapping& m, const std::string& path);

// Canonical built-in tables. The Hohoho! and Simple Hoho tables are the ones
// recovered from the corpus programs (see module recover and
// assets/mappings/); the Ook! table is the published reference table.
const Mapping& hohoho_mapping();
const Mapping& simple_hoho_mapping();
const Mapping& ook_mapping();

}  // namespace hohoho

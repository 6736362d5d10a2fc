#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hohoho/vm.hpp"

namespace hohoho {

enum class Lang : std::uint8_t { bf, ook, hohoho, simple_hoho };

enum class Notation : std::uint8_t { standard, advanced };

/// Static binding of a language to its alphabet, code width, canonical
/// mapping, command subset and notation capabilities. BF has no atom layer.
struct LanguageInfo {
    Lang id;
    const char* name;
    const char* extension;        // without the dot
    const Alphabet* alphabet;     // nullptr for BF
    std::size_t width;            // 0 for BF
    const Mapping* mapping;       // nullptr for BF
    const CommandSet* command_set;
    bool has_advanced;            // Ho-family binary languages only
};

const LanguageInfo& language_info(Lang lang);
std::optional<Lang> lang_from_name(std::string_view name);
std::optional<Lang> lang_from_extension(std::string_view path);
const std::vector<Lang>& all_langs();

/// Parse source text into commands. For atom languages the notation is
/// auto-detected ('!' only ever appears in advanced tokens) unless forced.
std::vector<Command> parse_program(Lang lang, std::string_view text,
                                   std::optional<Notation> notation = std::nullopt);

/// Render commands as source text. Default notation: advanced for the
/// Ho-family languages, syllables separated by single spaces for Ook!,
/// plain characters for BF. Throws SubsetViolationError when the language's
/// command set excludes a command.
std::string render_program(Lang lang, const std::vector<Command>& cmds,
                           std::optional<Notation> notation = std::nullopt);

/// Command-level conversion; semantics preserved. Parse errors propagate;
/// SubsetViolationError lists every offending command with its index.
std::string transpile(Lang src, Lang dst, std::string_view text,
                      std::optional<Notation> out_notation = std::nullopt);

/// Re-render the same atom sequence in another notation (no decoding).
std::string fmt(std::string_view text, Lang lang, Notation to_notation);

struct LoopfreeReport {
    std::size_t command_count = 0;
    std::size_t width = 0;  // 0 for BF
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
    /// One line per violation: command index, command name, atom range.
    std::string render() const;
};

/// Decode and check against Loopless4.
LoopfreeReport loopfree_check(std::string_view text, Lang lang);

}  // namespace hohoho

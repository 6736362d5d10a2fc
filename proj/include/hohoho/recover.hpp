#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hohoho/transpile.hpp"
#include "hohoho/vm.hpp"

namespace hohoho {

/// Everything needed to reconstruct a code table from a known program:
/// anchor codes, the corpus text, and the output the corpus must produce.
struct RecoveryProblem {
    Alphabet alphabet;
    std::size_t width = 0;
    CommandSet command_set;
    Mapping anchors;  // partial; may be empty
    std::string corpus_text;
    std::optional<Notation> notation;  // auto-detected when unset
    std::string expected_output;
    MachineConfig config;
    /// Relaxed acceptance for diagnostics: a candidate also survives when it
    /// finishes with a non-empty output that is a prefix of the expected
    /// output or an extension of it.
    bool prefix_ok = false;
};

enum class FailureClass : std::uint8_t {
    decode_error,
    bracket_error,
    wrong_output,
    step_limit,
    tape_underflow,
};
inline constexpr std::size_t kFailureClassCount = 5;
const char* failure_class_name(FailureClass c);

/// Per-candidate rejection statistics plus the localization of the most
/// plausible defect when nothing survives.
///
/// Localization ranks every candidate that reached execution by
/// (matched output prefix, hard failure before soft, divergence index):
/// a hard failure (tape underflow, step limit) marks the exact command that
/// could not execute, while a wrong output byte only bounds the defect from
/// above, since the wrongness accumulated earlier.
struct Diagnostics {
    std::uint64_t candidates = 0;
    std::array<std::uint64_t, kFailureClassCount> class_counts{};
    std::uint64_t survivor_count = 0;
    std::size_t corpus_commands = 0;
    std::size_t expected_bytes = 0;
    std::size_t width = 0;

    std::size_t max_matched_prefix = 0;

    std::optional<std::size_t> first_divergent_command;
    std::optional<FailureClass> first_divergent_class;
    std::uint64_t first_divergent_candidates = 0;

    /// Corroboration: the command at which the best-matching candidates emit
    /// their first wrong byte, and the byte the expected output wants there.
    std::optional<std::size_t> first_output_mismatch_command;
    std::optional<std::uint8_t> expected_byte_at_mismatch;

    std::uint64_t count(FailureClass c) const { return class_counts[static_cast<std::size_t>(c)]; }
    std::string render() const;
};

struct RecoverySolution {
    /// Total mappings that replay the corpus to the expected output, ordered
    /// by the lexicographic order of their code tables. Front is canonical.
    std::vector<Mapping> mappings;
    Diagnostics diagnostics;
};

struct NoSolutionError : Error {
    explicit NoSolutionError(Diagnostics diag)
        : Error("NoSolution", "no candidate mapping replays the corpus to the expected output"),
          diagnostics(std::move(diag)) {}
    Diagnostics diagnostics;
};

/// Exhaustive anchor-constrained search: every injective assignment of the
/// unanchored commands to unused codes is decoded, compiled and executed;
/// survivors must reproduce the expected output exactly with halt Finished.
/// Every survivor is re-verified through the public decode/compile/run path
/// before it is returned. Throws CorpusParseError, NoSolutionError.
RecoverySolution recover(const RecoveryProblem& problem);

/// Write a mapping file. Throws DomainError when m is not total for the
/// command set it was recovered for.
void export_mapping(const Mapping& m, const CommandSet& command_set, const std::string& path);

struct VariantCheck {
    std::string name;
    MachineConfig config;
    bool reproduced = false;
};

/// Replays the corpus under variant machine semantics (16-bit cells,
/// EOF writes zero) to flag semantics-sensitivity of a recovered mapping.
std::vector<VariantCheck> check_variants(const Mapping& m, const RecoveryProblem& problem);

}  // namespace hohoho

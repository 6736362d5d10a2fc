#include "hohoho/recover.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hohoho {

const char* failure_class_name(FailureClass c) {
    switch (c) {
        case FailureClass::decode_error: return "DecodeError";
        case FailureClass::bracket_error: return "BracketError";
        case FailureClass::wrong_output: return "WrongOutput";
        case FailureClass::step_limit: return "StepLimit";
        case FailureClass::tape_underflow: return "TapeUnderflow";
    }
    return "?";
}

namespace {

struct CandidateOutcome {
    bool survived = false;
    FailureClass failure = FailureClass::decode_error;
    std::size_t divergence = 0;      // command index of the first provable defect
    std::size_t matched_prefix = 0;  // leading output bytes equal to expected
    bool executed = false;           // candidate reached the run stage
};

bool is_hard(FailureClass c) {
    return c == FailureClass::tape_underflow || c == FailureClass::step_limit;
}

/// Executes a candidate's command list against the expected output, stopping
/// at the first provable divergence. Separate from vm::run on purpose:
/// survivors are re-verified through the public path afterwards.
CandidateOutcome execute_candidate(const Program& prog, const std::string& expected,
                                   const MachineConfig& cfg, bool prefix_ok) {
    CandidateOutcome out;
    out.executed = true;
    const std::uint64_t mask = cfg.cell_bits >= 64 ? ~0ull : ((1ull << cfg.cell_bits) - 1);
    std::vector<std::uint64_t> tape(cfg.initial_tape_cells > 0 ? cfg.initial_tape_cells : 1, 0);
    std::size_t ptr = 0;
    std::size_t emitted = 0;
    bool extended = false;  // produced bytes beyond the expected length (prefix_ok only)
    std::uint64_t steps = 0;
    const std::size_t n = prog.cmds.size();
    std::size_t ip = 0;
    while (ip < n) {
        if (steps >= cfg.step_limit) {
            out.failure = FailureClass::step_limit;
            out.divergence = ip;
            out.matched_prefix = std::min(emitted, expected.size());
            return out;
        }
        ++steps;
        switch (prog.cmds[ip]) {
            case Command::move_right:
                ++ptr;
                if (ptr >= tape.size()) tape.resize(tape.size() + tape.size() / 2 + 64, 0);
                break;
            case Command::move_left:
                if (ptr == 0) {
                    out.failure = FailureClass::tape_underflow;
                    out.divergence = ip;
                    out.matched_prefix = std::min(emitted, expected.size());
                    return out;
                }
                --ptr;
                break;
            case Command::inc:
                tape[ptr] = (tape[ptr] + 1) & mask;
                break;
            case Command::dec:
                tape[ptr] = (tape[ptr] - 1) & mask;
                break;
            case Command::output: {
                const std::uint8_t byte = static_cast<std::uint8_t>(tape[ptr] & 0xFF);
                if (emitted < expected.size()) {
                    if (byte != static_cast<std::uint8_t>(expected[emitted])) {
                        out.failure = FailureClass::wrong_output;
                        out.divergence = ip;
                        out.matched_prefix = emitted;
                        return out;
                    }
                } else if (!prefix_ok) {
                    out.failure = FailureClass::wrong_output;
                    out.divergence = ip;
                    out.matched_prefix = expected.size();
                    return out;
                } else {
                    extended = true;
                }
                ++emitted;
                break;
            }
            case Command::input:
                // Recovery corpora carry no input stream; apply the EOF policy.
                if (cfg.eof_policy == EofPolicy::set_zero) tape[ptr] = 0;
                break;
            case Command::loop_open:
                if (tape[ptr] == 0) ip = static_cast<std::size_t>(prog.jumps[ip]);
                break;
            case Command::loop_close:
                if (tape[ptr] != 0) ip = static_cast<std::size_t>(prog.jumps[ip]);
                break;
        }
        ++ip;
    }
    const std::size_t matched = std::min(emitted, expected.size());
    out.matched_prefix = matched;
    if (emitted == expected.size() && !extended) {
        out.survived = true;
        return out;
    }
    if (prefix_ok && emitted > 0) {
        // finished with a strict prefix of the expected output, or with the
        // full expected output plus extra bytes
        out.survived = true;
        return out;
    }
    out.failure = FailureClass::wrong_output;
    out.divergence = n;
    return out;
}

std::vector<Code> all_codes(const Alphabet& alphabet, std::size_t width) {
    std::vector<Code> out;
    Code cur(width, 0);
    const std::size_t base = alphabet.size();
    while (true) {
        out.push_back(cur);
        std::size_t i = width;
        while (i > 0) {
            --i;
            if (cur[i] + 1u < base) {
                ++cur[i];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::string table_key(const Mapping& m) {
    std::string key;
    for (const auto& [code, cmd] : m.entries()) {
        key.append(code.begin(), code.end());
        key += static_cast<char>(command_char(cmd));
    }
    return key;
}

}  // namespace

RecoverySolution recover(const RecoveryProblem& problem) {
    if (problem.width < 1) throw CorpusParseError("width must be >= 1");
    if (!(problem.anchors.alphabet() == problem.alphabet) || problem.anchors.width() != problem.width) {
        throw CorpusParseError("anchor mapping does not match the problem alphabet/width");
    }
    for (const auto& [code, cmd] : problem.anchors.entries()) {
        if (!problem.command_set.contains(cmd)) {
            throw CorpusParseError(std::string("anchor command ") + command_name(cmd) +
                                   " is outside command set " + problem.command_set.name);
        }
    }

    // Parse the corpus.
    AtomSeq seq{problem.alphabet, {}};
    try {
        const bool advanced =
            problem.notation ? *problem.notation == Notation::advanced
                             : (problem.alphabet.is_binary_ho() &&
                                problem.corpus_text.find('!') != std::string::npos);
        seq = advanced ? parse_advanced(problem.corpus_text)
                       : parse_standard(problem.corpus_text, problem.alphabet);
    } catch (const Error& e) {
        throw CorpusParseError(std::string("corpus does not parse: ") + e.what());
    }
    if (seq.atoms.size() % problem.width != 0) {
        throw CorpusParseError("corpus has " + std::to_string(seq.atoms.size()) +
                               " atoms, not divisible by width " + std::to_string(problem.width));
    }
    const std::size_t n_cmds = seq.atoms.size() / problem.width;

    // Corpus as indices into the list of distinct codes, so a candidate is
    // just an array distinct-code -> command.
    std::map<Code, std::size_t> distinct;
    std::vector<std::size_t> corpus_ids(n_cmds);
    std::vector<Code> distinct_codes;
    for (std::size_t i = 0; i < n_cmds; ++i) {
        Code code(seq.atoms.begin() + static_cast<std::ptrdiff_t>(i * problem.width),
                  seq.atoms.begin() + static_cast<std::ptrdiff_t>((i + 1) * problem.width));
        auto [it, inserted] = distinct.try_emplace(code, distinct_codes.size());
        if (inserted) distinct_codes.push_back(code);
        corpus_ids[i] = it->second;
    }

    // Unanchored commands, in canonical command order.
    std::vector<Command> free_cmds;
    for (Command c : kAllCommands) {
        if (problem.command_set.contains(c) && !problem.anchors.code_for(c)) free_cmds.push_back(c);
    }
    const std::size_t k = free_cmds.size();
    if (k > 8) throw CorpusParseError("more than 8 unanchored commands");

    // Unused codes, in lexicographic order.
    std::vector<Code> free_codes;
    for (const Code& code : all_codes(problem.alphabet, problem.width)) {
        if (!problem.anchors.find(code)) free_codes.push_back(code);
    }
    if (free_codes.size() < k) {
        Diagnostics empty;
        empty.width = problem.width;
        empty.corpus_commands = n_cmds;
        empty.expected_bytes = problem.expected_output.size();
        throw NoSolutionError(std::move(empty));
    }
    double space = 1.0;
    for (std::size_t i = 0; i < k; ++i) space *= static_cast<double>(free_codes.size() - i);
    if (space > 5e6) {
        throw CorpusParseError("search space of " + std::to_string(static_cast<std::uint64_t>(space)) +
                               " candidates is too large for exhaustive recovery");
    }

    Diagnostics diag;
    diag.width = problem.width;
    diag.corpus_commands = n_cmds;
    diag.expected_bytes = problem.expected_output.size();

    struct Best {
        std::size_t prefix = 0;
        bool hard = false;
        std::size_t divergence = 0;
        FailureClass cls = FailureClass::decode_error;
        std::uint64_t ties = 0;
        bool set = false;
    };
    Best best_run;          // best (prefix, hard, divergence) among executed candidates
    Best best_soft;         // best wrong_output site, for the corroborating report line
    std::size_t max_bracket_offender = 0;
    bool any_bracket = false;

    // Command id per distinct code under the current candidate; SIZE_MAX = unmapped.
    std::vector<std::size_t> code_cmd(distinct_codes.size());
    std::vector<Mapping> survivors;

    auto evaluate_current = [&](const std::vector<std::size_t>& assignment) {
        ++diag.candidates;
        std::fill(code_cmd.begin(), code_cmd.end(), SIZE_MAX);
        for (const auto& [code, cmd] : problem.anchors.entries()) {
            auto it = distinct.find(code);
            if (it != distinct.end()) code_cmd[it->second] = static_cast<std::size_t>(cmd);
        }
        for (std::size_t i = 0; i < k; ++i) {
            auto it = distinct.find(free_codes[assignment[i]]);
            if (it != distinct.end()) code_cmd[it->second] = static_cast<std::size_t>(free_cmds[i]);
        }

        CandidateOutcome outcome;
        std::vector<Command> cmds(n_cmds);
        bool decodable = true;
        for (std::size_t i = 0; i < n_cmds; ++i) {
            std::size_t c = code_cmd[corpus_ids[i]];
            if (c == SIZE_MAX) {
                outcome.failure = FailureClass::decode_error;
                outcome.divergence = i;
                decodable = false;
                break;
            }
            cmds[i] = static_cast<Command>(c);
        }
        if (decodable) {
            try {
                Program prog = compile(std::move(cmds));
                outcome = execute_candidate(prog, problem.expected_output, problem.config,
                                            problem.prefix_ok);
            } catch (const UnbalancedBracketsError& e) {
                outcome.failure = FailureClass::bracket_error;
                outcome.divergence = e.index;
                any_bracket = true;
                max_bracket_offender = std::max(max_bracket_offender, e.index);
            }
        }

        if (outcome.survived) {
            Mapping m(problem.alphabet, problem.width);
            for (const auto& [code, cmd] : problem.anchors.entries()) m.add(code, cmd);
            for (std::size_t i = 0; i < k; ++i) m.add(free_codes[assignment[i]], free_cmds[i]);
            survivors.push_back(std::move(m));
            return;
        }

        diag.class_counts[static_cast<std::size_t>(outcome.failure)]++;
        diag.max_matched_prefix = std::max(diag.max_matched_prefix, outcome.matched_prefix);
        if (outcome.executed) {
            const bool hard = is_hard(outcome.failure);
            auto better = [](const Best& b, std::size_t prefix, bool h, std::size_t div) {
                if (!b.set) return true;
                if (prefix != b.prefix) return prefix > b.prefix;
                if (h != b.hard) return h;
                return div > b.divergence;
            };
            auto equal = [](const Best& b, std::size_t prefix, bool h, std::size_t div) {
                return b.set && b.prefix == prefix && b.hard == h && b.divergence == div;
            };
            if (better(best_run, outcome.matched_prefix, hard, outcome.divergence)) {
                best_run = {outcome.matched_prefix, hard, outcome.divergence, outcome.failure, 1, true};
            } else if (equal(best_run, outcome.matched_prefix, hard, outcome.divergence)) {
                ++best_run.ties;
            }
            if (outcome.failure == FailureClass::wrong_output) {
                if (better(best_soft, outcome.matched_prefix, false, outcome.divergence)) {
                    best_soft = {outcome.matched_prefix, false, outcome.divergence, outcome.failure, 1,
                                 true};
                } else if (equal(best_soft, outcome.matched_prefix, false, outcome.divergence)) {
                    ++best_soft.ties;
                }
            }
        }
    };

    // Ordered selections: choose which free code receives each free command.
    std::vector<std::size_t> assignment(k);
    auto enumerate = [&](auto&& self, std::size_t depth, std::uint64_t used_mask) -> void {
        if (depth == k) {
            evaluate_current(assignment);
            return;
        }
        for (std::size_t i = 0; i < free_codes.size(); ++i) {
            if (used_mask & (1ull << i)) continue;
            assignment[depth] = i;
            self(self, depth + 1, used_mask | (1ull << i));
        }
    };
    if (free_codes.size() > 63) throw CorpusParseError("too many free codes");
    enumerate(enumerate, 0, 0);

    diag.survivor_count = survivors.size();
    if (best_run.set) {
        diag.first_divergent_command = best_run.divergence;
        diag.first_divergent_class = best_run.cls;
        diag.first_divergent_candidates = best_run.ties;
    } else if (any_bracket) {
        diag.first_divergent_command = max_bracket_offender;
        diag.first_divergent_class = FailureClass::bracket_error;
        diag.first_divergent_candidates = 0;
    }
    if (best_soft.set && best_soft.prefix == diag.max_matched_prefix) {
        diag.first_output_mismatch_command = best_soft.divergence;
        if (diag.max_matched_prefix < problem.expected_output.size()) {
            diag.expected_byte_at_mismatch =
                static_cast<std::uint8_t>(problem.expected_output[diag.max_matched_prefix]);
        }
    }

    if (survivors.empty()) throw NoSolutionError(std::move(diag));

    // Independent re-check of every survivor through the public path.
    for (const Mapping& m : survivors) {
        ExecResult res = run(compile(decode(seq, m)), {}, problem.config);
        const bool exact = res.halt == Halt::finished && res.output == problem.expected_output;
        const bool relaxed =
            problem.prefix_ok && res.halt == Halt::finished && !res.output.empty() &&
            (res.output.starts_with(problem.expected_output) ||
             problem.expected_output.starts_with(res.output));
        if (!exact && !relaxed) {
            throw std::logic_error("recovery survivor failed the independent replay re-check");
        }
    }

    std::sort(survivors.begin(), survivors.end(),
              [](const Mapping& a, const Mapping& b) { return table_key(a) < table_key(b); });

    return RecoverySolution{std::move(survivors), std::move(diag)};
}

std::string Diagnostics::render() const {
    std::ostringstream out;
    out << "candidates examined: " << candidates << "\n";
    out << "  decode errors:   " << count(FailureClass::decode_error) << "\n";
    out << "  bracket errors:  " << count(FailureClass::bracket_error) << "\n";
    out << "  wrong output:    " << count(FailureClass::wrong_output) << "\n";
    out << "  step limit:      " << count(FailureClass::step_limit) << "\n";
    out << "  tape underflows: " << count(FailureClass::tape_underflow) << "\n";
    out << "survivors: " << survivor_count << "\n";
    if (survivor_count > 0) return out.str();
    out << "longest matching output prefix: " << max_matched_prefix << " of " << expected_bytes
        << " bytes\n";
    if (first_divergent_command) {
        out << "first divergent command: index " << *first_divergent_command;
        if (width > 0) {
            out << " (atoms " << *first_divergent_command * width << ".."
                << (*first_divergent_command + 1) * width - 1 << ")";
        }
        if (first_divergent_class) out << ", " << failure_class_name(*first_divergent_class);
        if (first_divergent_candidates > 0) {
            out << ", reached by " << first_divergent_candidates << " candidate"
                << (first_divergent_candidates == 1 ? "" : "s");
        }
        out << "\n";
    }
    if (first_output_mismatch_command) {
        out << "first unmatched output: command index " << *first_output_mismatch_command;
        if (expected_byte_at_mismatch) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "0x%02X", *expected_byte_at_mismatch);
            out << " expects byte " << buf;
            if (std::isprint(*expected_byte_at_mismatch)) {
                out << " '" << static_cast<char>(*expected_byte_at_mismatch) << "'";
            }
        }
        out << "\n";
    }
    return out.str();
}

void export_mapping(const Mapping& m, const CommandSet& command_set, const std::string& path) {
    if (!m.total_for(command_set)) {
        throw DomainError("mapping is partial for command set " + command_set.name +
                          "; only total mappings are exported");
    }
    write_mapping_file(m, path);
}

std::vector<VariantCheck> check_variants(const Mapping& m, const RecoveryProblem& problem) {
    std::vector<VariantCheck> checks;
    MachineConfig wide = problem.config;
    wide.cell_bits = 16;
    checks.push_back({"cell_bits=16", wide, false});
    MachineConfig eof_zero = problem.config;
    eof_zero.eof_policy = EofPolicy::set_zero;
    checks.push_back({"eof=set_zero", eof_zero, false});

    const bool advanced = problem.notation
                              ? *problem.notation == Notation::advanced
                              : (problem.alphabet.is_binary_ho() &&
                                 problem.corpus_text.find('!') != std::string::npos);
    AtomSeq seq = advanced ? parse_advanced(problem.corpus_text)
                           : parse_standard(problem.corpus_text, problem.alphabet);
    Program prog = compile(decode(seq, m));
    for (auto& check : checks) {
        ExecResult res = run(prog, {}, check.config);
        check.reproduced = res.halt == Halt::finished && res.output == problem.expected_output;
    }
    return checks;
}

}  // namespace hohoho

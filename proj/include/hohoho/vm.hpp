#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hohoho/codec.hpp"

namespace hohoho {

/// Commands plus the precomputed bracket jump table.
struct Program {
    std::vector<Command> cmds;
    std::vector<std::int64_t> jumps;  // partner index for brackets, -1 elsewhere
};

/// Builds the jump table. Throws UnbalancedBracketsError with the index of the
/// first offender (an unmatched close, or the earliest unclosed open).
Program compile(std::vector<Command> cmds);

enum class EofPolicy : std::uint8_t {
    leave_unchanged,
    set_zero,
};

struct MachineConfig {
    std::uint32_t cell_bits = 8;  // 8, 16 or 32; arithmetic wraps modulo 2^cell_bits
    std::size_t initial_tape_cells = 30000;
    EofPolicy eof_policy = EofPolicy::leave_unchanged;
    std::uint64_t step_limit = 10'000'000;
};

enum class Halt : std::uint8_t {
    finished,
    step_limit_exceeded,
    tape_underflow,
};

const char* halt_name(Halt h);

struct ExecResult {
    std::string output;     // raw bytes
    std::uint64_t steps = 0;
    Halt halt = Halt::finished;
    std::size_t halt_index = 0;  // cmds.size() when finished, else the failing/last instruction

    bool operator==(const ExecResult& other) const = default;
};

/// Deterministic execution: pointer starts at cell 0 on an all-zero tape that
/// grows rightward on demand; `+`/`-` wrap modulo 2^cell_bits; `.` appends the
/// cell's low byte; `,` consumes the next input byte (EOF per policy); every
/// executed command costs one step, including one that halts the machine.
ExecResult run(const Program& p, std::string_view input, const MachineConfig& cfg = {});

struct Violation {
    std::size_t index;
    Command cmd;

    bool operator==(const Violation& other) const = default;
};

/// Every (index, command) outside s, in program order. Empty means conformant.
std::vector<Violation> check_subset(const std::vector<Command>& cmds, const CommandSet& s);

}  // namespace hohoho

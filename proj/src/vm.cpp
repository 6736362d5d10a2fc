#include "hohoho/vm.hpp"

namespace hohoho {

const char* halt_name(Halt h) {
    switch (h) {
        case Halt::finished: return "Finished";
        case Halt::step_limit_exceeded: return "StepLimitExceeded";
        case Halt::tape_underflow: return "TapeUnderflow";
    }
    return "?";
}

Program compile(std::vector<Command> cmds) {
    std::vector<std::int64_t> jumps(cmds.size(), -1);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (cmds[i] == Command::loop_open) {
            stack.push_back(i);
        } else if (cmds[i] == Command::loop_close) {
            if (stack.empty()) {
                throw UnbalancedBracketsError(i, "unmatched ] at command index " + std::to_string(i));
            }
            std::size_t open = stack.back();
            stack.pop_back();
            jumps[open] = static_cast<std::int64_t>(i);
            jumps[i] = static_cast<std::int64_t>(open);
        }
    }
    if (!stack.empty()) {
        throw UnbalancedBracketsError(stack.front(),
                                      "unmatched [ at command index " + std::to_string(stack.front()));
    }
    return Program{std::move(cmds), std::move(jumps)};
}

ExecResult run(const Program& p, std::string_view input, const MachineConfig& cfg) {
    const std::uint64_t mask =
        cfg.cell_bits >= 64 ? ~0ull : ((1ull << cfg.cell_bits) - 1);
    std::vector<std::uint64_t> tape(cfg.initial_tape_cells > 0 ? cfg.initial_tape_cells : 1, 0);
    std::size_t ptr = 0;
    std::size_t in_pos = 0;
    ExecResult res;
    const std::size_t n = p.cmds.size();
    std::size_t ip = 0;
    while (ip < n) {
        if (res.steps >= cfg.step_limit) {
            res.halt = Halt::step_limit_exceeded;
            res.halt_index = ip;
            return res;
        }
        ++res.steps;
        switch (p.cmds[ip]) {
            case Command::move_right:
                ++ptr;
                if (ptr >= tape.size()) tape.resize(tape.size() + tape.size() / 2 + 64, 0);
                break;
            case Command::move_left:
                if (ptr == 0) {
                    res.halt = Halt::tape_underflow;
                    res.halt_index = ip;
                    return res;
                }
                --ptr;
                break;
            case Command::inc:
                tape[ptr] = (tape[ptr] + 1) & mask;
                break;
            case Command::dec:
                tape[ptr] = (tape[ptr] - 1) & mask;
                break;
            case Command::output:
                res.output += static_cast<char>(tape[ptr] & 0xFF);
                break;
            case Command::input:
                if (in_pos < input.size()) {
                    tape[ptr] = static_cast<std::uint8_t>(input[in_pos++]);
                } else if (cfg.eof_policy == EofPolicy::set_zero) {
                    tape[ptr] = 0;
                }
                break;
            case Command::loop_open:
                if (tape[ptr] == 0) ip = static_cast<std::size_t>(p.jumps[ip]);
                break;
            case Command::loop_close:
                if (tape[ptr] != 0) ip = static_cast<std::size_t>(p.jumps[ip]);
                break;
        }
        ++ip;
    }
    res.halt = Halt::finished;
    res.halt_index = n;
    return res;
}

std::vector<Violation> check_subset(const std::vector<Command>& cmds, const CommandSet& s) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (!s.contains(cmds[i])) out.push_back({i, cmds[i]});
    }
    return out;
}

}  // namespace hohoho

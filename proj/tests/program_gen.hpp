#pragma once

// Random Full8 program generator with balanced brackets, for round-trip and
// semantic-preservation suites.

#include <random>
#include <vector>

#include "hohoho/codec.hpp"

namespace testsupport {

inline std::vector<hohoho::Command> random_program(std::mt19937& rng, std::size_t max_len,
                                                   bool with_loops = true) {
    using hohoho::Command;
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    const std::size_t target = len_dist(rng);
    std::vector<Command> cmds;
    std::size_t open = 0;
    std::uniform_int_distribution<int> cmd_dist(0, with_loops ? 7 : 3);
    const Command flat[] = {Command::move_right, Command::inc, Command::dec, Command::output,
                            Command::move_left,  Command::input};
    while (cmds.size() + open < target) {
        int pick = cmd_dist(rng);
        if (with_loops) {
            switch (pick) {
                case 6:
                    cmds.push_back(Command::loop_open);
                    ++open;
                    continue;
                case 7:
                    if (open > 0) {
                        cmds.push_back(Command::loop_close);
                        --open;
                    }
                    continue;
                default: cmds.push_back(flat[pick]); continue;
            }
        }
        cmds.push_back(flat[pick]);
    }
    while (open > 0) {
        cmds.push_back(hohoho::Command::loop_close);
        --open;
    }
    return cmds;
}

inline std::string random_input(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    std::string s(len_dist(rng), '\0');
    for (char& c : s) c = static_cast<char>(byte_dist(rng));
    return s;
}

}  // namespace testsupport

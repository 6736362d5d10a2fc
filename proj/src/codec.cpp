#include "hohoho/codec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hohoho {

namespace {

constexpr char kCommandChars[kCommandCount + 1] = "><+-.,[]";

constexpr const char* kCommandNames[kCommandCount] = {
    "MoveRight", "MoveLeft", "Inc", "Dec", "Output", "Input", "LoopOpen", "LoopClose",
};

}  // namespace

char command_char(Command c) {
    return kCommandChars[static_cast<std::size_t>(c)];
}

const char* command_name(Command c) {
    return kCommandNames[static_cast<std::size_t>(c)];
}

std::optional<Command> command_from_char(char c) {
    for (std::size_t i = 0; i < kCommandCount; ++i) {
        if (kCommandChars[i] == c) return static_cast<Command>(i);
    }
    return std::nullopt;
}

const CommandSet& CommandSet::full8() {
    static const CommandSet s = [] {
        CommandSet cs{"full8", {}};
        cs.allowed.fill(true);
        return cs;
    }();
    return s;
}

const CommandSet& CommandSet::loopless4() {
    static const CommandSet s = [] {
        CommandSet cs{"loopless4", {}};
        for (Command c : {Command::move_right, Command::inc, Command::dec, Command::output}) {
            cs.allowed[static_cast<std::size_t>(c)] = true;
        }
        return cs;
    }();
    return s;
}

std::size_t CommandSet::count() const {
    return static_cast<std::size_t>(std::count(allowed.begin(), allowed.end(), true));
}

Mapping::Mapping(Alphabet alphabet, std::size_t width)
    : alphabet_(std::move(alphabet)), width_(width) {
    if (width_ < 1) throw MappingIoError(0, "mapping width must be >= 1");
}

void Mapping::add(Code code, Command cmd) {
    if (code.size() != width_) {
        throw MappingIoError(0, "code has " + std::to_string(code.size()) + " atoms, width is " +
                                    std::to_string(width_));
    }
    for (std::uint8_t a : code) {
        if (a >= alphabet_.size()) throw MappingIoError(0, "code atom outside alphabet");
    }
    if (find(code)) {
        throw MappingIoError(0, "duplicate code " + code_spelling(code));
    }
    if (reverse_[static_cast<std::size_t>(cmd)]) {
        throw MappingIoError(0, std::string("two codes map to ") + command_name(cmd));
    }
    reverse_[static_cast<std::size_t>(cmd)] = code;
    auto entry = std::make_pair(std::move(code), cmd);
    entries_.insert(std::lower_bound(entries_.begin(), entries_.end(), entry), std::move(entry));
}

std::optional<Command> Mapping::find(std::span<const std::uint8_t> code) const {
    for (const auto& [c, cmd] : entries_) {
        if (std::equal(c.begin(), c.end(), code.begin(), code.end())) return cmd;
    }
    return std::nullopt;
}

std::optional<Code> Mapping::code_for(Command cmd) const {
    return reverse_[static_cast<std::size_t>(cmd)];
}

bool Mapping::total_for(const CommandSet& s) const {
    for (Command c : kAllCommands) {
        if (s.contains(c) && !code_for(c)) return false;
    }
    return true;
}

std::string Mapping::code_spelling(std::span<const std::uint8_t> code) const {
    std::string out;
    for (std::uint8_t a : code) out += alphabet_.spelling(a);
    return out;
}

bool Mapping::operator==(const Mapping& other) const {
    return alphabet_ == other.alphabet_ && width_ == other.width_ && entries_ == other.entries_;
}

std::vector<Command> decode(const AtomSeq& seq, const Mapping& m) {
    if (!(seq.alphabet == m.alphabet())) {
        throw MappingIoError(0, "sequence and mapping use different alphabets");
    }
    const std::size_t w = m.width();
    if (seq.atoms.size() % w != 0) {
        throw LengthNotDivisibleError(seq.atoms.size(), w,
                                      std::to_string(seq.atoms.size()) +
                                          " atoms do not divide into codes of width " +
                                          std::to_string(w));
    }
    std::vector<Command> cmds;
    cmds.reserve(seq.atoms.size() / w);
    for (std::size_t i = 0; i < seq.atoms.size(); i += w) {
        std::span<const std::uint8_t> code{seq.atoms.data() + i, w};
        auto cmd = m.find(code);
        if (!cmd) {
            throw UnmappedCodeError(m.code_spelling(code), i / w,
                                    "code " + m.code_spelling(code) + " at command index " +
                                        std::to_string(i / w) + " has no mapping");
        }
        cmds.push_back(*cmd);
    }
    return cmds;
}

AtomSeq encode(const std::vector<Command>& cmds, const Mapping& m) {
    AtomSeq seq{m.alphabet(), {}};
    seq.atoms.reserve(cmds.size() * m.width());
    for (Command c : cmds) {
        auto code = m.code_for(c);
        if (!code) {
            throw CommandNotEncodableError(command_char(c), std::string(command_name(c)) +
                                                                " has no code in this mapping");
        }
        seq.atoms.insert(seq.atoms.end(), code->begin(), code->end());
    }
    return seq;
}

std::vector<Command> parse_bf(std::string_view text) {
    std::vector<Command> cmds;
    for (char c : text) {
        if (auto cmd = command_from_char(c)) cmds.push_back(*cmd);
    }
    return cmds;
}

std::string print_bf(const std::vector<Command>& cmds) {
    std::string out;
    out.reserve(cmds.size());
    for (Command c : cmds) out += command_char(c);
    return out;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            return out;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Mapping read_mapping(std::istream& in) {
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> width;
    std::optional<Mapping> mapping;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.starts_with("alphabet=")) {
            alphabet = Alphabet(split(t.substr(9), ','));
            continue;
        }
        if (t.starts_with("width=")) {
            width = static_cast<std::size_t>(std::stoul(t.substr(6)));
            continue;
        }
        // entry line: CODE=C with C a single command character
        if (t.size() < 3 || t[t.size() - 2] != '=') {
            throw MappingIoError(lineno, "line " + std::to_string(lineno) + " is not CODE=C: \"" + t + "\"");
        }
        if (!alphabet || !width) {
            throw MappingIoError(lineno, "entry before alphabet=/width= headers");
        }
        if (!mapping) mapping.emplace(*alphabet, *width);
        auto cmd = command_from_char(t.back());
        if (!cmd) {
            throw MappingIoError(lineno, std::string("unknown command character '") + t.back() + "'");
        }
        AtomSeq code_seq{*alphabet, {}};
        try {
            code_seq = parse_standard(std::string_view(t).substr(0, t.size() - 2), *alphabet);
        } catch (const UnknownSyllableError& e) {
            throw MappingIoError(lineno, "bad code on line " + std::to_string(lineno) + ": " + e.what());
        }
        if (code_seq.atoms.size() != *width) {
            throw MappingIoError(lineno, "code on line " + std::to_string(lineno) + " has " +
                                             std::to_string(code_seq.atoms.size()) + " atoms, width is " +
                                             std::to_string(*width));
        }
        try {
            mapping->add(code_seq.atoms, *cmd);
        } catch (const MappingIoError& e) {
            throw MappingIoError(lineno, std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
        }
    }
    if (!alphabet || !width) throw MappingIoError(0, "missing alphabet=/width= headers");
    if (!mapping) mapping.emplace(*alphabet, *width);
    return *mapping;
}

Mapping read_mapping_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_mapping(in);
}

Mapping read_mapping_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MappingIoError(0, "cannot open " + path);
    return read_mapping(in);
}

std::string write_mapping(const Mapping& m) {
    std::string out = "alphabet=";
    const auto& syms = m.alphabet().symbols();
    for (std::size_t i = 0; i < syms.size(); ++i) {
        if (i) out += ',';
        out += syms[i];
    }
    out += "\nwidth=" + std::to_string(m.width()) + "\n";
    for (const auto& [code, cmd] : m.entries()) {
        out += m.code_spelling(code);
        out += '=';
        out += command_char(cmd);
        out += '\n';
    }
    return out;
}

void write_mapping_file(const Mapping& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MappingIoError(0, "cannot open " + path + " for writing");
    out << write_mapping(m);
    if (!out) throw MappingIoError(0, "write to " + path + " failed");
}

namespace {

constexpr std::string_view kHohohoTable =
    "alphabet=Ho,ho\n"
    "width=3\n"
    "HoHoHo=+\n"
    "HoHoho=>\n"
    "HohoHo=,\n"
    "Hohoho=[\n"
    "hoHoHo=]\n"
    "hoHoho=.\n"
    "hohoHo=<\n"
    "hohoho=-\n";

constexpr std::string_view kSimpleHohoTable =
    "alphabet=Ho,ho\n"
    "width=2\n"
    "HoHo=>\n"
    "Hoho=-\n"
    "hoHo=+\n"
    "hoho=.\n";

constexpr std::string_view kOokTable =
    "alphabet=Ook.,Ook!,Ook?\n"
    "width=2\n"
    "Ook.Ook.=+\n"
    "Ook.Ook!=,\n"
    "Ook.Ook?=>\n"
    "Ook!Ook.=.\n"
    "Ook!Ook!=-\n"
    "Ook!Ook?=[\n"
    "Ook?Ook.=<\n"
    "Ook?Ook!=]\n";

}  // namespace

const Mapping& hohoho_mapping() {
    static const Mapping m = read_mapping_text(kHohohoTable);
    return m;
}

const Mapping& simple_hoho_mapping() {
    static const Mapping m = read_mapping_text(kSimpleHohoTable);
    return m;
}

const Mapping& ook_mapping() {
    static const Mapping m = read_mapping_text(kOokTable);
    return m;
}

}  // namespace hohoho

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hohoho/recover.hpp"
#include "hohoho/svg.hpp"
#include "hohoho/transpile.hpp"

using namespace hohoho;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::fwrite(data.data(), 1, data.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    out << data;
}

Lang resolve_lang(const std::string& path, const std::string& flag) {
    if (!flag.empty()) {
        if (auto lang = lang_from_name(flag)) return *lang;
        throw DomainError("unknown language \"" + flag + "\"");
    }
    if (auto lang = lang_from_extension(path)) return *lang;
    throw DomainError("cannot infer the language of " + path + "; pass --lang");
}

std::optional<Notation> parse_notation(const std::string& flag) {
    if (flag.empty()) return std::nullopt;
    if (flag == "standard") return Notation::standard;
    if (flag == "advanced") return Notation::advanced;
    throw DomainError("notation must be standard or advanced, got \"" + flag + "\"");
}

const CommandSet& parse_command_set(const std::string& name) {
    if (name == "full8") return CommandSet::full8();
    if (name == "loopless4") return CommandSet::loopless4();
    throw DomainError("command set must be full8 or loopless4, got \"" + name + "\"");
}

std::string unescape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\' || i + 1 >= s.size()) {
            out += s[i];
            continue;
        }
        switch (s[++i]) {
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            case '0': out += '\0'; break;
            case '\\': out += '\\'; break;
            case 'x': {
                if (i + 2 >= s.size()) throw DomainError("truncated \\x escape in --expect");
                out += static_cast<char>(std::stoi(s.substr(i + 1, 2), nullptr, 16));
                i += 2;
                break;
            }
            default: throw DomainError(std::string("unknown escape \\") + s[i] + " in --expect");
        }
    }
    return out;
}

std::vector<std::string> split_symbols(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string format_product(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolchain for the Ho-family languages (Hohoho!, Simple Hoho, Ook!, BF)\n"
                 "and two mechanical multipliers (tree nomogram, monkey linkage)."};
    app.require_subcommand(1);
    std::function<int()> action;

    // ---- run ----------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "Decode and execute a program");
    {
        struct {
            std::string file, lang, notation, input;
            unsigned cell_bits = 8;
            std::uint64_t step_limit = 10'000'000;
        } static opt;
        run_cmd->add_option("file", opt.file, "program file, or - for stdin")->required();
        run_cmd->add_option("--lang", opt.lang, "bf|ook|hohoho|simplehoho (default: by extension)");
        run_cmd->add_option("--notation", opt.notation, "standard|advanced (default: detect)");
        run_cmd->add_option("--cell-bits", opt.cell_bits, "cell width: 8, 16 or 32")
            ->check(CLI::IsMember({8u, 16u, 32u}));
        run_cmd->add_option("--step-limit", opt.step_limit, "execution step budget");
        run_cmd->add_option("--input", opt.input, "file with the machine's input bytes");
        run_cmd->callback([&] {
            action = [&]() -> int {
                std::string text = read_input(opt.file);
                Lang lang = resolve_lang(opt.file, opt.lang);
                auto cmds = parse_program(lang, text, parse_notation(opt.notation));
                std::string machine_input;
                const bool wants_input =
                    std::find(cmds.begin(), cmds.end(), Command::input) != cmds.end();
                if (!opt.input.empty()) {
                    if (opt.input == "-" && opt.file == "-") {
                        throw DomainError("program text and --input cannot both come from stdin");
                    }
                    machine_input = read_input(opt.input);
                } else if (wants_input) {
                    if (opt.file == "-") {
                        throw DomainError(
                            "program text came from stdin; pass --input for the Input commands");
                    }
                    machine_input = read_input("-");
                }
                MachineConfig cfg;
                cfg.cell_bits = opt.cell_bits;
                cfg.step_limit = opt.step_limit;
                ExecResult res = run(compile(std::move(cmds)), machine_input, cfg);
                std::fwrite(res.output.data(), 1, res.output.size(), stdout);
                std::fflush(stdout);
                if (res.halt != Halt::finished) {
                    std::cerr << "ERROR: " << halt_name(res.halt) << ": halted at command "
                              << res.halt_index << " after " << res.steps << " steps\n";
                    return 3;
                }
                return 0;
            };
        });
    }

    // ---- transpile ----------------------------------------------------
    auto* transpile_cmd = app.add_subcommand("transpile", "Convert a program between languages");
    {
        struct {
            std::string file, lang, to, notation;
        } static opt;
        transpile_cmd->add_option("file", opt.file, "program file, or - for stdin")->required();
        transpile_cmd->add_option("--to", opt.to, "target language")->required();
        transpile_cmd->add_option("--lang", opt.lang, "source language (default: by extension)");
        transpile_cmd->add_option("--notation", opt.notation, "output notation for Ho-languages");
        transpile_cmd->callback([&] {
            action = [&]() -> int {
                std::string text = read_input(opt.file);
                Lang src = resolve_lang(opt.file, opt.lang);
                auto dst = lang_from_name(opt.to);
                if (!dst) throw DomainError("unknown target language \"" + opt.to + "\"");
                std::string out = transpile(src, *dst, text, parse_notation(opt.notation));
                out += '\n';
                write_output("-", out);
                return 0;
            };
        });
    }

    // ---- fmt ----------------------------------------------------------
    auto* fmt_cmd = app.add_subcommand("fmt", "Re-render a program in another notation");
    {
        struct {
            std::string file, lang, to_notation;
        } static opt;
        fmt_cmd->add_option("file", opt.file, "program file, or - for stdin")->required();
        fmt_cmd->add_option("--lang", opt.lang, "language (default: by extension)");
        fmt_cmd->add_option("--to-notation", opt.to_notation, "standard|advanced");
        fmt_cmd->callback([&] {
            action = [&]() -> int {
                std::string text = read_input(opt.file);
                Lang lang = resolve_lang(opt.file, opt.lang);
                Notation to = Notation::standard;
                if (auto n = parse_notation(opt.to_notation)) {
                    to = *n;
                } else {
                    to = language_info(lang).has_advanced ? Notation::advanced : Notation::standard;
                }
                write_output("-", fmt(text, lang, to) + "\n");
                return 0;
            };
        });
    }

    // ---- check --------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "List commands outside a command subset");
    {
        struct {
            std::string file, lang, subset = "loopless4";
        } static opt;
        check_cmd->add_option("file", opt.file, "program file, or - for stdin")->required();
        check_cmd->add_option("--lang", opt.lang, "language (default: by extension)");
        check_cmd->add_option("--subset", opt.subset, "loopless4 (default) or full8");
        check_cmd->callback([&] {
            action = [&]() -> int {
                std::string text = read_input(opt.file);
                Lang lang = resolve_lang(opt.file, opt.lang);
                const CommandSet& set = parse_command_set(opt.subset);
                LoopfreeReport report;
                report.width = language_info(lang).width;
                auto cmds = parse_program(lang, text);
                report.command_count = cmds.size();
                report.violations = check_subset(cmds, set);
                if (report.clean()) return 0;
                write_output("-", report.render());
                std::cerr << "ERROR: SubsetViolation: " << report.violations.size()
                          << " of " << report.command_count << " commands outside " << set.name
                          << "\n";
                return 1;
            };
        });
    }

    // ---- recover ------------------------------------------------------
    auto* recover_cmd =
        app.add_subcommand("recover", "Reconstruct a code table from a known program");
    {
        struct {
            std::string corpus, alphabet = "Ho,ho", expect, anchors, command_set = "full8";
            std::string notation, out;
            std::size_t width = 0;
            unsigned cell_bits = 8;
            std::uint64_t step_limit = 10'000'000;
            bool prefix_ok = false;
            bool variants = false;
        } static opt;
        recover_cmd->add_option("--corpus", opt.corpus, "corpus program file")->required();
        recover_cmd->add_option("--width", opt.width, "code width in atoms")->required();
        recover_cmd->add_option("--alphabet", opt.alphabet, "comma-separated syllables");
        recover_cmd->add_option("--expect", opt.expect, "expected output (\\n, \\xHH escapes)")
            ->required();
        recover_cmd->add_option("--anchors", opt.anchors, "partial mapping file of known codes");
        recover_cmd->add_option("--command-set", opt.command_set, "full8 (default) or loopless4");
        recover_cmd->add_option("--notation", opt.notation, "corpus notation (default: detect)");
        recover_cmd->add_option("--out", opt.out, "write the canonical mapping here");
        recover_cmd->add_flag("--prefix-ok", opt.prefix_ok,
                              "accept outputs that extend or truncate the expected bytes");
        recover_cmd->add_flag("--variants", opt.variants,
                              "re-run survivors under variant machine semantics");
        recover_cmd->add_option("--cell-bits", opt.cell_bits, "cell width: 8, 16 or 32")
            ->check(CLI::IsMember({8u, 16u, 32u}));
        recover_cmd->add_option("--step-limit", opt.step_limit, "per-candidate step budget");
        recover_cmd->callback([&] {
            action = [&]() -> int {
                Alphabet alphabet{split_symbols(opt.alphabet)};
                Mapping anchors = opt.anchors.empty() ? Mapping(alphabet, opt.width)
                                                      : read_mapping_file(opt.anchors);
                MachineConfig cfg;
                cfg.cell_bits = opt.cell_bits;
                cfg.step_limit = opt.step_limit;
                RecoveryProblem problem{alphabet,
                                        opt.width,
                                        parse_command_set(opt.command_set),
                                        std::move(anchors),
                                        read_input(opt.corpus),
                                        parse_notation(opt.notation),
                                        unescape(opt.expect),
                                        cfg,
                                        opt.prefix_ok};
                RecoverySolution sol = recover(problem);
                std::cerr << sol.diagnostics.render();
                if (opt.variants) {
                    for (std::size_t i = 0; i < sol.mappings.size(); ++i) {
                        for (const auto& v : check_variants(sol.mappings[i], problem)) {
                            std::cerr << "survivor " << i + 1 << " under " << v.name << ": "
                                      << (v.reproduced ? "reproduced" : "failed") << "\n";
                        }
                    }
                }
                if (!opt.out.empty()) {
                    export_mapping(sol.mappings.front(), problem.command_set, opt.out);
                    for (std::size_t i = 1; i < sol.mappings.size(); ++i) {
                        export_mapping(sol.mappings[i], problem.command_set,
                                       opt.out + "." + std::to_string(i + 1));
                    }
                } else {
                    std::string out;
                    for (std::size_t i = 0; i < sol.mappings.size(); ++i) {
                        if (sol.mappings.size() > 1) {
                            out += "# survivor " + std::to_string(i + 1) + " of " +
                                   std::to_string(sol.mappings.size()) + "\n";
                        }
                        out += write_mapping(sol.mappings[i]);
                    }
                    write_output("-", out);
                }
                return 0;
            };
        });
    }

    // ---- calc-tree ----------------------------------------------------
    auto* tree_cmd = app.add_subcommand("calc-tree", "Multiply on the tree nomogram");
    {
        struct {
            double a = 0, b = 0;
        } static opt;
        tree_cmd->add_option("a", opt.a, "left value")->required();
        tree_cmd->add_option("b", opt.b, "right value")->required();
        tree_cmd->callback([&] {
            action = [&]() -> int {
                TreeCalc tree{std::max({10.0, opt.a, opt.b})};
                write_output("-", format_product(tree_multiply(opt.a, opt.b, tree)) + "\n");
                return 0;
            };
        });
    }

    // ---- calc-monkey --------------------------------------------------
    auto* monkey_cmd = app.add_subcommand("calc-monkey", "Multiply on the monkey linkage");
    {
        struct {
            int i = 0, j = 0;
        } static opt;
        monkey_cmd->add_option("i", opt.i, "first factor (1..12)")->required();
        monkey_cmd->add_option("j", opt.j, "second factor (1..12)")->required();
        monkey_cmd->callback([&] {
            action = [&]() -> int {
                int product = monkey_multiply(opt.i, opt.j, Linkage::calibrated());
                write_output("-", std::to_string(product) + "\n");
                return 0;
            };
        });
    }

    // ---- svg ----------------------------------------------------------
    auto* svg_cmd = app.add_subcommand("svg", "Render a device schematic");
    svg_cmd->require_subcommand(1);
    {
        struct {
            double scale = 10.0;
            std::vector<double> chord;
            double pose = 0.0;
            std::string out;
        } static opt;
        auto* tree = svg_cmd->add_subcommand("tree", "tree nomogram, optionally with a chord");
        tree->add_option("scale", opt.scale, "scale bound N")->required();
        tree->add_option("values", opt.chord, "chord values A B")->expected(0, 2);
        tree->add_option("--out", opt.out, "output file (default stdout)");
        tree->callback([&] {
            action = [&]() -> int {
                if (opt.chord.size() == 1) throw DomainError("chord needs both A and B");
                std::optional<std::pair<double, double>> chord;
                if (opt.chord.size() == 2) chord = std::make_pair(opt.chord[0], opt.chord[1]);
                write_output(opt.out, render_tree_svg(TreeCalc{opt.scale}, chord));
                return 0;
            };
        });
        auto* monkey = svg_cmd->add_subcommand("monkey", "calibrated monkey linkage at a pose");
        monkey->add_option("pose", opt.pose, "indicator abscissa (default 0)");
        monkey->add_option("--out", opt.out, "output file (default stdout)");
        monkey->callback([&] {
            action = [&]() -> int {
                write_output(opt.out, render_linkage_svg(Linkage::calibrated(), opt.pose));
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help is a success, bad usage is an input error
    }
    try {
        return action ? action() : 1;
    } catch (const NoSolutionError& e) {
        std::cerr << e.diagnostics.render();
        std::cerr << "ERROR: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "ERROR: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ERROR: Internal: " << e.what() << "\n";
        return 1;
    }
}

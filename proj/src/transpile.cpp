#include "hohoho/transpile.hpp"

#include <algorithm>

namespace hohoho {

namespace {

const LanguageInfo kLangs[] = {
    {Lang::bf, "bf", "bf", nullptr, 0, nullptr, &CommandSet::full8(), false},
    {Lang::ook, "ook", "ook", &Alphabet::ook(), 2, &ook_mapping(), &CommandSet::full8(), false},
    {Lang::hohoho, "hohoho", "hohoho", &Alphabet::ho(), 3, &hohoho_mapping(), &CommandSet::full8(), true},
    {Lang::simple_hoho, "simplehoho", "shoho", &Alphabet::ho(), 2, &simple_hoho_mapping(),
     &CommandSet::loopless4(), true},
};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void require_subset(const std::vector<Command>& cmds, const LanguageInfo& info) {
    auto violations = check_subset(cmds, *info.command_set);
    if (violations.empty()) return;
    std::string detail = std::string(info.name) + " (" + info.command_set->name +
                         ") cannot express:";
    for (const auto& v : violations) {
        detail += " " + std::string(command_name(v.cmd)) + "@" + std::to_string(v.index);
    }
    throw SubsetViolationError(detail);
}

}  // namespace

const LanguageInfo& language_info(Lang lang) {
    return kLangs[static_cast<std::size_t>(lang)];
}

const std::vector<Lang>& all_langs() {
    static const std::vector<Lang> langs = {Lang::bf, Lang::ook, Lang::hohoho, Lang::simple_hoho};
    return langs;
}

std::optional<Lang> lang_from_name(std::string_view name) {
    std::string n = lower(name);
    std::erase_if(n, [](char c) { return c == '-' || c == '_' || c == '!'; });
    if (n == "bf" || n == "brainfuck") return Lang::bf;
    if (n == "ook") return Lang::ook;
    if (n == "hohoho") return Lang::hohoho;
    if (n == "simplehoho" || n == "shoho") return Lang::simple_hoho;
    return std::nullopt;
}

std::optional<Lang> lang_from_extension(std::string_view path) {
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    std::string ext = lower(path.substr(dot + 1));
    for (const auto& info : kLangs) {
        if (ext == info.extension) return info.id;
    }
    return std::nullopt;
}

std::vector<Command> parse_program(Lang lang, std::string_view text,
                                   std::optional<Notation> notation) {
    const LanguageInfo& info = language_info(lang);
    if (lang == Lang::bf) return parse_bf(text);
    Notation used = notation.value_or(
        info.has_advanced && text.find('!') != std::string_view::npos ? Notation::advanced
                                                                      : Notation::standard);
    AtomSeq seq = used == Notation::advanced ? parse_advanced(text)
                                             : parse_standard(text, *info.alphabet);
    return decode(seq, *info.mapping);
}

std::string render_program(Lang lang, const std::vector<Command>& cmds,
                           std::optional<Notation> notation) {
    const LanguageInfo& info = language_info(lang);
    if (lang == Lang::bf) return print_bf(cmds);
    require_subset(cmds, info);
    AtomSeq seq = encode(cmds, *info.mapping);
    if (lang == Lang::ook) return print_standard(seq, 1);
    // default to the advanced notation; streams opening on a lower-case atom
    // have no advanced form and fall back to standard unless forced
    Notation used = notation.value_or(seq.atoms.empty() || seq.atoms.front() == 0
                                          ? Notation::advanced
                                          : Notation::standard);
    return used == Notation::advanced ? print_advanced(seq) : print_standard(seq, info.width);
}

std::string transpile(Lang src, Lang dst, std::string_view text,
                      std::optional<Notation> out_notation) {
    return render_program(dst, parse_program(src, text), out_notation);
}

std::string fmt(std::string_view text, Lang lang, Notation to_notation) {
    const LanguageInfo& info = language_info(lang);
    if (lang == Lang::bf) return print_bf(parse_bf(text));
    if (to_notation == Notation::advanced && !info.has_advanced) {
        throw DomainError(std::string(info.name) + " has no advanced notation");
    }
    Notation in = info.has_advanced && text.find('!') != std::string_view::npos
                      ? Notation::advanced
                      : Notation::standard;
    AtomSeq seq = in == Notation::advanced ? parse_advanced(text)
                                           : parse_standard(text, *info.alphabet);
    if (to_notation == Notation::advanced) return print_advanced(seq);
    return print_standard(seq, lang == Lang::ook ? 1 : info.width);
}

std::string LoopfreeReport::render() const {
    if (violations.empty()) return "";
    std::string out;
    for (const auto& v : violations) {
        out += "command " + std::to_string(v.index) + ": " + command_name(v.cmd) + " (" +
               command_char(v.cmd);
        out += ')';
        if (width > 0) {
            out += ", atoms " + std::to_string(v.index * width) + ".." +
                   std::to_string(v.index * width + width - 1);
        }
        out += '\n';
    }
    return out;
}

LoopfreeReport loopfree_check(std::string_view text, Lang lang) {
    auto cmds = parse_program(lang, text);
    LoopfreeReport report;
    report.command_count = cmds.size();
    report.width = language_info(lang).width;
    report.violations = check_subset(cmds, CommandSet::loopless4());
    return report;
}

}  // namespace hohoho

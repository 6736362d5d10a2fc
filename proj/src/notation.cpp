#include "hohoho/notation.hpp"

#include <cctype>
#include <stdexcept>

namespace hohoho {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty() || symbols_.size() > 255) {
        throw std::invalid_argument("alphabet needs between 1 and 255 symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.empty()) throw std::invalid_argument("alphabet symbol must be non-empty");
        for (char c : s) {
            if (is_space(c)) throw std::invalid_argument("alphabet symbol must not contain whitespace");
        }
        for (std::size_t j = 0; j < symbols_.size(); ++j) {
            if (i == j) continue;
            if (symbols_[j].starts_with(s)) {
                throw std::invalid_argument("alphabet symbols must be prefix-free: '" + s +
                                            "' prefixes '" + symbols_[j] + "'");
            }
        }
    }
}

const Alphabet& Alphabet::ho() {
    static const Alphabet a{{"Ho", "ho"}};
    return a;
}

const Alphabet& Alphabet::ook() {
    static const Alphabet a{{"Ook.", "Ook!", "Ook?"}};
    return a;
}

bool Alphabet::is_binary_ho() const noexcept {
    return symbols_.size() == 2 && symbols_[0] == "Ho" && symbols_[1] == "ho";
}

AtomSeq parse_standard(std::string_view text, const Alphabet& alphabet) {
    AtomSeq seq{alphabet, {}};
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        bool matched = false;
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            const auto& sym = alphabet.symbols()[a];
            if (text.substr(pos).starts_with(sym)) {
                seq.atoms.push_back(static_cast<std::uint8_t>(a));
                pos += sym.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::size_t end = pos;
            while (end < text.size() && !is_space(text[end]) && end - pos < 8) ++end;
            std::string fragment(text.substr(pos, end - pos));
            throw UnknownSyllableError(pos, fragment,
                                       "no alphabet symbol matches \"" + fragment + "\" at offset " +
                                           std::to_string(pos));
        }
    }
    return seq;
}

AtomSeq parse_advanced(std::string_view text) {
    AtomSeq seq{Alphabet::ho(), {}};
    std::size_t pos = 0;
    std::size_t token_index = 0;
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end])) ++end;
        std::string_view token = text.substr(pos, end - pos);

        // token grammar: "Ho" ("ho")* "!"
        bool ok = token.size() >= 3 && token.starts_with("Ho") && token.ends_with('!');
        if (ok) {
            std::string_view body = token.substr(2, token.size() - 3);
            ok = body.size() % 2 == 0;
            for (std::size_t i = 0; ok && i < body.size(); i += 2) {
                ok = body[i] == 'h' && body[i + 1] == 'o';
            }
        }
        if (!ok) {
            throw MalformedTokenError(token_index, std::string(token),
                                      "token " + std::to_string(token_index) + " \"" + std::string(token) +
                                          "\" is not Ho(ho)*!");
        }
        seq.atoms.push_back(0);
        for (std::size_t i = 0; i < (token.size() - 3) / 2; ++i) seq.atoms.push_back(1);
        ++token_index;
        pos = end;
    }
    return seq;
}

std::string print_advanced(const AtomSeq& seq) {
    if (!seq.alphabet.is_binary_ho()) {
        throw DomainError("advanced notation is defined only for the {Ho,ho} alphabet");
    }
    if (seq.atoms.empty()) return "";
    if (seq.atoms.front() != 0) {
        throw LeadingLowercaseError("sequence starts with \"ho\"; no token can absorb it");
    }
    std::string out;
    for (std::size_t i = 0; i < seq.atoms.size(); ++i) {
        if (seq.atoms[i] == 0) {
            if (i != 0) out += "! ";
            out += "Ho";
        } else {
            out += "ho";
        }
    }
    out += "!";
    return out;
}

std::string print_standard(const AtomSeq& seq, std::size_t group) {
    if (group < 1) throw DomainError("print_standard group must be >= 1");
    std::string out;
    for (std::size_t i = 0; i < seq.atoms.size(); ++i) {
        if (i != 0 && i % group == 0) out += ' ';
        out += seq.alphabet.spelling(seq.atoms[i]);
    }
    return out;
}

}  // namespace hohoho

#include "courtmix/sequence.hpp"

#include <cctype>

namespace courtmix {

namespace {

// X ends mid-step: the tail AC^2EEEEC nets the same rotations as a bare
// AC^3 pending pair, spelled out over four more migrations so that F below
// runs exactly 68 steps.
constexpr const char* kX =
    "AE B^2D^3EEE A^2C^3E B^3D^3EEE A^5E B^5EEE AE B^5EEE AC^2EEEEC";
constexpr const char* kF = "EEEE X X X EEEE";
constexpr const char* kG = "EEEE A^5FA F A^5FA EEEE";
constexpr const char* kH = "FA^5 FA^5 FAFAF";
// 995-step identity witness, built panel by panel. The last panel needs two
// net A^2 rotations; a bare A^2 ahead of a migration would break the rotation
// law, so they are expressed with single-step units (AH, AG merges plus an
// A^5EEEE back-rotation) of the same total length.
constexpr const char* kAperiodic =
    "AEEEE AEAE CE DEEEE DEDE "
    "EEDEEEE DEEEE DEE CEEEE CEEE D "
    "CEEEE CEEEE CEEE AEEEE AEEE CEEE CEEEE C "
    "EAEEEE AEBEE AE BBBBBE "
    "BAEEEE AEBEEE AEBE BEEEE BEEEE BEE "
    "BEEEE BEBEEE AEBEEE "
    "AEEEE AEEEE AGAEEEE AEEEE AEEEE AEEE AEEEE AEEEE AEEEE AE "
    "AEEEE AH AEEEE AG A^5EEEE F AEEEE AEEEE AEEEE EEEE";

std::optional<Quadrant> quadrant_from(char c) {
    switch (c) {
        case 'A': return Quadrant::A;
        case 'B': return Quadrant::B;
        case 'C': return Quadrant::C;
        case 'D': return Quadrant::D;
        default: return std::nullopt;
    }
}

void append_merged(std::vector<Token>& out, const Token& t) {
    if (t.kind == Token::Kind::Rotation && !out.empty() &&
        out.back().kind == Token::Kind::Rotation &&
        out.back().quadrant == t.quadrant) {
        const int e = (out.back().exponent + t.exponent) % 6;
        if (e == 0)
            out.pop_back();
        else
            out.back().exponent = e;
        return;
    }
    out.push_back(t);
}

void expand_into(const Sequence& s, const MacroTable& macros,
                 std::vector<Token>& out, int depth) {
    if (depth > 16) throw std::runtime_error("macro expansion too deep");
    for (const Token& t : s.tokens) {
        if (t.kind == Token::Kind::Macro) {
            const Sequence* body = macros.find(t.macro);
            if (!body) throw UnknownMacro(t.macro);
            expand_into(*body, macros, out, depth + 1);
        } else {
            append_merged(out, t);
        }
    }
}

}  // namespace

MacroTable::MacroTable() : entries_(builtins().entries_) {}

const MacroTable& MacroTable::builtins() {
    static const MacroTable table = [] {
        MacroTable t{std::map<std::string, Sequence>{}};
        t.entries_["X"] = parse(kX);
        t.entries_["F"] = parse(kF);
        t.entries_["G"] = parse(kG);
        t.entries_["H"] = parse(kH);
        t.entries_["APERIODIC"] = parse(kAperiodic);
        for (auto& [name, seq] : t.entries_) seq.name = name;
        return t;
    }();
    return table;
}

// private-ish constructor used by builtins()
MacroTable::MacroTable(std::map<std::string, Sequence> e) : entries_(std::move(e)) {}

bool MacroTable::is_builtin(const std::string& name) {
    return name == "X" || name == "F" || name == "G" || name == "H" ||
           name == "APERIODIC";
}

void MacroTable::define(const std::string& name, Sequence body) {
    if (is_builtin(name))
        throw std::invalid_argument("macro " + name + " is built-in and read-only");
    body.name = name;
    entries_[name] = std::move(body);
}

const Sequence* MacroTable::find(const std::string& name) const {
    const auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

Sequence parse(std::string_view text) {
    Sequence seq;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (text.compare(i, 9, "APERIODIC") == 0) {
            seq.tokens.push_back(Token::macro_ref("APERIODIC"));
            i += 9;
            continue;
        }
        if (c == 'X' || c == 'F' || c == 'G' || c == 'H') {
            seq.tokens.push_back(Token::macro_ref(std::string(1, c)));
            ++i;
            continue;
        }
        if (c == 'E') {
            seq.tokens.push_back(Token::migration());
            ++i;
            continue;
        }
        if (const auto q = quadrant_from(c)) {
            int exponent = 1;
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw SyntaxError("exponent expected after '^'", i);
                exponent = text[i] - '0';
                if (exponent < 1 || exponent > 5)
                    throw SyntaxError("exponent out of range 1..5", i);
                ++i;
            }
            seq.tokens.push_back(Token::rotation(*q, exponent));
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    return seq;
}

Sequence expand(const Sequence& s, const MacroTable& macros) {
    Sequence out;
    out.name = s.name;
    expand_into(s, macros, out.tokens, 0);
    return out;
}

int step_count(const Sequence& s, const MacroTable& macros) {
    int n = 0;
    for (const Token& t : expand(s, macros).tokens)
        if (t.kind == Token::Kind::Migration) ++n;
    return n;
}

ApplyResult apply_sequence(const Configuration& c, const Sequence& s,
                           const Step& carry, const MacroTable& macros) {
    ApplyResult r{c, carry, 0};
    for (const Token& t : expand(s, macros).tokens) {
        if (t.kind == Token::Kind::Rotation) {
            r.configuration = rotate_quadrant(r.configuration, t.quadrant, t.exponent);
            r.pending[t.quadrant] = (r.pending[t.quadrant] + t.exponent) % 6;
        } else {
            if (!r.pending.legal())
                throw IllegalStep("illegal rotation counts before migration", r.steps + 1);
            r.configuration = migrate(r.configuration);
            r.pending = Step{};
            ++r.steps;
        }
    }
    return r;
}

std::string to_text(const Sequence& s) {
    std::string out;
    for (const Token& t : s.tokens) {
        switch (t.kind) {
            case Token::Kind::Migration: out += 'E'; break;
            case Token::Kind::Macro: out += t.macro; break;
            case Token::Kind::Rotation:
                out += quadrant_letter(t.quadrant);
                if (t.exponent != 1) {
                    out += '^';
                    out += static_cast<char>('0' + t.exponent);
                }
                break;
        }
    }
    return out;
}

}  // namespace courtmix

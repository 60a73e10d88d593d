#pragma once

#include "courtmix/court.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace courtmix {

// Move-sequence notation. Grammar:
//   sequence := item* ; item := rotation | "E" | macro | whitespace
//   rotation := ("A"|"B"|"C"|"D") ("^" digit)?   with digit in 1..5
//   macro    := "X" | "F" | "G" | "H" | "APERIODIC" | user-defined name
// Whitespace is skipped everywhere; case-sensitive. An omitted exponent means
// 1; exponent 0 is never written. Rotations accumulate until an E completes
// one step of the chain, so a sequence may end with pending rotations that
// merge into whatever follows.

struct Token {
    enum class Kind { Rotation, Migration, Macro };
    Kind kind = Kind::Migration;
    Quadrant quadrant = Quadrant::A;  // Rotation only
    int exponent = 0;                 // Rotation only, 1..5
    std::string macro;                // Macro only

    static Token rotation(Quadrant q, int e) { return {Kind::Rotation, q, e, {}}; }
    static Token migration() { return {Kind::Migration, Quadrant::A, 0, {}}; }
    static Token macro_ref(std::string name) { return {Kind::Macro, Quadrant::A, 0, std::move(name)}; }

    bool operator==(const Token&) const = default;
};

struct Sequence {
    std::vector<Token> tokens;
    std::optional<std::string> name;
};

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at offset " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct UnknownMacro : std::runtime_error {
    explicit UnknownMacro(const std::string& n)
        : std::runtime_error("unknown macro: " + n), name(n) {}
    std::string name;
};

/// Named sub-sequences. The five built-ins (X, F, G, H, APERIODIC) are shared
/// and read-only; additional macros may be defined per table.
class MacroTable {
public:
    MacroTable();

    /// Defines (or redefines) a user macro. Built-in names are reserved.
    void define(const std::string& name, Sequence body);

    const Sequence* find(const std::string& name) const;
    static bool is_builtin(const std::string& name);
    static const MacroTable& builtins();

private:
    explicit MacroTable(std::map<std::string, Sequence> entries);
    std::map<std::string, Sequence> entries_;
};

Sequence parse(std::string_view text);

/// Replaces macros by their definitions (recursively), merges adjacent
/// rotations of the same quadrant mod 6, and drops zero exponents.
Sequence expand(const Sequence& s, const MacroTable& macros = MacroTable::builtins());

/// Number of chain steps = number of migration tokens after expansion.
int step_count(const Sequence& s, const MacroTable& macros = MacroTable::builtins());

struct ApplyResult {
    Configuration configuration;  // pending rotations already applied
    Step pending;                 // trailing rotations, for composition
    int steps = 0;
};

/// Applies the expanded sequence step by step. `carry` holds rotations pending
/// from a preceding sequence (already applied to `c`); they merge into this
/// sequence's first step for the legality check. Throws IllegalStep with the
/// 1-based index of the offending step.
ApplyResult apply_sequence(const Configuration& c, const Sequence& s,
                           const Step& carry = {},
                           const MacroTable& macros = MacroTable::builtins());

std::string to_text(const Sequence& s);

}  // namespace courtmix

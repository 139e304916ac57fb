#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace rec {

// Closed error catalog. Every failure anywhere in the system carries one of
// these codes; there are no ad-hoc error strings.
enum class Code {
    None = 0,
    StackUnderflow = 1,
    InputExhausted = 2,
    UndefinedSubroutine = 3,
    DivisionByZero = 4,
    SqrtOfNegative = 5,
    UnbalancedParentheses = 6,
    BadConstant = 7,
    UnknownOperator = 8,
    RecursionDepthExceeded = 9,
    UnterminatedQuote = 10,
    StepBudgetExceeded = 11,
    CardFormat = 12,
};

enum class Phase { Lex, Compile, Run };

// Source position. For deck jobs `card` is the 1-based card number within the
// whole deck; for bare source strings it is the 1-based line number.
struct Pos {
    int card = 0;
    int col = 0;
    bool known() const { return card > 0; }
    bool operator==(const Pos&) const = default;
};

struct CatalogEntry {
    Code code;
    const char* tag;   // "E04"
    const char* text;  // "DIVISION BY ZERO"
};

const std::array<CatalogEntry, 12>& catalog();
const char* code_tag(Code c);
const char* code_text(Code c);
const char* phase_name(Phase p);

struct RecError {
    Code code = Code::None;
    Phase phase = Phase::Run;
    Pos pos;

    // "*** REC ERROR E04 DIVISION BY ZERO (CARD 2 COL 9)"
    std::string render() const;
    bool operator==(const RecError&) const = default;
};

// Internal throw type; caught at module boundaries and converted to statuses
// or C API error codes.
struct RecFault : std::runtime_error {
    RecError err;
    explicit RecFault(RecError e);
};

[[noreturn]] void fail(Code code, Phase phase, Pos pos);

}  // namespace rec

#include "error.hpp"

#include <cstdio>

namespace rec {

const std::array<CatalogEntry, 12>& catalog() {
    static const std::array<CatalogEntry, 12> table = {{
        {Code::StackUnderflow, "E01", "STACK UNDERFLOW"},
        {Code::InputExhausted, "E02", "INPUT EXHAUSTED"},
        {Code::UndefinedSubroutine, "E03", "UNDEFINED SUBROUTINE"},
        {Code::DivisionByZero, "E04", "DIVISION BY ZERO"},
        {Code::SqrtOfNegative, "E05", "SQRT OF NEGATIVE"},
        {Code::UnbalancedParentheses, "E06", "UNBALANCED PARENTHESES"},
        {Code::BadConstant, "E07", "BAD CONSTANT"},
        {Code::UnknownOperator, "E08", "UNKNOWN OPERATOR"},
        {Code::RecursionDepthExceeded, "E09", "RECURSION DEPTH EXCEEDED"},
        {Code::UnterminatedQuote, "E10", "UNTERMINATED QUOTE"},
        {Code::StepBudgetExceeded, "E11", "STEP BUDGET EXCEEDED"},
        {Code::CardFormat, "E12", "CARD FORMAT"},
    }};
    return table;
}

const char* code_tag(Code c) {
    int i = static_cast<int>(c);
    if (i < 1 || i > 12) return "E00";
    return catalog()[static_cast<size_t>(i - 1)].tag;
}

const char* code_text(Code c) {
    int i = static_cast<int>(c);
    if (i < 1 || i > 12) return "";
    return catalog()[static_cast<size_t>(i - 1)].text;
}

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Lex: return "LEX";
        case Phase::Compile: return "COMPILE";
        case Phase::Run: return "RUN";
    }
    return "?";
}

std::string RecError::render() const {
    char buf[96];
    if (pos.known()) {
        std::snprintf(buf, sizeof buf, "*** REC ERROR %s %s (CARD %d COL %d)",
                      code_tag(code), code_text(code), pos.card, pos.col);
    } else {
        std::snprintf(buf, sizeof buf, "*** REC ERROR %s %s", code_tag(code),
                      code_text(code));
    }
    return buf;
}

RecFault::RecFault(RecError e) : std::runtime_error(e.render()), err(e) {}

void fail(Code code, Phase phase, Pos pos) {
    throw RecFault(RecError{code, phase, pos});
}

}  // namespace rec

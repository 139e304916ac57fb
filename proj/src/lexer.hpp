#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace rec {

enum class Tok {
    LParen,
    RParen,
    Comma,
    Period,
    Const,    // '/number'
    Text,     // ''chars'
    Call,     // 'x
    Counter,  // $n$
    In,       // I
    Out,      // O
    Newline,  // X
    Dup,      // P (D is an alias)
    Drop,     // L (J is an alias)
    Add,      // + (& is an alias)
    Sub,      // -
    Mul,      // *
    Div,      // /
    Sin,      // S
    Exp,      // E
    Sqrt,     // Q
    Store,    // S0..S9
    Fetch,    // F0..F9
    Zero,     // 0
    Neg,      // N
};

struct Token {
    Tok kind;
    double num = 0;     // Const
    std::string text;   // Text
    char letter = 0;    // Call (always upper case)
    int n = 0;          // Counter limit or Store/Fetch register
    Pos pos;            // (line, col) within the source string, 1-based

    bool same(const Token& o) const {
        return kind == o.kind && num == o.num && text == o.text && letter == o.letter &&
               n == o.n;
    }
};

// Lexes one unit's program source. Letters outside quotes are case
// insensitive (stray lowercase on old card decks); quoted text is verbatim.
// Quotes may not span lines. Throws RecFault with phase LEX.
std::vector<Token> tokenize(std::string_view src);

// Canonical spelling of a single token ('D' prints as 'P', '&' as '+', ...).
std::string lexeme(const Token& t);

// Canonical source: lexemes concatenated, with a separating blank only where
// adjacency would re-lex differently (S followed by 0). Re-tokenizing the
// result yields the same token list.
std::string canonical(const std::vector<Token>& tokens);

}  // namespace rec

#include "lexer.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace rec {

namespace {

bool is_letter(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
char upper(char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 32) : c; }

struct Scanner {
    std::string_view src;
    size_t i = 0;
    int line = 1;
    int col = 1;

    bool done() const { return i >= src.size(); }
    char peek(size_t ahead = 0) const {
        return i + ahead < src.size() ? src[i + ahead] : '\0';
    }
    char take() {
        char c = src[i++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    Pos pos() const { return Pos{line, col}; }
};

double parse_number(const std::string& body, Pos at) {
    std::string trimmed = body;
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
    const char* cs = trimmed.c_str();
    char* end = nullptr;
    double v = std::strtod(cs, &end);
    if (end == cs || *end != '\0' || !std::isfinite(v))
        fail(Code::BadConstant, Phase::Lex, at);
    return v;
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    Scanner s{src};

    while (!s.done()) {
        char c = s.peek();
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            s.take();
            continue;
        }

        Pos at = s.pos();
        auto push = [&](Tok k) {
            Token t;
            t.kind = k;
            t.pos = at;
            out.push_back(std::move(t));
            return &out.back();
        };

        switch (upper(c)) {
            case '(': s.take(); push(Tok::LParen); continue;
            case ')': s.take(); push(Tok::RParen); continue;
            case ',': s.take(); push(Tok::Comma); continue;
            case '.': s.take(); push(Tok::Period); continue;
            case '+':
            case '&': s.take(); push(Tok::Add); continue;
            case '-': s.take(); push(Tok::Sub); continue;
            case '*': s.take(); push(Tok::Mul); continue;
            case '/': s.take(); push(Tok::Div); continue;
            case 'I': s.take(); push(Tok::In); continue;
            case 'O': s.take(); push(Tok::Out); continue;
            case 'X': s.take(); push(Tok::Newline); continue;
            case 'P':
            case 'D': s.take(); push(Tok::Dup); continue;
            case 'L':
            case 'J': s.take(); push(Tok::Drop); continue;
            case 'E': s.take(); push(Tok::Exp); continue;
            case 'Q': s.take(); push(Tok::Sqrt); continue;
            case 'N': s.take(); push(Tok::Neg); continue;
            case '0': s.take(); push(Tok::Zero); continue;

            case 'S': {
                s.take();
                if (is_digit(s.peek())) {
                    Token* t = push(Tok::Store);
                    t->n = s.take() - '0';
                } else {
                    push(Tok::Sin);
                }
                continue;
            }
            case 'F': {
                s.take();
                if (is_digit(s.peek())) {
                    Token* t = push(Tok::Fetch);
                    t->n = s.take() - '0';
                } else {
                    // bare F names no operator
                    fail(Code::UnknownOperator, Phase::Lex, at);
                }
                continue;
            }

            case '\'': {
                s.take();
                char k = s.peek();
                if (k == '/') {
                    s.take();
                    std::string body;
                    for (;;) {
                        if (s.done() || s.peek() == '\n')
                            fail(Code::UnterminatedQuote, Phase::Lex, at);
                        char b = s.take();
                        if (b == '\'') break;
                        body.push_back(b);
                    }
                    Token* t = push(Tok::Const);
                    t->num = parse_number(body, at);
                } else if (k == '\'') {
                    s.take();
                    std::string body;
                    for (;;) {
                        if (s.done() || s.peek() == '\n')
                            fail(Code::UnterminatedQuote, Phase::Lex, at);
                        char b = s.take();
                        if (b == '\'') break;
                        body.push_back(b);
                    }
                    Token* t = push(Tok::Text);
                    t->text = std::move(body);
                } else if (is_letter(k)) {
                    s.take();
                    Token* t = push(Tok::Call);
                    t->letter = upper(k);
                } else if ((k == '\0' && s.done()) || k == '\n') {
                    fail(Code::UnterminatedQuote, Phase::Lex, at);
                } else {
                    fail(Code::UnknownOperator, Phase::Lex, at);
                }
                continue;
            }

            case '$': {
                s.take();
                std::string digits;
                while (is_digit(s.peek())) digits.push_back(s.take());
                if (digits.empty() || s.peek() != '$')
                    fail(Code::BadConstant, Phase::Lex, at);
                s.take();
                long long n = std::strtoll(digits.c_str(), nullptr, 10);
                if (n < 1 || n > 1000000000)
                    fail(Code::BadConstant, Phase::Lex, at);
                Token* t = push(Tok::Counter);
                t->n = static_cast<int>(n);
                continue;
            }

            default:
                fail(Code::UnknownOperator, Phase::Lex, at);
        }
    }
    return out;
}

namespace {

std::string shortest(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string lexeme(const Token& t) {
    switch (t.kind) {
        case Tok::LParen: return "(";
        case Tok::RParen: return ")";
        case Tok::Comma: return ",";
        case Tok::Period: return ".";
        case Tok::Const: return "'/" + shortest(t.num) + "'";
        case Tok::Text: return "''" + t.text + "'";
        case Tok::Call: return std::string("'") + t.letter;
        case Tok::Counter: return "$" + std::to_string(t.n) + "$";
        case Tok::In: return "I";
        case Tok::Out: return "O";
        case Tok::Newline: return "X";
        case Tok::Dup: return "P";
        case Tok::Drop: return "L";
        case Tok::Add: return "+";
        case Tok::Sub: return "-";
        case Tok::Mul: return "*";
        case Tok::Div: return "/";
        case Tok::Sin: return "S";
        case Tok::Exp: return "E";
        case Tok::Sqrt: return "Q";
        case Tok::Store: return "S" + std::to_string(t.n);
        case Tok::Fetch: return "F" + std::to_string(t.n);
        case Tok::Zero: return "0";
        case Tok::Neg: return "N";
    }
    return "?";
}

std::string canonical(const std::vector<Token>& tokens) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i && tokens[i].kind == Tok::Zero && tokens[i - 1].kind == Tok::Sin)
            out.push_back(' ');  // "S0" would re-lex as a register store
        out += lexeme(tokens[i]);
    }
    return out;
}

}  // namespace rec

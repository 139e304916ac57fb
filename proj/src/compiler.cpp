#include "compiler.hpp"

#include <charconv>
#include <cstdio>

#include "lexer.hpp"

namespace rec {

const char* op_name(Op op) {
    switch (op) {
        case Op::Const: return "CONST";
        case Op::Text: return "TEXT";
        case Op::In: return "IN";
        case Op::Out: return "OUT";
        case Op::Newline: return "NEWLINE";
        case Op::Dup: return "DUP";
        case Op::Drop: return "DROP";
        case Op::Add: return "ADD";
        case Op::Sub: return "SUB";
        case Op::Mul: return "MUL";
        case Op::Div: return "DIV";
        case Op::Sin: return "SIN";
        case Op::Exp: return "EXP";
        case Op::Sqrt: return "SQRT";
        case Op::Store: return "STORE";
        case Op::Fetch: return "FETCH";
        case Op::Zero: return "ZERO";
        case Op::Neg: return "NEG";
        case Op::Counter: return "COUNTER";
        case Op::Call: return "CALL";
        case Op::Enter: return "ENTER";
        case Op::ExitTrue: return "EXIT_TRUE";
        case Op::ExitFalse: return "EXIT_FALSE";
        case Op::Repeat: return "REPEAT";
    }
    return "?";
}

namespace {

struct Compiler {
    const std::vector<Token>& toks;
    size_t cur = 0;
    Program prog;
    std::vector<std::pair<int32_t, Pos>> calls;  // unresolved call sites

    explicit Compiler(const std::vector<Token>& t) : toks(t) {}

    bool done() const { return cur >= toks.size(); }
    const Token& peek() const { return toks[cur]; }
    const Token& take() { return toks[cur++]; }
    Pos here() const {
        if (!done()) return toks[cur].pos;
        return toks.empty() ? Pos{1, 1} : toks.back().pos;
    }

    int32_t emit(Op op, Pos pos, double num = 0, int32_t a = 0, int32_t b = 0) {
        prog.code.push_back(Instr{op, num, a, b, 0});
        prog.where.push_back(pos);
        return static_cast<int32_t>(prog.code.size()) - 1;
    }

    // Called with the '(' already consumed; `open` is its position, used for
    // the unbalanced-parenthesis diagnostic. Returns the block's start index.
    int32_t block(Pos open) {
        int32_t start = static_cast<int32_t>(prog.code.size());
        std::vector<int32_t> members;  // this depth only; nested blocks appear as Enter
        std::vector<int32_t> commas;

        for (;;) {
            if (done()) fail(Code::UnbalancedParentheses, Phase::Compile, open);
            const Token& t = take();
            switch (t.kind) {
                case Tok::RParen: {
                    int32_t exit = emit(Op::ExitFalse, t.pos);
                    members.push_back(exit);
                    // failure goes just past the next comma at this depth,
                    // else to the epilogue; comma exits funnel through it too
                    for (int32_t m : members) {
                        int32_t target = exit;
                        for (int32_t cpos : commas)
                            if (cpos > m) {
                                target = cpos + 1;
                                break;
                            }
                        prog.code[m].fail = target;
                        if (prog.code[m].op == Op::ExitTrue) prog.code[m].a = exit;
                    }
                    return start;
                }
                case Tok::Comma: {
                    int32_t idx = emit(Op::ExitTrue, t.pos);
                    members.push_back(idx);
                    commas.push_back(idx);
                    break;
                }
                case Tok::Period:
                    members.push_back(emit(Op::Repeat, t.pos, 0, start));
                    break;
                case Tok::LParen: {
                    int32_t enter = emit(Op::Enter, t.pos);
                    members.push_back(enter);
                    block(t.pos);
                    prog.code[enter].a = static_cast<int32_t>(prog.code.size());
                    break;
                }
                case Tok::Const:
                    members.push_back(emit(Op::Const, t.pos, t.num));
                    break;
                case Tok::Text: {
                    int32_t ti = static_cast<int32_t>(prog.texts.size());
                    prog.texts.push_back(t.text);
                    members.push_back(emit(Op::Text, t.pos, 0, ti));
                    break;
                }
                case Tok::Call: {
                    int32_t idx = emit(Op::Call, t.pos, 0, -1, t.letter);
                    members.push_back(idx);
                    calls.emplace_back(idx, t.pos);
                    break;
                }
                case Tok::Counter:
                    members.push_back(emit(Op::Counter, t.pos, 0, prog.counters++, t.n));
                    break;
                case Tok::In: members.push_back(emit(Op::In, t.pos)); break;
                case Tok::Out: members.push_back(emit(Op::Out, t.pos)); break;
                case Tok::Newline: members.push_back(emit(Op::Newline, t.pos)); break;
                case Tok::Dup: members.push_back(emit(Op::Dup, t.pos)); break;
                case Tok::Drop: members.push_back(emit(Op::Drop, t.pos)); break;
                case Tok::Add: members.push_back(emit(Op::Add, t.pos)); break;
                case Tok::Sub: members.push_back(emit(Op::Sub, t.pos)); break;
                case Tok::Mul: members.push_back(emit(Op::Mul, t.pos)); break;
                case Tok::Div: members.push_back(emit(Op::Div, t.pos)); break;
                case Tok::Sin: members.push_back(emit(Op::Sin, t.pos)); break;
                case Tok::Exp: members.push_back(emit(Op::Exp, t.pos)); break;
                case Tok::Sqrt: members.push_back(emit(Op::Sqrt, t.pos)); break;
                case Tok::Store:
                    members.push_back(emit(Op::Store, t.pos, 0, t.n));
                    break;
                case Tok::Fetch:
                    members.push_back(emit(Op::Fetch, t.pos, 0, t.n));
                    break;
                case Tok::Zero: members.push_back(emit(Op::Zero, t.pos)); break;
                case Tok::Neg: members.push_back(emit(Op::Neg, t.pos)); break;
            }
        }
    }

    void unit() {
        bool have_main = false;
        while (!done()) {
            const Token& t = peek();
            if (t.kind == Tok::RParen)
                fail(Code::UnbalancedParentheses, Phase::Compile, t.pos);
            if (t.kind != Tok::LParen) fail(Code::CardFormat, Phase::Compile, t.pos);
            Pos open = take().pos;
            int32_t start = block(open);

            if (!done() && peek().kind == Tok::Call) {
                const Token& name = take();
                if (prog.subs.count(name.letter))
                    fail(Code::CardFormat, Phase::Compile, name.pos);
                prog.subs[name.letter] = start;
                if (!done() && peek().kind == Tok::Drop) take();  // deck artifact
            } else {
                prog.entry = start;
                have_main = true;
                if (!done()) fail(Code::CardFormat, Phase::Compile, peek().pos);
            }
        }
        if (!have_main) fail(Code::CardFormat, Phase::Compile, here());

        for (auto& [idx, pos] : calls) {
            auto it = prog.subs.find(static_cast<char>(prog.code[idx].b));
            if (it == prog.subs.end()) fail(Code::UndefinedSubroutine, Phase::Compile, pos);
            prog.code[idx].a = it->second;
        }
    }
};

std::string shortest(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string operand_text(const Instr& in) {
    char buf[64];
    switch (in.op) {
        case Op::Const: return shortest(in.num);
        case Op::Text: {
            std::snprintf(buf, sizeof buf, "t%d", in.a);
            return buf;
        }
        case Op::Store:
        case Op::Fetch: return std::to_string(in.a);
        case Op::Counter: {
            std::snprintf(buf, sizeof buf, "#%d <=%d", in.a, in.b);
            return buf;
        }
        case Op::Call: {
            std::snprintf(buf, sizeof buf, "'%c -> %d", static_cast<char>(in.b), in.a);
            return buf;
        }
        case Op::Enter:
        case Op::ExitTrue:
        case Op::Repeat: return std::to_string(in.a);
        default: return "";
    }
}

}  // namespace

Program compile(std::string_view source) {
    std::vector<Token> tokens = tokenize(source);
    Compiler c(tokens);
    c.unit();
    c.prog.source = canonical(tokens);
    return std::move(c.prog);
}

std::string dump(const Program& p) {
    std::string out;
    out += "source: " + p.source + "\n";
    out += "entry: " + std::to_string(p.entry) + "\n";
    out += "subroutines:";
    if (p.subs.empty()) out += " (none)";
    for (auto [letter, entry] : p.subs)
        out += std::string(" ") + letter + "=" + std::to_string(entry);
    out += "\n";
    out += "texts: " + std::to_string(p.texts.size()) + "\n";
    for (size_t i = 0; i < p.texts.size(); ++i)
        out += "  t" + std::to_string(i) + ": \"" + p.texts[i] + "\"\n";
    out += "counters: " + std::to_string(p.counters) + "\n";
    out += "code: " + std::to_string(p.code.size()) + "\n";
    char line[128];
    for (size_t i = 0; i < p.code.size(); ++i) {
        const Instr& in = p.code[i];
        std::snprintf(line, sizeof line, "%5zu  %-10s %-16s fail=%d\n", i, op_name(in.op),
                      operand_text(in).c_str(), in.fail);
        out += line;
    }
    return out;
}

}  // namespace rec

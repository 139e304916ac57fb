#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace rec {

enum class Op : uint8_t {
    Const,
    Text,
    In,
    Out,
    Newline,
    Dup,
    Drop,
    Add,
    Sub,
    Mul,
    Div,
    Sin,
    Exp,
    Sqrt,
    Store,
    Fetch,
    Zero,
    Neg,
    Counter,
    Call,
    Enter,
    ExitTrue,
    ExitFalse,
    Repeat,
};

const char* op_name(Op op);

// One instruction. `fail` is the precomputed failure target: just past the
// next comma at the same block depth, else the block's EXIT_FALSE. Operand
// use by opcode:
//   Const    num            Text     a = text index
//   Store    a = register   Fetch    a = register
//   Counter  a = slot, b = limit
//   Call     a = entry index, b = subroutine letter
//   Enter    a = index just past the nested block (resume point)
//   ExitTrue a = index of the block's EXIT_FALSE epilogue
//   Repeat   a = block start index
struct Instr {
    Op op;
    double num = 0;
    int32_t a = 0;
    int32_t b = 0;
    int32_t fail = 0;

    bool operator==(const Instr&) const = default;
};

struct Program {
    std::vector<Instr> code;
    int32_t entry = 0;                 // first instruction of the main block
    std::map<char, int32_t> subs;      // subroutine letter -> entry index
    std::vector<std::string> texts;    // text literal table
    int32_t counters = 0;              // number of counter slots
    std::vector<Pos> where;            // per-instruction source position
    std::string source;                // canonical re-printed source
};

}  // namespace rec

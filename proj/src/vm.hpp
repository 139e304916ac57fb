#pragma once

#include <string>
#include <vector>

#include "program.hpp"

namespace rec {

struct VmConfig {
    long long step_budget = 10000000;
    int depth_limit = 512;       // block frames + subroutine calls, root included
    bool single_precision = false;  // round every value through float
};

enum class Status { True, False, Error };

const char* status_name(Status s);

struct RunResult {
    Status status = Status::False;
    RecError error;                   // meaningful when status == Error
    std::vector<std::string> output;  // printed lines, implicit final flush included
    std::vector<double> stack;        // final value stack, bottom first
    long long steps = 0;              // executed instructions
};

// One trace entry per executed instruction, recorded before execution.
struct StepRecord {
    int32_t idx;
    Op op;
    int32_t depth;  // value stack depth
    bool has_top;
    double top;
};

RunResult run(const Program& p, std::vector<double> input, const VmConfig& cfg = {},
              std::vector<StepRecord>* trace = nullptr);

std::string render_trace(const std::vector<StepRecord>& steps);

}  // namespace rec

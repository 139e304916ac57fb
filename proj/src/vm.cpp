#include "vm.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <deque>

#include "eformat.hpp"

namespace rec {

const char* status_name(Status s) {
    switch (s) {
        case Status::True: return "TRUE";
        case Status::False: return "FALSE";
        case Status::Error: return "ERROR";
    }
    return "?";
}

namespace {

struct Frame {
    int32_t resume;   // continue here when the block exits TRUE
    int32_t on_fail;  // failure target of the entering instruction
};

struct Machine {
    const Program& p;
    const VmConfig& cfg;
    std::vector<StepRecord>* trace;

    std::vector<double> stack;
    double reg[10] = {0};
    std::vector<int> counters;
    std::deque<double> input;
    std::string line;
    std::vector<std::string> output;
    std::vector<Frame> frames;
    long long steps = 0;

    Machine(const Program& prog, const VmConfig& c, std::vector<double> in,
            std::vector<StepRecord>* tr)
        : p(prog), cfg(c), trace(tr), counters(static_cast<size_t>(prog.counters), 0),
          input(in.begin(), in.end()) {}

    double narrow(double v) const {
        return cfg.single_precision ? static_cast<double>(static_cast<float>(v)) : v;
    }

    void need(size_t k, Pos at) {
        if (stack.size() < k) fail(Code::StackUnderflow, Phase::Run, at);
    }

    void push(double v) { stack.push_back(narrow(v)); }

    double pop() {
        double v = stack.back();
        stack.pop_back();
        return v;
    }

    void check_finite(double v, Pos at) {
        if (!std::isfinite(v)) fail(Code::BadConstant, Phase::Run, at);
    }

    Status exec() {
        int32_t pc = p.entry;
        frames.push_back(Frame{-1, -1});  // root; popping it halts
        bool pending_true = false;

        for (;;) {
            const Instr& in = p.code[static_cast<size_t>(pc)];
            Pos at = p.where[static_cast<size_t>(pc)];
            if (steps >= cfg.step_budget) fail(Code::StepBudgetExceeded, Phase::Run, at);
            ++steps;
            if (trace)
                trace->push_back(StepRecord{pc, in.op, static_cast<int32_t>(stack.size()),
                                            !stack.empty(),
                                            stack.empty() ? 0.0 : stack.back()});

            switch (in.op) {
                case Op::Const:
                    push(in.num);
                    ++pc;
                    break;
                case Op::Text:
                    line += p.texts[static_cast<size_t>(in.a)];
                    ++pc;
                    break;
                case Op::In:
                    if (input.empty()) fail(Code::InputExhausted, Phase::Run, at);
                    push(input.front());
                    input.pop_front();
                    ++pc;
                    break;
                case Op::Out: {
                    need(1, at);
                    auto field = format_e(stack.back());
                    if (!field) fail(Code::BadConstant, Phase::Run, at);
                    line += *field;
                    ++pc;
                    break;
                }
                case Op::Newline:
                    output.push_back(line);
                    line.clear();
                    ++pc;
                    break;
                case Op::Dup:
                    need(1, at);
                    push(stack.back());
                    ++pc;
                    break;
                case Op::Drop:
                    need(1, at);
                    stack.pop_back();
                    ++pc;
                    break;
                case Op::Add:
                case Op::Sub:
                case Op::Mul:
                case Op::Div: {
                    need(2, at);
                    double v = pop();
                    double u = pop();
                    double r = 0;
                    switch (in.op) {
                        case Op::Add: r = u + v; break;
                        case Op::Sub: r = u - v; break;
                        case Op::Mul: r = u * v; break;
                        default:
                            if (v == 0.0) fail(Code::DivisionByZero, Phase::Run, at);
                            r = u / v;
                            break;
                    }
                    check_finite(r, at);
                    push(r);
                    ++pc;
                    break;
                }
                case Op::Sin:
                    need(1, at);
                    stack.back() = narrow(std::sin(stack.back()));
                    ++pc;
                    break;
                case Op::Exp: {
                    need(1, at);
                    double r = std::exp(stack.back());
                    check_finite(r, at);
                    stack.back() = narrow(r);
                    ++pc;
                    break;
                }
                case Op::Sqrt:
                    need(1, at);
                    if (stack.back() < 0) fail(Code::SqrtOfNegative, Phase::Run, at);
                    stack.back() = narrow(std::sqrt(stack.back()));
                    ++pc;
                    break;
                case Op::Store:
                    need(1, at);
                    reg[in.a] = stack.back();
                    ++pc;
                    break;
                case Op::Fetch:
                    push(reg[in.a]);
                    ++pc;
                    break;
                case Op::Zero:
                    need(1, at);
                    pc = stack.back() == 0.0 ? pc + 1 : in.fail;
                    break;
                case Op::Neg:
                    need(1, at);
                    pc = stack.back() < 0.0 ? pc + 1 : in.fail;
                    break;
                case Op::Counter: {
                    int& c = counters[static_cast<size_t>(in.a)];
                    ++c;
                    if (c <= in.b) {
                        ++pc;
                    } else {
                        c = 0;
                        pc = in.fail;
                    }
                    break;
                }
                case Op::Call:
                    if (frames.size() >= static_cast<size_t>(cfg.depth_limit))
                        fail(Code::RecursionDepthExceeded, Phase::Run, at);
                    frames.push_back(Frame{pc + 1, in.fail});
                    pc = in.a;
                    break;
                case Op::Enter:
                    if (frames.size() >= static_cast<size_t>(cfg.depth_limit))
                        fail(Code::RecursionDepthExceeded, Phase::Run, at);
                    frames.push_back(Frame{in.a, in.fail});
                    ++pc;
                    break;
                case Op::ExitTrue:
                    pending_true = true;
                    pc = in.a;
                    break;
                case Op::ExitFalse: {
                    bool truth = pending_true;
                    pending_true = false;
                    Frame f = frames.back();
                    frames.pop_back();
                    if (frames.empty()) return truth ? Status::True : Status::False;
                    pc = truth ? f.resume : f.on_fail;
                    break;
                }
                case Op::Repeat:
                    pc = in.a;
                    break;
            }
        }
    }
};

std::string shortest(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

RunResult run(const Program& p, std::vector<double> input, const VmConfig& cfg,
              std::vector<StepRecord>* trace) {
    RunResult res;
    Machine m(p, cfg, std::move(input), trace);
    try {
        res.status = m.exec();
    } catch (const RecFault& f) {
        res.status = Status::Error;
        res.error = f.err;
    }
    if (!m.line.empty()) m.output.push_back(std::move(m.line));  // implicit flush
    res.output = std::move(m.output);
    res.stack = std::move(m.stack);
    res.steps = m.steps;
    return res;
}

std::string render_trace(const std::vector<StepRecord>& steps) {
    std::string out;
    char buf[64];
    for (size_t i = 0; i < steps.size(); ++i) {
        const StepRecord& s = steps[i];
        std::snprintf(buf, sizeof buf, "%6zu  @%-5d %-10s depth=%-4d top=", i + 1, s.idx,
                      op_name(s.op), s.depth);
        out += buf;
        out += s.has_top ? shortest(s.top) : "-";
        out.push_back('\n');
    }
    return out;
}

}  // namespace rec

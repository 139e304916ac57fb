#include "rec/rec.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "compiler.hpp"
#include "eformat.hpp"
#include "job.hpp"
#include "vm.hpp"

using namespace rec;

struct rec_program {
    Program prog;
};

struct rec_result {
    Status status = Status::False;
    RecError error;
    std::vector<std::string> output;
    std::vector<double> stack;
    long long steps = 0;
    std::string trace;
};

struct rec_job {
    Job job;
};

namespace {

void fill_info(rec_error_info* info, const RecError& e) {
    if (!info) return;
    info->code = static_cast<int>(e.code);
    info->phase = static_cast<int>(e.phase);
    info->card = e.pos.card;
    info->column = e.pos.col;
    std::snprintf(info->message, sizeof info->message, "%s",
                  e.code == Code::None ? "" : code_text(e.code));
}

RecError from_info(const rec_error_info& info) {
    RecError e;
    e.code = static_cast<Code>(info.code);
    e.phase = static_cast<Phase>(info.phase);
    e.pos = Pos{info.card, info.column};
    return e;
}

VmConfig to_config(const rec_options* opt) {
    VmConfig cfg;
    if (opt) {
        cfg.step_budget = opt->step_budget;
        cfg.depth_limit = opt->depth_limit;
        cfg.single_precision = opt->single_precision != 0;
    }
    return cfg;
}

int to_status(Status s) {
    switch (s) {
        case Status::True: return REC_TRUE;
        case Status::False: return REC_FALSE;
        default: return REC_ERROR;
    }
}

}  // namespace

extern "C" {

void rec_options_init(rec_options* opt) {
    if (!opt) return;
    VmConfig def;
    opt->step_budget = def.step_budget;
    opt->depth_limit = def.depth_limit;
    opt->single_precision = 0;
    opt->input_override = nullptr;
    opt->input_override_len = 0;
}

const char* rec_version(void) { return "1.0.0"; }

const char* rec_error_message(int code) {
    if (code < 1 || code > 12) return nullptr;
    return code_text(static_cast<Code>(code));
}

int rec_error_render(const rec_error_info* err, char* buf, size_t len) {
    if (!err) return -1;
    std::string line = from_info(*err).render();
    if (buf && len > 0) {
        size_t n = line.size() < len - 1 ? line.size() : len - 1;
        std::memcpy(buf, line.data(), n);
        buf[n] = '\0';
    }
    return static_cast<int>(line.size());
}

rec_program* rec_compile(const char* source, rec_error_info* err) {
    if (err) fill_info(err, RecError{});
    if (!source) {
        if (err) err->code = REC_EINVAL;
        return nullptr;
    }
    try {
        auto* p = new rec_program{compile(source)};
        return p;
    } catch (const RecFault& f) {
        fill_info(err, f.err);
        return nullptr;
    }
}

void rec_program_free(rec_program* prog) { delete prog; }

char* rec_program_dump(const rec_program* prog) {
    if (!prog) return nullptr;
    std::string text = dump(prog->prog);
    char* out = new (std::nothrow) char[text.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, text.data(), text.size() + 1);
    return out;
}

void rec_text_free(char* text) { delete[] text; }

rec_result* rec_run(const rec_program* prog, const double* input,
                    size_t input_len, const rec_options* opt, int want_trace) {
    if (!prog) return nullptr;
    std::vector<double> in;
    if (input && input_len) in.assign(input, input + input_len);
    std::vector<StepRecord> steps;
    RunResult rr = run(prog->prog, std::move(in), to_config(opt),
                       want_trace ? &steps : nullptr);
    auto* res = new rec_result;
    res->status = rr.status;
    res->error = rr.error;
    res->output = std::move(rr.output);
    res->stack = std::move(rr.stack);
    res->steps = rr.steps;
    if (want_trace) res->trace = render_trace(steps);
    return res;
}

void rec_result_free(rec_result* res) { delete res; }

int rec_result_status(const rec_result* res) {
    return res ? to_status(res->status) : REC_EINVAL;
}

int rec_result_error(const rec_result* res, rec_error_info* info) {
    if (!res) return REC_EINVAL;
    fill_info(info, res->error);
    return static_cast<int>(res->error.code);
}

size_t rec_result_output_count(const rec_result* res) {
    return res ? res->output.size() : 0;
}

const char* rec_result_output_line(const rec_result* res, size_t i) {
    if (!res || i >= res->output.size()) return nullptr;
    return res->output[i].c_str();
}

long long rec_result_steps(const rec_result* res) {
    return res ? res->steps : 0;
}

size_t rec_result_stack_depth(const rec_result* res) {
    return res ? res->stack.size() : 0;
}

double rec_result_stack_value(const rec_result* res, size_t i) {
    if (!res || i >= res->stack.size()) return 0.0;
    return res->stack[i];
}

const char* rec_result_trace(const rec_result* res) {
    return res ? res->trace.c_str() : nullptr;
}

rec_job* rec_job_run(const char* deck_text, const rec_options* opt,
                     int want_trace, rec_error_info* err) {
    if (err) fill_info(err, RecError{});
    if (!deck_text) {
        if (err) err->code = REC_EINVAL;
        return nullptr;
    }
    JobOptions jo;
    jo.vm = to_config(opt);
    jo.with_trace = want_trace != 0;
    if (opt && opt->input_override)
        jo.input_override = std::vector<double>(
            opt->input_override, opt->input_override + opt->input_override_len);
    try {
        auto* j = new rec_job{run_job(deck_text, jo)};
        return j;
    } catch (const RecFault& f) {
        fill_info(err, f.err);
        return nullptr;
    }
}

void rec_job_free(rec_job* job) { delete job; }

const char* rec_job_listing(const rec_job* job) {
    return job ? job->job.listing.c_str() : nullptr;
}

size_t rec_job_unit_count(const rec_job* job) {
    return job ? job->job.units.size() : 0;
}

int rec_job_unit_status(const rec_job* job, size_t i) {
    if (!job || i >= job->job.units.size()) return REC_EINVAL;
    return to_status(job->job.units[i].outcome.status);
}

int rec_job_unit_error(const rec_job* job, size_t i, rec_error_info* info) {
    if (!job || i >= job->job.units.size()) return REC_EINVAL;
    fill_info(info, job->job.units[i].outcome.error);
    return static_cast<int>(job->job.units[i].outcome.error.code);
}

const char* rec_job_unit_trace(const rec_job* job, size_t i) {
    if (!job || i >= job->job.units.size()) return nullptr;
    return job->job.units[i].trace.c_str();
}

int rec_format_e(double value, char out[13]) {
    if (!out) return REC_EINVAL;
    auto text = format_e(value);
    if (!text) {
        out[0] = '\0';
        return REC_E07_BAD_CONSTANT;
    }
    std::memcpy(out, text->data(), text->size() + 1);
    return REC_OK;
}

int rec_parse_e(const char* text, double* out) {
    if (!text || !out) return REC_EINVAL;
    auto v = parse_e(text);
    if (!v) return REC_E07_BAD_CONSTANT;
    *out = *v;
    return REC_OK;
}

}  // extern "C"

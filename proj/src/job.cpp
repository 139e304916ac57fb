#include "job.hpp"

namespace rec {

Job run_job(std::string_view deck_text, const JobOptions& opt) {
    Job job;
    job.deck = read_job(deck_text);

    for (const ProgramUnit& unit : job.deck.units) {
        UnitRun ur;
        try {
            Program prog = compile(unit.source());
            std::vector<StepRecord> steps;
            RunResult rr = run(prog, opt.input_override ? *opt.input_override : unit.input(),
                               opt.vm, opt.with_trace ? &steps : nullptr);
            ur.outcome.status = rr.status;
            ur.outcome.output = std::move(rr.output);
            ur.steps = rr.steps;
            if (rr.status == Status::Error) {
                ur.outcome.error = rr.error;
                ur.outcome.error.pos = unit.map_pos(rr.error.pos);
            }
            if (opt.with_trace) ur.trace = render_trace(steps);
        } catch (const RecFault& f) {
            ur.outcome.status = Status::Error;
            ur.outcome.error = f.err;
            ur.outcome.error.pos = unit.map_pos(f.err.pos);
        }
        job.units.push_back(std::move(ur));
    }

    std::vector<UnitOutcome> outcomes;
    outcomes.reserve(job.units.size());
    for (const UnitRun& ur : job.units) outcomes.push_back(ur.outcome);
    job.listing = render_listing(job.deck, outcomes);
    return job;
}

}  // namespace rec

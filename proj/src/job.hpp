#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compiler.hpp"
#include "listing.hpp"

namespace rec {

struct JobOptions {
    VmConfig vm;
    bool with_trace = false;
    std::optional<std::vector<double>> input_override;  // replaces every unit's data
};

struct UnitRun {
    UnitOutcome outcome;   // deck-mapped positions
    std::string trace;     // filled when requested and the unit compiled
    long long steps = 0;
};

struct Job {
    Deck deck;
    std::vector<UnitRun> units;
    std::string listing;
};

// Parses the deck, compiles and runs every unit (a failing unit does not stop
// the others), and renders the listing. Deck-structure problems (over-long
// cards, data before any unit, bad data cards) throw RecFault.
Job run_job(std::string_view deck_text, const JobOptions& opt = {});

}  // namespace rec

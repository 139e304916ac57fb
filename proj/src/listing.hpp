#pragma once

#include <string>
#include <vector>

#include "card.hpp"
#include "vm.hpp"

namespace rec {

// Per-unit outcome, deck order. Error positions must already be deck-mapped.
struct UnitOutcome {
    Status status = Status::False;
    RecError error;
    std::vector<std::string> output;
};

// Printer-style listing: every card echoed in order; after each unit's last
// card its output lines, an error line when it failed, and a STATUS footer.
std::string render_listing(const Deck& deck, const std::vector<UnitOutcome>& outcomes);

}  // namespace rec

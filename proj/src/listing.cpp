#include "listing.hpp"

namespace rec {

std::string render_listing(const Deck& deck, const std::vector<UnitOutcome>& outcomes) {
    std::string out;
    size_t next = 0;  // next unit awaiting its footer
    for (const Card& card : deck.cards) {
        out += card.text;
        out.push_back('\n');
        if (next < deck.units.size() && next < outcomes.size() &&
            card.index == deck.units[next].last_card) {
            const UnitOutcome& oc = outcomes[next];
            for (const std::string& line : oc.output) {
                out += line;
                out.push_back('\n');
            }
            if (oc.status == Status::Error) {
                out += oc.error.render();
                out.push_back('\n');
                out += "STATUS ERROR ";
                out += code_tag(oc.error.code);
            } else {
                out += "STATUS ";
                out += status_name(oc.status);
            }
            out.push_back('\n');
            ++next;
        }
    }
    return out;
}

}  // namespace rec

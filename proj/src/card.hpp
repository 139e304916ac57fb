#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace rec {

// 1130-style job decks: one card per line, at most 80 columns.
inline constexpr size_t kCardWidth = 80;

enum class CardKind { Jcl, Control, Comment, UnitStart, ProgramText, Data, Blank };

const char* card_kind_name(CardKind k);

struct Card {
    int index = 0;      // 1-based position in the deck
    std::string text;   // verbatim, without the newline
    CardKind kind = CardKind::Blank;
};

// Pure function of the card text:
//   "//..."            -> Jcl
//   all blank          -> Blank
//   "C" or "C ..."     -> Comment
//   "*LOCAL.../FILES..."-> Control
//   "*..."             -> UnitStart
//   first non-blank "'/" -> Data
//   anything else      -> ProgramText
CardKind classify(std::string_view text);

// One line of a unit's program source plus where it came from.
struct SourceLine {
    int card = 0;        // deck card number
    int col_offset = 0;  // add to a 1-based source column to get the card column
    std::string text;
};

struct DataValue {
    double value = 0;
    int card = 0;
};

struct ProgramUnit {
    std::vector<Card> header;    // comment/JCL/control/blank cards before the unit
    std::vector<Card> interior;  // such cards appearing inside the unit's range
    std::vector<SourceLine> lines;
    std::vector<DataValue> data;
    int first_card = 0;  // first card of the unit's range (header included)
    int last_card = 0;   // last program or data card

    std::string source() const;            // lines joined with '\n'
    Pos map_pos(Pos source_pos) const;     // (line,col) in source -> (card,col) in deck
    std::vector<double> input() const;
};

struct Deck {
    std::vector<Card> cards;
    bool final_newline = true;
    std::vector<ProgramUnit> units;
    std::vector<int> loose;  // cards outside every unit range (edges of the deck)
};

// Line splitting + classification. Raises E12 for cards over 80 columns.
std::vector<Card> read_deck(std::string_view text, bool* final_newline = nullptr);

// Groups cards into program units. Raises E12 for data/program text before any
// unit or program text after a unit's data cards, E10/E07 for bad data cards.
Deck split_units(std::vector<Card> cards, bool final_newline);

Deck read_job(std::string_view text);

// Byte-lossless reconstruction of the deck text from the card echoes.
std::string echo(const Deck& deck);

}  // namespace rec

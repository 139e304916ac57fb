#include "card.hpp"

#include <cmath>
#include <cstdlib>

namespace rec {

const char* card_kind_name(CardKind k) {
    switch (k) {
        case CardKind::Jcl: return "JCL";
        case CardKind::Control: return "CONTROL";
        case CardKind::Comment: return "COMMENT";
        case CardKind::UnitStart: return "UNIT_START";
        case CardKind::ProgramText: return "PROGRAM_TEXT";
        case CardKind::Data: return "DATA";
        case CardKind::Blank: return "BLANK";
    }
    return "?";
}

CardKind classify(std::string_view t) {
    if (t.size() >= 2 && t[0] == '/' && t[1] == '/') return CardKind::Jcl;
    size_t nb = t.find_first_not_of(' ');
    if (nb == std::string_view::npos) return CardKind::Blank;
    if (t[0] == 'C' && (t.size() == 1 || t[1] == ' ')) return CardKind::Comment;
    if (t[0] == '*') {
        std::string_view rest = t.substr(1);
        if (rest.rfind("LOCAL", 0) == 0 || rest.rfind("FILES", 0) == 0)
            return CardKind::Control;
        return CardKind::UnitStart;
    }
    if (t.size() - nb >= 2 && t[nb] == '\'' && t[nb + 1] == '/') return CardKind::Data;
    return CardKind::ProgramText;
}

std::vector<Card> read_deck(std::string_view text, bool* final_newline) {
    std::vector<Card> cards;
    bool ends_nl = !text.empty() && text.back() == '\n';
    if (final_newline) *final_newline = text.empty() ? true : ends_nl;

    size_t start = 0;
    int index = 1;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        if (line.size() > kCardWidth)
            fail(Code::CardFormat, Phase::Lex, Pos{index, static_cast<int>(kCardWidth) + 1});
        Card c;
        c.index = index++;
        c.text = std::string(line);
        c.kind = classify(line);
        cards.push_back(std::move(c));
        if (nl == std::string_view::npos) break;
        start = nl + 1;  // a trailing newline does not open an extra card
    }
    return cards;
}

namespace {

// Data cards carry exactly one '/number' constant, optionally surrounded by
// blanks. Missing closing quote -> E10, bad number -> E07, extra junk -> E12.
DataValue parse_data_card(const Card& card) {
    const std::string& t = card.text;
    size_t q = t.find('\'');
    int qcol = static_cast<int>(q) + 1;
    size_t close = t.find('\'', q + 2);
    if (close == std::string::npos)
        fail(Code::UnterminatedQuote, Phase::Lex, Pos{card.index, qcol});
    std::string body = t.substr(q + 2, close - q - 2);
    while (!body.empty() && body.back() == ' ') body.pop_back();
    const char* cs = body.c_str();
    char* end = nullptr;
    double v = std::strtod(cs, &end);
    if (end == cs || *end != '\0' || !std::isfinite(v))
        fail(Code::BadConstant, Phase::Lex, Pos{card.index, qcol});
    if (t.find_first_not_of(' ', close + 1) != std::string::npos)
        fail(Code::CardFormat, Phase::Lex, Pos{card.index, static_cast<int>(close) + 2});
    return DataValue{v, card.index};
}

}  // namespace

std::string ProgramUnit::source() const {
    std::string s;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (i) s.push_back('\n');
        s += lines[i].text;
    }
    return s;
}

Pos ProgramUnit::map_pos(Pos p) const {
    if (!p.known() || lines.empty()) return p;
    size_t li = static_cast<size_t>(p.card - 1);
    if (li >= lines.size()) li = lines.size() - 1;
    return Pos{lines[li].card, p.col + lines[li].col_offset};
}

std::vector<double> ProgramUnit::input() const {
    std::vector<double> v;
    v.reserve(data.size());
    for (const auto& d : data) v.push_back(d.value);
    return v;
}

Deck split_units(std::vector<Card> cards, bool final_newline) {
    Deck deck;
    deck.cards = std::move(cards);
    deck.final_newline = final_newline;

    std::vector<Card> pending;
    ProgramUnit* cur = nullptr;

    for (const Card& card : deck.cards) {
        switch (card.kind) {
            case CardKind::Jcl:
            case CardKind::Control:
            case CardKind::Comment:
            case CardKind::Blank:
                pending.push_back(card);
                break;

            case CardKind::UnitStart: {
                deck.units.emplace_back();
                cur = &deck.units.back();
                cur->header = std::move(pending);
                pending.clear();
                cur->first_card = cur->header.empty() ? card.index : cur->header.front().index;
                cur->last_card = card.index;
                std::string body = card.text.substr(1);
                if (body.find_first_not_of(' ') != std::string::npos)
                    cur->lines.push_back(SourceLine{card.index, 1, body});
                break;
            }

            case CardKind::ProgramText: {
                if (!cur) fail(Code::CardFormat, Phase::Lex, Pos{card.index, 1});
                if (!cur->data.empty())
                    fail(Code::CardFormat, Phase::Lex, Pos{card.index, 1});
                // comment cards may interrupt a unit's program cards
                for (auto& p : pending) cur->interior.push_back(std::move(p));
                pending.clear();
                cur->lines.push_back(SourceLine{card.index, 0, card.text});
                cur->last_card = card.index;
                break;
            }

            case CardKind::Data: {
                if (!cur) fail(Code::CardFormat, Phase::Lex, Pos{card.index, 1});
                for (auto& p : pending) cur->interior.push_back(std::move(p));
                pending.clear();
                cur->data.push_back(parse_data_card(card));
                cur->last_card = card.index;
                break;
            }
        }
    }
    for (const Card& p : pending) deck.loose.push_back(p.index);
    return deck;
}

Deck read_job(std::string_view text) {
    bool nl = true;
    auto cards = read_deck(text, &nl);
    return split_units(std::move(cards), nl);
}

std::string echo(const Deck& deck) {
    std::string out;
    for (size_t i = 0; i < deck.cards.size(); ++i) {
        out += deck.cards[i].text;
        if (i + 1 < deck.cards.size() || deck.final_newline) out.push_back('\n');
    }
    return out;
}

}  // namespace rec

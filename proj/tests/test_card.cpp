#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "card.hpp"
#include "doctest.h"

using namespace rec;

#ifndef REC_CORPUS_DIR
#define REC_CORPUS_DIR "corpus"
#endif

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Code code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const RecFault& e) {
        return e.err.code;
    }
    return Code::None;
}

}  // namespace

TEST_CASE("card classification") {
    CHECK(classify("// JOB REC") == CardKind::Jcl);
    CHECK(classify("//") == CardKind::Jcl);
    CHECK(classify("") == CardKind::Blank);
    CHECK(classify("    ") == CardKind::Blank);
    CHECK(classify("C A COMMENT") == CardKind::Comment);
    CHECK(classify("C") == CardKind::Comment);
    CHECK(classify("CX") == CardKind::ProgramText);  // no blank after C
    CHECK(classify("*LOCALREC,RECCA") == CardKind::Control);
    CHECK(classify("*FILES(1,RECAT)") == CardKind::Control);
    CHECK(classify("* ('/2''/2'+OX,)") == CardKind::UnitStart);
    CHECK(classify("*") == CardKind::UnitStart);
    CHECK(classify("'/10'") == CardKind::Data);
    CHECK(classify("   '/ -3.5'  ") == CardKind::Data);
    CHECK(classify("(IO,)") == CardKind::ProgramText);
    CHECK(classify("N''EL 2DO ES MAYOR',)") == CardKind::ProgramText);
    CHECK(classify("''X' ,") == CardKind::ProgramText);  // quote not followed by /
}

TEST_CASE("read_deck splits lines and keeps the trailing-newline fact") {
    bool nl = false;
    auto cards = read_deck("A\nB\n", &nl);
    CHECK(cards.size() == 2);
    CHECK(nl);
    cards = read_deck("A\nB", &nl);
    CHECK(cards.size() == 2);
    CHECK_FALSE(nl);
    cards = read_deck("A\n\nB\n", &nl);
    REQUIRE(cards.size() == 3);
    CHECK(cards[1].kind == CardKind::Blank);
    CHECK(cards[2].index == 3);
    CHECK(read_deck("", &nl).empty());
}

TEST_CASE("cards over eighty columns raise E12 at column 81") {
    std::string long_line(81, 'X');
    try {
        read_deck("OK\n" + long_line + "\n");
        FAIL("expected a fault");
    } catch (const RecFault& f) {
        CHECK(f.err.code == Code::CardFormat);
        CHECK(f.err.pos == Pos{2, 81});
    }
    CHECK_NOTHROW(read_deck(std::string(80, 'X')));
}

TEST_CASE("echo reproduces the deck byte for byte") {
    for (std::string text : {std::string("* (0,)\n'/1'\n"), std::string("* (0,)"),
                             std::string("C\n\n* (0,)\n"), std::string("")}) {
        CHECK(echo(read_job(text)) == text);
    }
    std::string corpus = slurp(std::string(REC_CORPUS_DIR) + "/rec.job");
    CHECK(echo(read_job(corpus)) == corpus);
}

TEST_CASE("split_units partitions a small deck") {
    Deck deck = read_job(
        "// JOB\n"
        "C FIRST\n"
        "* (I\n"
        "O,)\n"
        "'/2'\n"
        "\n"
        "C SECOND\n"
        "* ('/1'O,)\n");
    REQUIRE(deck.units.size() == 2);
    const ProgramUnit& u1 = deck.units[0];
    CHECK(u1.header.size() == 2);
    CHECK(u1.first_card == 1);
    CHECK(u1.last_card == 5);
    REQUIRE(u1.lines.size() == 2);
    CHECK(u1.lines[0].text == " (I");
    CHECK(u1.lines[0].col_offset == 1);
    CHECK(u1.lines[1].text == "O,)");
    CHECK(u1.lines[1].col_offset == 0);
    CHECK(u1.source() == " (I\nO,)");
    REQUIRE(u1.data.size() == 1);
    CHECK(u1.data[0].value == 2.0);
    CHECK(u1.data[0].card == 5);
    CHECK(u1.input() == std::vector<double>{2.0});

    const ProgramUnit& u2 = deck.units[1];
    CHECK(u2.header.size() == 2);  // blank + comment
    CHECK(u2.first_card == 6);
    CHECK(u2.last_card == 8);
    CHECK(deck.loose.empty());
}

TEST_CASE("comment cards may interrupt a unit") {
    Deck deck = read_job(
        "* (I\n"
        "C INTERLUDE\n"
        "O,)\n"
        "'/1'\n");
    REQUIRE(deck.units.size() == 1);
    CHECK(deck.units[0].interior.size() == 1);
    CHECK(deck.units[0].lines.size() == 2);
    CHECK(deck.units[0].source() == " (I\nO,)");
}

TEST_CASE("trailing unattached cards are loose") {
    Deck deck = read_job("* (0,)\nC TAIL\n\n");
    REQUIRE(deck.units.size() == 1);
    CHECK(deck.loose == std::vector<int>{2, 3});
}

TEST_CASE("deck structure errors") {
    CHECK(code_of([] { read_job("(IO,)\n"); }) == Code::CardFormat);
    CHECK(code_of([] { read_job("'/1'\n* (I,)\n"); }) == Code::CardFormat);
    CHECK(code_of([] { read_job("* (I,)\n'/1'\n(O,)\n"); }) == Code::CardFormat);
    CHECK(code_of([] { read_job("* (I,)\n'/1\n"); }) == Code::UnterminatedQuote);
    CHECK(code_of([] { read_job("* (I,)\n'/X'\n"); }) == Code::BadConstant);
    CHECK(code_of([] { read_job("* (I,)\n'/1' junk\n"); }) == Code::CardFormat);
}

TEST_CASE("data cards accept blanks around the constant") {
    Deck deck = read_job("* (I,)\n   '/ -2.5e1'   \n");
    REQUIRE(deck.units[0].data.size() == 1);
    CHECK(deck.units[0].data[0].value == -25.0);
}

TEST_CASE("map_pos turns source positions into deck positions") {
    Deck deck = read_job("C X\n* (I\nO,)\n");
    const ProgramUnit& u = deck.units[0];
    CHECK(u.map_pos(Pos{1, 2}) == Pos{2, 3});  // on the * card, shifted by one
    CHECK(u.map_pos(Pos{2, 1}) == Pos{3, 1});
    CHECK(u.map_pos(Pos{0, 0}) == Pos{0, 0});  // unknown stays unknown
}

TEST_CASE("the committed corpus deck has eleven units and no stray cards") {
    Deck deck = read_job(slurp(std::string(REC_CORPUS_DIR) + "/rec.job"));
    CHECK(deck.units.size() == 11);
    CHECK(deck.loose.empty());
    CHECK(deck.units[2].data.size() == 3);   // simpson reads three numbers
    CHECK(deck.units[6].data.size() == 1);   // factorial argument
    for (const ProgramUnit& u : deck.units) CHECK_FALSE(u.header.empty());
}

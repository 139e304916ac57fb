#include <random>
#include <string>
#include <vector>

#include "card.hpp"
#include "compiler.hpp"
#include "doctest.h"
#include "fuzz_gen.hpp"
#include "vm.hpp"

using namespace rec;

TEST_CASE("500 generated programs survive the canonical round trip") {
    fuzz::Generator gen(20250814);
    for (int i = 0; i < 500; ++i) {
        std::string src = gen.unit();
        CAPTURE(src);
        Program p1 = compile(src);
        Program p2 = compile(p1.source);
        REQUIRE(p1.code == p2.code);
        REQUIRE(p1.source == p2.source);
        REQUIRE(p1.texts == p2.texts);
        REQUIRE(p1.subs == p2.subs);
        REQUIRE(p1.counters == p2.counters);
    }
}

TEST_CASE("500 mutated programs never escape the error catalog") {
    fuzz::Generator gen(987654321);
    std::mt19937 rng(42);
    VmConfig cfg;
    cfg.step_budget = 20000;
    cfg.depth_limit = 64;
    int compiled = 0, faulted = 0;
    for (int i = 0; i < 500; ++i) {
        std::string src = fuzz::mutate(gen.unit(), rng);
        CAPTURE(src);
        try {
            Program p = compile(src);
            ++compiled;
            RunResult r = run(p, {1.0, 2.0}, cfg);
            if (r.status == Status::Error) {
                int c = static_cast<int>(r.error.code);
                REQUIRE(c >= 1);
                REQUIRE(c <= 12);
            }
        } catch (const RecFault& f) {
            ++faulted;
            int c = static_cast<int>(f.err.code);
            REQUIRE(c >= 1);
            REQUIRE(c <= 12);
            REQUIRE_FALSE(std::string(code_text(f.err.code)).empty());
        }
        // anything else (std::exception, crash) fails the test run itself
    }
    // sanity: the mutator actually produced both kinds
    CHECK(compiled > 0);
    CHECK(faulted > 0);
}

TEST_CASE("mutated decks fail the same way") {
    std::mt19937 rng(7);
    const std::string base = "C T\n* (IO,)\n'/1'\n\n* ('/2''/2'+OX,)\n";
    int ok = 0, faulted = 0;
    for (int i = 0; i < 200; ++i) {
        std::string deck = fuzz::mutate(base, rng);
        try {
            Deck d = read_job(deck);
            (void)d;
            ++ok;
        } catch (const RecFault& f) {
            ++faulted;
            int c = static_cast<int>(f.err.code);
            REQUIRE(c >= 1);
            REQUIRE(c <= 12);
        }
    }
    CHECK(ok + faulted == 200);
}

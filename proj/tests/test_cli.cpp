#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef REC_CLI_BIN
#error "REC_CLI_BIN must point at the rec executable"
#endif
#ifndef REC_CORPUS_DIR
#error "REC_CORPUS_DIR must point at the corpus directory"
#endif

namespace {

struct Result {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

Result sh(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return Result{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kBin = REC_CLI_BIN;
const std::string kCorpus = REC_CORPUS_DIR;

}  // namespace

TEST_CASE("run prints the listing and exits 0 on a clean deck") {
    Result r = sh(kBin + " run " + kCorpus + "/rec.job");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(kCorpus + "/golden/rec.lst"));
}

TEST_CASE("run is reproducible") {
    Result a = sh(kBin + " run " + kCorpus + "/rec.job");
    Result b = sh(kBin + " run " + kCorpus + "/rec.job");
    CHECK(a.output == b.output);
}

TEST_CASE("run exits 1 when a unit errors, 2 when the deck is malformed") {
    Result unit_err = sh("printf '* (L,)\\n' | " + kBin + " run -");
    CHECK(unit_err.exit_code == 1);
    CHECK(unit_err.output.find("*** REC ERROR E01 STACK UNDERFLOW") != std::string::npos);
    CHECK(unit_err.output.find("STATUS ERROR E01") != std::string::npos);

    Result deck_err = sh("printf '(L,)\\n' | " + kBin + " run -");
    CHECK(deck_err.exit_code == 2);
    CHECK(deck_err.output.find("*** REC ERROR E12 CARD FORMAT") != std::string::npos);
}

TEST_CASE("run writes the listing to a file with -o") {
    std::string tmp = "cli_listing.tmp";
    Result r = sh(kBin + " run " + kCorpus + "/rec.job -o " + tmp);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    CHECK(slurp(tmp) == slurp(kCorpus + "/golden/rec.lst"));
    std::remove(tmp.c_str());
}

TEST_CASE("eval runs a bare program with an input list") {
    Result r = sh("printf \"(II+OX,)\" | " + kBin + " eval - --input '10 2' --status");
    CHECK(r.exit_code == 0);
    CHECK(r.output == " 1.20000E 01\nSTATUS TRUE\n");

    Result f = sh(kBin + " eval " + kCorpus + "/factorial.rec --input 4");
    CHECK(f.exit_code == 0);
    CHECK(f.output == "EL FACTORIAL DE  4.00000E 00 ES:  2.40000E 01\n");
}

TEST_CASE("eval exit codes distinguish compile from run failures") {
    Result compile_err = sh("printf '((' | " + kBin + " eval -");
    CHECK(compile_err.exit_code == 2);
    CHECK(compile_err.output.find("E06 UNBALANCED PARENTHESES") != std::string::npos);

    Result run_err = sh("printf '(I,)' | " + kBin + " eval -");
    CHECK(run_err.exit_code == 1);
    CHECK(run_err.output.find("E02 INPUT EXHAUSTED") != std::string::npos);
}

TEST_CASE("eval --trace emits one line per step") {
    Result r = sh("printf \"('/2''/2'+OX,)\" | " + kBin + " eval - --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("CONST") != std::string::npos);
    CHECK(r.output.find("EXIT_FALSE") != std::string::npos);
}

TEST_CASE("dump disassembles") {
    Result r = sh(kBin + " dump " + kCorpus + "/factorial.rec");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("subroutines: F=0") != std::string::npos);
    CHECK(r.output.find("CALL") != std::string::npos);
}

TEST_CASE("the repl evaluates lines and honors continuation") {
    Result r = sh("printf \"('/2''/2'+OX,)\\n\" | " + kBin + " repl");
    CHECK(r.exit_code == 0);
    CHECK(r.output == " 4.00000E 00\nSTATUS TRUE\n");

    Result multi = sh("printf \"('/1'O\\n,)\\n:quit\\n\" | " + kBin + " repl");
    CHECK(multi.exit_code == 0);
    CHECK(multi.output == " 1.00000E 00\nSTATUS TRUE\n");

    Result cmds = sh("printf ':input 5\\n(IO,)\\n' | " + kBin + " repl");
    CHECK(cmds.output == " 5.00000E 00\nSTATUS TRUE\n");
}

TEST_CASE("corpus subcommand compares against the golden listings") {
    Result r = sh(kBin + " corpus " + kCorpus);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ok rec.job") != std::string::npos);
}

TEST_CASE("usage problems exit 3") {
    CHECK(sh(kBin).exit_code == 3);
    CHECK(sh(kBin + " bogus").exit_code == 3);
    CHECK(sh(kBin + " eval /nonexistent.rec").exit_code == 3);
    CHECK(sh(kBin + " --version").exit_code == 0);
}

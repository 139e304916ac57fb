// rec: card-deck runner, single-program evaluator, disassembler and REPL.
// Everything goes through the public C interface in rec/rec.h.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rec/rec.h"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::istringstream ss(text);
    while (ss >> item) {
        if (!item.empty() && item.back() == ',') item.pop_back();
        if (item.empty()) continue;
        char* end = nullptr;
        double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            throw std::runtime_error("bad number in input list: " + item);
        out.push_back(v);
    }
    return out;
}

std::string render(const rec_error_info& err) {
    char buf[128];
    rec_error_render(&err, buf, sizeof buf);
    return buf;
}

// Paren depth outside quoted text, for REPL line continuation. Quotes do not
// span lines, so an open quote simply ends the scan.
int paren_depth(const std::string& line, int depth) {
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '\'') {
            if (i + 1 >= line.size()) break;
            char k = line[i + 1];
            if (k == '/' || k == '\'') {
                size_t close = line.find('\'', i + 2);
                if (close == std::string::npos) break;
                i = close;
            } else {
                ++i;  // one-letter call
            }
        } else if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
    }
    return depth;
}

struct VmFlags {
    long long steps = 0;
    int depth = 0;
    bool f32 = false;
    std::string input;

    void attach(CLI::App* cmd) {
        cmd->add_option("--steps", steps, "step budget before E11");
        cmd->add_option("--depth", depth, "frame depth before E09");
        cmd->add_flag("--f32", f32, "round every value through float");
        cmd->add_option("--input", input,
                        "numbers replacing the data cards / input queue");
    }

    rec_options options(std::vector<double>& override_storage) const {
        rec_options opt;
        rec_options_init(&opt);
        if (steps > 0) opt.step_budget = steps;
        if (depth > 0) opt.depth_limit = depth;
        opt.single_precision = f32 ? 1 : 0;
        if (!input.empty()) {
            override_storage = parse_numbers(input);
            opt.input_override = override_storage.data();
            opt.input_override_len = override_storage.size();
        }
        return opt;
    }
};

int cmd_run(const std::string& deck_path, const VmFlags& flags,
            const std::string& listing_path, bool trace) {
    std::string deck = read_file(deck_path);
    std::vector<double> override_storage;
    rec_options opt = flags.options(override_storage);
    rec_error_info err;
    rec_job* job = rec_job_run(deck.c_str(), &opt, trace ? 1 : 0, &err);
    if (!job) {
        std::cerr << render(err) << "\n";
        return 2;
    }
    const char* listing = rec_job_listing(job);
    if (listing_path.empty()) {
        std::cout << listing;
    } else {
        std::ofstream out(listing_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << listing_path << "\n";
            rec_job_free(job);
            return 3;
        }
        out << listing;
    }
    int rc = 0;
    for (size_t i = 0; i < rec_job_unit_count(job); ++i) {
        if (rec_job_unit_status(job, i) == REC_ERROR) rc = 1;
        if (trace) {
            std::cerr << "unit " << i + 1 << ":\n"
                      << rec_job_unit_trace(job, i);
        }
    }
    rec_job_free(job);
    return rc;
}

int run_source(const std::string& source, const std::vector<double>& input,
               const rec_options& opt, bool trace, bool status_line) {
    rec_error_info err;
    rec_program* prog = rec_compile(source.c_str(), &err);
    if (!prog) {
        std::cerr << render(err) << "\n";
        return 2;
    }
    rec_result* res =
        rec_run(prog, input.data(), input.size(), &opt, trace ? 1 : 0);
    rec_program_free(prog);
    for (size_t i = 0; i < rec_result_output_count(res); ++i)
        std::cout << rec_result_output_line(res, i) << "\n";
    if (trace) std::cerr << rec_result_trace(res);
    int rc = 0;
    int st = rec_result_status(res);
    if (st == REC_ERROR) {
        rec_result_error(res, &err);
        std::cerr << render(err) << "\n";
        if (status_line)
            std::cout << "STATUS ERROR E" << (err.code < 10 ? "0" : "")
                      << err.code << "\n";
        rc = 1;
    } else if (status_line) {
        std::cout << (st == REC_TRUE ? "STATUS TRUE" : "STATUS FALSE") << "\n";
    }
    rec_result_free(res);
    return rc;
}

int cmd_eval(const std::string& path, const VmFlags& flags, bool trace,
             bool status_line) {
    std::string source = read_file(path);
    std::vector<double> input;
    if (!flags.input.empty()) input = parse_numbers(flags.input);
    std::vector<double> unused;
    rec_options opt = flags.options(unused);
    opt.input_override = nullptr;
    opt.input_override_len = 0;
    return run_source(source, input, opt, trace, status_line);
}

int cmd_dump(const std::string& path) {
    std::string source = read_file(path);
    rec_error_info err;
    rec_program* prog = rec_compile(source.c_str(), &err);
    if (!prog) {
        std::cerr << render(err) << "\n";
        return 2;
    }
    char* text = rec_program_dump(prog);
    std::cout << text;
    rec_text_free(text);
    rec_program_free(prog);
    return 0;
}

int cmd_repl(const VmFlags& flags) {
    bool tty = isatty(fileno(stdin)) != 0;
    bool trace = false;
    std::vector<double> input;
    if (!flags.input.empty()) input = parse_numbers(flags.input);
    std::vector<double> unused;
    rec_options opt = flags.options(unused);
    opt.input_override = nullptr;
    opt.input_override_len = 0;

    if (tty)
        std::cout << "rec " << rec_version()
                  << "  (:quit leaves, :trace on|off, :input n n ...)\n";
    std::string line;
    while (true) {
        if (tty) std::cout << "rec> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line.empty()) continue;
        if (line[0] == ':') {
            std::istringstream ss(line.substr(1));
            std::string cmd, arg;
            ss >> cmd;
            if (cmd == "quit" || cmd == "q") break;
            if (cmd == "trace") {
                ss >> arg;
                trace = arg != "off";
            } else if (cmd == "input") {
                std::string rest;
                std::getline(ss, rest);
                try {
                    input = parse_numbers(rest);
                } catch (const std::exception& e) {
                    std::cerr << e.what() << "\n";
                }
            } else {
                std::cerr << "unknown command :" << cmd << "\n";
            }
            continue;
        }
        std::string source = line;
        int depth = paren_depth(line, 0);
        while (depth > 0) {
            if (tty) std::cout << "...> " << std::flush;
            if (!std::getline(std::cin, line)) break;
            source += '\n';
            source += line;
            depth = paren_depth(line, depth);
        }
        run_source(source, input, opt, trace, true);
    }
    return 0;
}

int cmd_corpus(const std::string& dir, bool update) {
    std::vector<fs::path> jobs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".job") jobs.push_back(entry.path());
    std::sort(jobs.begin(), jobs.end());
    if (jobs.empty()) {
        std::cerr << "no .job files under " << dir << "\n";
        return 3;
    }
    int rc = 0;
    for (const fs::path& path : jobs) {
        std::string deck = read_file(path.string());
        rec_error_info err;
        rec_job* job = rec_job_run(deck.c_str(), nullptr, 0, &err);
        if (!job) {
            std::cerr << path.filename().string() << ": " << render(err)
                      << "\n";
            return 2;
        }
        std::string listing = rec_job_listing(job);
        rec_job_free(job);
        fs::path golden = path.parent_path() / "golden" /
                          (path.stem().string() + ".lst");
        if (update) {
            fs::create_directories(golden.parent_path());
            std::ofstream out(golden, std::ios::binary);
            out << listing;
            std::cout << "wrote " << golden.string() << "\n";
            continue;
        }
        std::string want;
        try {
            want = read_file(golden.string());
        } catch (const std::exception&) {
            std::cout << "MISSING " << golden.string() << "\n";
            rc = 1;
            continue;
        }
        if (want == listing) {
            std::cout << "ok " << path.filename().string() << "\n";
        } else {
            std::cout << "DIFF " << path.filename().string() << "\n";
            rc = 1;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"REC/A card-deck compiler and runner"};
    app.require_subcommand(1);
    app.set_version_flag("--version", rec_version());

    std::string deck_path, source_path, listing_path;
    std::string corpus_dir = "corpus";
    bool trace = false, status_line = false, update = false;
    VmFlags flags;

    CLI::App* c_run = app.add_subcommand("run", "run a card deck, print the listing");
    c_run->add_option("deck", deck_path, "job deck file (- for stdin)")->required();
    c_run->add_option("-o,--listing", listing_path, "write the listing here instead of stdout");
    c_run->add_flag("--trace", trace, "step trace per unit on stderr");
    flags.attach(c_run);

    CLI::App* c_eval = app.add_subcommand("eval", "compile and run one bare program");
    c_eval->add_option("source", source_path, "program file (- for stdin)")->required();
    c_eval->add_flag("--trace", trace, "step trace on stderr");
    c_eval->add_flag("--status", status_line, "append the STATUS footer");
    flags.attach(c_eval);

    CLI::App* c_dump = app.add_subcommand("dump", "disassemble one bare program");
    c_dump->add_option("source", source_path, "program file (- for stdin)")->required();

    CLI::App* c_repl = app.add_subcommand("repl", "interactive line-at-a-time session");
    flags.attach(c_repl);

    CLI::App* c_corpus = app.add_subcommand("corpus", "run every .job and compare against golden listings");
    c_corpus->add_option("dir", corpus_dir, "corpus directory");
    c_corpus->add_flag("--update", update, "rewrite the golden listings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (c_run->parsed()) return cmd_run(deck_path, flags, listing_path, trace);
        if (c_eval->parsed()) return cmd_eval(source_path, flags, trace, status_line);
        if (c_dump->parsed()) return cmd_dump(source_path);
        if (c_repl->parsed()) return cmd_repl(flags);
        if (c_corpus->parsed()) return cmd_corpus(corpus_dir, update);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 3;
}

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "linideal.h"

namespace {

struct Freed {
    char* p = nullptr;
    ~Freed() { li_string_free(p); }
};

int fail(const std::string& msg, int status) {
    std::cerr << "linideal: " << msg << "\n";
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linearization of germ families on monomial ideals"};
    app.set_version_flag("--version", std::string(li_version()));

    std::string job_path, out_path, mode, strategy, b;
    int precision = 0, degree = 0, depth = 0, threads = 1;
    bool strict = false, normalform = false, summary = false;

    app.add_option("job", job_path, "JSON job file")->required();
    app.add_option("--mode", mode, "exact or float");
    app.add_option("--precision", precision, "float precision in bits");
    app.add_option("--degree", degree, "truncation degree N");
    app.add_option("--depth", depth, "divisor depth K");
    app.add_option("--b", b, "majorant geometric base (rational)");
    app.add_flag("--strict", strict, "fail on the first obstruction");
    app.add_flag("--normalform", normalform, "absorb obstructions into the normal form");
    app.add_option("--out", out_path, "write the JSON report to this path");
    app.add_flag("--summary", summary, "print a human-readable digest");
    app.add_option("--threads", threads, "worker thread count")->check(CLI::Range(1, 64));
    CLI11_PARSE(app, argc, argv);

    if (strict && normalform) return fail("--strict and --normalform are exclusive", 4);

    std::ifstream in(job_path);
    if (!in) return fail("cannot open " + job_path, 4);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    li_set_threads(threads);

    li_job* job = nullptr;
    {
        Freed err;
        int st = li_job_parse(text.c_str(), &job, &err.p);
        if (st != 0) return fail(err.p != nullptr ? err.p : "parse failed", st);
    }

    auto apply = [&](const char* key, const std::string& value) {
        Freed err;
        int st = li_job_override(job, key, value.c_str(), &err.p);
        if (st != 0) {
            li_job_free(job);
            std::exit(fail(err.p != nullptr ? err.p : "bad override", st));
        }
    };
    if (!mode.empty()) apply("mode", mode);
    if (precision > 0) apply("precision", std::to_string(precision));
    if (degree > 0) apply("degree", std::to_string(degree));
    if (depth > 0) apply("depth", std::to_string(depth));
    if (!b.empty()) apply("b", b);
    if (strict) apply("strategy", "strict");
    if (normalform) apply("strategy", "normalform");

    Freed report, digest;
    int status = li_job_run(job, &report.p, &digest.p);
    li_job_free(job);

    if (report.p != nullptr) {
        if (out_path.empty()) {
            std::cout << report.p;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) return fail("cannot write " + out_path, 4);
            out << report.p;
        }
    }
    if (summary && digest.p != nullptr) std::cerr << digest.p;
    return status;
}

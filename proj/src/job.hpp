#ifndef LINIDEAL_JOB_HPP
#define LINIDEAL_JOB_HPP

#include <string>
#include <vector>

#include "report.hpp"

namespace linideal {

// Declarative job: one command over one input family / ideal / involution
// list, parsed from a JSON document. The raw document is kept for the
// provenance echo in the report.
struct JobSpec {
    std::string command;  // analyze | smalldiv | linearize | straighten
    Mode mode = Mode::exact;
    mpfr_prec_t precision = 128;
    int n = 0;
    uint32_t N = 0;   // truncation degree
    int K = 5;        // divisor depth
    LinMode strategy = LinMode::strict;
    mpq_class b = 1;  // majorant geometric base
    std::vector<PolyMap> family;
    MonomialIdeal ideal{0};
    std::vector<AntiInvolution> involutions;
    Json raw;
};

// Throws ParseError on malformed documents.
JobSpec parse_job(const std::string& text);

// Applies a CLI-style override (mode, precision, degree, depth, strategy)
// by re-parsing the amended document. Throws ParseError on unknown keys.
JobSpec override_job(const JobSpec& spec, const std::string& key, const std::string& value);

struct JobResult {
    int status = 0;  // 0 ok, 2 hypothesis, 3 obstruction, 4 input, 5 internal
    std::string report;   // JSON document, always produced
    std::string summary;  // human-readable digest
};

JobResult run_job(const JobSpec& spec);

int status_of(ErrorKind k);

} // namespace linideal

#endif

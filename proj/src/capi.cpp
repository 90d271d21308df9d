#include "linideal.h"

#include <cstdlib>
#include <cstring>

#include "job.hpp"
#include "runtime.hpp"

struct li_job {
    linideal::JobSpec spec;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void put_error(char** slot, const std::string& msg) {
    if (slot != nullptr) *slot = dup_string(msg);
}

} // namespace

extern "C" {

int li_job_parse(const char* text, li_job** out, char** error_message) {
    if (text == nullptr || out == nullptr) {
        put_error(error_message, "null argument");
        return 4;
    }
    *out = nullptr;
    try {
        auto* job = new li_job{linideal::parse_job(text)};
        *out = job;
        return 0;
    } catch (const linideal::Error& e) {
        put_error(error_message, e.what());
        return linideal::status_of(e.kind());
    } catch (const std::exception& e) {
        put_error(error_message, e.what());
        return 5;
    }
}

int li_job_override(li_job* job, const char* key, const char* value, char** error_message) {
    if (job == nullptr || key == nullptr || value == nullptr) {
        put_error(error_message, "null argument");
        return 4;
    }
    try {
        job->spec = linideal::override_job(job->spec, key, value);
        return 0;
    } catch (const linideal::Error& e) {
        put_error(error_message, e.what());
        return linideal::status_of(e.kind());
    } catch (const std::exception& e) {
        put_error(error_message, e.what());
        return 5;
    }
}

int li_job_run(li_job* job, char** report, char** summary) {
    if (job == nullptr) return 4;
    try {
        linideal::JobResult r = linideal::run_job(job->spec);
        if (report != nullptr) *report = dup_string(r.report);
        if (summary != nullptr) *summary = dup_string(r.summary);
        return r.status;
    } catch (const std::exception& e) {
        // run_job reports module errors itself; this is a last resort
        put_error(report, std::string("{\"error\":{\"status\":5}}\n"));
        put_error(summary, std::string("internal error: ") + e.what() + "\n");
        return 5;
    }
}

void li_job_free(li_job* job) { delete job; }

void li_string_free(char* s) { std::free(s); }

void li_set_threads(int threads) { linideal::set_thread_count(threads); }

const char* li_version(void) { return "linideal 1.0.0"; }

} // extern "C"

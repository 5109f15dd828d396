#include "symcoh.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "symcoh/checks.hpp"
#include "symcoh/cohomology.hpp"
#include "symcoh/pairspec.hpp"
#include "symcoh/report.hpp"

struct symcoh_pair {
    symcoh::SymmetricPair pair;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

symcoh_status fail(symcoh_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
symcoh_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SYMCOH_OK;
    } catch (const symcoh::UnboundedRegionError& e) {
        return fail(SYMCOH_ERROR_UNBOUNDED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SYMCOH_ERROR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(SYMCOH_ERROR_INTERNAL, e.what());
    }
}

symcoh::Weight lambda_from_array(const symcoh::SymmetricPair& pair, const long long* lambda,
                                 size_t len) {
    if (!lambda) throw std::invalid_argument("lambda is null");
    std::vector<symcoh::Int> values(lambda, lambda + len);
    return symcoh::lambda_from_cli(pair, values);
}

}  // namespace

extern "C" {

const char* symcoh_last_error(void) { return g_last_error.c_str(); }

void symcoh_string_free(char* s) { std::free(s); }

symcoh_status symcoh_pair_from_catalog(const char* name, int n, symcoh_pair** out) {
    return guarded([&] {
        if (!name || !out) throw std::invalid_argument("null argument");
        *out = new symcoh_pair{symcoh::catalog(name, n)};
    });
}

symcoh_status symcoh_pair_from_spec_json(const char* json_text, symcoh_pair** out) {
    return guarded([&] {
        if (!json_text || !out) throw std::invalid_argument("null argument");
        *out = new symcoh_pair{symcoh::build_pair(symcoh::parse_pair_spec(json_text))};
    });
}

symcoh_status symcoh_pair_from_file(const char* path, symcoh_pair** out) {
    return guarded([&] {
        if (!path || !out) throw std::invalid_argument("null argument");
        *out = new symcoh_pair{symcoh::load_pair_file(path)};
    });
}

symcoh_status symcoh_pair_resolve(const char* name_or_path, int n, symcoh_pair** out) {
    return guarded([&] {
        if (!name_or_path || !out) throw std::invalid_argument("null argument");
        *out = new symcoh_pair{symcoh::resolve_pair(name_or_path, n)};
    });
}

void symcoh_pair_free(symcoh_pair* pair) { delete pair; }

int symcoh_pair_restricted_rank(const symcoh_pair* pair) {
    return pair ? pair->pair.rank_restricted() : -1;
}

int symcoh_pair_ambient_rank(const symcoh_pair* pair) {
    return pair ? pair->pair.ambient_rank() : -1;
}

symcoh_status symcoh_pair_info_json(const symcoh_pair* pair, char** out_json) {
    return guarded([&] {
        if (!pair || !out_json) throw std::invalid_argument("null argument");
        *out_json = dup_string(symcoh::pair_info_json(pair->pair));
    });
}

symcoh_status symcoh_euler_json(const symcoh_pair* pair, const long long* lambda, size_t len,
                                char** out_json) {
    return guarded([&] {
        if (!pair || !out_json) throw std::invalid_argument("null argument");
        symcoh::Weight w = lambda_from_array(pair->pair, lambda, len);
        *out_json = dup_string(symcoh::euler_report_json(pair->pair, w));
    });
}

symcoh_status symcoh_cohomology_json(const symcoh_pair* pair, const long long* lambda, size_t len,
                                     int exact, char** out_json) {
    return guarded([&] {
        if (!pair || !out_json) throw std::invalid_argument("null argument");
        symcoh::Weight w = lambda_from_array(pair->pair, lambda, len);
        *out_json = dup_string(symcoh::cohomology_report_json(pair->pair, w, exact != 0));
    });
}

symcoh_status symcoh_regions_render(const symcoh_pair* pair, long long x0, long long x1,
                                    long long y0, long long y1, const char* format,
                                    char** out_text) {
    return guarded([&] {
        if (!pair || !format || !out_text) throw std::invalid_argument("null argument");
        *out_text = dup_string(symcoh::regions_render(pair->pair, x0, x1, y0, y1, format));
    });
}

symcoh_status symcoh_catalog_json(char** out_json) {
    return guarded([&] {
        if (!out_json) throw std::invalid_argument("null argument");
        *out_json = dup_string(symcoh::catalog_list_json());
    });
}

symcoh_status symcoh_check_suite(const char* suite, char** out_report, int* failures) {
    return guarded([&] {
        if (!suite || !out_report || !failures) throw std::invalid_argument("null argument");
        auto results = symcoh::run_check_suite(suite);
        std::ostringstream os;
        int failed = 0;
        for (const auto& r : results) {
            os << (r.pass ? "PASS" : "FAIL") << " " << suite << "/" << r.name << ": " << r.detail
               << "\n";
            if (!r.pass) ++failed;
        }
        *failures = failed;
        *out_report = dup_string(os.str());
    });
}

}  // extern "C"

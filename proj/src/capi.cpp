#include "shulga.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>

#include "json.hpp"

#include "shulga/construction.hpp"

using nlohmann::json;
using namespace shulga;

struct shulga_real {
    RealInput value;
};

struct shulga_result {
    DecompositionResult value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions to status codes and the thread-local
// message. fn itself returns a status for non-exceptional failures.
template <typename Fn>
shulga_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        g_last_error = e.what();
        return SHULGA_EPARSE;
    } catch (const precision_exhausted& e) {
        g_last_error = e.what();
        return SHULGA_EPRECISION;
    } catch (const audit_failure& e) {
        g_last_error = e.what();
        return SHULGA_EAUDIT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return SHULGA_EINVAL;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return SHULGA_EINVAL;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SHULGA_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SHULGA_EINTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SHULGA_EINTERNAL;
    }
}

json digits_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& d : v) out.push_back(d.get_str());
    return out;
}

json flag_json(const CheckFlag& f) { return {{"ok", f.ok}, {"witness", f.witness}}; }

json result_json(const DecompositionResult& r) {
    json out;
    out["alpha"] = format_real_input(r.alpha);
    out["b"] = digits_json(r.b);
    out["c"] = digits_json(r.c);
    out["steps"] = r.steps;
    out["terminated"] = r.terminated;
    out["stop_reason"] = to_string(r.stop_reason);
    out["beta"] = r.beta ? json(to_string(*r.beta)) : json(nullptr);
    out["gamma"] = r.gamma ? json(to_string(*r.gamma)) : json(nullptr);
    return out;
}

shulga_status emit(const json& j, char** out) {
    *out = dup_string(j.dump(2));
    return *out ? SHULGA_OK : SHULGA_EINTERNAL;
}

shulga_status emit(const std::string& s, char** out) {
    *out = dup_string(s);
    return *out ? SHULGA_OK : SHULGA_EINTERNAL;
}

}  // namespace

shulga_status shulga_real_parse(const char* text, shulga_real** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] {
        auto x = std::make_unique<shulga_real>(shulga_real{parse_real_input(text)});
        *out = x.release();
        return SHULGA_OK;
    });
}

void shulga_real_free(shulga_real* x) { delete x; }

shulga_status shulga_expand(const shulga_real* x, size_t max_digits, char** json_out) {
    if (!x || !json_out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] {
        json out;
        if (const auto* r = std::get_if<Rational>(&x->value)) {
            CFExpansion e = cf_expand(*r);
            if (max_digits && e.digits.size() > max_digits) e.digits.resize(max_digits);
            out["kind"] = "rational";
            out["a0"] = e.a0.get_str();
            out["digits"] = digits_json(e.digits);
        } else if (const auto* q = std::get_if<QuadraticIrrational>(&x->value)) {
            QIExpansion e = qi_expand(*q, max_digits ? max_digits : 40);
            out["kind"] = "quadratic";
            out["a0"] = e.a0.get_str();
            out["digits"] = digits_json(e.digits);
            out["period_start"] = e.period_start;
            out["period_length"] = e.period_length;
        } else {
            const auto& s = std::get<DigitStream>(x->value);
            out["kind"] = "digits";
            out["a0"] = s.a0.get_str();
            std::vector<Integer> digits = s.digits;
            if (max_digits && digits.size() > max_digits) digits.resize(max_digits);
            out["digits"] = digits_json(digits);
        }
        return emit(out, json_out);
    });
}

shulga_status shulga_decompose(const shulga_real* x, size_t max_steps, shulga_result** out) {
    if (!x || !out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] {
        auto r = std::make_unique<shulga_result>(shulga_result{decompose(x->value, max_steps)});
        *out = r.release();
        return SHULGA_OK;
    });
}

void shulga_result_free(shulga_result* r) { delete r; }

shulga_status shulga_result_record(const shulga_result* r, char** json_out) {
    if (!r || !json_out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] { return emit(result_json(r->value), json_out); });
}

shulga_status shulga_audit_record(const shulga_result* r, char** json_out) {
    if (!r || !json_out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] {
        AuditReport rep = audit(r->value.alpha, r->value);
        json checks;
        for (const auto& [name, flag] : rep.entries()) checks[name] = flag_json(*flag);
        json out = {{"all_ok", rep.all_ok()}, {"checks", checks}};
        return emit(out, json_out);
    });
}

shulga_status shulga_scan(unsigned long q_max, unsigned jobs, const char* csv_path,
                          char** summary_json) {
    if (!summary_json) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&]() -> shulga_status {
        std::ofstream csv;
        if (csv_path) {
            csv.open(csv_path);
            if (!csv) {
                g_last_error = std::string("cannot open ") + csv_path;
                return SHULGA_EIO;
            }
            csv << scan_csv_header() << '\n';
        }
        ScanOptions opt;
        opt.jobs = jobs ? jobs : 1;
        if (csv_path) opt.sink = [&](const ScanRecord& rec) { csv << scan_csv_row(rec) << '\n'; };
        ScanSummary s = scan(q_max, opt);
        if (csv_path && !csv.good()) {
            g_last_error = std::string("write failed for ") + csv_path;
            return SHULGA_EIO;
        }
        json trend = json::array();
        for (const auto& row : s.trend)
            trend.push_back({{"q_band", row.q_band},
                             {"max_steps", row.max_steps},
                             {"two_log2_q", row.two_log2_q}});
        json out = {{"q_max", s.q_max},
                    {"fractions", s.fractions},
                    {"max_steps", s.max_steps},
                    {"argmax", s.argmax_p.get_str() + "/" + s.argmax_q.get_str()},
                    {"c_monotone_violations", s.c_monotone_violations},
                    {"trend", trend}};
        return emit(out, summary_json);
    });
}

shulga_status shulga_construct(size_t depth, int emit_csv, char** out) {
    if (!out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] {
        ConstructionState s = construct(depth);
        if (emit_csv) {
            std::string text = construction_csv_header() + "\n";
            for (std::size_t n = 1; n <= s.size(); ++n) text += construction_csv_row(s, n) + "\n";
            return emit(text, out);
        }
        json selections = json::array();
        for (const auto& sel : s.selections)
            selections.push_back({{"c_low", sel.c_low.get_str()},
                                  {"t_low", sel.t_low.get_str()},
                                  {"c_high", sel.c_high.get_str()},
                                  {"t_high", sel.t_high.get_str()},
                                  {"taken", sel.taken}});
        json j = {{"depth", s.size()},
                  {"b", digits_json(s.b)},
                  {"c", digits_json(s.c)},
                  {"selections", selections},
                  {"window", flag_json(verify_window(s))},
                  {"nesting", flag_json(verify_nesting(s))},
                  {"bounds", flag_json(verify_growth_bounds(s))}};
        return emit(j, out);
    });
}

shulga_status shulga_enumerate(size_t depth, unsigned long b_cap, char** json_out) {
    if (!json_out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] {
        auto found = enumerate_prefixes(depth, Integer(b_cap));
        json out = json::array();
        for (const auto& p : found) out.push_back({{"b", digits_json(p.b)}, {"c", digits_json(p.c)}});
        return emit(out, json_out);
    });
}

shulga_status shulga_find_c_drop(size_t l, unsigned long q_max, char** json_out) {
    if (!json_out) {
        g_last_error = "null argument";
        return SHULGA_EINVAL;
    }
    return guarded([&] {
        auto hit = find_c_drop(l, q_max);
        json out = hit ? json({{"alpha", to_string(*hit)}, {"l", l}}) : json(nullptr);
        return emit(out, json_out);
    });
}

void shulga_string_free(char* s) { std::free(s); }

const char* shulga_last_error(void) { return g_last_error.c_str(); }

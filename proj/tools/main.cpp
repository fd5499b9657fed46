// Command-line front end. Talks to the library exclusively through the C
// interface in shulga.h; everything below is argument handling and rendering.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "shulga.h"

using nlohmann::json;

namespace {

constexpr int kExitAuditFail = 1;
constexpr int kExitUsage = 2;

int status_exit_code(shulga_status s) {
    switch (s) {
        case SHULGA_OK: return 0;
        case SHULGA_EPARSE:
        case SHULGA_EINVAL: return kExitUsage;
        default: return kExitAuditFail;
    }
}

// Terminates the process on failure; on success returns the payload and
// releases the C string.
std::string take_or_die(shulga_status s, char* payload) {
    if (s != SHULGA_OK) {
        std::cerr << "error: " << shulga_last_error() << "\n";
        std::exit(status_exit_code(s));
    }
    std::string out = payload ? payload : "";
    shulga_string_free(payload);
    return out;
}

struct RealHandle {
    shulga_real* ptr = nullptr;
    ~RealHandle() { shulga_real_free(ptr); }
};

struct ResultHandle {
    shulga_result* ptr = nullptr;
    ~ResultHandle() { shulga_result_free(ptr); }
};

RealHandle parse_or_die(const std::string& text) {
    RealHandle h;
    shulga_status s = shulga_real_parse(text.c_str(), &h.ptr);
    if (s != SHULGA_OK) {
        std::cerr << "error: " << shulga_last_error() << "\n";
        std::exit(status_exit_code(s));
    }
    return h;
}

bool want_json(const std::string& format) {
    if (format == "json") return true;
    if (format == "plain") return false;
    return !isatty(fileno(stdout));
}

std::string bracket_list(const json& a0, const json& digits) {
    std::string out = "[" + a0.get<std::string>() + ";";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ",";
        out += digits[i].get<std::string>();
    }
    return out + "]";
}

std::string digit_list(const json& digits) {
    std::string out = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ",";
        out += digits[i].get<std::string>();
    }
    return out + ")";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << "\n";
    if (!f.good()) {
        std::cerr << "error: cannot write " << out_path << "\n";
        std::exit(kExitAuditFail);
    }
}

void render_flag(std::ostream& os, const char* name, const json& flag) {
    if (flag["ok"].get<bool>())
        os << "  ok   " << name << "\n";
    else
        os << "  FAIL " << name << ": " << flag["witness"].get<std::string>() << "\n";
}

int cmd_expand(const std::string& input, std::size_t max_digits, const std::string& format) {
    RealHandle x = parse_or_die(input);
    char* payload = nullptr;
    shulga_status st = shulga_expand(x.ptr, max_digits, &payload);
    std::string text = take_or_die(st, payload);
    if (want_json(format)) {
        emit(text, "");
        return 0;
    }
    json j = json::parse(text);
    std::string line = bracket_list(j["a0"], j["digits"]);
    if (j["kind"] == "quadratic")
        line += "  period start " + std::to_string(j["period_start"].get<std::size_t>()) +
                ", length " + std::to_string(j["period_length"].get<std::size_t>());
    emit(line, "");
    return 0;
}

void render_result(std::ostream& os, const json& j) {
    os << "alpha = " << j["alpha"].get<std::string>() << "\n";
    os << "b = " << digit_list(j["b"]) << "\n";
    os << "c = " << digit_list(j["c"]) << "\n";
    os << "steps = " << j["steps"].get<std::size_t>() << ", "
       << j["stop_reason"].get<std::string>() << "\n";
    if (j["terminated"].get<bool>())
        os << "alpha = " << j["beta"].get<std::string>() << " + " << j["gamma"].get<std::string>()
           << "\n";
}

int cmd_decompose(const std::string& input, std::size_t max_steps, const std::string& format) {
    RealHandle x = parse_or_die(input);
    ResultHandle r;
    take_or_die(shulga_decompose(x.ptr, max_steps, &r.ptr), nullptr);
    char* payload = nullptr;
    shulga_status st = shulga_result_record(r.ptr, &payload);
    std::string text = take_or_die(st, payload);
    if (want_json(format)) {
        emit(text, "");
        return 0;
    }
    render_result(std::cout, json::parse(text));
    return 0;
}

int cmd_audit(const std::string& input, std::size_t max_steps, const std::string& format) {
    RealHandle x = parse_or_die(input);
    ResultHandle r;
    take_or_die(shulga_decompose(x.ptr, max_steps, &r.ptr), nullptr);
    char* payload = nullptr;
    shulga_status st = shulga_result_record(r.ptr, &payload);
    std::string record = take_or_die(st, payload);
    payload = nullptr;
    st = shulga_audit_record(r.ptr, &payload);
    std::string text = take_or_die(st, payload);
    json j = json::parse(text);
    bool ok = j["all_ok"].get<bool>();
    if (want_json(format)) {
        emit(text, "");
    } else {
        render_result(std::cout, json::parse(record));
        for (const auto& [name, flag] : j["checks"].items())
            render_flag(std::cout, name.c_str(), flag);
        std::cout << (ok ? "audit passed" : "audit FAILED") << "\n";
    }
    return ok ? 0 : kExitAuditFail;
}

int cmd_scan(unsigned long q_max, unsigned jobs, const std::string& csv_path,
             const std::string& format) {
    char* payload = nullptr;
    shulga_status s =
        shulga_scan(q_max, jobs, csv_path.empty() ? nullptr : csv_path.c_str(), &payload);
    std::string text = take_or_die(s, payload);
    if (want_json(format)) {
        emit(text, "");
        return 0;
    }
    json j = json::parse(text);
    std::cout << j["fractions"].get<std::size_t>() << " fractions with q <= "
              << j["q_max"].get<unsigned long>() << ", all audits passed\n";
    std::cout << "longest run: " << j["max_steps"].get<std::size_t>() << " steps at "
              << j["argmax"].get<std::string>() << "\n";
    std::cout << "runs with a c digit below c_1: "
              << j["c_monotone_violations"].get<std::size_t>() << "\n";
    std::cout << "q band   max steps   2*log2(q)\n";
    for (const auto& row : j["trend"]) {
        std::printf("%6lu   %9zu   %9.2f\n", row["q_band"].get<unsigned long>(),
                    row["max_steps"].get<std::size_t>(), row["two_log2_q"].get<double>());
    }
    return 0;
}

int cmd_construct(std::size_t depth, const std::string& mode, const std::string& out_path,
                  const std::string& format) {
    char* payload = nullptr;
    bool csv = mode == "csv";
    shulga_status st = shulga_construct(depth, csv ? 1 : 0, &payload);
    std::string text = take_or_die(st, payload);
    if (csv || want_json(format)) {
        emit(text, out_path);
        return 0;
    }
    json j = json::parse(text);
    std::ostringstream os;
    os << depth << " digit pairs\n";
    os << "b = " << digit_list(j["b"]) << "\n";
    os << "c = " << digit_list(j["c"]) << "\n";
    render_flag(os, "window", j["window"]);
    render_flag(os, "nesting", j["nesting"]);
    render_flag(os, "bounds", j["bounds"]);
    emit(os.str(), out_path);
    bool ok = j["window"]["ok"].get<bool>() && j["nesting"]["ok"].get<bool>() &&
              j["bounds"]["ok"].get<bool>();
    return ok ? 0 : kExitAuditFail;
}

int cmd_enumerate(std::size_t depth, unsigned long b_cap, const std::string& format) {
    char* payload = nullptr;
    shulga_status st = shulga_enumerate(depth, b_cap, &payload);
    std::string text = take_or_die(st, payload);
    if (want_json(format)) {
        emit(text, "");
        return 0;
    }
    json j = json::parse(text);
    std::cout << j.size() << " prefixes\n";
    for (const auto& p : j) std::cout << "b = " << digit_list(p["b"]) << "  c = "
                                      << digit_list(p["c"]) << "\n";
    return 0;
}

int cmd_find_c_drop(std::size_t l, unsigned long q_max, const std::string& format) {
    char* payload = nullptr;
    shulga_status st = shulga_find_c_drop(l, q_max, &payload);
    std::string text = take_or_die(st, payload);
    if (want_json(format)) {
        emit(text, "");
        return 0;
    }
    json j = json::parse(text);
    if (j.is_null())
        std::cout << "none with q <= " << q_max << "\n";
    else
        std::cout << j["alpha"].get<std::string>() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact staggered continued-fraction decomposition"};
    app.require_subcommand(1);

    std::string input, format = "auto", out_path, mode = "json", csv_path;
    std::size_t max_digits = 0, max_steps = 0, depth = 100, drop_l = 2;
    unsigned long q_max = 100, b_cap = 7;
    unsigned jobs = 1;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "plain or json (default: plain on a tty)")
            ->check(CLI::IsMember({"auto", "plain", "json"}));
    };

    auto* expand = app.add_subcommand("expand", "Continued-fraction digits of a number");
    expand->add_option("input", input, "number to expand")->required();
    expand->add_option("--max-digits", max_digits, "truncate after this many digits");
    add_format(expand);

    auto* decompose = app.add_subcommand("decompose", "Split a number into two tails");
    decompose->add_option("input", input, "number in [0,1]")->required();
    decompose->add_option("--max-steps", max_steps, "override the step cap");
    add_format(decompose);

    auto* audit = app.add_subcommand("audit", "Decompose, then re-check every invariant");
    audit->add_option("input", input, "number in [0,1]")->required();
    audit->add_option("--max-steps", max_steps, "override the step cap");
    add_format(audit);

    auto* scan = app.add_subcommand("scan", "Decompose and audit all fractions up to q-max");
    scan->add_option("--q-max", q_max, "largest denominator")->required();
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--out", csv_path, "write one CSV row per fraction here");
    add_format(scan);

    auto* construct = app.add_subcommand("construct", "Deterministic linear-digit sequence");
    construct->add_option("--depth", depth, "number of digit pairs");
    construct->add_option("--emit", mode, "json or csv payload")
        ->check(CLI::IsMember({"json", "csv"}));
    construct->add_option("--out", out_path, "write the payload to a file");
    add_format(construct);

    auto* enumerate = app.add_subcommand("enumerate", "All digit prefixes under a b-digit cap");
    enumerate->add_option("--depth", depth, "prefix length")->required();
    enumerate->add_option("--b-cap", b_cap, "largest allowed b digit")->required();
    add_format(enumerate);

    auto* drop = app.add_subcommand("find-c-drop", "First fraction whose c_l is below c_1");
    drop->add_option("--l", drop_l, "index to compare against c_1")->required();
    drop->add_option("--q-max", q_max, "largest denominator")->required();
    add_format(drop);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (expand->parsed()) return cmd_expand(input, max_digits, format);
    if (decompose->parsed()) return cmd_decompose(input, max_steps, format);
    if (audit->parsed()) return cmd_audit(input, max_steps, format);
    if (scan->parsed()) return cmd_scan(q_max, jobs, csv_path, format);
    if (construct->parsed()) return cmd_construct(depth, mode, out_path, format);
    if (enumerate->parsed()) return cmd_enumerate(depth, b_cap, format);
    if (drop->parsed()) return cmd_find_c_drop(drop_l, q_max, format);
    return kExitUsage;
}

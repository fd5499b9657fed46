// Acceptance gate. Each criterion prints exactly one pass/FAIL line; run with
// no arguments for all nine, or pass criterion numbers to run a subset. Exit
// code 0 iff every selected criterion passed.

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include "shulga/construction.hpp"

using namespace shulga;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string digit_str(const std::vector<Integer>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

bool digits_are(const DecompositionResult& r, std::vector<Integer> b, std::vector<Integer> c) {
    return r.b == b && r.c == c;
}

Verdict criterion1() {
    Rational alpha = make_rational(28244, 141973);
    DecompositionResult r = decompose(alpha);
    if (!r.terminated || !digits_are(r, {6, 27}, {30, 29}))
        return {false, "unexpected digits " + digit_str(r.b) + " " + digit_str(r.c)};
    if (*r.beta != make_rational(27, 163) || *r.gamma != make_rational(29, 871) ||
        *r.beta + *r.gamma != alpha)
        return {false, "sum is not exact"};
    if (!(r.c[1] < r.c[0])) return {false, "expected c_2 < c_1"};
    return {true, "28244/141973 = 27/163 + 29/871, c_2 < c_1"};
}

Verdict criterion2() {
    Rational pair_value = make_rational(18769, 22230);
    DecompositionResult r = decompose(pair_value);
    if (!digits_are(r, {2, 2, 3, 5}, {2, 3, 4, 8}))
        return {false, "digit pair not reproduced: " + digit_str(r.b) + " " + digit_str(r.c)};
    if (!(r.b[1] == r.b[0] && r.b[2] == 3 && r.c[1] == r.b[1] + 1))
        return {false, "tightness witnesses b_2=b_1, b_3=3, c_2=b_2+1 do not hold"};

    Rational printed = make_rational(531, 629);
    DecompositionResult s = decompose(printed);
    DecompositionResult o = oracle_decompose(printed);
    if (!s.terminated || s.b != o.b || s.c != o.c)
        return {false, "531/629 disagrees with the oracle"};
    if (!audit(printed, s).all_ok()) return {false, "531/629 audit failed"};

    std::string note = "531/629 = " + digit_str(s.b) + "+" + digit_str(s.c) +
                       " per both engines; the digit pair " + digit_str(r.b) + "+" +
                       digit_str(r.c) + " instead sums to " + to_string(pair_value);
    return {true, note};
}

Verdict criterion3() {
    Rational alpha = make_rational(Integer("9974074083712426"), Integer("149649898029019789"));
    DecompositionResult r = decompose(alpha);
    if (!digits_are(r, {16, 227, 231, 235}, {240, 229, 233, 237}))
        return {false, "unexpected digits " + digit_str(r.b) + " " + digit_str(r.c)};
    if (!r.terminated || *r.beta + *r.gamma != alpha) return {false, "sum is not exact"};
    if (!(r.c[3] < r.c[0])) return {false, "expected c_4 < c_1"};
    return {true, "four steps, exact sum, c_4 < c_1"};
}

Verdict criterion4() {
    ConstructionState first = construct(6);
    if (first.b != std::vector<Integer>{2, 6, 11, 16, 21, 26} ||
        first.c != std::vector<Integer>{4, 9, 14, 19, 24, 28})
        return {false, "first six digit pairs differ: " + digit_str(first.b) + " " +
                           digit_str(first.c)};
    ConstructionState s = construct(200);
    CheckFlag window = verify_window(s);
    CheckFlag nesting = verify_nesting(s);
    CheckFlag bounds = verify_growth_bounds(s);
    if (!nesting.ok) return {false, "nesting: " + nesting.witness};
    if (!bounds.ok) return {false, "growth bounds: " + bounds.witness};
    if (!window.ok)
        return {false, "digits and nesting and bounds hold to depth 200, but the window "
                       "invariant fails once: " + window.witness};
    return {true, "digits, window, nesting and growth bounds verified to depth 200"};
}

Verdict criterion5() {
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    ScanOptions opt;
    opt.jobs = jobs;
    try {
        ScanSummary s = scan(3000, opt);
        std::ostringstream os;
        os << s.fractions << " fractions audited, longest run " << s.max_steps << " steps at "
           << s.argmax_p.get_str() << "/" << s.argmax_q.get_str();
        return {true, os.str()};
    } catch (const audit_failure& e) {
        return {false, e.what()};
    }
}

Verdict criterion6() {
    std::size_t count = 0;
    for (unsigned long q = 2; q <= 500; ++q)
        for (unsigned long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1ul) continue;
            Rational alpha = make_rational(Integer(p), Integer(q));
            DecompositionResult a = decompose(alpha);
            DecompositionResult b = oracle_decompose(alpha);
            if (!a.terminated || a.b != b.b || a.c != b.c)
                return {false, "mismatch at " + to_string(alpha)};
            ++count;
        }
    return {true, std::to_string(count) + " fractions, zero mismatches"};
}

Verdict criterion7() {
    if (!enumerate_prefixes(6, 7).empty())
        return {false, "depth 6 with cap 7 is unexpectedly nonempty"};
    if (enumerate_prefixes(2, 2).empty())
        return {false, "sanity inversion failed: depth 2 with cap 2 should be nonempty"};
    if (!enumerate_prefixes(3, 2).empty())
        return {false, "sanity inversion failed: depth 3 with cap 2 should be empty"};
    return {true, "no depth-6 prefix keeps every b digit below 8; inversions agree"};
}

Verdict criterion8() {
    struct Input {
        const char* name;
        QuadraticIrrational x;
    };
    std::vector<Input> inputs = {{"sqrt(2)-1", QuadraticIrrational(-1, 2, 1)},
                                 {"(sqrt(5)-1)/2", QuadraticIrrational(-1, 5, 2)},
                                 {"sqrt(3)-1", QuadraticIrrational(-1, 3, 1)}};
    for (const auto& in : inputs) {
        RealInput alpha(in.x);
        DecompositionResult r = decompose(alpha, 40);
        if (r.steps != 40) return {false, std::string(in.name) + ": run stopped early"};
        AuditReport rep = audit(alpha, r);
        if (!rep.all_ok()) {
            for (const auto& [name, flag] : rep.entries())
                if (!flag->ok)
                    return {false, std::string(in.name) + ": " + name + " (" + flag->witness + ")"};
        }
        if (r.b[39] < 40) return {false, std::string(in.name) + ": b_40 below 40"};
    }
    return {true, "40 audited steps for all three, alpha in A_40, b_40 >= 40"};
}

Verdict criterion9() {
    ScanOptions opt;
    opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    ScanSummary s = scan(1000, opt);
    std::ostringstream os;
    os << "trend (reported, not asserted):";
    for (const auto& row : s.trend)
        os << "  q<=" << row.q_band << ": " << row.max_steps << " steps vs 2log2(q)="
           << static_cast<int>(row.two_log2_q * 100) / 100.0;
    return {true, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    Verdict (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                               criterion6, criterion7, criterion8, criterion9};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        int n = std::atoi(argv[i]);
        if (n < 1 || n > 9) {
            std::cerr << "usage: " << argv[0] << " [criterion number]...\n";
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (int n = 1; n <= 9; ++n) selected.push_back(n);

    bool all = true;
    for (int n : selected) {
        auto start = std::chrono::steady_clock::now();
        Verdict v = criteria[n - 1]();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && v.pass;
        std::printf("criterion %d: %s  [%.2fs]  %s\n", n, v.pass ? "pass" : "FAIL", secs,
                    v.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}

// Acceptance gate: one pass/fail line per criterion, exit 0 only when every
// criterion holds. Criterion 8 shells out to the CLI binary, whose path is
// argv[1]; everything else goes through the library directly.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "polyenum/io.hpp"
#include "polyenum/verify.hpp"

using namespace polyenum;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& detail) {
        if (ok_) first_detail_ = detail;
        ok_ = false;
    }

    void note_checks(std::uint64_t n) { checks_ += n; }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::ostringstream line;
        line << (ok_ ? "PASS" : "FAIL") << " criterion " << number_ << ": " << title_
             << " (" << checks_ << " checks, " << elapsed << " ms)";
        if (!ok_) {
            line << "\n      " << first_detail_;
            ++failures;
        }
        std::cout << line.str() << "\n";
    }

    bool ok() const { return ok_; }

private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::uint64_t checks_ = 0;
    std::string first_detail_;
};

std::string run_cli(const std::string& cli, const std::string& args, int& exit_code) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    exit_code = -1;
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) exit_code = WEXITSTATUS(status);
    return out;
}

// Coefficients of gf must be exactly the per-composition orbit counts.
bool census_matches(const PermGroup& g, int m, const GenFunction& gf, std::string& why) {
    const auto census = orbit_census(g, m);
    if (census.size() != gf.poly.term_count()) {
        why = "term count differs from census size";
        return false;
    }
    for (const auto& [k, count] : census) {
        Monomial mono(k.counts.size());
        for (std::size_t i = 0; i < mono.size(); ++i)
            mono[i] = static_cast<unsigned>(k.counts[i]);
        if (gf.poly.coefficient(mono) != Rat(count)) {
            why = "coefficient mismatch at a composition";
            return false;
        }
    }
    return true;
}

const char* const kNamedFamilies[] = {"sym", "alt", "cyclic", "dihedral"};

void criterion1() {
    Criterion c(1, "fixed-coloring identity sweep, every sigma in Sym(n), n<=5, m<=3");
    VerifyOptions opts;
    opts.max_n = 5;
    opts.max_m = 3;
    const VerifyReport r = verify_fixed_colorings(opts);
    c.note_checks(r.checks);
    if (!r.ok) c.fail(r.counterexample);
    if (r.checks != 459) c.fail("expected 459 checks, got " + std::to_string(r.checks));
}

void criterion2() {
    Criterion c(2, "weighted identity on 50 random (G, delta, m) triples, both oracles");
    VerifyOptions opts;
    opts.max_n = 5;
    opts.max_m = 3;
    opts.triples = 50;
    opts.seed = 20260817;
    const VerifyReport r1 = verify_weighted_stabilizer(opts);
    c.note_checks(r1.checks);
    if (!r1.ok) c.fail(r1.counterexample);
    const VerifyReport r3 = verify_weighted_partition(opts);
    c.note_checks(r3.checks);
    if (!r3.ok) c.fail(r3.counterexample);
    if (r1.checks < 50 || r3.checks < 50) c.fail("fewer than 50 triples ran");
}

void criterion3() {
    Criterion c(3, "uniform delta gives nonnegative integer orbit counts");
    for (const char* family : kNamedFamilies) {
        for (int n = 1; n <= 5; ++n) {
            const PermGroup g = named_group(std::string(family) + ":" + std::to_string(n));
            for (int m = 1; m <= 3; ++m) {
                const GenFunction gf = extended_enumerate(g, DeltaWeight::uniform(), m);
                c.note_checks(1);
                for (const auto& [mono, coef] : gf.poly.terms()) {
                    if (coef < 0 || denominator(coef) != 1) {
                        c.fail(std::string(family) + ":" + std::to_string(n) +
                               " m=" + std::to_string(m) + " has coefficient " +
                               rat_to_string(coef));
                    }
                }
                std::string why;
                if (!census_matches(g, m, gf, why))
                    c.fail(std::string(family) + ":" + std::to_string(n) +
                           " m=" + std::to_string(m) + ": " + why);
            }
        }
    }
}

void criterion4() {
    Criterion c(4, "elementary symmetric identity for 1<=n<=m<=7, three paths");
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= m; ++n) {
            const MultiPoly direct = elementary_symmetric_direct(n, m);
            c.note_checks(1);
            if (elementary_symmetric_via_cycle_index(n, m) != direct)
                c.fail("partition path differs at n=" + std::to_string(n) +
                       " m=" + std::to_string(m));
            if (elementary_symmetric_signed_elementwise(n, m) != direct)
                c.fail("element path differs at n=" + std::to_string(n) +
                       " m=" + std::to_string(m));
        }
}

void criterion5() {
    Criterion c(5, "determinant from traces vs Bareiss, 200 per order 1..6 plus pinned");
    VerifyOptions opts;
    opts.seed = 97;
    const VerifyReport r = verify_det(opts);
    c.note_checks(r.checks);
    if (!r.ok) c.fail(r.counterexample);
    if (r.checks != 1206) c.fail("expected 1206 checks, got " + std::to_string(r.checks));
    // The pinned trace vector of [[1,2],[3,4]] really is [5,29].
    RatMatrix l(2);
    l.at(0, 0) = 1;
    l.at(0, 1) = 2;
    l.at(1, 0) = 3;
    l.at(1, 1) = 4;
    const TraceVector t = trace_powers(l, 2);
    c.note_checks(1);
    if (t.values != std::vector<Rat>{Rat(5), Rat(29)} || det_via_traces(l) != Rat(-2))
        c.fail("pinned 2x2 case broke");
}

void criterion6() {
    Criterion c(6, "sign-weighted series equals direct elementary symmetric, n<=4 m<=4");
    for (int n = 1; n <= 4; ++n) {
        const PermGroup g = named_group("sym:" + std::to_string(n));
        for (int m = 1; m <= 4; ++m) {
            c.note_checks(1);
            const GenFunction lhs = extended_enumerate(g, DeltaWeight::sign(), m);
            if (lhs.poly != elementary_symmetric_direct(n, m))
                c.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       ": got " + lhs.poly.to_text("w"));
        }
    }
}

void criterion7() {
    Criterion c(7, "classical sanity: necklaces and brute-force orbit counts");
    c.note_checks(1);
    if (polya_enumerate(named_group("cyclic:4"), 2).poly.eval({Rat(1), Rat(1)}) != 6)
        c.fail("binary necklaces of length 4 != 6");
    for (const char* family : kNamedFamilies) {
        for (int n = 1; n <= 5; ++n) {
            const PermGroup g = named_group(std::string(family) + ":" + std::to_string(n));
            for (int m = 1; m <= 3; ++m) {
                c.note_checks(1);
                std::string why;
                if (!census_matches(g, m, polya_enumerate(g, m), why))
                    c.fail(std::string(family) + ":" + std::to_string(n) +
                           " m=" + std::to_string(m) + ": " + why);
            }
        }
    }
}

void criterion8(const std::string& cli) {
    Criterion c(8, "CLI outputs are byte-identical across reruns, goldens hold");
    if (cli.empty()) {
        c.fail("no CLI path given (argv[1])");
        return;
    }
    int code = 0;
    const std::string golden = run_cli(cli, "cycle-index --group sym:3", code);
    c.note_checks(1);
    if (code != 0 || golden != "1/6*t1^3 + 1/2*t1*t2 + 1/3*t3\n")
        c.fail("golden cycle-index output changed: " + golden);

    const char* const commands[] = {
        "cycle-index --group dihedral:4 --format json",
        "enumerate --group cyclic:4 --colors 2",
        "enumerate --group sym:4 --colors 3 --weights 1,1/2,-2",
        "extended --group alt:4 --colors 3 --delta sign --format json",
        "esym --n 3 --m 5 --check",
        "verify --suite weighted-stabilizer --seed 42 --triples 25",
        "verify --suite weighted-partition --seed 42 --triples 25 --format json",
        "verify --suite fixed-colorings --max-n 4 --max-m 2",
    };
    for (const char* args : commands) {
        int code1 = 0;
        int code2 = 0;
        const std::string first = run_cli(cli, args, code1);
        const std::string second = run_cli(cli, args, code2);
        c.note_checks(1);
        if (first != second || code1 != code2)
            c.fail(std::string("rerun differs for: ") + args);
        if (code1 != 0) c.fail(std::string("unexpected exit code for: ") + args);
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(cli);
    if (failures == 0) {
        std::cout << "all 8 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}

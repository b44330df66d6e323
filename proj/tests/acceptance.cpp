// Acceptance suite: every identity is exact, so each criterion is a strict
// pass/fail with zero tolerance. Prints one line per criterion and exits
// with the number of failures. argv[1] must point at the coch CLI binary
// (used by the determinism criterion).

#include <chrono>
#include <cstdio>
#include <iostream>

#include "coch/fuzz.hpp"
#include "coch/perturb.hpp"

using namespace coch;

namespace {

int failures = 0;

void verdict(int n, const std::string& what, bool ok, double seconds) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                seconds);
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int n, const std::string& what, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        ok = false;
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    verdict(n, what, ok, s);
}

GenConfig wide_config(const Field& f, std::uint64_t seed) {
    GenConfig cfg;
    cfg.field = f;
    cfg.lo = -3;
    cfg.hi = 3;
    cfg.max_dim = 6;
    cfg.seed = seed;
    return cfg;
}

bool report_ok(const FuzzReport& r) {
    if (r.pass()) return true;
    for (const auto& f : r.failures)
        std::printf("  seed %llu violates %s\n", static_cast<unsigned long long>(f.seed),
                    f.identity.c_str());
    return false;
}

std::string capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "tricks suite, 200 trials each over F_2, F_5 and Q", [] {
        bool ok = true;
        ok &= report_ok(run_campaign("tricks", 200, wide_config(Field::fp(2), 11)));
        ok &= report_ok(run_campaign("tricks", 200, wide_config(Field::fp(5), 12)));
        ok &= report_ok(run_campaign("tricks", 200, wide_config(Field::rationals(), 13)));
        return ok;
    });

    criterion(2, "contraction identities hdh = -h and C1-C3, 500 instances", [] {
        struct Slice {
            Field field;
            int count;
            std::uint64_t seed;
        };
        const Slice slices[] = {{Field::fp(5), 200, 21},
                                {Field::fp(2), 200, 22},
                                {Field::rationals(), 100, 23}};
        for (const auto& s : slices) {
            GenConfig cfg = wide_config(s.field, s.seed);
            for (int k = 0; k < s.count; ++k) {
                Contraction c = random_contraction(cfg.with_seed(derive_seed(s.seed, k)));
                if (!check_contraction(c).pass()) return false;
                GradedMap d = GradedMap::differential(c.ar.N);
                if (compose(c.h, compose(d, c.h)) != -c.h) return false;
            }
        }
        return true;
    });

    criterion(3, "path-object suite, 100 trials", [] {
        GenConfig cfg = wide_config(Field::fp(5), 31);
        cfg.max_dim = 5;
        return report_ok(run_campaign("path", 100, cfg));
    });

    criterion(4, "semifree factorization, lifting and retract suite, 100 trials", [] {
        GenConfig cfg;
        cfg.field = Field::fp(5);
        cfg.lo = 0;
        cfg.hi = 3; // support span 4
        cfg.max_dim = 5;
        cfg.seed = 41;
        return report_ok(run_campaign("semifree", 100, cfg));
    });

    criterion(5, "model-structure suite on AR and Contr, 100 trials each", [] {
        GenConfig cfg;
        cfg.field = Field::fp(5);
        cfg.lo = -1;
        cfg.hi = 1;
        cfg.max_dim = 3;
        cfg.seed = 51;
        bool ok = report_ok(run_campaign("mc-ar", 100, cfg));
        cfg.seed = 52;
        ok &= report_ok(run_campaign("mc-contr", 100, cfg));
        return ok;
    });

    criterion(6, "mutation sensitivity: broken variants produce failures", [] {
        GenConfig cfg;
        cfg.field = Field::fp(5);
        cfg.seed = 61;
        FuzzReport sign = run_campaign("mutation-trick3-sign", 50, cfg);
        cfg.seed = 62;
        FuzzReport side = run_campaign("mutation-drop-side-conditions", 50, cfg);
        if (sign.pass() || side.pass()) return false;
        for (const auto& f : sign.failures)
            if (f.identity != "trick3-contr-morphism") return false;
        for (const auto& f : side.failures)
            if (f.identity != "contraction-side-conditions") return false;
        return true;
    });

    criterion(7, "determinism: identical seeds give byte-identical CLI output", [&] {
        if (cli.empty()) {
            std::printf("  no CLI path given\n");
            return false;
        }
        std::string cmd = cli + " fuzz --campaign tricks --trials 20 --seed 17 2>/dev/null";
        std::string a = capture(cmd);
        std::string b = capture(cmd);
        std::string c =
            capture(cli + " fuzz --campaign mutation-drop-side-conditions --trials 5 --seed 9 2>/dev/null");
        std::string d =
            capture(cli + " fuzz --campaign mutation-drop-side-conditions --trials 5 --seed 9 2>/dev/null");
        return !a.empty() && a == b && !c.empty() && c == d;
    });

    if (failures == 0) std::printf("all acceptance criteria pass\n");
    return failures;
}

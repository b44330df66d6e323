#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "coch/fuzz.hpp"

using namespace coch;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(COCH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "coch-cli-tests";
    fs::create_directories(d);
    return d;
}

fs::path write_file(const std::string& name, const json& j) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << j.dump();
    return p;
}

Sdr disk_contraction() {
    Field q = Field::rationals();
    Complex d1 = Complex::disk(q, 1);
    Complex zero = Complex::zero(q);
    Sdr s{AcyclicRetraction{zero, d1, GradedMap(zero, d1, 0), GradedMap(d1, zero, 0)},
          GradedMap(d1, d1, -1)};
    s.h.set_block(1, Matrix::from_ints(q, 1, 1, {-1}));
    return s;
}

}  // namespace

TEST_CASE("check accepts the disk contraction and flags the corrupted one") {
    fs::path good = write_file("disk.json", sdr_to_json(disk_contraction()));
    RunResult r = run_cli("check " + good.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ok") != std::string::npos);

    Sdr bad = disk_contraction();
    bad.h.set_block(1, Matrix::from_ints(Field::rationals(), 1, 1, {1}));
    fs::path badp = write_file("disk-bad.json", sdr_to_json(bad));
    RunResult rb = run_cli("check " + badp.string());
    CHECK(rb.exit_code == 1);
    CHECK(rb.out.find("C1") != std::string::npos);
}

TEST_CASE("check validates complexes") {
    GenConfig cfg;
    fs::path p = write_file("complex.json", complex_to_json(random_complex(cfg.with_seed(3))));
    CHECK(run_cli("check " + p.string()).exit_code == 0);
}

TEST_CASE("malformed files exit with code 2") {
    fs::path p = scratch_dir() / "broken.json";
    std::ofstream(p) << "{ not json";
    CHECK(run_cli("check " + p.string()).exit_code == 2);
    CHECK(run_cli("check " + (scratch_dir() / "missing.json").string()).exit_code == 2);
    fs::path q = write_file("odd.json", json{{"what", 1}});
    CHECK(run_cli("check " + q.string()).exit_code == 2);
}

TEST_CASE("trick2 pipeline: output passes check as a contraction") {
    GenConfig cfg;
    cfg.field = Field::fp(5);
    fs::path in = write_file("sdr.json", sdr_to_json(random_sdr(cfg.with_seed(7))));
    fs::path out = scratch_dir() / "contr.json";
    RunResult r = run_cli("trick2 " + in.string() + " -o " + out.string());
    REQUIRE(r.exit_code == 0);
    RunResult rc = run_cli("check " + out.string());
    CHECK(rc.exit_code == 0);

    // the emitted JSON re-parses to a valid contraction at the library level
    std::ifstream f(out);
    json j = json::parse(f);
    CHECK(check_contraction(sdr_from_json(j)).pass());
}

TEST_CASE("trick1 and trick3 subcommands") {
    GenConfig cfg;
    cfg.field = Field::fp(5);
    Rng rng(8);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);
    GradedMap f0 = random_chain_map(a.structure, b.structure, rng);

    ContrMorphism raw{a.contraction, b.contraction, f0};
    fs::path in = write_file("morphism.json", contr_morphism_to_json(raw));
    fs::path mid = scratch_dir() / "ar-morphism.json";
    REQUIRE(run_cli("trick1 " + in.string() + " -o " + mid.string()).exit_code == 0);
    RunResult rc = run_cli("check " + mid.string());
    // trick1 output is an AR morphism but generally not a contraction
    // morphism; re-tag the diagrams as plain retractions for the check
    {
        std::ifstream fin(mid);
        json j = json::parse(fin);
        j["src"].erase("h");
        j["tgt"].erase("h");
        write_file("ar-only.json", j);
    }
    CHECK(run_cli("check " + (scratch_dir() / "ar-only.json").string()).exit_code == 0);

    fs::path out = scratch_dir() / "contr-morphism.json";
    REQUIRE(run_cli("trick3 " + mid.string() + " -o " + out.string()).exit_code == 0);
    CHECK(run_cli("check " + out.string()).exit_code == 0);
    (void)rc;
}

TEST_CASE("factor and lift subcommands") {
    GenConfig cfg;
    cfg.field = Field::fp(5);
    cfg.max_dim = 2;
    Rng rng(9);
    GeneratedComplex c = generate_random_complex(cfg, rng);
    GeneratedComplex d = generate_random_complex(cfg, rng);
    GradedMap alpha = random_chain_map(c.structure, d.structure, rng);
    fs::path in = write_file("alpha.json", chain_map_to_json(alpha));
    fs::path out = scratch_dir() / "fact.json";
    RunResult r = run_cli("factor " + in.string() + " --category coch --flavor c-fw --emit-cells -o " +
                          out.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream f(out);
    json j = json::parse(f);
    CHECK(j.contains("cells"));
    Complex mid = complex_from_json(j.at("middle"));
    GradedMap left = graded_map_from_json(j.at("left"), c.complex, mid, 0);
    GradedMap right = graded_map_from_json(j.at("right"), mid, d.complex, 0);
    CHECK(compose(right, left) == alpha);

    // a solvable square: i = Id forces lift = f
    GeneratedComplex x = generate_random_complex(cfg, rng);
    GradedMap fmap = random_chain_map(c.structure, x.structure, rng);
    LiftingProblem prob{GradedMap::identity(c.complex), fmap, GradedMap::identity(x.complex),
                        fmap};
    fs::path sq = write_file("square.json", coch_square_to_json(prob));
    fs::path lifted = scratch_dir() / "lift.json";
    REQUIRE(run_cli("lift " + sq.string() + " --category coch -o " + lifted.string())
                .exit_code == 0);
    std::ifstream lf(lifted);
    json lj = json::parse(lf);
    CHECK(graded_map_from_json(lj.at("lift"), c.complex, x.complex, 0) == fmap);
}

TEST_CASE("path and retract subcommands") {
    GenConfig cfg;
    cfg.field = Field::fp(3);
    cfg.max_dim = 2;
    fs::path in = write_file("b.json", complex_to_json(random_complex(cfg.with_seed(4))));
    RunResult r = run_cli("path " + in.string());
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(validate_complex(complex_from_json(j.at("complex"))).pass());

    Rng rng(5);
    GeneratedComplex a = generate_random_complex(cfg, rng);
    GeneratedComplex e = generate_random_complex(cfg, rng);
    DirectSum ds = direct_sum(a.complex, e.complex);
    Conjugation cj = random_conjugation(ds.sum, cfg, rng);
    fs::path gin = write_file("inj.json", chain_map_to_json(compose(cj.fwd, ds.incl_left)));
    RunResult rr = run_cli("retract " + gin.string());
    CHECK(rr.exit_code == 0);
    json rj = json::parse(rr.out);
    CHECK(rj.contains("section"));
    CHECK(rj.contains("cells"));
}

TEST_CASE("fuzz subcommand") {
    RunResult r = run_cli("fuzz --campaign tricks --trials 5 --seed 1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["failures"].empty());
    CHECK(j["trials"] == 5);

    // identical seeds give byte-identical output
    RunResult r2 = run_cli("fuzz --campaign tricks --trials 5 --seed 1");
    CHECK(r.out == r2.out);

    RunResult rq = run_cli("fuzz --campaign tricks --trials 3 --seed 2 --field q");
    CHECK(rq.exit_code == 0);

    CHECK(run_cli("fuzz --campaign nonsense --trials 1").exit_code == 2);
    CHECK(run_cli("fuzz --campaign tricks --trials 2 --field fp:6").exit_code == 2);

    // a failing campaign exits 1 and reports its failures
    RunResult rm = run_cli("fuzz --campaign mutation-drop-side-conditions --trials 10 --seed 3");
    CHECK(rm.exit_code == 1);
    json jm = json::parse(rm.out);
    CHECK(!jm["failures"].empty());
}

#include <doctest.h>

#include "coch/fuzz.hpp"

using namespace coch;

namespace {
const Field F5 = Field::fp(5);
}

TEST_CASE("generate_random_complex") {
    GenConfig cfg;
    cfg.field = F5;

    GenConfig trivial = cfg;
    trivial.max_dim = 0;
    CHECK(random_complex(trivial.with_seed(3)).is_zero_complex());

    // seed determinism, bit-identical JSON
    Complex a = random_complex(cfg.with_seed(5));
    Complex b = random_complex(cfg.with_seed(5));
    CHECK(a == b);
    CHECK(complex_to_json(a).dump() == complex_to_json(b).dump());
    CHECK(!(a == random_complex(cfg.with_seed(6))));

    for (std::uint64_t s = 0; s < 30; ++s) {
        Complex x = random_complex(cfg.with_seed(s));
        CHECK(validate_complex(x).pass());
        for (int i = x.lo(); i <= x.hi(); ++i) CHECK(x.dim(i) <= cfg.max_dim);
    }
}

TEST_CASE("structured and conjugated contractions") {
    // E = 0 gives the trivial contraction shape: iota pi = Id on the nose
    GeneratedContraction plain = structured_contraction(F5, PieceList{{0, 1}, {}}, {});
    CHECK(check_contraction(plain.contraction).pass());
    CHECK(compose(plain.contraction.ar.iota, plain.contraction.ar.pi).is_identity());
    CHECK(plain.contraction.h.is_zero());

    // M = 0, one disk, no conjugation: the disk contraction with h = -1
    GeneratedContraction disk = structured_contraction(F5, PieceList{}, {1});
    CHECK(check_contraction(disk.contraction).pass());
    CHECK(disk.contraction.ar.N.dim(0) == 1);
    CHECK(disk.contraction.ar.N.dim(1) == 1);
    CHECK(disk.contraction.h.block(1) == Matrix::from_ints(F5, 1, 1, {-1}));

    GenConfig cfg;
    cfg.field = F5;
    for (std::uint64_t s = 0; s < 30; ++s) {
        Contraction c = random_contraction(cfg.with_seed(s));
        CHECK(check_contraction(c).pass());
    }
}

TEST_CASE("generate_random_sdr") {
    GenConfig cfg;
    cfg.field = F5;
    int broke_side_conditions = 0;
    for (std::uint64_t s = 0; s < 30; ++s) {
        Sdr sdr = random_sdr(cfg.with_seed(s));
        CHECK(check_sdr(sdr).pass());
        if (!check_contraction(sdr).pass()) ++broke_side_conditions;
    }
    CHECK(broke_side_conditions > 0); // the perturbation genuinely moves h
}

TEST_CASE("generate_surjective_qis") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(9);
    for (int t = 0; t < 15; ++t) {
        GradedMap q = generate_surjective_qis(cfg, rng);
        CHECK(is_chain_map(q));
        CHECK(is_fibration(q));
        CHECK(is_quasi_iso(q));
        // the kernel is acyclic
        Subcomplex k = kernel_subcomplex(q);
        CohomologyData hk(k.object);
        for (int i = k.object.lo(); i <= k.object.hi(); ++i) CHECK(hk.dim(i) == 0);
    }
}

TEST_CASE("generate_surjection") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(10);
    bool some_non_qis = false;
    for (int t = 0; t < 15; ++t) {
        GradedMap q = generate_surjection(cfg, rng);
        CHECK(is_chain_map(q));
        CHECK(is_fibration(q));
        if (!is_quasi_iso(q)) some_non_qis = true;
    }
    CHECK(some_non_qis);
}

TEST_CASE("random_chain_map produces chain maps and covers the full space") {
    GenConfig cfg;
    cfg.field = F5;
    cfg.max_dim = 3;
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        GeneratedComplex a = generate_random_complex(cfg, rng);
        GeneratedComplex b = generate_random_complex(cfg, rng);
        GradedMap f = random_chain_map(a.structure, b.structure, rng);
        CHECK(is_chain_map(f));
        GradedMap g = random_chain_map_generic(a.complex, b.complex, rng);
        CHECK(is_chain_map(g));
    }

    // dimension cross-check on a pinned F_2 instance: the piecewise
    // parameter count (S0->S0, D1->S0, D1->D1, so 3) must match a
    // brute-force enumeration of all chain maps
    Field f2 = Field::fp(2);
    Complex ca = build_piece_complex(f2, PieceList{{0}, {1}});    // S(0) + D(1)
    Complex cb = build_piece_complex(f2, PieceList{{0, 1}, {1}}); // S(0) + S(1) + D(1)
    int chain_maps = 0;
    for (int code = 0; code < (1 << 6); ++code) {
        GradedMap h(ca, cb, 0);
        Matrix h0(f2, 2, 2), h1(f2, 2, 1);
        for (int k = 0; k < 4; ++k)
            h0.set(static_cast<std::size_t>(k / 2), static_cast<std::size_t>(k % 2),
                   Scalar::from_int(f2, (code >> k) & 1));
        for (int k = 0; k < 2; ++k)
            h1.set(static_cast<std::size_t>(k), 0, Scalar::from_int(f2, (code >> (4 + k)) & 1));
        h.set_block(0, h0);
        h.set_block(1, h1);
        if (is_chain_map(h)) ++chain_maps;
    }
    CHECK(chain_maps == 1 << 3);
}

TEST_CASE("run_campaign basics") {
    GenConfig cfg;
    cfg.field = F5;
    FuzzReport empty = run_campaign("tricks", 0, cfg);
    CHECK(empty.pass());
    CHECK(empty.trials == 0);

    FuzzReport r1 = run_campaign("tricks", 5, cfg);
    FuzzReport r2 = run_campaign("tricks", 5, cfg);
    CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
    CHECK(r1.pass());

    CHECK_THROWS_AS(run_campaign("nonsense", 1, cfg), PreconditionError);
}

TEST_CASE("mutation campaigns fail and shrinking preserves the identity") {
    GenConfig cfg;
    cfg.field = F5;
    FuzzReport r = run_campaign("mutation-trick3-sign", 20, cfg);
    CHECK(!r.pass());
    for (const auto& f : r.failures) {
        CHECK(f.identity == "trick3-contr-morphism");
        CHECK(!f.input.is_null());
    }

    FuzzReport r2 = run_campaign("mutation-drop-side-conditions", 20, cfg);
    CHECK(!r2.pass());
    for (const auto& f : r2.failures) CHECK(f.identity == "contraction-side-conditions");
}

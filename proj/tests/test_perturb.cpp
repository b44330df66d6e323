#include <doctest.h>

#include "coch/generate.hpp"
#include "coch/perturb.hpp"

using namespace coch;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::fp(5);

Sdr disk_contraction() {
    Complex d1 = Complex::disk(Q, 1);
    Complex zero = Complex::zero(Q);
    Sdr s{AcyclicRetraction{zero, d1, GradedMap(zero, d1, 0), GradedMap(d1, zero, 0)},
          GradedMap(d1, d1, -1)};
    s.h.set_block(1, Matrix::from_ints(Q, 1, 1, {-1}));
    return s;
}

SdrMorphism conjugated_sdr_morphism(const GenConfig& cfg, Rng& rng) {
    Sdr s1 = generate_random_sdr(cfg, rng);
    Conjugation th = random_conjugation(s1.ar.N, cfg, rng);
    Sdr s2{AcyclicRetraction{s1.ar.M, th.conj, compose(th.fwd, s1.ar.iota),
                             compose(s1.ar.pi, th.bwd)},
           compose(th.fwd, compose(s1.h, th.bwd))};
    return SdrMorphism{s1, s2, th.fwd};
}

}  // namespace

TEST_CASE("trick2 fixes contractions") {
    GenConfig cfg;
    Complex x = random_complex(cfg.with_seed(1));
    Sdr triv = Sdr::trivial(x);
    CHECK(trick2(triv).h == triv.h);

    Sdr disk = disk_contraction();
    CHECK(trick2(disk).h == disk.h);
}

TEST_CASE("trick2 normalizes perturbed homotopies") {
    GenConfig cfg;
    cfg.field = F5;
    for (std::uint64_t s = 0; s < 20; ++s) {
        Sdr sdr = random_sdr(cfg.with_seed(s));
        REQUIRE(check_sdr(sdr).pass());
        Contraction c = trick2(sdr);
        CHECK(check_contraction(c).pass());
        CHECK(trick2(c).h == c.h); // idempotence
    }
    // also over Q and F_2 to catch characteristic-dependent sign mistakes
    cfg.field = Q;
    CHECK(check_contraction(trick2(random_sdr(cfg.with_seed(77)))).pass());
    cfg.field = Field::fp(2);
    CHECK(check_contraction(trick2(random_sdr(cfg.with_seed(78)))).pass());
}

TEST_CASE("trick2 rejects non-SDR input") {
    Sdr bad = disk_contraction();
    bad.h.set_block(1, Matrix::from_ints(Q, 1, 1, {1})); // breaks C1
    CHECK_THROWS_AS(trick2(bad), PreconditionError);
}

TEST_CASE("trick2 proof identities") {
    GenConfig cfg;
    cfg.field = F5;
    Sdr sdr = random_sdr(cfg.with_seed(9));
    GradedMap big_d = d_commutator(sdr.h);
    GradedMap d = GradedMap::differential(sdr.ar.N);
    CHECK(big_d == compose(sdr.ar.iota, sdr.ar.pi) - GradedMap::identity(sdr.ar.N));
    CHECK(compose(d, big_d) == compose(big_d, d));
    CHECK(compose(big_d, big_d) == -big_d);
    CHECK(compose(big_d, sdr.ar.iota).is_zero());
    CHECK(compose(sdr.ar.pi, big_d).is_zero());
}

TEST_CASE("trick2 functoriality") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(11);
    SdrMorphism sm = conjugated_sdr_morphism(cfg, rng);
    CHECK(trick2_functoriality_check(sm));
    CHECK(trick2_functoriality_check(SdrMorphism::identity(sm.src)));
    SdrMorphism zero{sm.src, sm.tgt, GradedMap(sm.src.ar.N, sm.tgt.ar.N, 0)};
    CHECK(trick2_functoriality_check(zero));
}

TEST_CASE("trick3 on fixed points and fuzzed morphisms") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(13);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);

    // a contraction morphism is untouched
    SdrMorphism id = SdrMorphism::identity(a.contraction);
    CHECK(trick3(id).f == id.f);

    // iota pi is an AR endomorphism; its straightening intertwines the homotopies
    GradedMap ip = compose(a.contraction.ar.iota, a.contraction.ar.pi);
    SdrMorphism ipm{a.contraction, a.contraction, ip};
    REQUIRE(check_ar_morphism(ipm.underlying_ar()));
    ContrMorphism ipt = trick3(ipm);
    CHECK(compose(a.contraction.h, ipt.f) == compose(ipt.f, a.contraction.h));

    bool moved = false;
    for (int t = 0; t < 10; ++t) {
        GradedMap f0 = random_chain_map(a.structure, b.structure, rng);
        ArMorphism fhat = trick1(f0, a.contraction.ar, b.contraction.ar);
        SdrMorphism m{a.contraction, b.contraction, fhat.f};
        ContrMorphism ft = trick3(m);
        CHECK(check_contr_morphism(ft));
        CHECK(trick3(ft).f == ft.f);
        if (ft.f != m.f) moved = true;
    }
    CHECK(moved); // generically the straightening is not the identity
}

TEST_CASE("trick3 composition law") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(17);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);
    GeneratedContraction c = generate_random_contraction(cfg, rng);
    for (int t = 0; t < 10; ++t) {
        ArMorphism f = trick1(random_chain_map(a.structure, b.structure, rng),
                              a.contraction.ar, b.contraction.ar);
        ArMorphism g = trick1(random_chain_map(b.structure, c.structure, rng),
                              b.contraction.ar, c.contraction.ar);
        ContrMorphism ft = trick3(SdrMorphism{a.contraction, b.contraction, f.f});
        ContrMorphism gt = trick3(SdrMorphism{b.contraction, c.contraction, g.f});
        ContrMorphism comp =
            trick3(SdrMorphism{a.contraction, c.contraction, compose(g.f, f.f)});
        CHECK(comp.f == compose(gt.f, ft.f));
    }
}

TEST_CASE("nullhomotopy witness") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(19);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);

    // zero morphism: the witness is zero
    SdrMorphism zero{a.contraction, b.contraction,
                     GradedMap(a.contraction.ar.N, b.contraction.ar.N, 0)};
    ContrMorphism zt = trick3(zero);
    CHECK(nullhomotopy_witness(zero, zt).is_zero());

    // contraction morphism: f - f~ = 0 and d s + s d = 0
    SdrMorphism id = SdrMorphism::identity(a.contraction);
    GradedMap s = nullhomotopy_witness(id, trick3(id));
    GradedMap d = GradedMap::differential(a.contraction.ar.N);
    CHECK((compose(d, s) + compose(s, d)).is_zero());

    ArMorphism f = trick1(random_chain_map(a.structure, b.structure, rng), a.contraction.ar,
                          b.contraction.ar);
    SdrMorphism m{a.contraction, b.contraction, f.f};
    ContrMorphism ft = trick3(m);
    CHECK_NOTHROW(nullhomotopy_witness(m, ft)); // verifies d s + s d = f - f~

    // mismatched pair is rejected
    if (ft.f != m.f) {
        ContrMorphism wrong{a.contraction, b.contraction, m.f};
        CHECK_THROWS_AS(nullhomotopy_witness(m, wrong), PreconditionError);
    }
}

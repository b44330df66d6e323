#include <doctest.h>

#include "coch/generate.hpp"
#include "coch/model.hpp"

using namespace coch;

namespace {
const Field F3 = Field::fp(3);
const Field F5 = Field::fp(5);

ContrMorphism random_cm(const GeneratedContraction& a, const GeneratedContraction& b, Rng& rng) {
    ArMorphism m = trick1(random_chain_map(a.structure, b.structure, rng), a.contraction.ar,
                          b.contraction.ar);
    return trick3(SdrMorphism{a.contraction, b.contraction, m.f});
}

}  // namespace

TEST_CASE("lift_ar with identity legs") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(1);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);
    ArMorphism f = trick1(random_chain_map(a.structure, b.structure, rng), a.contraction.ar,
                          b.contraction.ar);

    // i = Id: the lift is f itself
    ArLiftingProblem p1{ArMorphism::identity(a.contraction.ar), f,
                        ArMorphism::identity(b.contraction.ar), f, {}};
    CHECK(lift_ar(p1).f == f.f);
}

TEST_CASE("factor_ar on the identity of the trivial contraction on S(0)") {
    Complex s0 = Complex::sphere(F5, 0);
    AcyclicRetraction triv = AcyclicRetraction::trivial(s0);
    ArFactorization fact = factor_ar(ArMorphism::identity(triv), Flavor::C_FW);
    CHECK(check_ar(fact.middle).pass());
    CHECK(is_cofibration(fact.left.f));
    CHECK(is_fibration(fact.right.f));
    CHECK(is_quasi_iso(fact.right.f));
    CHECK(compose(fact.right.f, fact.left.f).is_identity());
    CHECK(compose(fact.middle.pi, fact.middle.iota).is_identity());
}

TEST_CASE("factor_ar with everything zero") {
    Complex zero = Complex::zero(F5);
    AcyclicRetraction z = AcyclicRetraction::trivial(zero);
    ArFactorization fact = factor_ar(ArMorphism::identity(z), Flavor::C_FW);
    CHECK(fact.middle.N.is_zero_complex());
    CHECK(fact.middle.M.is_zero_complex());
}

TEST_CASE("factor_ar on fuzzed morphisms, both flavors") {
    GenConfig cfg;
    cfg.field = F5;
    cfg.lo = -1;
    cfg.hi = 1;
    cfg.max_dim = 3;
    Rng rng(2);
    for (int t = 0; t < 5; ++t) {
        GeneratedContraction a = generate_random_contraction(cfg, rng);
        GeneratedContraction b = generate_random_contraction(cfg, rng);
        ArMorphism f = trick1(random_chain_map(a.structure, b.structure, rng),
                              a.contraction.ar, b.contraction.ar);
        for (Flavor flavor : {Flavor::C_FW, Flavor::CW_F}) {
            ArFactorization fact = factor_ar(f, flavor);
            CHECK(compose(fact.right.f, fact.left.f) == f.f);
            CHECK(check_ar(fact.middle).pass());
            CHECK(compose(fact.middle.pi, fact.middle.iota).is_identity());
            if (flavor == Flavor::C_FW) {
                CHECK(is_cofibration(fact.left.f));
                CHECK(is_fibration(fact.right.f));
                CHECK(is_quasi_iso(fact.right.f));
                CHECK(fact.left_witness.cells.has_value());
            } else {
                CHECK(is_cofibration(fact.left.f));
                CHECK(is_quasi_iso(fact.left.f));
                CHECK(is_fibration(fact.right.f));
                CHECK(fact.left_witness.retract.has_value());
            }
        }
    }
}

TEST_CASE("lift_contraction_homotopy identity legs") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(3);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);
    ContrMorphism f = random_cm(a, b, rng);

    // alpha = Id: the middle homotopy is the source homotopy
    ArMorphism id_a = ArMorphism::identity(a.contraction.ar);
    GradedMap l1 = lift_contraction_homotopy(id_a, f.underlying_ar(), a.contraction,
                                             b.contraction);
    CHECK(l1 == a.contraction.h);

    // beta = Id: it is the target homotopy
    ArMorphism id_b = ArMorphism::identity(b.contraction.ar);
    GradedMap l2 = lift_contraction_homotopy(f.underlying_ar(), id_b, a.contraction,
                                             b.contraction);
    CHECK(l2 == b.contraction.h);
}

TEST_CASE("factor_contr on fuzzed morphisms") {
    GenConfig cfg;
    cfg.field = F3;
    cfg.lo = -1;
    cfg.hi = 1;
    cfg.max_dim = 3;
    Rng rng(4);
    for (int t = 0; t < 3; ++t) {
        GeneratedContraction a = generate_random_contraction(cfg, rng);
        GeneratedContraction b = generate_random_contraction(cfg, rng);
        ContrMorphism f = random_cm(a, b, rng);
        for (Flavor flavor : {Flavor::C_FW, Flavor::CW_F}) {
            ContrFactorization fact = factor_contr(f, flavor);
            CHECK(compose(fact.right.f, fact.left.f) == f.f);
            CHECK(check_contraction(fact.middle).pass());
            CHECK(check_contr_morphism(fact.left));
            CHECK(check_contr_morphism(fact.right));
        }
    }

    // zero diagrams factor to zero
    Complex zero = Complex::zero(F3);
    Contraction z = Sdr::trivial(zero);
    ContrFactorization zf = factor_contr(SdrMorphism::identity(z), Flavor::C_FW);
    CHECK(zf.middle.ar.N.is_zero_complex());
}

TEST_CASE("lift_contr with identity legs and from factorization legs") {
    GenConfig cfg;
    cfg.field = F5;
    cfg.lo = -1;
    cfg.hi = 1;
    cfg.max_dim = 3;
    Rng rng(5);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);
    ContrMorphism f = random_cm(a, b, rng);

    ContrLiftingProblem p1{SdrMorphism::identity(a.contraction), f,
                           SdrMorphism::identity(b.contraction), f, {}};
    CHECK(lift_contr(p1).f == f.f);

    ContrFactorization fact = factor_contr(f, Flavor::C_FW);
    ContrFactorization fact2 = factor_contr(fact.right, Flavor::C_FW);
    ContrLiftingProblem sq{fact.left,
                           ContrMorphism{fact.left.src, fact2.middle,
                                         compose(fact2.left.f, fact.left.f)},
                           fact2.right, fact.right, fact.ar.left_witness};
    ContrMorphism h = lift_contr(sq);
    CHECK(compose(h.f, sq.i.f) == sq.f.f);
    CHECK(compose(sq.p.f, h.f) == sq.g.f);
    CHECK(check_contr_morphism(h));
}

TEST_CASE("factorization_naturality on the identity square and a real square") {
    GenConfig cfg;
    cfg.field = F3;
    cfg.lo = -1;
    cfg.hi = 1;
    cfg.max_dim = 2;
    Rng rng(6);
    GeneratedContraction k1 = generate_random_contraction(cfg, rng);
    GeneratedContraction h1 = generate_random_contraction(cfg, rng);
    ContrMorphism f1 = random_cm(k1, h1, rng);
    ContrFactorization fact1 = factor_contr(f1, Flavor::C_FW);

    ContrMorphism idk{k1.contraction, k1.contraction,
                      GradedMap::identity(k1.contraction.ar.N)};
    ContrMorphism idh{h1.contraction, h1.contraction,
                      GradedMap::identity(h1.contraction.ar.N)};
    ContrMorphism psi =
        factorization_naturality(ContrSquare{f1, f1, idk, idh}, fact1, fact1);
    CHECK(psi.f.is_identity());

    // post-composition square with a zero horizontal on the target side
    GeneratedContraction h2 = generate_random_contraction(cfg, rng);
    ContrMorphism w = random_cm(h1, h2, rng);
    ContrMorphism f2{k1.contraction, h2.contraction, compose(w.f, f1.f)};
    ContrFactorization fact2 = factor_contr(f2, Flavor::C_FW);
    ContrMorphism psi2 =
        factorization_naturality(ContrSquare{f1, f2, idk, w}, fact1, fact2);
    CHECK(compose(psi2.f, fact1.left.f) == compose(fact2.left.f, idk.f));
    CHECK(compose(fact2.right.f, psi2.f) == compose(w.f, fact1.right.f));
    CHECK(check_contr_morphism(psi2));
}

TEST_CASE("factorization_naturality with zero horizontals") {
    GenConfig cfg;
    cfg.field = F3;
    cfg.lo = 0;
    cfg.hi = 1;
    cfg.max_dim = 2;
    Rng rng(7);
    GeneratedContraction k1 = generate_random_contraction(cfg, rng);
    GeneratedContraction h1 = generate_random_contraction(cfg, rng);
    GeneratedContraction k2 = generate_random_contraction(cfg, rng);
    GeneratedContraction h2 = generate_random_contraction(cfg, rng);
    ContrMorphism f1 = random_cm(k1, h1, rng);
    ContrMorphism f2 = random_cm(k2, h2, rng);
    ContrMorphism z1{k1.contraction, k2.contraction,
                     GradedMap(k1.contraction.ar.N, k2.contraction.ar.N, 0)};
    ContrMorphism z2{h1.contraction, h2.contraction,
                     GradedMap(h1.contraction.ar.N, h2.contraction.ar.N, 0)};
    ContrFactorization fact1 = factor_contr(f1, Flavor::C_FW);
    ContrFactorization fact2 = factor_contr(f2, Flavor::C_FW);
    ContrMorphism psi =
        factorization_naturality(ContrSquare{f1, f2, z1, z2}, fact1, fact2);
    CHECK(compose(psi.f, fact1.left.f) == compose(fact2.left.f, z1.f));
    CHECK(compose(fact2.right.f, psi.f) == compose(z2.f, fact1.right.f));
}

TEST_CASE("mc1 and mc2 sampled checks") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(8);
    // two-of-three against an isomorphism
    GeneratedContraction g1 = generate_random_contraction(cfg, rng);
    GeneratedContraction k2 = conjugate_contraction(g1, cfg, rng);
    GradedMap iso = compose(k2.structure.fwd, g1.structure.bwd);
    CHECK(is_quasi_iso(iso));
    GeneratedContraction g3 = generate_random_contraction(cfg, rng);
    GradedMap g = trick1(random_chain_map(k2.structure, g3.structure, rng),
                         k2.contraction.ar, g3.contraction.ar)
                      .f;
    CHECK(is_quasi_iso(compose(g, iso)) == is_quasi_iso(g));

    // a direct summand inherits the predicates
    GeneratedComplex x = generate_random_complex(cfg, rng);
    GeneratedComplex y = generate_random_complex(cfg, rng);
    GradedMap piece = random_chain_map(x.structure, y.structure, rng);
    GradedMap surj = generate_surjection(cfg, rng);
    DirectSum s = direct_sum(piece.src(), surj.src());
    DirectSum t = direct_sum(piece.tgt(), surj.tgt());
    GradedMap big = compose(t.incl_left, compose(piece, s.proj_left)) +
                    compose(t.incl_right, compose(surj, s.proj_right));
    if (is_fibration(big)) CHECK(is_fibration(piece));
    if (is_cofibration(big)) CHECK(is_cofibration(piece));
    if (is_quasi_iso(big)) CHECK(is_quasi_iso(piece));
}

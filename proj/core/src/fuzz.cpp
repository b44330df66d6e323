#include "coch/fuzz.hpp"

#include <functional>
#include <optional>

#include "coch/perturb.hpp"

namespace coch {

namespace {

struct Violation {
    std::string identity;
    json input;
};

/* Runs the named checks of one trial; the first violation stops the trial.
 * Exceptions inside a check body are violations of that check. */
class Trial {
public:
    Trial(const GenConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}

    void check(const char* identity, const std::function<json()>& input,
               const std::function<bool()>& body) {
        if (violation_) return;
        try {
            if (body()) return;
            violation_ = Violation{identity, input()};
        } catch (const std::exception& e) {
            violation_ = Violation{identity, json{{"error", e.what()}, {"instance", input()}}};
        }
    }

    bool done() const { return violation_.has_value(); }
    const std::optional<Violation>& violation() const { return violation_; }
    Rng& rng() { return rng_; }
    const GenConfig& cfg() const { return cfg_; }

private:
    GenConfig cfg_;
    Rng rng_;
    std::optional<Violation> violation_;
};

GradedMap block_sum(const GradedMap& a, const GradedMap& b) {
    DirectSum s = direct_sum(a.src(), b.src());
    DirectSum t = direct_sum(a.tgt(), b.tgt());
    return compose(t.incl_left, compose(a, s.proj_left)) +
           compose(t.incl_right, compose(b, s.proj_right));
}

ArMorphism random_ar_morphism(const GeneratedContraction& a, const GeneratedContraction& b,
                              Rng& rng) {
    return trick1(random_chain_map(a.structure, b.structure, rng), a.contraction.ar,
                  b.contraction.ar);
}

ContrMorphism random_contr_morphism(const GeneratedContraction& a, const GeneratedContraction& b,
                                    Rng& rng) {
    ArMorphism m = random_ar_morphism(a, b, rng);
    return trick3(SdrMorphism{a.contraction, b.contraction, m.f});
}

void tricks_trial(Trial& t) {
    const GenConfig& cfg = t.cfg();
    GeneratedContraction src = generate_random_contraction(cfg, t.rng());
    GeneratedContraction tgt = generate_random_contraction(cfg, t.rng());
    GeneratedContraction thr = generate_random_contraction(cfg, t.rng());
    auto jsrc = [&] { return sdr_to_json(src.contraction); };

    t.check("generator-contraction-valid", jsrc,
            [&] { return check_contraction(src.contraction).pass(); });
    t.check("contraction-hdh", jsrc, [&] {
        GradedMap d = GradedMap::differential(src.contraction.ar.N);
        return compose(src.contraction.h, compose(d, src.contraction.h)) == -src.contraction.h;
    });

    GradedMap f0 = random_chain_map(src.structure, tgt.structure, t.rng());
    auto jf0 = [&] {
        return json{{"src", sdr_to_json(src.contraction)},
                    {"tgt", sdr_to_json(tgt.contraction)},
                    {"f", graded_map_to_json(f0)}};
    };
    if (t.done()) return;
    ArMorphism fhat = trick1(f0, src.contraction.ar, tgt.contraction.ar);

    t.check("trick1-ar-morphism", jf0, [&] { return check_ar_morphism(fhat); });
    t.check("trick1-defect-form", jf0, [&] {
        GradedMap sp = compose(src.contraction.ar.iota, src.contraction.ar.pi);
        GradedMap tp = compose(tgt.contraction.ar.iota, tgt.contraction.ar.pi);
        GradedMap ids = GradedMap::identity(src.contraction.ar.N);
        GradedMap idt = GradedMap::identity(tgt.contraction.ar.N);
        GradedMap rhs = compose(tp, compose(f0, ids - sp)) + compose(idt - tp, compose(f0, sp));
        return f0 - fhat.f == rhs;
    });
    t.check("trick1-defect-cohomology", jf0, [&] {
        for (const auto& [i, m] : induced_map(f0 - fhat.f))
            if (!m.is_zero()) return false;
        return true;
    });
    t.check("trick1-idempotent", jf0, [&] {
        return trick1(fhat.f, src.contraction.ar, tgt.contraction.ar).f == fhat.f;
    });

    GradedMap u = random_chain_map(src.m_structure, tgt.m_structure, t.rng());
    GradedMap structural =
        compose(tgt.contraction.ar.iota, compose(u, src.contraction.ar.pi));
    t.check("trick1-fixed-point", jf0, [&] {
        return trick1(structural, src.contraction.ar, tgt.contraction.ar).f == structural;
    });

    GradedMap g0 = random_chain_map(tgt.structure, thr.structure, t.rng());
    if (t.done()) return;
    ArMorphism ghat = trick1(g0, tgt.contraction.ar, thr.contraction.ar);
    t.check("trick1-functorial-post", jf0, [&] {
        return trick1(compose(ghat.f, f0), src.contraction.ar, thr.contraction.ar).f ==
               compose(ghat.f, fhat.f);
    });
    GradedMap e0 = random_chain_map(thr.structure, src.structure, t.rng());
    if (t.done()) return;
    ArMorphism ehat = trick1(e0, thr.contraction.ar, src.contraction.ar);
    t.check("trick1-functorial-pre", jf0, [&] {
        return trick1(compose(f0, ehat.f), thr.contraction.ar, tgt.contraction.ar).f ==
               compose(fhat.f, ehat.f);
    });

    Sdr sdr = generate_random_sdr(cfg, t.rng());
    auto jsdr = [&] { return sdr_to_json(sdr); };
    t.check("generator-sdr-valid", jsdr, [&] { return check_sdr(sdr).pass(); });
    t.check("trick2-contraction", jsdr, [&] { return check_contraction(trick2(sdr)).pass(); });
    t.check("trick2-fixed-point", jsrc,
            [&] { return trick2(src.contraction).h == src.contraction.h; });
    t.check("trick2-idempotent", jsdr, [&] {
        Contraction c = trick2(sdr);
        return trick2(c).h == c.h;
    });

    Sdr s1 = generate_random_sdr(cfg, t.rng());
    Conjugation th = random_conjugation(s1.ar.N, cfg, t.rng());
    Sdr s2{AcyclicRetraction{s1.ar.M, th.conj, compose(th.fwd, s1.ar.iota),
                             compose(s1.ar.pi, th.bwd)},
           compose(th.fwd, compose(s1.h, th.bwd))};
    SdrMorphism sm{s1, s2, th.fwd};
    t.check("trick2-functorial", [&] { return sdr_to_json(s1); },
            [&] { return trick2_functoriality_check(sm); });

    SdrMorphism cm{src.contraction, tgt.contraction, fhat.f};
    auto jcm = [&] { return contr_morphism_to_json(cm); };
    std::optional<ContrMorphism> ft;
    t.check("trick3-contr-morphism", jcm, [&] {
        ft = trick3(cm);
        return check_contr_morphism(*ft);
    });
    t.check("trick3-fixed-point", jcm, [&] {
        return trick3(SdrMorphism{src.contraction, tgt.contraction, ft->f}).f == ft->f;
    });
    t.check("trick3-nullhomotopy", jcm, [&] {
        nullhomotopy_witness(cm, *ft);
        return true;
    });
    t.check("contr-morphism-is-ar-morphism", jcm,
            [&] { return check_ar_morphism(ft->underlying_ar()); });
    t.check("trick3-composition", jcm, [&] {
        SdrMorphism gm{tgt.contraction, thr.contraction, ghat.f};
        ContrMorphism gt = trick3(gm);
        SdrMorphism comp{src.contraction, thr.contraction, compose(ghat.f, fhat.f)};
        return trick3(comp).f == compose(gt.f, ft->f);
    });
    t.check("trick3-structural-fixed-point", jf0, [&] {
        SdrMorphism m{src.contraction, tgt.contraction, structural};
        return check_contr_morphism(m) && trick3(m).f == structural;
    });
}

void path_trial(Trial& t) {
    const GenConfig& cfg = t.cfg();
    GeneratedComplex gb = generate_random_complex(cfg, t.rng());
    PathObject p = path_object(gb.complex);
    auto jb = [&] { return complex_to_json(gb.complex); };
    t.check("generator-complex-valid", jb, [&] { return validate_complex(gb.complex).pass(); });
    t.check("path-d-squared", jb, [&] { return validate_complex(p.object).pass(); });
    t.check("path-incl-quasi-iso", jb, [&] { return is_quasi_iso(p.incl); });
    t.check("path-proj-surjective", jb, [&] { return is_fibration(p.proj); });

    GeneratedComplex ga = generate_random_complex(cfg, t.rng());
    GeneratedComplex gc = generate_random_complex(cfg, t.rng());
    GradedMap f = random_chain_map(ga.structure, gb.structure, t.rng());
    GradedMap g = random_chain_map(gb.structure, gc.structure, t.rng());
    auto jfg = [&] {
        return json{{"f", chain_map_to_json(f)}, {"g", chain_map_to_json(g)}};
    };
    if (t.done()) return;
    PathObject pa = path_object(ga.complex);
    PathObject pc = path_object(gc.complex);
    t.check("path-functorial", jfg, [&] {
        return path_functor_map(pa, pc, compose(g, f)) ==
               compose(path_functor_map(p, pc, g), path_functor_map(pa, p, f));
    });
    t.check("path-identity-functor", jb, [&] {
        return path_functor_map(p, p, GradedMap::identity(gb.complex)).is_identity();
    });

    GeneratedContraction gct = generate_random_contraction(cfg, t.rng());
    if (t.done()) return;
    PathObject pn = path_object(gct.contraction.ar.N);
    auto jct = [&] { return sdr_to_json(gct.contraction); };
    t.check("path-sdr-map-chain", jct,
            [&] { return is_chain_map(sdr_as_path_map(pn, gct.contraction)); });
    GradedMap eta = random_graded_map(gct.contraction.ar.N, gct.contraction.ar.N, -1, cfg, t.rng());
    if (!t.done() && !d_commutator(eta).is_zero()) {
        Sdr corrupted{gct.contraction.ar, gct.contraction.h + eta};
        t.check("path-sdr-map-detects-corruption", [&] { return sdr_to_json(corrupted); },
                [&] { return !is_chain_map(sdr_as_path_map(pn, corrupted)); });
    }

    GradedMap q1 = generate_surjection(cfg, t.rng());
    t.check("path-sequence-exact", [&] { return chain_map_to_json(q1); },
            [&] { return check_path_sequence_exact(q1).pass(); });
    GradedMap q2 = generate_surjective_qis(cfg, t.rng());
    t.check("path-sequence-exact-qis", [&] { return chain_map_to_json(q2); },
            [&] { return check_path_sequence_exact(q2).pass(); });
}

void semifree_trial(Trial& t) {
    const GenConfig& cfg = t.cfg();
    GeneratedComplex gc = generate_random_complex(cfg, t.rng());
    GeneratedComplex gd = generate_random_complex(cfg, t.rng());
    GradedMap alpha = random_chain_map(gc.structure, gd.structure, t.rng());
    auto ja = [&] { return chain_map_to_json(alpha); };
    t.check("semifree-c-fw", ja, [&] {
        factor_coch_c_fw(alpha);
        return true;
    });
    t.check("semifree-cw-f", ja, [&] {
        factor_coch_cw_f(alpha);
        return true;
    });

    // lifting instances stay small: the linear oracle runs on each of them
    GenConfig small = cfg;
    small.max_dim = std::min(cfg.max_dim, 2);
    small.hi = std::min(cfg.hi, cfg.lo + 2);
    GeneratedComplex gc2 = generate_random_complex(small, t.rng());
    GeneratedComplex gd2 = generate_random_complex(small, t.rng());
    GradedMap alpha2 = random_chain_map(gc2.structure, gd2.structure, t.rng());
    std::optional<CochFactorization> fact;
    t.check("semifree-c-fw-small", [&] { return chain_map_to_json(alpha2); }, [&] {
        fact = factor_coch_c_fw(alpha2);
        return true;
    });
    if (!t.done() && fact) {
        GradedMap p = generate_surjective_qis(small, t.rng());
        GradedMap h0 = random_chain_map_generic(fact->middle, p.src(), t.rng());
        LiftingProblem lp{fact->left, compose(h0, fact->left), p, compose(p, h0)};
        auto jlp = [&] { return coch_square_to_json(lp); };
        t.check("semifree-lift", jlp, [&] {
            lift_semifree(lp, *fact->witness.cells);
            return true;
        });
        t.check("semifree-lift-linear-agree", jlp,
                [&] { return lift_linear(lp).has_value(); });

        GeneratedComplex gb2 = generate_random_complex(small, t.rng());
        GradedMap tmap = random_chain_map(gc2.structure, gb2.structure, t.rng());
        t.check("semifree-pushout-transport", [&] { return chain_map_to_json(tmap); }, [&] {
            PushoutData po = pushout(fact->left, tmap);
            SemifreeExtension tr = transport_cells_pushout(*fact->witness.cells, po);
            return tr.cell_count() == fact->witness.cells->cell_count();
        });
    }

    GeneratedComplex ge = generate_random_complex(small, t.rng());
    DirectSum ds = direct_sum(gc2.complex, ge.complex);
    Conjugation cj = random_conjugation(ds.sum, small, t.rng());
    GradedMap inj = compose(cj.fwd, ds.incl_left);
    t.check("semifree-retract", [&] { return chain_map_to_json(inj); }, [&] {
        exhibit_retract(inj);
        return true;
    });
}

void mc_ar_trial(Trial& t) {
    const GenConfig& cfg = t.cfg();
    GeneratedContraction g1 = generate_random_contraction(cfg, t.rng());
    GeneratedContraction g2 = generate_random_contraction(cfg, t.rng());
    if (t.done()) return;
    ArMorphism f = random_ar_morphism(g1, g2, t.rng());
    auto jf = [&] { return ar_morphism_to_json(f); };

    std::optional<ArFactorization> fw, cw;
    t.check("mc4-ar-c-fw", jf, [&] {
        fw = factor_ar(f, Flavor::C_FW);
        return true;
    });
    t.check("mc4-ar-cw-f", jf, [&] {
        cw = factor_ar(f, Flavor::CW_F);
        return true;
    });
    if (!t.done() && fw) {
        std::optional<ArFactorization> fw2;
        t.check("mc4-ar-c-fw-iterated", jf, [&] {
            fw2 = factor_ar(fw->right, Flavor::C_FW);
            return true;
        });
        t.check("mc3-ar-lift-c-fw", jf, [&] {
            ArLiftingProblem sq{fw->left,
                                ArMorphism{fw->left.src, fw2->middle,
                                           compose(fw2->left.f, fw->left.f)},
                                fw2->right, fw->right, fw->left_witness};
            lift_ar(sq);
            return true;
        });
    }
    if (!t.done() && cw) {
        std::optional<ArFactorization> cw2;
        t.check("mc4-ar-cw-f-iterated", jf, [&] {
            cw2 = factor_ar(cw->right, Flavor::CW_F);
            return true;
        });
        t.check("mc3-ar-lift-cw-f", jf, [&] {
            ArLiftingProblem sq{cw->left,
                                ArMorphism{cw->left.src, cw2->middle,
                                           compose(cw2->left.f, cw->left.f)},
                                cw2->right, cw->right, cw->left_witness};
            lift_ar(sq);
            return true;
        });
    }

    // MC1 sample: against an isomorphism, 2-out-of-3 collapses to an
    // equivalence of quasi-isomorphism flags
    GeneratedContraction k2 = conjugate_contraction(g1, cfg, t.rng());
    GradedMap iso = compose(k2.structure.fwd, g1.structure.bwd);
    ArMorphism fiso{g1.contraction.ar, k2.contraction.ar, iso};
    GeneratedContraction g3 = generate_random_contraction(cfg, t.rng());
    if (t.done()) return;
    ArMorphism g = random_ar_morphism(k2, g3, t.rng());
    t.check("mc1-two-of-three", jf, [&] {
        if (!check_ar_morphism(fiso) || !is_quasi_iso(fiso.f)) return false;
        return is_quasi_iso(compose(g.f, fiso.f)) == is_quasi_iso(g.f);
    });

    // MC2 sample: a direct-summand retract inherits each predicate
    GradedMap piece, other;
    switch (t.rng().below(3)) {
    case 0:
        piece = generate_surjection(cfg, t.rng());
        other = generate_surjection(cfg, t.rng());
        break;
    case 1: {
        GeneratedComplex x = generate_random_complex(cfg, t.rng());
        GeneratedComplex e = generate_random_complex(cfg, t.rng());
        DirectSum ds = direct_sum(x.complex, e.complex);
        piece = ds.incl_left;
        GeneratedComplex x2 = generate_random_complex(cfg, t.rng());
        GeneratedComplex e2 = generate_random_complex(cfg, t.rng());
        DirectSum ds2 = direct_sum(x2.complex, e2.complex);
        other = ds2.incl_left;
        break;
    }
    default: {
        GeneratedComplex x = generate_random_complex(cfg, t.rng());
        GeneratedComplex y = generate_random_complex(cfg, t.rng());
        piece = random_chain_map(x.structure, y.structure, t.rng());
        GeneratedComplex x2 = generate_random_complex(cfg, t.rng());
        GeneratedComplex y2 = generate_random_complex(cfg, t.rng());
        other = random_chain_map(x2.structure, y2.structure, t.rng());
        break;
    }
    }
    if (t.done()) return;
    GradedMap big = block_sum(piece, other);
    t.check("mc2-retract", [&] { return chain_map_to_json(piece); }, [&] {
        if (is_fibration(big) && !is_fibration(piece)) return false;
        if (is_cofibration(big) && !is_cofibration(piece)) return false;
        if (is_quasi_iso(big) && !is_quasi_iso(piece)) return false;
        return true;
    });
}

void mc_contr_trial(Trial& t) {
    const GenConfig& cfg = t.cfg();
    GeneratedContraction g1 = generate_random_contraction(cfg, t.rng());
    GeneratedContraction g2 = generate_random_contraction(cfg, t.rng());
    if (t.done()) return;
    ContrMorphism f = random_contr_morphism(g1, g2, t.rng());
    auto jf = [&] { return contr_morphism_to_json(f); };

    std::optional<ContrFactorization> fw, cw;
    t.check("mc4-contr-c-fw", jf, [&] {
        fw = factor_contr(f, Flavor::C_FW);
        return true;
    });
    t.check("mc4-contr-cw-f", jf, [&] {
        cw = factor_contr(f, Flavor::CW_F);
        return true;
    });
    if (t.done() || !fw || !cw) return;

    if (t.rng().chance(1, 2)) {
        std::optional<ContrFactorization> fw2;
        t.check("mc4-contr-c-fw-iterated", jf, [&] {
            fw2 = factor_contr(fw->right, Flavor::C_FW);
            return true;
        });
        t.check("mc3-contr-lift-c-fw", jf, [&] {
            ContrLiftingProblem sq{fw->left,
                                   ContrMorphism{fw->left.src, fw2->middle,
                                                 compose(fw2->left.f, fw->left.f)},
                                   fw2->right, fw->right, fw->ar.left_witness};
            lift_contr(sq);
            return true;
        });
    } else {
        std::optional<ContrFactorization> cw2;
        t.check("mc4-contr-cw-f-iterated", jf, [&] {
            cw2 = factor_contr(cw->right, Flavor::CW_F);
            return true;
        });
        t.check("mc3-contr-lift-cw-f", jf, [&] {
            ContrLiftingProblem sq{cw->left,
                                   ContrMorphism{cw->left.src, cw2->middle,
                                                 compose(cw2->left.f, cw->left.f)},
                                   cw2->right, cw->right, cw->ar.left_witness};
            lift_contr(sq);
            return true;
        });
    }

    t.check("mc4-contr-naturality-identity", jf, [&] {
        ContrMorphism id1{g1.contraction, g1.contraction,
                          GradedMap::identity(g1.contraction.ar.N)};
        ContrMorphism id2{g2.contraction, g2.contraction,
                          GradedMap::identity(g2.contraction.ar.N)};
        ContrSquare sq{f, f, id1, id2};
        return factorization_naturality(sq, *fw, *fw).f.is_identity();
    });

    if (t.rng().chance(1, 2)) {
        // post-composition square: phi1 = Id, phi2 = w, f2 = w f
        GeneratedContraction g3 = generate_random_contraction(cfg, t.rng());
        if (t.done()) return;
        ContrMorphism w = random_contr_morphism(g2, g3, t.rng());
        ContrMorphism f2{g1.contraction, g3.contraction, compose(w.f, f.f)};
        t.check("mc4-contr-naturality", jf, [&] {
            ContrFactorization fac2 = factor_contr(f2, Flavor::C_FW);
            ContrMorphism id1{g1.contraction, g1.contraction,
                              GradedMap::identity(g1.contraction.ar.N)};
            ContrSquare sq{f, f2, id1, w};
            factorization_naturality(sq, *fw, fac2);
            return true;
        });
    } else {
        // conjugation square: both horizontals are isomorphisms
        GeneratedContraction k2 = conjugate_contraction(g1, cfg, t.rng());
        GeneratedContraction h2 = conjugate_contraction(g2, cfg, t.rng());
        GradedMap thk = compose(k2.structure.fwd, g1.structure.bwd);
        GradedMap thh = compose(h2.structure.fwd, g2.structure.bwd);
        GradedMap thk_inv = compose(g1.structure.fwd, k2.structure.bwd);
        ContrMorphism phi1{g1.contraction, k2.contraction, thk};
        ContrMorphism phi2{g2.contraction, h2.contraction, thh};
        ContrMorphism f2{k2.contraction, h2.contraction,
                         compose(thh, compose(f.f, thk_inv))};
        t.check("mc4-contr-naturality", jf, [&] {
            ContrFactorization fac2 = factor_contr(f2, Flavor::C_FW);
            ContrSquare sq{f, f2, phi1, phi2};
            factorization_naturality(sq, *fw, fac2);
            return true;
        });
    }
}

/* Deliberately wrong implementations; their nonzero failure counts prove
 * the identity checks are not vacuous. */
void mutation_trick3_trial(Trial& t) {
    const GenConfig& cfg = t.cfg();
    GeneratedContraction src = generate_random_contraction(cfg, t.rng());
    GeneratedContraction tgt = generate_random_contraction(cfg, t.rng());
    if (t.done()) return;
    ArMorphism f = random_ar_morphism(src, tgt, t.rng());
    GradedMap ds = GradedMap::differential(src.contraction.ar.N);
    GradedMap dt = GradedMap::differential(tgt.contraction.ar.N);
    // sign flipped on purpose: f + d k f h d instead of f - d k f h d
    GradedMap bad = f.f + compose(dt, compose(tgt.contraction.h,
                                              compose(f.f, compose(src.contraction.h, ds))));
    t.check("trick3-contr-morphism", [&] { return ar_morphism_to_json(f); }, [&] {
        return check_contr_morphism(ContrMorphism{src.contraction, tgt.contraction, bad});
    });
}

void mutation_side_conditions_trial(Trial& t) {
    // the generator "forgets" to normalize: SDR data checked as a contraction
    Sdr sdr = generate_random_sdr(t.cfg(), t.rng());
    t.check("contraction-side-conditions", [&] { return sdr_to_json(sdr); },
            [&] { return check_contraction(sdr).pass(); });
}

using TrialFn = void (*)(Trial&);

const std::vector<std::pair<std::string, TrialFn>>& campaigns() {
    static const std::vector<std::pair<std::string, TrialFn>> table = {
        {"tricks", tricks_trial},
        {"path", path_trial},
        {"semifree", semifree_trial},
        {"mc-ar", mc_ar_trial},
        {"mc-contr", mc_contr_trial},
        {"mutation-trick3-sign", mutation_trick3_trial},
        {"mutation-drop-side-conditions", mutation_side_conditions_trial},
    };
    return table;
}

TrialFn find_campaign(const std::string& name) {
    for (const auto& [n, fn] : campaigns())
        if (n == name) return fn;
    throw PreconditionError("unknown campaign \"" + name + "\"");
}

std::optional<Violation> run_trial(TrialFn fn, const GenConfig& cfg, std::uint64_t seed) {
    Trial t(cfg, seed);
    try {
        fn(t);
    } catch (const std::exception& e) {
        if (!t.violation()) return Violation{"unexpected-exception", json{{"error", e.what()}}};
    }
    return t.violation();
}

Violation shrink(TrialFn fn, GenConfig cfg, std::uint64_t seed, Violation v) {
    bool progress = true;
    while (progress) {
        progress = false;
        if (cfg.max_dim > 0) {
            GenConfig c2 = cfg;
            c2.max_dim = cfg.max_dim / 2;
            auto v2 = run_trial(fn, c2, seed);
            if (v2 && v2->identity == v.identity) {
                cfg = c2;
                v = *v2;
                progress = true;
                continue;
            }
        }
        if (cfg.hi > cfg.lo) {
            GenConfig c2 = cfg;
            c2.hi = cfg.lo + (cfg.hi - cfg.lo) / 2;
            auto v2 = run_trial(fn, c2, seed);
            if (v2 && v2->identity == v.identity) {
                cfg = c2;
                v = *v2;
                progress = true;
            }
        }
    }
    return v;
}

}  // namespace

json report_to_json(const FuzzReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"seed", f.seed}, {"identity", f.identity}, {"input", f.input}});
    return json{{"campaign", r.campaign}, {"trials", r.trials}, {"failures", std::move(failures)}};
}

FuzzReport run_campaign(const std::string& name, int trials, const GenConfig& cfg) {
    TrialFn fn = find_campaign(name);
    FuzzReport rep;
    rep.campaign = name;
    rep.trials = trials;
    for (int k = 0; k < trials; ++k) {
        std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(k));
        auto v = run_trial(fn, cfg, seed);
        if (v) {
            Violation s = shrink(fn, cfg, seed, *v);
            rep.failures.push_back(FuzzFailure{seed, s.identity, s.input});
        }
    }
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const FuzzFailure& a, const FuzzFailure& b) { return a.seed < b.seed; });
    return rep;
}

std::vector<std::string> campaign_names() {
    std::vector<std::string> names;
    for (const auto& [n, fn] : campaigns()) names.push_back(n);
    return names;
}

}  // namespace coch

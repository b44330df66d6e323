#include "coch/model.hpp"

namespace coch {

namespace {

void require_ar_morphism(const ArMorphism& m, const char* who) {
    if (!check_ar_morphism(m))
        throw PreconditionError(std::string(who) + ": not a morphism of acyclic retractions");
}

void require_contr_morphism(const ContrMorphism& m, const char* who) {
    if (!check_contr_morphism(m))
        throw PreconditionError(std::string(who) + ": not a morphism of contractions");
}

}  // namespace

ArMorphism lift_ar(const ArLiftingProblem& prob) {
    require_ar_morphism(prob.i, "lift_ar(i)");
    require_ar_morphism(prob.f, "lift_ar(f)");
    require_ar_morphism(prob.p, "lift_ar(p)");
    require_ar_morphism(prob.g, "lift_ar(g)");
    if (prob.i.src != prob.f.src || prob.i.tgt != prob.g.src || prob.f.tgt != prob.p.src ||
        prob.p.tgt != prob.g.tgt)
        throw PreconditionError("lift_ar: square corners do not match");
    if (compose(prob.p.f, prob.f.f) != compose(prob.g.f, prob.i.f))
        throw PreconditionError("lift_ar: square does not commute");

    LiftingProblem cp{prob.i.f, prob.f.f, prob.p.f, prob.g.f};
    GradedMap h0 = lift_coch(cp, prob.witness);
    ArMorphism hat = trick1(h0, prob.i.tgt, prob.f.tgt);
    if (!check_ar_morphism(hat)) throw InvariantViolation("lift_ar: straightened lift invalid");
    if (compose(hat.f, prob.i.f) != prob.f.f || compose(prob.p.f, hat.f) != prob.g.f)
        throw InvariantViolation("lift_ar: lifting equations fail after straightening");
    return hat;
}

ContrMorphism lift_contr(const ContrLiftingProblem& prob) {
    require_contr_morphism(prob.i, "lift_contr(i)");
    require_contr_morphism(prob.f, "lift_contr(f)");
    require_contr_morphism(prob.p, "lift_contr(p)");
    require_contr_morphism(prob.g, "lift_contr(g)");
    ArLiftingProblem ap{prob.i.underlying_ar(), prob.f.underlying_ar(), prob.p.underlying_ar(),
                        prob.g.underlying_ar(), prob.witness};
    ArMorphism h = lift_ar(ap);
    ContrMorphism out = trick3(SdrMorphism{prob.i.tgt, prob.p.src, h.f});
    if (compose(out.f, prob.i.f) != prob.f.f || compose(prob.p.f, out.f) != prob.g.f)
        throw InvariantViolation("lift_contr: lifting equations fail after straightening");
    return out;
}

ArFactorization factor_ar(const ArMorphism& f, Flavor flavor) {
    require_ar_morphism(f, "factor_ar");
    const AcyclicRetraction& src = f.src; // (A, B, iota, pi)
    const AcyclicRetraction& tgt = f.tgt; // (M, N, i, p)

    ArFactorization out;
    out.input = f;
    out.flavor = flavor;
    out.base = base_morphism(f);
    out.base_fact =
        flavor == Flavor::C_FW ? factor_coch_c_fw(out.base) : factor_coch_cw_f(out.base);
    const GradedMap& g = out.base_fact.left;  // A -> P
    const GradedMap& h = out.base_fact.right; // P -> M

    out.po = pushout(g, src.iota);  // from_left: P -> PB, from_right: B -> PB
    out.pb = pullback(tgt.pi, h);   // to_left: T -> N, to_right: T -> P

    const Complex& p_mid = out.base_fact.middle;
    out.psi1 = out.po.mediate(GradedMap::identity(p_mid), compose(g, src.pi));
    out.psi2 = out.po.mediate(compose(tgt.iota, h), f.f);
    out.phi = out.pb.mediate(out.psi2, out.psi1);
    out.phi_fact =
        flavor == Flavor::C_FW ? factor_coch_c_fw(out.phi) : factor_coch_cw_f(out.phi);
    const GradedMap& gamma = out.phi_fact.left;  // PB -> Q
    const GradedMap& delta = out.phi_fact.right; // Q -> T

    out.middle = AcyclicRetraction{p_mid, out.phi_fact.middle,
                                   compose(gamma, out.po.from_left),
                                   compose(out.pb.to_right, delta)};
    out.left = ArMorphism{src, out.middle, compose(gamma, out.po.from_right)};
    out.right = ArMorphism{out.middle, tgt, compose(out.pb.to_left, delta)};
    out.left_witness = compose_witnesses(
        transport_witness_pushout(out.base_fact.witness, out.po), out.phi_fact.witness);

    if (compose(out.middle.pi, out.middle.iota) != GradedMap::identity(p_mid))
        throw InvariantViolation("factor_ar: middle row composite is not the identity");
    Report mid = check_ar(out.middle);
    if (!mid.pass())
        throw InvariantViolation("factor_ar: middle is not an acyclic retraction: " +
                                 mid.to_string());
    if (!check_ar_morphism(out.left) || !check_ar_morphism(out.right))
        throw InvariantViolation("factor_ar: legs are not AR morphisms");
    if (compose(out.right.f, out.left.f) != f.f)
        throw InvariantViolation("factor_ar: composition does not recover the input");
    bool left_cof = is_cofibration(out.left.f);
    bool right_fib = is_fibration(out.right.f);
    bool left_triv = is_quasi_iso(out.left.f);
    bool right_triv = is_quasi_iso(out.right.f);
    bool ok = flavor == Flavor::C_FW ? (left_cof && right_fib && right_triv)
                                     : (left_cof && left_triv && right_fib);
    if (!ok) throw InvariantViolation("factor_ar: legs fail their classification");
    return out;
}

GradedMap lift_contraction_homotopy(const ArMorphism& alpha, const ArMorphism& beta,
                                    const Contraction& src, const Contraction& tgt,
                                    const CofibrationWitness& alpha_witness) {
    require_ar_morphism(alpha, "lift_contraction_homotopy(alpha)");
    require_ar_morphism(beta, "lift_contraction_homotopy(beta)");
    if (!(alpha.src == src.ar) || !(beta.tgt == tgt.ar) || !(alpha.tgt == beta.src))
        throw PreconditionError("lift_contraction_homotopy: factorization shape mismatch");
    Report rs = check_contraction(src);
    Report rt = check_contraction(tgt);
    if (!rs.pass() || !rt.pass())
        throw PreconditionError("lift_contraction_homotopy: endpoints are not contractions");
    GradedMap fmap = compose(beta.f, alpha.f);
    if (compose(fmap, src.h) != compose(tgt.h, fmap))
        throw PreconditionError(
            "lift_contraction_homotopy: composite is not a morphism of contractions");

    // a leg that is literally the identity pins the middle homotopy
    if (alpha.f.is_identity() && alpha.src == alpha.tgt) {
        if (compose(beta.f, src.h) != compose(tgt.h, beta.f))
            throw InvariantViolation("lift_contraction_homotopy: identity-leg case inconsistent");
        return src.h;
    }
    if (beta.f.is_identity() && beta.src == beta.tgt) {
        if (compose(alpha.f, src.h) != compose(tgt.h, alpha.f))
            throw InvariantViolation("lift_contraction_homotopy: identity-leg case inconsistent");
        return tgt.h;
    }

    const Complex& q = alpha.tgt.N;
    const Complex& n = tgt.ar.N;
    PathObject pq = path_object(q);
    PathObject pn = path_object(n);
    const DirectSum& qq = pq.target_sum;
    const DirectSum& nn = pn.target_sum;

    GradedMap betabeta = compose(nn.incl_left, compose(beta.f, qq.proj_left)) +
                         compose(nn.incl_right, compose(beta.f, qq.proj_right));
    PullbackData t = pullback(pn.proj, betabeta); // P(N) x_{N+N} (Q+Q)
    GradedMap gamma = t.mediate(path_functor_map(pq, pn, beta.f), pq.proj);
    if (!is_fibration(gamma))
        throw InvariantViolation("lift_contraction_homotopy: comparison map is not a fibration");

    GradedMap top = into_path(pq, compose(alpha.f, compose(src.ar.iota, src.ar.pi)), alpha.f,
                              compose(alpha.f, src.h));
    GradedMap jq = compose(alpha.tgt.iota, alpha.tgt.pi);
    GradedMap phi1 = into_path(pn, compose(compose(tgt.ar.iota, tgt.ar.pi), beta.f), beta.f,
                               compose(tgt.h, beta.f));
    GradedMap phi2 =
        compose(qq.incl_left, jq) + compose(qq.incl_right, GradedMap::identity(q));
    GradedMap bottom = t.mediate(phi1, phi2);
    if (compose(gamma, top) != compose(bottom, alpha.f))
        throw InvariantViolation("lift_contraction_homotopy: path square does not commute");

    LiftingProblem lp{alpha.f, top, gamma, bottom};
    GradedMap psi = lift_coch(lp, alpha_witness);
    PathComponents comp = from_path(pq, psi);
    if (comp.first != jq || !comp.second.is_identity())
        throw InvariantViolation("lift_contraction_homotopy: lift has wrong forced components");

    Sdr mid_sdr{alpha.tgt, comp.homotopy};
    Report sr = check_sdr(mid_sdr);
    if (!sr.pass())
        throw InvariantViolation("lift_contraction_homotopy: lifted homotopy fails C1");
    if (compose(comp.homotopy, alpha.f) != compose(alpha.f, src.h) ||
        compose(beta.f, comp.homotopy) != compose(tgt.h, beta.f))
        throw InvariantViolation("lift_contraction_homotopy: legs fail the SDR conditions");

    GradedMap l = trick2(mid_sdr).h;
    if (compose(l, alpha.f) != compose(alpha.f, src.h) ||
        compose(beta.f, l) != compose(tgt.h, beta.f))
        throw InvariantViolation(
            "lift_contraction_homotopy: normalization broke the leg conditions");
    return l;
}

ContrFactorization factor_contr(const ContrMorphism& f, Flavor flavor) {
    require_contr_morphism(f, "factor_contr");
    ContrFactorization out;
    out.input = f;
    out.ar = factor_ar(f.underlying_ar(), flavor);
    GradedMap l = lift_contraction_homotopy(out.ar.left, out.ar.right, f.src, f.tgt,
                                            out.ar.left_witness);
    out.middle = Contraction{out.ar.middle, l};
    Report mr = check_contraction(out.middle);
    if (!mr.pass())
        throw InvariantViolation("factor_contr: middle fails check_contraction: " + mr.to_string());
    out.left = ContrMorphism{f.src, out.middle, out.ar.left.f};
    out.right = ContrMorphism{out.middle, f.tgt, out.ar.right.f};
    if (!check_contr_morphism(out.left) || !check_contr_morphism(out.right))
        throw InvariantViolation("factor_contr: legs are not contraction morphisms");
    if (compose(out.right.f, out.left.f) != f.f)
        throw InvariantViolation("factor_contr: composition does not recover the input");
    return out;
}

ContrMorphism factorization_naturality(const ContrSquare& square, const ContrFactorization& fact1,
                                       const ContrFactorization& fact2) {
    require_contr_morphism(square.f1, "factorization_naturality(f1)");
    require_contr_morphism(square.f2, "factorization_naturality(f2)");
    require_contr_morphism(square.phi1, "factorization_naturality(phi1)");
    require_contr_morphism(square.phi2, "factorization_naturality(phi2)");
    if (compose(square.f2.f, square.phi1.f) != compose(square.phi2.f, square.f1.f))
        throw PreconditionError("factorization_naturality: square does not commute");
    if (!(fact1.input.src == square.f1.src) || !(fact1.input.tgt == square.f1.tgt) ||
        fact1.input.f != square.f1.f || !(fact2.input.src == square.f2.src) ||
        !(fact2.input.tgt == square.f2.tgt) || fact2.input.f != square.f2.f)
        throw PreconditionError("factorization_naturality: factorizations do not match verticals");
    if (fact1.ar.flavor != fact2.ar.flavor)
        throw PreconditionError("factorization_naturality: mixed flavors");

    // the identity square maps to the identity connecting morphism
    if (square.phi1.f.is_identity() && square.phi2.f.is_identity() &&
        fact1.middle == fact2.middle) {
        ContrMorphism id{fact1.middle, fact2.middle, GradedMap::identity(fact1.middle.ar.N)};
        return id;
    }

    GradedMap a = base_morphism(square.phi1.underlying_ar()); // A1 -> A2
    GradedMap m = base_morphism(square.phi2.underlying_ar()); // M1 -> M2

    LiftingProblem chi_sq{fact1.ar.base_fact.left, compose(fact2.ar.base_fact.left, a),
                          fact2.ar.base_fact.right, compose(m, fact1.ar.base_fact.right)};
    Report cr = check_lifting_problem(chi_sq);
    if (!cr.pass())
        throw InvariantViolation("factorization_naturality: base square broken: " + cr.to_string());
    GradedMap chi = lift_coch(chi_sq, fact1.ar.base_fact.witness);

    GradedMap u = fact1.ar.po.mediate(compose(fact2.ar.po.from_left, chi),
                                      compose(fact2.ar.po.from_right, square.phi1.f));
    GradedMap v = fact2.ar.pb.mediate(compose(square.phi2.f, fact1.ar.pb.to_left),
                                      compose(chi, fact1.ar.pb.to_right));

    LiftingProblem zeta_sq{fact1.ar.phi_fact.left, compose(fact2.ar.phi_fact.left, u),
                           fact2.ar.phi_fact.right, compose(v, fact1.ar.phi_fact.right)};
    Report zr = check_lifting_problem(zeta_sq);
    if (!zr.pass())
        throw InvariantViolation("factorization_naturality: comparison square broken: " +
                                 zr.to_string());
    GradedMap zeta = lift_coch(zeta_sq, fact1.ar.phi_fact.witness);

    ArMorphism psi{fact1.ar.middle, fact2.ar.middle, zeta};
    if (!check_ar_morphism(psi))
        throw InvariantViolation("factorization_naturality: connecting map is not an AR morphism");
    ContrMorphism out = trick3(SdrMorphism{fact1.middle, fact2.middle, zeta});
    if (compose(out.f, fact1.left.f) != compose(fact2.left.f, square.phi1.f))
        throw InvariantViolation("factorization_naturality: top square does not commute");
    if (compose(fact2.right.f, out.f) != compose(square.phi2.f, fact1.right.f))
        throw InvariantViolation("factorization_naturality: bottom square does not commute");
    return out;
}

}  // namespace coch

#include <doctest.h>

#include "coch/cohomology.hpp"
#include "coch/generate.hpp"
#include "coch/limits.hpp"

using namespace coch;

namespace {
const Field F5 = Field::fp(5);

/* Jointly epi legs make the pushout mediating map unique; injective
 * inclusion makes the pullback one unique. */
bool pushout_legs_jointly_epi(const PushoutData& po) {
    for (int i = po.object.lo(); i <= po.object.hi(); ++i) {
        Matrix m = hstack(po.from_left.block(i), po.from_right.block(i));
        if (rank(m) != static_cast<std::size_t>(po.object.dim(i))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("pushout along zero and along the identity") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(1);
    GeneratedComplex p = generate_random_complex(cfg, rng);
    GeneratedComplex b = generate_random_complex(cfg, rng);
    Complex zero = Complex::zero(F5);

    // A = 0: the pushout is the direct sum
    PushoutData po = pushout(GradedMap(zero, p.complex, 0), GradedMap(zero, b.complex, 0));
    for (int i = po.object.lo(); i <= po.object.hi(); ++i)
        CHECK(po.object.dim(i) == p.complex.dim(i) + b.complex.dim(i));
    CHECK(validate_complex(po.object).pass());

    // pushout of Id along Id collapses back to A
    GradedMap id = GradedMap::identity(p.complex);
    PushoutData po2 = pushout(id, id);
    for (int i = p.complex.lo(); i <= p.complex.hi(); ++i)
        CHECK(po2.object.dim(i) == p.complex.dim(i));
    CHECK(is_quasi_iso(po2.from_left));
}

TEST_CASE("pushout of a cofibration is a cofibration and mediating maps are unique") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        GeneratedComplex a = generate_random_complex(cfg, rng);
        GeneratedComplex ge = generate_random_complex(cfg, rng);
        GeneratedComplex b = generate_random_complex(cfg, rng);
        // an injective g: A -> A + E, conjugated
        DirectSum ds = direct_sum(a.complex, ge.complex);
        Conjugation cj = random_conjugation(ds.sum, cfg, rng);
        GradedMap g = compose(cj.fwd, ds.incl_left);
        GradedMap i = random_chain_map(a.structure, b.structure, rng);
        REQUIRE(is_cofibration(g));
        PushoutData po = pushout(g, i);
        CHECK(validate_complex(po.object).pass());
        CHECK(is_chain_map(po.from_left));
        CHECK(is_chain_map(po.from_right));
        CHECK(compose(po.from_left, g) == compose(po.from_right, i));
        CHECK(is_cofibration(po.from_right)); // the pushout of the cofibration g
        CHECK(pushout_legs_jointly_epi(po));

        // universal property on a real cone
        GeneratedComplex tc = generate_random_complex(cfg, rng);
        GradedMap w0 = random_chain_map_generic(po.object, tc.complex, rng);
        GradedMap u = compose(w0, po.from_left), v = compose(w0, po.from_right);
        GradedMap w = po.mediate(u, v);
        CHECK(w == w0); // joint surjectivity forces the unique solution
    }
}

TEST_CASE("pullback over zero and along the identity") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(3);
    GeneratedComplex n = generate_random_complex(cfg, rng);
    GeneratedComplex p = generate_random_complex(cfg, rng);
    Complex zero = Complex::zero(F5);

    PullbackData pb = pullback(GradedMap(n.complex, zero, 0), GradedMap(p.complex, zero, 0));
    for (int i = pb.object.lo(); i <= pb.object.hi(); ++i)
        CHECK(pb.object.dim(i) == n.complex.dim(i) + p.complex.dim(i));

    GradedMap id = GradedMap::identity(n.complex);
    PullbackData pb2 = pullback(id, id);
    for (int i = n.complex.lo(); i <= n.complex.hi(); ++i)
        CHECK(pb2.object.dim(i) == n.complex.dim(i)); // the diagonal
    CHECK(is_quasi_iso(pb2.to_left));
}

TEST_CASE("pullback of a trivial fibration is one and mediating maps are unique") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        GeneratedComplex m = generate_random_complex(cfg, rng);
        GradedMap p = generate_surjective_qis(cfg, rng, m.complex); // N -> M
        GeneratedComplex pc = generate_random_complex(cfg, rng);
        GradedMap h = random_chain_map(pc.structure, m.structure, rng);
        REQUIRE(is_fibration(p));
        REQUIRE(is_quasi_iso(p));
        PullbackData pb = pullback(p, h);
        CHECK(validate_complex(pb.object).pass());
        CHECK(compose(p, pb.to_left) == compose(h, pb.to_right));
        CHECK(is_fibration(pb.to_right));
        CHECK(is_quasi_iso(pb.to_right)); // the pullback of the trivial fibration p

        GeneratedComplex tc = generate_random_complex(cfg, rng);
        GradedMap w0 = random_chain_map_generic(tc.complex, pb.object, rng);
        GradedMap u = compose(pb.to_left, w0), v = compose(pb.to_right, w0);
        GradedMap w = pb.mediate(u, v);
        CHECK(w == w0); // injectivity of the kernel inclusion forces uniqueness
    }
}

TEST_CASE("mediating maps reject non-cones") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(5);
    GeneratedComplex a = generate_random_complex(cfg, rng);
    Complex s0 = Complex::sphere(F5, 0);
    GradedMap g = GradedMap(a.complex, s0, 0);
    // ensure the map is nonzero in degree 0 if possible
    if (a.complex.dim(0) > 0) {
        Matrix blk(F5, 1, static_cast<std::size_t>(a.complex.dim(0)));
        blk.set(0, 0, Scalar::one(F5));
        if (is_chain_map([&] {
                GradedMap t = g;
                t.set_block(0, blk);
                return t;
            }()))
            g.set_block(0, blk);
    }
    PushoutData po = pushout(GradedMap::identity(a.complex), GradedMap::identity(a.complex));
    GeneratedComplex tc = generate_random_complex(cfg, rng);
    GradedMap u = random_chain_map_generic(a.complex, tc.complex, rng);
    GradedMap v = random_chain_map_generic(a.complex, tc.complex, rng);
    if (u != v) CHECK_THROWS_AS(po.mediate(u, v), InvariantViolation);
}

TEST_CASE("kernel and image subcomplexes") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        GeneratedComplex x = generate_random_complex(cfg, rng);
        GeneratedComplex y = generate_random_complex(cfg, rng);
        GradedMap f = random_chain_map(x.structure, y.structure, rng);
        Subcomplex k = kernel_subcomplex(f);
        CHECK(validate_complex(k.object).pass());
        CHECK(compose(f, k.inclusion).is_zero());
        CHECK(is_cofibration(k.inclusion));

        ImageData im = image_subcomplex(f);
        CHECK(validate_complex(im.object).pass());
        CHECK(compose(im.inclusion, im.corestriction) == f);
        CHECK(is_fibration(im.corestriction));
        CHECK(is_cofibration(im.inclusion));
        for (int i = x.complex.lo(); i <= x.complex.hi(); ++i)
            CHECK(k.object.dim(i) + im.object.dim(i) == x.complex.dim(i));
    }
}

#include <doctest.h>

#include "coch/cohomology.hpp"
#include "coch/generate.hpp"
#include "coch/path.hpp"

using namespace coch;

namespace {
const Field F2 = Field::fp(2);
const Field F5 = Field::fp(5);
const Field Q = Field::rationals();
}  // namespace

TEST_CASE("validate_complex") {
    CHECK(validate_complex(Complex::disk(Q, 1)).pass());
    // both differentials equal to [1] force d*d = 1
    Complex bad(Q, 0, {1, 1, 1}, {Matrix::identity(Q, 1), Matrix::identity(Q, 1)});
    Report r = validate_complex(bad);
    CHECK(!r.pass());
    CHECK(r.failures[0].find("degree 0") != std::string::npos);

    GenConfig cfg;
    for (std::uint64_t s = 0; s < 20; ++s)
        CHECK(validate_complex(random_complex(cfg.with_seed(s))).pass());
}

TEST_CASE("construction rejects bad shapes") {
    CHECK_THROWS_AS(Complex(Q, 0, {1, 1}, {Matrix::zero(Q, 2, 1)}), DimensionError);
    CHECK_THROWS_AS(Complex(Q, 0, {1, 1}, {}), DimensionError);
}

TEST_CASE("compose identities and the disk homotopy square") {
    GenConfig cfg;
    cfg.field = F5;
    Complex x = random_complex(cfg.with_seed(3));
    Rng rng(4);
    GeneratedComplex gx = generate_random_complex(cfg.with_seed(5), rng);
    GeneratedComplex gy = generate_random_complex(cfg.with_seed(6), rng);
    GradedMap f = random_chain_map(gx.structure, gy.structure, rng);
    CHECK(compose(GradedMap::identity(gy.complex), f) == f);
    CHECK(compose(f, GradedMap::identity(gx.complex)) == f);
    CHECK(compose(f, GradedMap(gx.complex, gx.complex, 0)).is_zero());

    // disk contraction homotopy: h squares to zero in degree -2
    Complex d1 = Complex::disk(Q, 1);
    GradedMap h(d1, d1, -1);
    h.set_block(1, Matrix::from_ints(Q, 1, 1, {-1}));
    GradedMap hh = compose(h, h);
    CHECK(hh.degree() == -2);
    CHECK(hh.is_zero());

    // d_commutator of that homotopy is -Id (the whole complex contracts)
    CHECK(d_commutator(h) == -GradedMap::identity(d1));
    CHECK(d_commutator(GradedMap(d1, d1, -1)).is_zero());
    CHECK(d_commutator(f).is_zero()); // chain maps commute with d
    CHECK_THROWS_AS(d_commutator(hh), PreconditionError);
}

TEST_CASE("cohomology of spheres, disks and a pinned F_2 example") {
    CohomologyData hs(Complex::sphere(Q, 0));
    CHECK(hs.dim(0) == 1);
    CHECK(hs.dim(1) == 0);

    CohomologyData hd(Complex::disk(Q, 1));
    CHECK(hd.dim(0) == 0);
    CHECK(hd.dim(1) == 0);

    // dims {0:2, 1:1}, d = [1 0] over F_2; cocycle enumeration gives
    // Z^0 = {(0,0),(0,1)} so H^0 = 1, and B^1 = Z^1 = F_2 so H^1 = 0
    Complex x(F2, 0, {2, 1}, {Matrix::from_ints(F2, 1, 2, {1, 0})});
    CohomologyData hx(x);
    CHECK(hx.dim(0) == 1);
    CHECK(hx.dim(1) == 0);
    int cocycles = 0;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            if ((x.diff(0) * Matrix::from_ints(F2, 2, 1, {a, b})).is_zero()) ++cocycles;
    CHECK(cocycles == 2);
}

TEST_CASE("induced_map and the predicates") {
    Complex d1 = Complex::disk(Q, 1);
    Complex s0 = Complex::sphere(Q, 0);
    Complex zero = Complex::zero(Q);

    GradedMap id = GradedMap::identity(s0);
    for (const auto& [i, m] : induced_map(id)) CHECK(m == Matrix::identity(Q, m.rows()));
    CHECK(is_quasi_iso(id));
    CHECK(is_fibration(id));
    CHECK(is_cofibration(id));

    // any map into an acyclic complex induces zero
    Complex s1 = Complex::sphere(Q, 1);
    GradedMap into_disk(s1, d1, 0);
    into_disk.set_block(1, Matrix::from_ints(Q, 1, 1, {1})); // sphere onto the disk top
    REQUIRE(is_chain_map(into_disk));
    for (const auto& [i, m] : induced_map(into_disk)) CHECK(m.is_zero());

    GradedMap collapse(d1, zero, 0);
    CHECK(is_fibration(collapse));
    CHECK(is_quasi_iso(collapse));
    CHECK(!is_cofibration(collapse));

    GradedMap from_zero(zero, s0, 0);
    CHECK(is_cofibration(from_zero));
    CHECK(!is_quasi_iso(from_zero));
    CHECK(!is_fibration(from_zero));
}

TEST_CASE("shift") {
    GenConfig cfg;
    Complex x = random_complex(cfg.with_seed(9));
    CHECK(shift(x, 0) == x);
    Complex d1 = Complex::disk(Q, 1);
    Complex sh = shift(d1, -1);
    CHECK(sh.dim(1) == 1);
    CHECK(sh.dim(2) == 1);
    CHECK(sh.dim(0) == 0);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) CHECK(shift(shift(x, a), b) == shift(x, a + b));
}

TEST_CASE("direct_sum") {
    GenConfig cfg;
    cfg.field = F5;
    Complex x = random_complex(cfg.with_seed(11));
    Complex y = random_complex(cfg.with_seed(12));
    DirectSum s = direct_sum(x, y);
    for (int i = s.sum.lo() - 1; i <= s.sum.hi() + 1; ++i)
        CHECK(s.sum.dim(i) == x.dim(i) + y.dim(i));
    CHECK(validate_complex(s.sum).pass());
    CHECK(compose(s.proj_left, s.incl_left).is_identity());
    CHECK(compose(s.proj_right, s.incl_right).is_identity());
    CHECK(compose(s.proj_left, s.incl_right).is_zero());

    DirectSum withzero = direct_sum(x, Complex::zero(F5));
    for (int i = x.lo(); i <= x.hi(); ++i) CHECK(withzero.sum.dim(i) == x.dim(i));

    // H(X + Y) has the dimensions of H(X) + H(Y)
    CohomologyData hx(x), hy(y), hs(s.sum);
    for (int i = s.sum.lo(); i <= s.sum.hi(); ++i) CHECK(hs.dim(i) == hx.dim(i) + hy.dim(i));
}

TEST_CASE("path object on the pinned examples") {
    PathObject p0 = path_object(Complex::zero(Q));
    CHECK(p0.object.is_zero_complex());

    PathObject ps = path_object(Complex::sphere(Q, 0));
    CHECK(ps.object.dim(0) == 2);
    CHECK(ps.object.dim(1) == 1);
    CHECK(validate_complex(ps.object).pass());
    CohomologyData hp(ps.object);
    CHECK(hp.dim(0) == 1); // H(P(S(0))) matches H(S(0))
    CHECK(hp.dim(1) == 0);
    CHECK(is_quasi_iso(ps.incl));

    PathObject pd = path_object(Complex::disk(Q, 1));
    CHECK(is_fibration(pd.proj));
    CHECK(validate_complex(pd.object).pass());
}

TEST_CASE("path functoriality on random maps") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(21);
    GeneratedComplex a = generate_random_complex(cfg, rng);
    GeneratedComplex b = generate_random_complex(cfg, rng);
    GeneratedComplex c = generate_random_complex(cfg, rng);
    GradedMap f = random_chain_map(a.structure, b.structure, rng);
    GradedMap g = random_chain_map(b.structure, c.structure, rng);
    PathObject pa = path_object(a.complex), pb = path_object(b.complex),
               pc = path_object(c.complex);
    CHECK(path_functor_map(pa, pc, compose(g, f)) ==
          compose(path_functor_map(pb, pc, g), path_functor_map(pa, pb, f)));
    CHECK(path_functor_map(pa, pa, GradedMap::identity(a.complex)).is_identity());
}

TEST_CASE("sdr_as_path_map is the C1 detector") {
    // trivial contraction
    GenConfig cfg;
    Complex x = random_complex(cfg.with_seed(31));
    PathObject px = path_object(x);
    CHECK(is_chain_map(sdr_as_path_map(px, Sdr::trivial(x))));

    // disk contraction
    Complex d1 = Complex::disk(Q, 1);
    Sdr disk{AcyclicRetraction{Complex::zero(Q), d1, GradedMap(Complex::zero(Q), d1, 0),
                               GradedMap(d1, Complex::zero(Q), 0)},
             GradedMap(d1, d1, -1)};
    disk.h.set_block(1, Matrix::from_ints(Q, 1, 1, {-1}));
    PathObject pd = path_object(d1);
    CHECK(is_chain_map(sdr_as_path_map(pd, disk)));

    // corrupt h so C1 breaks: the path map stops being a chain map
    Sdr corrupted = disk;
    corrupted.h.set_block(1, Matrix::from_ints(Q, 1, 1, {1}));
    CHECK(!is_chain_map(sdr_as_path_map(pd, corrupted)));
}

TEST_CASE("path sequence exactness for surjections") {
    GenConfig cfg;
    cfg.field = F5;
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        GradedMap q = generate_surjection(cfg, rng);
        CHECK(check_path_sequence_exact(q).pass());
    }
    for (int t = 0; t < 5; ++t) {
        GradedMap q = generate_surjective_qis(cfg, rng);
        CHECK(check_path_sequence_exact(q).pass());
    }
}

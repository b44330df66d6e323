#pragma once

#include <cstdint>

#include "coch/model.hpp"

namespace coch {

/* Self-contained splitmix64 generator; std distributions are avoided so
 * reports stay byte-identical everywhere. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n); // uniform in [0, n), n > 0
    int range(int lo, int hi);            // inclusive
    bool chance(int num, int den);        // true with probability num/den
    Scalar scalar(const Field& f);
    Scalar nonzero_scalar(const Field& f);
    Rng fork(std::uint64_t stream) const;

private:
    std::uint64_t s_;
};

/* Derives the per-trial seed of a campaign. */
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct GenConfig {
    std::uint64_t seed = 1;
    Field field = Field::fp(5);
    int lo = -2, hi = 2; // support window
    int max_dim = 4;     // per-degree dimension bound
    int density_num = 1, density_den = 2; // nonzero probability in random automorphisms

    GenConfig with_seed(std::uint64_t s) const {
        GenConfig c = *this;
        c.seed = s;
        return c;
    }
};

/* Sum-of-pieces bookkeeping: generated complexes are conjugated sums of
 * spheres and disks, and chain maps between them are sampled piecewise
 * (that covers the whole chain-map space) and conjugated back. Layout of
 * the structured complex: all spheres in list order, then all disks. */
struct PieceList {
    std::vector<int> spheres; // degrees
    std::vector<int> disks;   // top degrees; D(n) spans degrees n-1, n
};

Complex build_piece_complex(const Field& f, const PieceList& pieces);

struct PieceStructure {
    PieceList pieces;
    Complex structured;
    GradedMap fwd; // structured -> ambient (iso chain map)
    GradedMap bwd; // inverse
};

struct GeneratedComplex {
    Complex complex;
    PieceStructure structure;
};

struct Conjugation {
    Complex conj;
    GradedMap fwd, bwd;
};

Matrix random_invertible(const Field& f, std::size_t n, const GenConfig& cfg, Rng& rng);
Conjugation random_conjugation(const Complex& x, const GenConfig& cfg, Rng& rng);

/* Unconstrained random blocks, used for homotopy perturbations. */
GradedMap random_graded_map(const Complex& src, const Complex& tgt, int degree,
                            const GenConfig& cfg, Rng& rng);

GeneratedComplex generate_random_complex(const GenConfig& cfg, Rng& rng);
Complex random_complex(const GenConfig& cfg);

/* Uniform over all chain maps between two generated complexes. */
GradedMap random_chain_map(const PieceStructure& a, const PieceStructure& b, Rng& rng);

/* Random element of the full chain-map space between arbitrary complexes,
 * sampled from the kernel of the chain-condition system. Cost grows with
 * dim(src) * dim(tgt); meant for small instances. */
GradedMap random_chain_map_generic(const Complex& src, const Complex& tgt, Rng& rng);

struct GeneratedContraction {
    Contraction contraction;
    PieceStructure structure;   // of the big complex N
    PieceStructure m_structure; // of M, which stays unconjugated
};

/* N = M + disks with the projection retraction and h = -(disk contracting
 * homotopy), conjugated by a random automorphism of N. */
GeneratedContraction generate_random_contraction(const GenConfig& cfg, Rng& rng);
Contraction random_contraction(const GenConfig& cfg);

/* Disk-sum contraction before conjugation; building block kept public so
 * the hand examples stay constructible. */
GeneratedContraction structured_contraction(const Field& f, const PieceList& m_pieces,
                                            const std::vector<int>& disk_tops);
GeneratedContraction conjugate_contraction(const GeneratedContraction& c, const GenConfig& cfg,
                                           Rng& rng);

/* Contraction homotopy perturbed by d xi - xi d: C1 survives, the side
 * conditions generically break. */
Sdr generate_random_sdr(const GenConfig& cfg, Rng& rng);
Sdr random_sdr(const GenConfig& cfg);

/* X = target + disks -> target, conjugated on the source: a surjective
 * quasi-isomorphism. */
GradedMap generate_surjective_qis(const GenConfig& cfg, Rng& rng, const Complex& target);
GradedMap generate_surjective_qis(const GenConfig& cfg, Rng& rng);

/* A random chain map corestricted to its image: a generic degreewise
 * surjection, generically not a quasi-isomorphism. */
GradedMap generate_surjection(const GenConfig& cfg, Rng& rng);

}  // namespace coch

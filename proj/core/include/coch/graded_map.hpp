#pragma once

#include <map>

#include "coch/complex.hpp"

namespace coch {

/* Degree-n family of matrices f_i : src^i -> tgt^{i+n}. Chain maps are the
 * degree-0 members commuting with d; homotopies live in degree -1. Missing
 * blocks are zero. */
class GradedMap {
public:
    GradedMap();
    GradedMap(Complex src, Complex tgt, int degree);

    static GradedMap identity(const Complex& x);
    /* d as a degree +1 endomap of x. */
    static GradedMap differential(const Complex& x);

    const Complex& src() const { return src_; }
    const Complex& tgt() const { return tgt_; }
    int degree() const { return degree_; }

    Matrix block(int i) const;
    void set_block(int i, Matrix m);

    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap operator-() const;
    GradedMap scaled(const Scalar& s) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const GradedMap& o) const;
    bool operator!=(const GradedMap& o) const { return !(*this == o); }

private:
    Complex src_, tgt_;
    int degree_;
    std::map<int, Matrix> blocks_;
};

/* Blockwise product; degrees add. Throws on complex mismatch. */
GradedMap compose(const GradedMap& g, const GradedMap& f);

bool is_chain_map(const GradedMap& f);

/* For degree -1 input: d f + f d (the operator the perturbation formulas
 * are built from). For degree 0: d f - f d, the chain-map defect. Other
 * degrees are unsupported. */
GradedMap d_commutator(const GradedMap& f);

}  // namespace coch

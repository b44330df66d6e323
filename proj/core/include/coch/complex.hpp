#pragma once

#include <map>
#include <memory>
#include <vector>

#include "coch/matrix.hpp"
#include "coch/report.hpp"

namespace coch {

/* Finite-support cochain complex: dims over a window [lo, hi] and a
 * degree +1 differential d_i : X^i -> X^{i+1} for i in [lo, hi-1].
 * Degrees outside the window are implicitly zero. lo = hi + 1 encodes the
 * zero complex. Construction checks shapes only; d*d = 0 is a query
 * (validate_complex), so near-miss data can be represented. */
class Complex {
public:
    Complex();
    Complex(const Field& f, int lo, std::vector<int> dims, std::vector<Matrix> diffs);

    static Complex zero(const Field& f);
    static Complex sphere(const Field& f, int degree);          // one generator, d = 0
    static Complex disk(const Field& f, int degree);            // generators in degree-1, degree

    const Field& field() const { return d_->field; }
    int lo() const { return d_->lo; }
    int hi() const { return d_->hi; }
    bool is_zero_complex() const;

    int dim(int i) const;
    /* Differential X^i -> X^{i+1}; a zero matrix of the right shape when i
     * is outside [lo, hi-1]. */
    Matrix diff(int i) const;
    int total_dim() const;

    /* Content-wise: equal fields and equal dims/differentials as functions
     * of the degree, regardless of how the windows were stored. */
    bool operator==(const Complex& o) const;
    bool operator!=(const Complex& o) const { return !(*this == o); }

private:
    struct Data {
        Field field;
        int lo, hi;
        std::vector<int> dims;
        std::vector<Matrix> diffs;
        Data() : field(Field::rationals()), lo(0), hi(-1) {}
    };
    std::shared_ptr<const Data> d_;
};

/* Passes iff d has the declared shapes and d_{i+1} d_i = 0 exactly;
 * failures name each violating degree. */
Report validate_complex(const Complex& x);

/* X[n]^i = X^{i+n} with d_{X[n]} = (-1)^n d_X. */
Complex shift(const Complex& x, int n);

}  // namespace coch

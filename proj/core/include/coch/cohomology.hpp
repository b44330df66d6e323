#pragma once

#include "coch/graded_map.hpp"

namespace coch {

/* Per-degree cocycle data: representatives of H^i as columns in ambient
 * coordinates plus the pieces needed to express any cocycle's class in that
 * basis. Representatives come from the fixed elimination order, so induced
 * matrices are reproducible. */
class CohomologyData {
public:
    explicit CohomologyData(const Complex& x);

    const Complex& complex() const { return x_; }
    int dim(int degree) const;
    Matrix cocycles(int degree) const;        // basis of Z^i
    Matrix coboundaries(int degree) const;    // basis of B^i
    Matrix representatives(int degree) const; // H^i basis, columns are cocycles

    /* Coordinates of a cocycle's class in the representative basis. Throws
     * InvariantViolation when z is not a cocycle. */
    Matrix class_of(int degree, const Matrix& z) const;

private:
    Complex x_;
    std::map<int, Matrix> z_, b_, h_;
};

CohomologyData cohomology(const Complex& x);

/* Matrices of H(f) in the chosen representative bases, one per degree of
 * the combined support. */
std::map<int, Matrix> induced_map(const GradedMap& f);
std::map<int, Matrix> induced_map(const GradedMap& f, const CohomologyData& src,
                                  const CohomologyData& tgt);

bool is_quasi_iso(const GradedMap& f);
bool is_fibration(const GradedMap& f);   // degreewise surjective
bool is_cofibration(const GradedMap& f); // degreewise injective

}  // namespace coch

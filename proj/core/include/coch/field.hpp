#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "coch/errors.hpp"

namespace coch {

/* Coefficient field descriptor: a prime field F_p or the rationals Q.
 * Primality of p is checked at construction so that every nonzero residue
 * is invertible. */
class Field {
public:
    enum class Kind { Fp, Rational };

    static Field fp(std::uint64_t p);
    static Field rationals() { return Field(Kind::Rational, 0); }

    Kind kind() const { return kind_; }
    bool is_fp() const { return kind_ == Kind::Fp; }
    std::uint64_t prime() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/* Exact scalar over a runtime-chosen field. F_p residues live in [0, p);
 * rationals are canonical (gcd(|num|, den) = 1, den > 0, zero is 0/1),
 * which mpq_class maintains for us. */
class Scalar {
public:
    Scalar() : field_(Field::rationals()), v_(mpq_class(0)) {}
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    /* Residue reduced mod p, or the integer n/1 over Q. */
    static Scalar from_int(const Field& f, long n);
    static Scalar rational(long num, long den);
    static Scalar rational(const mpq_class& q);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    std::uint64_t residue() const;     // Fp only
    const mpq_class& fraction() const; // Q only

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const; // throws DimensionError on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Scalar(const Field& f, std::uint64_t r) : field_(f), v_(r) {}
    Scalar(const Field& f, mpq_class q) : field_(f), v_(std::move(q)) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace coch

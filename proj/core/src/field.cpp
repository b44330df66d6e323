#include "coch/field.hpp"

namespace coch {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

/* Extended Euclid on (a, p) with p prime and a in (0, p). */
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DimensionError("invmod: argument not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::fp(std::uint64_t p) {
    if (p >= (1ull << 31)) throw PreconditionError("prime field modulus too large");
    if (!is_prime(p)) throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::Fp, p);
}

std::string Field::to_string() const {
    return is_fp() ? "F_" + std::to_string(p_) : "Q";
}

Scalar Scalar::zero(const Field& f) {
    return f.is_fp() ? Scalar(f, std::uint64_t{0}) : Scalar(f, mpq_class(0));
}

Scalar Scalar::one(const Field& f) {
    return f.is_fp() ? Scalar(f, std::uint64_t{1} % f.prime()) : Scalar(f, mpq_class(1));
}

Scalar Scalar::from_int(const Field& f, long n) {
    if (!f.is_fp()) return Scalar(f, mpq_class(n));
    std::int64_t r = n % static_cast<std::int64_t>(f.prime());
    if (r < 0) r += static_cast<std::int64_t>(f.prime());
    return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DimensionError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(Field::rationals(), q);
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(Field::rationals(), c);
}

bool Scalar::is_zero() const {
    return field_.is_fp() ? std::get<std::uint64_t>(v_) == 0
                          : sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    return field_.is_fp() ? std::get<std::uint64_t>(v_) == 1 % field_.prime()
                          : std::get<mpq_class>(v_) == 1;
}

std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(v_); }

const mpq_class& Scalar::fraction() const { return std::get<mpq_class>(v_); }

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw DimensionError("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_fp()) {
        std::uint64_t s = residue() + o.residue();
        if (s >= field_.prime()) s -= field_.prime();
        return Scalar(field_, s);
    }
    return Scalar(field_, mpq_class(fraction() + o.fraction()));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_fp()) return Scalar(field_, mulmod(residue(), o.residue(), field_.prime()));
    return Scalar(field_, mpq_class(fraction() * o.fraction()));
}

Scalar Scalar::operator-() const {
    if (field_.is_fp()) {
        std::uint64_t r = residue();
        return Scalar(field_, r == 0 ? 0 : field_.prime() - r);
    }
    return Scalar(field_, mpq_class(-fraction()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DimensionError("inverse of zero scalar");
    if (field_.is_fp()) return Scalar(field_, invmod(residue(), field_.prime()));
    return Scalar(field_, mpq_class(1 / fraction()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.is_fp()) return residue() == o.residue();
    return fraction() == o.fraction();
}

std::string Scalar::to_string() const {
    if (field_.is_fp()) return std::to_string(residue());
    return fraction().get_num().get_str() + "/" + fraction().get_den().get_str();
}

}  // namespace coch

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace nodal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Field backend of a Scalar: exact rationals or a prime field F_p.
enum class Field : std::uint8_t { Rationals, Prime };

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact field element. Rational values are kept in lowest terms with a
/// positive denominator; prime-field residues are kept in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::Rationals), rat_(0) {}
    Scalar(long v) : field_(Field::Rationals), rat_(v) {}  // NOLINT(google-explicit-constructor)

    static Scalar rational(BigRat v) {
        Scalar s;
        s.rat_ = std::move(v);
        return s;
    }
    static Scalar rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        return rational(BigRat(num, den));
    }
    static Scalar mod(std::uint64_t value, std::uint64_t p) {
        if (p < 2) throw std::domain_error("prime modulus must be >= 2");
        Scalar s;
        s.field_ = Field::Prime;
        s.p_ = p;
        s.res_ = value % p;
        return s;
    }
    /// Reduce a rational mod p. Throws if p divides the denominator.
    static Scalar mod(const BigRat& v, std::uint64_t p);

    Field field() const { return field_; }
    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return field_ == Field::Rationals ? rat_.is_zero() : res_ == 0; }
    bool is_one() const { return field_ == Field::Rationals ? rat_ == 1 : res_ == 1; }

    const BigRat& rat() const {
        require(Field::Rationals);
        return rat_;
    }
    std::uint64_t residue() const {
        require(Field::Prime);
        return res_;
    }

    Scalar operator-() const {
        Scalar s(*this);
        if (field_ == Field::Rationals)
            s.rat_ = -s.rat_;
        else if (s.res_ != 0)
            s.res_ = p_ - s.res_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        match(o);
        if (field_ == Field::Rationals)
            rat_ += o.rat_;
        else
            res_ = add_mod(res_, o.res_, p_);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) {
        match(o);
        if (field_ == Field::Rationals)
            rat_ *= o.rat_;
        else
            res_ = mul_mod(res_, o.res_, p_);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.match(b);
        return a.field_ == Field::Rationals ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Deterministic total order within one backend (for canonical sorting).
    static int compare(const Scalar& a, const Scalar& b);

    std::string str() const;
    std::size_t hash() const;

    /// Zero/one in the same field as this value.
    Scalar zero_like() const { return field_ == Field::Rationals ? Scalar(0) : mod(0, p_); }
    Scalar one_like() const { return field_ == Field::Rationals ? Scalar(1) : mod(1, p_); }

    /// The integer n carried into the same field as this value.
    Scalar int_like(long n) const {
        if (field_ == Field::Rationals) return Scalar(n);
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return mod(static_cast<std::uint64_t>(r), p_);
    }

    /// Throws FieldMismatch unless both scalars live in the same field.
    void match_field(const Scalar& o) const { match(o); }

private:
    void require(Field f) const {
        if (field_ != f) throw FieldMismatch("scalar backend mismatch");
    }
    void match(const Scalar& o) const {
        if (field_ != o.field_ || (field_ == Field::Prime && p_ != o.p_))
            throw FieldMismatch("scalars from different fields");
    }
    static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        std::uint64_t s = a + b;
        if (s >= p || s < a) s -= p;
        return s;
    }
    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }

    Field field_;
    BigRat rat_;
    std::uint64_t res_ = 0;
    std::uint64_t p_ = 0;
};

}  // namespace nodal

template <>
struct std::hash<nodal::Scalar> {
    std::size_t operator()(const nodal::Scalar& s) const { return s.hash(); }
};

#include "nodal/scalar.hpp"

#include <boost/functional/hash.hpp>

namespace nodal {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    unsigned __int128 acc = 1, b = base % p;
    while (exp) {
        if (exp & 1) acc = acc * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

Scalar Scalar::mod(const BigRat& v, std::uint64_t p) {
    const BigInt num = boost::multiprecision::numerator(v) % p;
    const BigInt den = boost::multiprecision::denominator(v) % p;
    if (den == 0) throw std::domain_error("denominator divisible by the scan prime");
    auto lift = [&](const BigInt& x) {
        BigInt r = x % p;
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    };
    Scalar s = mod(lift(num), p);
    return s / mod(lift(den), p);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (field_ == Field::Rationals) return rational(1 / rat_);
    // Fermat: p is prime, so a^(p-2) inverts a.
    return mod(pow_mod(res_, p_ - 2, p_), p_);
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    a.match(b);
    if (a.field_ == Field::Rationals) return a.rat_ == b.rat_ ? 0 : (a.rat_ < b.rat_ ? -1 : 1);
    return a.res_ == b.res_ ? 0 : (a.res_ < b.res_ ? -1 : 1);
}

std::string Scalar::str() const {
    if (field_ == Field::Prime) return std::to_string(res_);
    const BigInt& num = boost::multiprecision::numerator(rat_);
    const BigInt& den = boost::multiprecision::denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::size_t Scalar::hash() const {
    std::size_t seed = static_cast<std::size_t>(field_);
    if (field_ == Field::Rationals) {
        boost::hash_combine(seed, boost::multiprecision::hash_value(rat_));
    } else {
        boost::hash_combine(seed, res_);
        boost::hash_combine(seed, p_);
    }
    return seed;
}

}  // namespace nodal

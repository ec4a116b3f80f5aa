#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace corealg {

/// Coefficient domain of a Scalar: the integers, the rationals, or a prime
/// field F_p.
struct Domain {
    enum class Kind { Int, Rat, Mod };

    Kind kind = Kind::Int;
    mpz_class p;  // modulus, Kind::Mod only

    static Domain integers() { return Domain{Kind::Int, 0}; }
    static Domain rationals() { return Domain{Kind::Rat, 0}; }
    static Domain prime_field(const mpz_class& p);

    bool is_field() const { return kind != Kind::Int; }
    std::string name() const;

    bool operator==(const Domain& o) const {
        return kind == o.kind && (kind != Kind::Mod || p == o.p);
    }
    bool operator!=(const Domain& o) const { return !(*this == o); }
};

/// An exact scalar: arbitrary-precision integer, rational in lowest terms
/// with positive denominator, or a prime-field element reduced to [0, p).
class Scalar {
public:
    Scalar() : dom_(Domain::integers()), num_(0), den_(1) {}

    static Scalar zero(const Domain& d) { return of_mpz(d, 0); }
    static Scalar one(const Domain& d) { return of_mpz(d, 1); }
    static Scalar of_int(const Domain& d, long v) { return of_mpz(d, mpz_class(v)); }
    static Scalar of_mpz(const Domain& d, const mpz_class& v);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    /// Parses "-12", "3/2" (Q), or an integer representative (F_p).
    static Scalar parse(const Domain& d, const std::string& text);

    const Domain& domain() const { return dom_; }
    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Exact division; requires a field, or exact divisibility over Z.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// The value as an integer; throws if the scalar is a non-integral rational.
    mpz_class as_integer() const;

    std::string str() const;

    /// Reinterprets the value in another domain (Z -> Q, Z/Q -> F_p by
    /// reduction, F_p -> Z by canonical representative).
    Scalar to_domain(const Domain& d) const;

private:
    Scalar(Domain d, mpz_class num, mpz_class den)
        : dom_(std::move(d)), num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Domain dom_;
    mpz_class num_;
    mpz_class den_;  // 1 unless Kind::Rat
};

}  // namespace corealg

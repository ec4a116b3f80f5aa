#include "hilbalg/scalar.hpp"

namespace corealg {

Domain Domain::prime_field(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("prime_field: modulus " + p.get_str() + " is not prime");
    return Domain{Kind::Mod, p};
}

std::string Domain::name() const {
    switch (kind) {
        case Kind::Int: return "Z";
        case Kind::Rat: return "Q";
        case Kind::Mod: return "F" + p.get_str();
    }
    return "?";
}

Scalar Scalar::of_mpz(const Domain& d, const mpz_class& v) {
    Scalar s(d, v, 1);
    s.normalize();
    return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Scalar s(Domain::rationals(), num, den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    switch (dom_.kind) {
        case Domain::Kind::Int:
            den_ = 1;
            break;
        case Domain::Kind::Rat: {
            if (den_ < 0) { num_ = -num_; den_ = -den_; }
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
            if (g > 1) { num_ /= g; den_ /= g; }
            if (num_ == 0) den_ = 1;
            break;
        }
        case Domain::Kind::Mod: {
            mpz_fdiv_r(num_.get_mpz_t(), num_.get_mpz_t(), dom_.p.get_mpz_t());
            den_ = 1;
            break;
        }
    }
}

static void require_same(const Domain& a, const Domain& b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": mixed coefficient domains " +
                                    a.name() + " and " + b.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(dom_, o.dom_, "Scalar+");
    Scalar r(dom_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    r.normalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(dom_, o.dom_, "Scalar*");
    Scalar r(dom_, num_ * o.num_, den_ * o.den_);
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same(dom_, o.dom_, "Scalar/");
    if (o.is_zero()) throw std::invalid_argument("Scalar/: division by zero");
    if (dom_.kind == Domain::Kind::Int) {
        if (num_ % o.num_ != 0)
            throw std::invalid_argument("Scalar/: inexact integer division");
        return of_mpz(dom_, num_ / o.num_);
    }
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r(dom_, -num_, den_);
    r.normalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("Scalar::inverse: zero");
    switch (dom_.kind) {
        case Domain::Kind::Int:
            if (num_ == 1 || num_ == -1) return *this;
            throw std::invalid_argument("Scalar::inverse: non-unit integer");
        case Domain::Kind::Rat:
            return rational(den_, num_);
        case Domain::Kind::Mod: {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), num_.get_mpz_t(), dom_.p.get_mpz_t()) == 0)
                throw std::invalid_argument("Scalar::inverse: not invertible mod p");
            return of_mpz(dom_, inv);
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar r = one(dom_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    return dom_ == o.dom_ && num_ == o.num_ && den_ == o.den_;
}

mpz_class Scalar::as_integer() const {
    if (den_ != 1) throw std::invalid_argument("as_integer: " + str() + " is not integral");
    return num_;
}

std::string Scalar::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Scalar Scalar::parse(const Domain& d, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Scalar::parse: empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Scalar s(d, mpz_class(text), 1);
            s.normalize();
            return s;
        }
        mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (d.kind == Domain::Kind::Int) {
            if (den == 0 || num % den != 0)
                throw std::invalid_argument("non-integer over Z");
            return of_mpz(d, num / den);
        }
        if (d.kind == Domain::Kind::Mod)
            return of_mpz(d, num) * of_mpz(d, den).inverse();
        return rational(num, den);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("Scalar::parse: bad literal \"" + text + "\" over " +
                                    d.name() + " (" + e.what() + ")");
    }
}

Scalar Scalar::to_domain(const Domain& d) const {
    if (d == dom_) return *this;
    switch (d.kind) {
        case Domain::Kind::Int:
            if (den_ != 1)
                throw std::invalid_argument("to_domain: " + str() + " is not an integer");
            return of_mpz(d, num_);
        case Domain::Kind::Rat:
            if (dom_.kind == Domain::Kind::Mod)
                throw std::invalid_argument("to_domain: cannot lift F_p to Q");
            return rational(num_, den_);
        case Domain::Kind::Mod: {
            Scalar n = of_mpz(d, num_);
            if (den_ == 1) return n;
            return n * of_mpz(d, den_).inverse();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace corealg

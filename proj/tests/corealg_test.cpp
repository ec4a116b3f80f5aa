#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "hilbalg/matrix.hpp"
#include "hilbalg/multipoly.hpp"

using namespace corealg;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    Scalar q = Scalar::rational(6, -4);
    CHECK(q.num() == -3);
    CHECK(q.den() == 2);
    CHECK(q.str() == "-3/2");
    CHECK(Scalar::rational(0, 7).den() == 1);
    CHECK_THROWS(Scalar::rational(1, 0));
}

TEST_CASE("rational arithmetic agrees with the cross-multiplication oracle") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 1000; ++i) {
        long a = static_cast<long>(rng() % 2001) - 1000;
        long b = static_cast<long>(rng() % 1000) + 1;
        long c = static_cast<long>(rng() % 2001) - 1000;
        long d = static_cast<long>(rng() % 1000) + 1;
        Scalar x = Scalar::rational(a, b), y = Scalar::rational(c, d);
        Scalar sum = x + y, prod = x * y;
        CHECK(sum.num() * (mpz_class(b) * d) == mpz_class(a * d + c * b) * sum.den());
        CHECK(prod.num() * (mpz_class(b) * d) == mpz_class(a) * c * prod.den());
        CHECK(sum.den() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), sum.num().get_mpz_t(), sum.den().get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("prime field elements stay reduced and invert") {
    Domain F7 = Domain::prime_field(7);
    Scalar a = Scalar::of_int(F7, -3);
    CHECK(a.num() == 4);
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS(Domain::prime_field(6));
    CHECK_THROWS(Scalar::zero(F7).inverse());
}

TEST_CASE("mixed domains are rejected") {
    Scalar z = Scalar::of_int(Domain::integers(), 1);
    Scalar q = Scalar::of_int(Domain::rationals(), 1);
    CHECK_THROWS(z + q);
}

static MultiPoly parseQ(const std::string& s, const std::vector<std::string>& vars) {
    return MultiPoly::parse(s, vars, Domain::rationals());
}

TEST_CASE("difference of squares") {
    std::vector<std::string> ab{"a", "b"};
    MultiPoly lhs = parseQ("a + b", ab) * parseQ("a - b", ab);
    CHECK(lhs == parseQ("a^2 - b^2", ab));
}

TEST_CASE("multiplication by zero empties the term map") {
    std::vector<std::string> ab{"a", "b"};
    MultiPoly p = parseQ("3*a^2 - b", ab);
    MultiPoly zero(ab, Domain::rationals());
    CHECK((p * zero).terms().empty());
    CHECK((p * zero).str() == "0");
}

TEST_CASE("Laurent character product") {
    std::vector<std::string> ab{"a", "b"};
    Domain Z = Domain::integers();
    MultiPoly f = MultiPoly::parse("a^2 + a*b + b^2", ab, Z, true);
    MultiPoly g = MultiPoly::parse("a^-1 + b^-1", ab, Z, true);
    MultiPoly expected = MultiPoly::parse("2*a + 2*b + a^2*b^-1 + a^-1*b^2", ab, Z, true);
    CHECK(f * g == expected);
}

TEST_CASE("negative exponents require the Laurent flag") {
    std::vector<std::string> ab{"a", "b"};
    CHECK_THROWS(MultiPoly::parse("a^-1", ab, Domain::integers()));
}

TEST_CASE("polynomial ring axioms on random triples") {
    std::mt19937 rng(7);
    std::vector<std::string> vars{"x", "y"};
    Domain F5 = Domain::prime_field(5);
    auto random_poly = [&]() {
        MultiPoly p(vars, F5);
        for (int t = 0; t < 4; ++t)
            p.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)},
                       Scalar::of_int(F5, static_cast<long>(rng() % 5)));
        return p;
    };
    for (int i = 0; i < 50; ++i) {
        MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("printing then parsing is the identity") {
    std::mt19937 rng(11);
    std::vector<std::string> vars{"x", "y", "z"};
    Domain Q = Domain::rationals();
    for (int i = 0; i < 60; ++i) {
        MultiPoly p(vars, Q);
        for (int t = 0; t < 5; ++t) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = static_cast<long>(rng() % 4) + 1;
            p.add_term({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                        static_cast<int>(rng() % 4)},
                       Scalar::rational(num, den));
        }
        CHECK(MultiPoly::parse(p.str(), vars, Q) == p);
    }
    Domain Z = Domain::integers();
    for (int i = 0; i < 40; ++i) {
        MultiPoly p(vars, Z, true);
        for (int t = 0; t < 4; ++t)
            p.add_term({static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3,
                        static_cast<int>(rng() % 7) - 3},
                       Scalar::of_int(Z, static_cast<long>(rng() % 9) - 4));
        CHECK(MultiPoly::parse(p.str(), vars, Z, true) == p);
    }
}

TEST_CASE("mismatched variable lists are rejected") {
    MultiPoly a = parseQ("x", {"x"});
    MultiPoly b = parseQ("y", {"y"});
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
}

TEST_CASE("smith normal form: pinned examples") {
    IntMatrix id2 = IntMatrix::identity(2);
    SmithForm s = id2.smith_normal_form();
    CHECK(s.d == id2);

    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    s = m.smith_normal_form();
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);
    CHECK(s.u * m * s.v == s.d);

    IntMatrix z(3, 2);
    s = z.smith_normal_form();
    CHECK(s.d == z);
    CHECK(s.u == IntMatrix::identity(3));
    CHECK(s.v == IntMatrix::identity(2));
}

TEST_CASE("smith normal form properties on random 3x3 matrices") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                m.at(i, j) = static_cast<long>(rng() % 21) - 10;
        SmithForm s = m.smith_normal_form();
        CHECK(s.u * m * s.v == s.d);
        CHECK(s.d.is_diagonal());
        mpz_class du = s.u.det(), dv = s.v.det();
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (size_t i = 0; i + 1 < 3; ++i) {
            if (s.d.at(i + 1, i + 1) != 0) {
                REQUIRE(s.d.at(i, i) != 0);
                CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
            }
        }
        // prefix products of elementary divisors = gcds of k x k minors
        for (size_t k = 1; k <= 3; ++k) {
            mpz_class gcd_minors = 0;
            std::vector<std::vector<size_t>> subsets;
            std::vector<size_t> acc;
            std::function<void(size_t)> choose = [&](size_t start) {
                if (acc.size() == k) {
                    subsets.push_back(acc);
                    return;
                }
                for (size_t i = start; i < 3; ++i) {
                    acc.push_back(i);
                    choose(i + 1);
                    acc.pop_back();
                }
            };
            choose(0);
            for (const auto& rows : subsets)
                for (const auto& cols : subsets) {
                    IntMatrix sub(k, k);
                    for (size_t i = 0; i < k; ++i)
                        for (size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
                    mpz_class a = abs(sub.det());
                    mpz_gcd(gcd_minors.get_mpz_t(), gcd_minors.get_mpz_t(), a.get_mpz_t());
                }
            mpz_class prefix = 1;
            for (size_t i = 0; i < k; ++i) prefix *= s.d.at(i, i);
            CHECK(abs(prefix) == gcd_minors);
        }
    }
}

TEST_CASE("smith normal form on random rectangular matrices") {
    std::mt19937 rng(707);
    for (int trial = 0; trial < 30; ++trial) {
        size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rng() % 15) - 7;
        SmithForm s = m.smith_normal_form();
        CHECK(s.u * m * s.v == s.d);
        CHECK(s.d.is_diagonal());
        mpz_class du = s.u.det(), dv = s.v.det();
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
            CHECK(s.d.at(i, i) >= 0);
            if (s.d.at(i + 1, i + 1) != 0) {
                REQUIRE(s.d.at(i, i) != 0);
                CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
            }
        }
        // kernel lattice vectors really solve
        for (const auto& v : m.kernel_lattice()) {
            for (const auto& e : m.apply(v)) CHECK(e == 0);
        }
    }
}

TEST_CASE("kernel basis: pinned examples") {
    Domain Q = Domain::rationals();
    CHECK(FieldMatrix::identity(Q, 4).kernel_basis().empty());

    Domain F2 = Domain::prime_field(2);
    FieldMatrix m(F2, 1, 2);
    m.at(0, 0) = Scalar::one(F2);
    m.at(0, 1) = Scalar::one(F2);
    auto kb = m.kernel_basis();
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0].is_one());
    CHECK(kb[0][1].is_one());
}

TEST_CASE("the 6x9 constraint system at (x^2, xy, y^2) has kernel of dimension 6") {
    // Rows of y*a1 - x*a2 = 0 and y*a2 - x*a3 = 0 on O_S = k{1, x, y} with
    // x^2 = xy = y^2 = 0; multiplication by x or y only sees the 1-coordinate.
    // The third pair syzygy y^2 e1 - x^2 e3 acts by zero.
    Domain Q = Domain::rationals();
    FieldMatrix m(Q, 6, 9);
    Scalar one = Scalar::one(Q);
    m.at(2, 0) = one;   // [y](y * a1) = [1] a1
    m.at(1, 3) = -one;  // [x](x * a2) = [1] a2
    m.at(5, 3) = one;   // [y](y * a2)
    m.at(4, 6) = -one;  // [x](x * a3)
    auto kb = m.kernel_basis();
    CHECK(kb.size() == 6);
    for (const auto& v : kb)
        for (const auto& c : m.apply(v)) CHECK(c.is_zero());
}

TEST_CASE("kernel vectors solve M v = 0 and match rank-nullity") {
    std::mt19937 rng(2ul);
    Domain F5 = Domain::prime_field(5);
    for (int trial = 0; trial < 30; ++trial) {
        size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
        FieldMatrix m(F5, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = Scalar::of_int(F5, static_cast<long>(rng() % 5));
        auto kb = m.kernel_basis();
        for (const auto& v : kb)
            for (const auto& c : m.apply(v)) CHECK(c.is_zero());
        // independent rank oracle: machine-integer row elimination
        std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j).num().get_si();
        size_t rank = 0;
        for (size_t col = 0; col < cols && rank < rows; ++col) {
            size_t piv = rank;
            while (piv < rows && a[piv][col] % 5 == 0) ++piv;
            if (piv == rows) continue;
            std::swap(a[piv], a[rank]);
            for (size_t i = 0; i < rows; ++i) {
                if (i == rank || a[i][col] % 5 == 0) continue;
                long f = 0;
                for (long x = 1; x < 5; ++x)
                    if ((a[rank][col] * x - a[i][col]) % 5 == 0) f = x;
                for (size_t j = 0; j < cols; ++j)
                    a[i][j] = ((a[i][j] - f * a[rank][j]) % 5 + 25) % 5;
            }
            ++rank;
        }
        CHECK(kb.size() == cols - rank);
    }
}

TEST_CASE("integer solve and unimodular inverse") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 3;
    m.at(1, 1) = 7;
    auto inv = m.inverse_unimodular();
    REQUIRE(inv.has_value());
    CHECK((*inv) * m == IntMatrix::identity(2));

    IntMatrix sing(2, 2);
    sing.at(0, 0) = 2;
    CHECK(!sing.inverse_unimodular().has_value());

    auto sol = m.solve({5, 17});
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == std::vector<mpz_class>{5, 17});
    IntMatrix even(1, 1);
    even.at(0, 0) = 2;
    CHECK(!even.solve({3}).has_value());
}

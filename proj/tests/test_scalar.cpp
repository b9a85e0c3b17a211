#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qbv/scalar.hpp"

using namespace qbv;

namespace {

// independent irreducibility oracle: p has no root in GF(2) extensions of
// degree <= deg/2, tested by brute-force trial division over expanded bit sets
bool irreducible_oracle(uint64_t p, int deg)
{
    for (uint64_t q = 2; q < (uint64_t(1) << deg); ++q) {
        int dq = 63 - __builtin_clzll(q);
        if (dq < 1 || dq >= deg)
            continue;
        // long division of p by q over GF(2)
        uint64_t r = p;
        while (true) {
            int dr = r ? 63 - __builtin_clzll(r) : -1;
            if (dr < dq)
                break;
            r ^= q << (dr - dq);
        }
        if (r == 0)
            return false;
    }
    return true;
}

Scalar rnd_scalar(const FieldSpec& f, std::mt19937& rng)
{
    if (f.symbolic) {
        Gf2Poly num(rng() & 0x3f), den;
        do
            den = Gf2Poly(rng() & 0x1f);
        while (den.is_zero());
        return Scalar::rational(num, den);
    }
    return Scalar::gf(f.m, rng() % (1u << f.m));
}

}  // namespace

TEST_CASE("canonical moduli are the least irreducible polynomials")
{
    CHECK(GaloisField::least_irreducible(2) == 0b111);    // x^2+x+1
    CHECK(GaloisField::least_irreducible(3) == 0b1011);   // x^3+x+1
    CHECK(GaloisField::least_irreducible(4) == 0b10011);  // x^4+x+1
    for (int m = 1; m <= 16; ++m) {
        uint32_t mod = GaloisField::least_irreducible(m);
        CHECK(irreducible_oracle(mod, m));
        for (uint32_t c = 1u << m; c < mod; ++c)
            CHECK_FALSE(irreducible_oracle(c, m));
    }
}

TEST_CASE("characteristic 2 and GF(4) defining relation")
{
    Scalar one = Scalar::gf(1, 1);
    CHECK((one + one).is_zero());

    // omega * omega = omega + 1 in GF(4)
    Scalar w = Scalar::gf(2, 2);
    CHECK(w * w == Scalar::gf(2, 3));
}

TEST_CASE("rational cancellation to lowest terms")
{
    FieldSpec f = FieldSpec::rational_d();
    Scalar a = f.parse("d^2+d");
    Scalar b = f.parse("1/d");
    CHECK(a * b == f.parse("d+1"));
    CHECK((a * b).den().is_one());
}

TEST_CASE("field axioms on random scalars")
{
    std::mt19937 rng(20240811);
    for (FieldSpec f : {FieldSpec::gf2(1), FieldSpec::gf4_omega(),
                        FieldSpec{false, 8, 7}, FieldSpec::rational_d()}) {
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = rnd_scalar(f, rng), b = rnd_scalar(f, rng), c = rnd_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + a).is_zero());
            CHECK(a * b == b * a);
            if (!a.is_zero())
                CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("errors: zero inverse and backend mismatch")
{
    CHECK_THROWS(Scalar::gf(2, 0).inv());
    CHECK_THROWS(Scalar::rational(Gf2Poly()).inv());
    CHECK_THROWS(Scalar::gf(2, 1) + Scalar::rational(Gf2Poly::one()));
    CHECK_THROWS(Scalar::gf(2, 1) * Scalar::gf(3, 1));
}

TEST_CASE("specialize examples")
{
    FieldSpec sym = FieldSpec::rational_d();
    // d^3 at omega in GF(4) is 1
    Scalar d3 = sym.parse("d^3");
    CHECK(d3.specialize(Scalar::gf(2, 2)) == Scalar::gf(2, 1));
    // 1/(d+1) has a pole at d = 1
    CHECK_THROWS(sym.parse("1/(d+1)").specialize(Scalar::gf(1, 1)));
    // d+1 at 0 is 1
    CHECK(sym.parse("d+1").specialize(Scalar::gf(1, 0)) == Scalar::gf(1, 1));
}

TEST_CASE("specialize is a ring homomorphism away from poles")
{
    std::mt19937 rng(7);
    FieldSpec sym = FieldSpec::rational_d();
    Scalar d0 = Scalar::gf(4, 9);
    int done = 0;
    while (done < 200) {
        Scalar r1 = rnd_scalar(sym, rng), r2 = rnd_scalar(sym, rng);
        try {
            Scalar s1 = r1.specialize(d0), s2 = r2.specialize(d0);
            Scalar sum = (r1 + r2).specialize(d0);
            Scalar prod = (r1 * r2).specialize(d0);
            CHECK(sum == s1 + s2);
            CHECK(prod == s1 * s2);
            ++done;
        } catch (const std::domain_error&) {
            // pole; resample
        }
    }
}

TEST_CASE("scalar literal round trips")
{
    FieldSpec gf4 = FieldSpec::gf4_omega();
    CHECK(gf4.parse("w+1") == Scalar::gf(2, 3));
    CHECK(gf4.parse("w^2") == Scalar::gf(2, 3));  // w^2 = w+1
    CHECK(gf4.parse("0").is_zero());
    FieldSpec sym = FieldSpec::rational_d();
    Scalar s = sym.parse("(d^2+d)/(d+1)");
    CHECK(s == sym.parse("d"));
    CHECK(sym.parse(s.str()) == s);
}

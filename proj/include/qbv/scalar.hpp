#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbv {

/* Polynomials over GF(2), bit-packed little-endian (bit i = coefficient of x^i).
 * The low 64 bits live inline; higher limbs spill into a vector. */
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(uint64_t bits) : lo_(bits) {}
    static Gf2Poly x() { return Gf2Poly(2); }
    static Gf2Poly one() { return Gf2Poly(1); }

    bool is_zero() const { return lo_ == 0 && hi_.empty(); }
    bool is_one() const { return lo_ == 1 && hi_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool bit(int i) const;
    void flip(int i);

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly shifted(int s) const;  // times x^s
    static void divmod(const Gf2Poly& a, const Gf2Poly& b, Gf2Poly& q, Gf2Poly& r);
    static Gf2Poly mod(const Gf2Poly& a, const Gf2Poly& b);
    static Gf2Poly div(const Gf2Poly& a, const Gf2Poly& b);
    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

    bool operator==(const Gf2Poly& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator<(const Gf2Poly& o) const;  // by degree, then bits from the top

    // evaluation at a point of GF(2^m); coefficients are 0/1 in the field
    uint32_t eval(const class GaloisField& f, uint32_t point) const;

    std::string str(char var) const;
    uint64_t low64() const { return lo_; }

private:
    uint64_t lo_ = 0;
    std::vector<uint64_t> hi_;  // limbs 1, 2, ...; invariant: back() != 0

    int nlimbs() const { return 1 + (int)hi_.size(); }
    uint64_t limb(int i) const;
    void xor_limb(int i, uint64_t v);
    void trim();
};

/* GF(2^m), 1 <= m <= 16, with the canonical modulus: the least irreducible
 * polynomial of degree m in the integer order of its bit pattern.  Elements
 * are bit patterns < 2^m.  Multiplication by exp/log tables. */
class GaloisField {
public:
    explicit GaloisField(int m);
    static const GaloisField& get(int m);  // cached per m

    int m() const { return m_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t order() const { return 1u << m_; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // a != 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    // least irreducible degree-m polynomial over GF(2), as bits
    static uint32_t least_irreducible(int m);
    static bool is_irreducible(uint64_t poly, int deg);

    // minimal polynomial of a over GF(2) (product over conjugates a^{2^i})
    Gf2Poly min_poly(uint32_t a) const;

    std::string elem_str(uint32_t a) const;  // polynomial in "w"

private:
    int m_;
    uint32_t modulus_;
    std::vector<uint16_t> exp_, log_;  // empty for m = 1
    uint32_t mul_slow(uint32_t a, uint32_t b) const;
};

/* A scalar of the coefficient field: either a concrete GF(2^m) value or a
 * rational function in d over GF(2), kept in lowest terms.  The two backends
 * never mix; arithmetic across backends throws. */
class Scalar {
public:
    Scalar() = default;  // GF(2) zero
    static Scalar gf(int m, uint32_t bits);
    static Scalar rational(Gf2Poly num, Gf2Poly den);
    static Scalar rational(Gf2Poly poly) { return rational(std::move(poly), Gf2Poly::one()); }

    bool is_rational_backend() const { return m_ == 0; }
    int gf_m() const { return m_; }
    uint32_t gf_bits() const { return bits_; }
    const Gf2Poly& num() const { return num_; }
    const Gf2Poly& den() const { return den_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar inv() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // evaluate a rational scalar at a concrete value of d
    Scalar specialize(const Scalar& d0) const;

    std::string str() const;
    // true if printing needs parentheses inside "c*word" terms
    bool str_needs_parens() const;

private:
    int m_ = 1;          // 0 = rational backend
    uint32_t bits_ = 0;  // concrete value
    Gf2Poly num_, den_;  // rational value, gcd(num, den) = 1, den != 0
    void check_same_backend(const Scalar& o) const;
};

/* Which field the whole computation runs over, and what d is. */
struct FieldSpec {
    bool symbolic = false;  // rational functions in d
    int m = 2;              // extension degree when concrete
    uint32_t d_bits = 2;    // value of d when concrete (default: w in GF(4))

    static FieldSpec gf2(uint32_t d) { return FieldSpec{false, 1, d}; }
    static FieldSpec gf4_omega() { return FieldSpec{false, 2, 2}; }
    static FieldSpec rational_d() { return FieldSpec{true, 0, 0}; }

    Scalar zero() const;
    Scalar one() const;
    Scalar d() const;
    Scalar parse(const std::string& text) const;  // scalar literal in "w" or "d"
    std::string str() const;
    bool operator==(const FieldSpec& o) const = default;
};

}  // namespace qbv

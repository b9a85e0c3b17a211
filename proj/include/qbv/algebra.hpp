#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qbv/scalar.hpp"

namespace qbv {

/* Basis word ids for R(k,0,d).  Order: unit, then alternating words by
 * (length, first letter x before y), then the socle (xy)^k = (yx)^k:
 *   0 = 1;  2l-1 = x-initial word of length l;  2l = y-initial;  4k-1 = socle. */
using Word = uint16_t;

constexpr int LETTER_X = 0;
constexpr int LETTER_Y = 1;

struct WordTermRef;

struct Term {
    Word w;
    Scalar c;
    bool operator==(const Term& o) const = default;
};

/* Sparse element of R: terms sorted by word id, no zero coefficients. */
using Elem = std::vector<Term>;

void add_term(Elem& e, Word w, const Scalar& c);
Elem add(const Elem& a, const Elem& b);
Elem scale(const Elem& a, const Scalar& c);
const Scalar* coeff_of(const Elem& e, Word w);  // nullptr when absent
bool is_zero(const Elem& e);

struct AlgebraSpec {
    int k = 4;
    FieldSpec field;
    bool scope_warning() const { return k % 2 != 0 || k < 4; }  // outside the even k >= 4 scope
    bool operator==(const AlgebraSpec& o) const = default;
};

/* The algebra R = R(k,0,d) with its 4k-element monomial basis, product table
 * built once by rewriting words to normal form, the socle functional, the
 * symmetrizing form and monomial duals. */
class Algebra {
public:
    explicit Algebra(AlgebraSpec spec);

    const AlgebraSpec& spec() const { return spec_; }
    int k() const { return spec_.k; }
    int nwords() const { return 4 * spec_.k; }
    const FieldSpec& field() const { return spec_.field; }

    Word unit() const { return 0; }
    Word socle() const { return (Word)(nwords() - 1); }
    Word alt(int first, int len) const;  // alternating word, 1 <= len <= 2k-1
    Word letter(int l) const { return alt(l, 1); }
    Word xy_pow(int i) const;  // (xy)^i; i = 0 gives 1, i = k the socle
    Word yx_pow(int i) const;  // (yx)^i
    Word x_yx(int i) const;    // x(yx)^i; i = 0 gives x
    Word y_xy(int i) const;    // y(xy)^i

    bool is_unit(Word w) const { return w == 0; }
    bool is_socle(Word w) const { return w == socle(); }
    int word_len(Word w) const;                 // 0 for unit, 2k for socle
    int first_letter(Word w) const;             // unit/socle use the (xy)^i convention
    int letter_at(Word w, int i) const;
    std::vector<uint8_t> letters(Word w) const;  // socle expands to (xy)^k

    // product of two basis words, from the precomputed table
    const Elem& prod(Word a, Word b) const { return table_[a * nwords() + b]; }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, Word b) const;
    Elem mul(Word a, const Elem& b) const;

    Scalar socle_coeff(const Elem& a) const;
    Scalar form(const Elem& a, const Elem& b) const;  // <a,b> = eps(ab)
    Word dual_word(Word b) const;                     // complementary word b*
    const Elem& dual_elem(Word b) const;              // true dual basis w.r.t. the form

    // normal form of an arbitrary word in the letters x,y
    Elem normal_form(std::span<const uint8_t> letters) const;

    // basis of the center {z : zb = bz for all b}
    std::vector<Elem> center_basis() const;

    Elem elem(Word w) const;  // single word with coefficient 1
    Elem zero() const { return {}; }
    Elem one() const { return elem(unit()); }

    std::string word_str(Word w) const;
    Word parse_word(const std::string& text) const;
    std::string elem_str(const Elem& e) const;
    Elem parse_elem(const std::string& text) const;

private:
    AlgebraSpec spec_;
    std::vector<Elem> table_;       // (4k)^2 products
    std::vector<Elem> dual_elems_;  // true dual basis
    void normal_form_rec(std::vector<uint8_t>& w, const Scalar& c, Elem& out) const;
    void build_duals();
};

}  // namespace qbv

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qbv/homotopy.hpp"

using namespace qbv;

namespace {

struct Setup {
    Algebra R;
    Resolution res;
    Homotopy h;
    explicit Setup(int k, FieldSpec f = FieldSpec::gf4_omega())
        : R(AlgebraSpec{k, f}), res(R), h(res) {}
};

}  // namespace

TEST_CASE("derivation C on letters and short words")
{
    Setup s(4);
    const Algebra& R = s.R;
    Scalar one = R.field().one();

    MElem cx = s.h.C_word(R.letter(LETTER_X));
    MElem want{1, std::vector<LElem>(2)};
    l_add_term(want.c[0], R.unit(), R.unit(), one);
    CHECK(cx == want);

    // C(xy) = 1 (x) x (x) y + x (x) y (x) 1
    MElem cxy = s.h.C_word(R.alt(LETTER_X, 2));
    MElem want2{1, std::vector<LElem>(2)};
    l_add_term(want2.c[0], R.unit(), R.letter(LETTER_Y), one);
    l_add_term(want2.c[1], R.letter(LETTER_X), R.unit(), one);
    CHECK(cxy == want2);

    CHECK(m_is_zero(s.h.C_word(R.unit())));
}

TEST_CASE("C matches the closed forms")
{
    Setup s(4, FieldSpec::rational_d());
    const Algebra& R = s.R;
    int k = R.k();
    Scalar one = R.field().one();

    // b = (xy)^i: sum (xy)^j (x) x (x) y(xy)^{i-j-1} + sum x(yx)^j (x) y (x) (xy)^{i-j-1}
    for (int i = 1; i <= k; ++i) {
        MElem want{1, std::vector<LElem>(2)};
        for (int j = 0; j <= i - 1; ++j) {
            l_add_term(want.c[0], R.xy_pow(j), R.y_xy(i - j - 1), one);
            l_add_term(want.c[1], R.x_yx(j), R.xy_pow(i - j - 1), one);
        }
        CHECK(s.h.C_word(R.xy_pow(i)) == want);
    }
    // b = x(yx)^i
    for (int i = 0; i <= k - 1; ++i) {
        MElem want{1, std::vector<LElem>(2)};
        for (int j = 0; j <= i; ++j)
            l_add_term(want.c[0], R.xy_pow(j), R.yx_pow(i - j), one);
        for (int j = 0; j <= i - 1; ++j)
            l_add_term(want.c[1], R.x_yx(j), R.x_yx(i - j - 1), one);
        CHECK(s.h.C_word(R.x_yx(i)) == want);
    }
    // b = y(xy)^i
    for (int i = 0; i <= k - 1; ++i) {
        MElem want{1, std::vector<LElem>(2)};
        for (int j = 0; j <= i; ++j)
            l_add_term(want.c[1], R.yx_pow(j), R.xy_pow(i - j), one);
        for (int j = 0; j <= i - 1; ++j)
            l_add_term(want.c[0], R.y_xy(j), R.y_xy(i - j - 1), one);
        CHECK(s.h.C_word(R.y_xy(i)) == want);
    }
    // b = (yx)^i
    for (int i = 1; i <= k - 1; ++i) {
        MElem want{1, std::vector<LElem>(2)};
        for (int j = 0; j <= i - 1; ++j) {
            l_add_term(want.c[1], R.yx_pow(j), R.x_yx(i - j - 1), one);
            l_add_term(want.c[0], R.y_xy(j), R.yx_pow(i - j - 1), one);
        }
        CHECK(s.h.C_word(R.yx_pow(i)) == want);
    }
}

/* C is a derivation at the word level: Leibniz holds whenever uv is a plain
 * concatenation (an alternating word of length <= 2k, the socle through its
 * (xy)^k spelling).  On products that rewrite, e.g. x.x, it does not descend,
 * and the homotopy construction never needs it to. */
TEST_CASE("Leibniz rule on concatenation pairs")
{
    Setup s(4, FieldSpec::rational_d());
    const Algebra& R = s.R;
    int k = R.k(), checked = 0;
    for (Word u = 0; u < R.nwords(); ++u)
        for (Word v = 0; v < R.nwords(); ++v) {
            std::vector<uint8_t> cat = R.letters(u);
            std::vector<uint8_t> lv = R.letters(v);
            cat.insert(cat.end(), lv.begin(), lv.end());
            bool alternating = true;
            for (size_t i = 0; i + 1 < cat.size(); ++i)
                if (cat[i] == cat[i + 1])
                    alternating = false;
            if (!alternating || (int)cat.size() > 2 * k)
                continue;
            if ((int)cat.size() == 2 * k && (cat.empty() || cat[0] != LETTER_X))
                continue;  // the socle's C is spelled through (xy)^k
            MElem lhs = s.h.C(R.prod(u, v));
            MElem rhs = m_add(m_right_mul(R, s.h.C_word(u), v), m_left_mul(R, u, s.h.C_word(v)));
            CHECK(lhs == rhs);
            ++checked;
        }
    CHECK(checked > 50);
}

/* What fails without the concatenation restriction, pinned down: the
 * derivative of the relation x^2 + y(xy)^{k-1} is not zero. */
TEST_CASE("C does not descend to rewritten products")
{
    Setup s(4, FieldSpec::rational_d());
    const Algebra& R = s.R;
    Word x = R.letter(LETTER_X);
    MElem lhs = s.h.C(R.prod(x, x));
    MElem rhs = m_add(m_right_mul(R, s.h.C_word(x), x), m_left_mul(R, x, s.h.C_word(x)));
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("t table spot values from the construction")
{
    Setup s(4, FieldSpec::rational_d());
    const Algebra& R = s.R;
    int k = R.k();
    Scalar one = R.field().one(), d = R.field().d();

    // t1(x (x) x (x) 1) = 1 (x) r_x (x) 1
    MElem v = s.h.table(1, R.letter(LETTER_X), 0);
    MElem want{2, std::vector<LElem>(2)};
    l_add_term(want.c[0], R.unit(), R.unit(), one);
    CHECK(v == want);

    // t2(x (x) r_x (x) 1) = 1 (x) 1
    MElem v2 = s.h.table(2, R.letter(LETTER_X), 0);
    MElem want2{3, std::vector<LElem>(1)};
    l_add_term(want2.c[0], R.unit(), R.unit(), one);
    CHECK(v2 == want2);

    // t2(yx (x) r_x (x) 1), full printed formula
    MElem v3 = s.h.table(2, R.yx_pow(1), 0);
    MElem want3{3, std::vector<LElem>(1)};
    l_add_term(want3.c[0], R.letter(LETTER_Y), R.unit(), one);
    l_add_term(want3.c[0], R.x_yx(k - 1), R.unit(), d);
    l_add_term(want3.c[0], R.xy_pow(k - 1), R.letter(LETTER_X), d);
    for (int i = 0; i <= k - 2; ++i)
        l_add_term(want3.c[0], R.x_yx(i), R.yx_pow(k - i - 1), d);
    for (int i = 1; i <= k - 2; ++i)
        l_add_term(want3.c[0], R.xy_pow(i), R.x_yx(k - i - 1), d);
    CHECK(v3 == want3);

    // t3 vanishes except on soc (x) 1
    for (Word b = 0; b < R.nwords(); ++b) {
        MElem v4 = s.h.table(3, b, 0);
        CHECK(m_is_zero(v4) == !R.is_socle(b));
    }
    MElem vsoc = s.h.table(3, R.socle(), 0);
    CHECK(vsoc.c[0].size() == 1);
    CHECK(vsoc.c[0][0].u == R.unit());
    CHECK(vsoc.c[0][0].v == R.unit());
}

TEST_CASE("right-linearity of t on samples")
{
    Setup s(4);
    const Algebra& R = s.R;
    std::mt19937 rng(31);
    for (int deg = 0; deg <= 3; ++deg)
        for (int trial = 0; trial < 40; ++trial) {
            int rk = Resolution::rank_of(deg);
            MElem e{deg, std::vector<LElem>(rk)};
            l_add_term(e.c[rng() % rk], (Word)(rng() % R.nwords()), R.unit(),
                       Scalar::gf(2, 1 + rng() % 3));
            Word r = (Word)(rng() % R.nwords());
            CHECK(s.h.t(deg, m_right_mul(R, e, r)) == m_right_mul(R, s.h.t(deg, e), r));
        }
}

TEST_CASE("mu t_{-1} = id and the degree-0 identity on a sample")
{
    Setup s(4);
    const Algebra& R = s.R;
    for (Word b = 0; b < R.nwords(); ++b)
        CHECK(s.res.mu(s.h.t_minus1(R.elem(b))) == R.elem(b));

    // (d0 t0 + t_{-1} mu)(x (x) 1) = x (x) 1
    MElem e{0, std::vector<LElem>(1)};
    l_add_term(e.c[0], R.letter(LETTER_X), R.unit(), R.field().one());
    MElem lhs = m_add(s.res.apply(s.res.diff(0), s.h.t(0, e)), s.h.t_minus1(s.res.mu(e)));
    CHECK(lhs == e);
}

TEST_CASE("weak self-homotopy identities to degree 9")
{
    for (FieldSpec f : {FieldSpec::gf4_omega(), FieldSpec::gf2(0), FieldSpec::gf2(1),
                        FieldSpec::rational_d()}) {
        Setup s(4, f);
        auto reps = s.h.verify(9);
        for (const auto& rep : reps) {
            INFO("backend ", f.str(), " degree ", rep.degree);
            CHECK(rep.failures.empty());
            CHECK(rep.checked > 0);
        }
    }
}

TEST_CASE("weak self-homotopy identities, k = 6")
{
    Setup s(6, FieldSpec::gf4_omega());
    auto reps = s.h.verify(5);
    for (const auto& rep : reps) {
        INFO("degree ", rep.degree);
        CHECK(rep.failures.empty());
    }
}

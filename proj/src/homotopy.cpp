#include "qbv/homotopy.hpp"

#include <sstream>
#include <stdexcept>

namespace qbv {

namespace {

// b (x) gen (x) 1 with one pure Lambda term u (x) v
void put(const Algebra& R, MElem& e, int gen, Word u, Word v, const Scalar& c)
{
    l_add_term(e.c[gen], u, v, c);
}

}  // namespace

Homotopy::Homotopy(const Resolution& res) : res_(res)
{
    const Algebra& R = res.R();
    int n = R.nwords();
    cache_.resize(4 * n * 2);
    for (int deg = 0; deg < 4; ++deg)
        for (Word b = 0; b < n; ++b)
            for (int gen = 0; gen < Resolution::rank_of(deg); ++gen)
                cache_[(deg * n + b) * 2 + gen] = compute_table(deg, b, gen);
}

MElem Homotopy::C_word(Word b) const
{
    const Algebra& R = res_.R();
    MElem e{1, std::vector<LElem>(2)};
    if (R.is_unit(b))
        return e;
    std::vector<uint8_t> ls = R.letters(b);  // socle uses (xy)^k
    int len = (int)ls.size();
    for (int i = 0; i < len; ++i) {
        Word pre = (i == 0) ? R.unit() : R.alt(ls[0], i);
        Word suf = (i == len - 1) ? R.unit() : R.alt(ls[i + 1], len - 1 - i);
        put(R, e, ls[i], pre, suf, R.field().one());
    }
    return e;
}

MElem Homotopy::C(const Elem& a) const
{
    MElem e{1, std::vector<LElem>(2)};
    for (const Term& t : a)
        e = m_add(e, m_scale(C_word(t.w), t.c));
    return e;
}

MElem Homotopy::t_minus1(const Elem& r) const
{
    MElem e{0, std::vector<LElem>(1)};
    for (const Term& t : r)
        l_add_term(e.c[0], res_.R().unit(), t.w, t.c);
    return e;
}

/* t1 on b (x) x (x) 1.  Rows "b = Tyx" mean: b ends in the letters yx and the
 * prefix T multiplies the displayed value from the left. */
MElem Homotopy::t1_x(Word b) const
{
    const Algebra& R = res_.R();
    int k = R.k();
    Scalar one = R.field().one(), d = R.field().d();
    MElem e{2, std::vector<LElem>(2)};
    if (b == R.letter(LETTER_X)) {
        put(R, e, 0, R.unit(), R.unit(), one);
        return e;
    }
    if (R.is_socle(b)) {
        Word x2 = R.y_xy(k - 1);  // x^2 = y(xy)^{k-1}
        put(R, e, 0, R.unit(), x2, one);
        put(R, e, 0, R.letter(LETTER_X), R.letter(LETTER_X), one);
        put(R, e, 0, x2, R.unit(), one);
        put(R, e, 1, R.yx_pow(k - 1), R.xy_pow(k - 1), one);
        return e;
    }
    if (b == R.y_xy(k - 1)) {
        Word Y = R.letter(LETTER_Y);
        put(R, e, 1, Y, R.unit(), one);
        put(R, e, 1, R.unit(), Y, one);
        put(R, e, 1, Y, Y, d);
        put(R, e, 1, R.unit(), R.x_yx(k - 1), d);
        put(R, e, 1, Y, R.x_yx(k - 1), d * d);
        return e;
    }
    int len = R.word_len(b);
    bool ends_yx = !R.is_unit(b) && len >= 2 && R.letter_at(b, len - 1) == LETTER_X;
    if (ends_yx) {
        MElem base{2, std::vector<LElem>(2)};
        put(R, base, 0, R.letter(LETTER_Y), R.unit(), one);
        put(R, base, 0, R.xy_pow(k - 1), R.y_xy(k - 2), one);
        put(R, base, 1, R.unit(), R.xy_pow(k - 1), one);
        put(R, base, 0, R.letter(LETTER_X), R.xy_pow(k - 1), d);
        put(R, base, 0, R.y_xy(k - 1), R.y_xy(k - 2), d);
        Word t_pre = (len == 2) ? R.unit() : R.alt(R.first_letter(b), len - 2);
        return m_left_mul(R, t_pre, base);
    }
    return e;  // bx is a basis word: zero
}

MElem Homotopy::t1_y(Word b) const
{
    const Algebra& R = res_.R();
    int k = R.k();
    Scalar one = R.field().one(), d = R.field().d();
    MElem e{2, std::vector<LElem>(2)};
    if (b == R.letter(LETTER_Y)) {
        put(R, e, 1, R.unit(), R.unit(), one);
        return e;
    }
    int len = R.word_len(b);
    int last = R.is_socle(b) ? LETTER_Y : (len >= 1 ? R.letter_at(b, len - 1) : -1);
    bool ends_xy = len >= 2 && last == LETTER_Y;
    if (ends_xy) {
        MElem base{2, std::vector<LElem>(2)};
        put(R, base, 1, R.letter(LETTER_X), R.unit(), one);
        put(R, base, 1, R.yx_pow(k - 1), R.x_yx(k - 2), one);
        put(R, base, 0, R.unit(), R.yx_pow(k - 1), one);
        put(R, base, 0, R.unit(), R.y_xy(k - 1), d);
        put(R, base, 1, R.yx_pow(k - 1), R.xy_pow(k - 1), d);
        Word t_pre;
        if (R.is_socle(b))
            t_pre = R.xy_pow(k - 1);  // socle as (xy)^k
        else
            t_pre = (len == 2) ? R.unit() : R.alt(R.first_letter(b), len - 2);
        return m_left_mul(R, t_pre, base);
    }
    return e;  // by is a basis word: zero
}

/* t2 on b (x) r_x (x) 1, landing in P3 = R (x) R. */
MElem Homotopy::t2_x(Word b) const
{
    const Algebra& R = res_.R();
    int k = R.k();
    Scalar one = R.field().one(), d = R.field().d();
    MElem e{3, std::vector<LElem>(1)};
    auto term = [&](Word u, Word v, const Scalar& c) { l_add_term(e.c[0], u, v, c); };

    if (b == R.letter(LETTER_X)) {
        term(R.unit(), R.unit(), one);
    } else if (b == R.xy_pow(1)) {
        term(R.y_xy(k - 1), R.y_xy(k - 2), d);
    } else if (b == R.y_xy(k - 1)) {
        term(R.unit(), R.letter(LETTER_X), one);
    } else if (R.is_socle(b)) {
        for (int i = 0; i <= k - 1; ++i) {
            term(R.yx_pow(i), R.y_xy(k - i - 1), one);
            term(R.y_xy(i), R.xy_pow(k - i - 1), one);
        }
        term(R.x_yx(k - 1), R.xy_pow(k - 1), d);
    } else if (b == R.yx_pow(1)) {
        term(R.letter(LETTER_Y), R.unit(), one);
        term(R.x_yx(k - 1), R.unit(), d);
        term(R.xy_pow(k - 1), R.letter(LETTER_X), d);
        for (int i = 0; i <= k - 2; ++i)
            term(R.x_yx(i), R.yx_pow(k - i - 1), d);
        for (int i = 1; i <= k - 2; ++i)
            term(R.xy_pow(i), R.x_yx(k - i - 1), d);
    } else if (R.word_len(b) % 2 == 0 && R.first_letter(b) == LETTER_Y) {
        int i = R.word_len(b) / 2;  // b = (yx)^i, 2 <= i <= k-1
        for (int j = 1; j <= i - 1; ++j)
            term(R.yx_pow(j), R.y_xy(i - j - 1), one);
        for (int j = 1; j <= i; ++j)
            term(R.y_xy(j - 1), R.xy_pow(i - j), one);
        term(R.x_yx(k - 1), R.xy_pow(i - 1), d);
    } else if (R.word_len(b) % 2 == 1 && R.first_letter(b) == LETTER_X && R.word_len(b) >= 3) {
        int i = R.word_len(b) / 2;  // b = x(yx)^i, 1 <= i <= k-1
        for (int j = 1; j <= i; ++j) {
            term(R.xy_pow(j), R.xy_pow(i - j), one);
            term(R.x_yx(j - 1), R.y_xy(i - j), one);
        }
        // printed with coefficient 1; the homotopy identity forces d
        if (i == 1)
            term(R.y_xy(k - 1), R.yx_pow(k - 1), d);
    }
    return e;
}

MElem Homotopy::t2_y(Word b) const
{
    const Algebra& R = res_.R();
    int k = R.k();
    Scalar one = R.field().one(), d = R.field().d();
    MElem e{3, std::vector<LElem>(1)};
    auto term = [&](Word u, Word v, const Scalar& c) { l_add_term(e.c[0], u, v, c); };

    if (b == R.xy_pow(1)) {
        term(R.letter(LETTER_X), R.unit(), one);
        term(R.letter(LETTER_X), R.letter(LETTER_Y), d);
    } else if (R.is_socle(b) ||
               (R.word_len(b) % 2 == 0 && R.first_letter(b) == LETTER_X && R.word_len(b) >= 4)) {
        int i = R.is_socle(b) ? k : R.word_len(b) / 2;  // b = (xy)^i, 2 <= i <= k
        for (int j = 1; j <= i - 1; ++j)
            term(R.xy_pow(j), R.x_yx(i - j - 1), one);
        for (int j = 1; j <= i; ++j)
            term(R.x_yx(j - 1), R.yx_pow(i - j), one);
        for (int j = 1; j <= i; ++j)
            term(R.x_yx(j - 1), R.y_xy(i - j), d);
        for (int j = 1; j <= i - 1; ++j)
            term(R.xy_pow(j), R.xy_pow(i - j), d);
    } else if (R.word_len(b) % 2 == 1 && R.first_letter(b) == LETTER_Y) {
        int i = R.word_len(b) / 2;  // b = y(xy)^i, 1 <= i <= k-1
        if (i >= 1) {
            for (int j = 1; j <= i; ++j) {
                term(R.yx_pow(j), R.yx_pow(i - j), one);
                term(R.y_xy(j - 1), R.x_yx(i - j), one);
            }
            for (int j = 1; j <= i; ++j) {
                term(R.yx_pow(j), R.y_xy(i - j), d);
                term(R.y_xy(j - 1), R.xy_pow(i - j + 1), d);
            }
            term(R.x_yx(k - 1), R.xy_pow(i), d * d);
            term(R.x_yx(k - 1), R.x_yx(i - 1), d);
            if (i == 1)
                term(R.xy_pow(k - 1), R.y_xy(k - 1), d);
        }
    }
    return e;
}

MElem Homotopy::compute_table(int n, Word b, int gen) const
{
    const Algebra& R = res_.R();
    switch (n) {
    case 0:
        return C_word(b);
    case 1:
        return gen == 0 ? t1_x(b) : t1_y(b);
    case 2:
        return gen == 0 ? t2_x(b) : t2_y(b);
    case 3: {
        MElem e{4, std::vector<LElem>(1)};
        if (R.is_socle(b))
            l_add_term(e.c[0], R.unit(), R.unit(), R.field().one());
        return e;
    }
    default:
        throw std::invalid_argument("t table degree out of range");
    }
}

MElem Homotopy::table(int n, Word b, int gen) const
{
    const Algebra& R = res_.R();
    return cache_[((n % 4) * R.nwords() + b) * 2 + gen];
}

MElem Homotopy::t(int n, const MElem& e) const
{
    if (n < 0)
        throw std::invalid_argument("t: use t_minus1 for degree -1");
    const Algebra& R = res_.R();
    int deg = n % 4;
    if ((int)e.c.size() != Resolution::rank_of(deg))
        throw std::invalid_argument("t: element has wrong rank");
    MElem out{e.deg + 1, std::vector<LElem>(Resolution::rank_of(deg + 1))};
    for (int gen = 0; gen < (int)e.c.size(); ++gen)
        for (const LTerm& lt : e.c[gen]) {
            // t(u . gen . v) = t(u (x) gen (x) 1) . v
            MElem part = m_right_mul(R, table(deg, lt.u, gen), lt.v);
            part.deg = out.deg;
            out = m_add(out, m_scale(part, lt.c));
        }
    return out;
}

std::vector<HomotopyDegreeReport> Homotopy::verify(int N) const
{
    const Algebra& R = res_.R();
    const Resolution& res = res_;
    int n = R.nwords();
    std::vector<HomotopyDegreeReport> out;

    // mu t_{-1} = id on R
    {
        HomotopyDegreeReport rep;
        rep.degree = -1;
        for (Word b = 0; b < n; ++b) {
            ++rep.checked;
            if (res.mu(t_minus1(R.elem(b))) != R.elem(b))
                rep.failures.push_back("mu t_{-1} != id on " + R.word_str(b));
        }
        out.push_back(std::move(rep));
    }

    for (int deg = 0; deg <= N; ++deg) {
        HomotopyDegreeReport rep;
        rep.degree = deg;
        int rk = Resolution::rank_of(deg);
        for (int gen = 0; gen < rk; ++gen)
            for (Word b = 0; b < n; ++b)
                for (Word b2 = 0; b2 < n; ++b2) {
                    MElem e{deg, std::vector<LElem>(rk)};
                    l_add_term(e.c[gen], b, b2, R.field().one());
                    ++rep.checked;
                    MElem lhs = res.apply(res.diff(deg), t(deg, e));
                    if (deg == 0) {
                        lhs = m_add(lhs, t_minus1(res.mu(e)));
                    } else {
                        lhs = m_add(lhs, t(deg - 1, res.apply(res.diff(deg - 1), e)));
                    }
                    if (!(lhs == e)) {
                        std::ostringstream os;
                        os << "degree " << deg << ": fails on " << R.word_str(b) << "(x)"
                           << res.gen_label(deg, gen) << "(x)" << R.word_str(b2);
                        rep.failures.push_back(os.str());
                    }
                }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace qbv

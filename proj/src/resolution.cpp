#include "qbv/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbv/linalg.hpp"

namespace qbv {

/******** Lambda arithmetic ********/

void l_add_term(LElem& e, Word u, Word v, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto key_less = [](const LTerm& t, std::pair<Word, Word> k) {
        return t.u != k.first ? t.u < k.first : t.v < k.second;
    };
    auto it = std::lower_bound(e.begin(), e.end(), std::make_pair(u, v), key_less);
    if (it != e.end() && it->u == u && it->v == v) {
        it->c += c;
        if (it->c.is_zero())
            e.erase(it);
    } else {
        e.insert(it, LTerm{u, v, c});
    }
}

LElem l_add(const LElem& a, const LElem& b)
{
    LElem r = a;
    for (const LTerm& t : b)
        l_add_term(r, t.u, t.v, t.c);
    return r;
}

LElem l_scale(const LElem& a, const Scalar& c)
{
    if (c.is_zero())
        return {};
    LElem r;
    r.reserve(a.size());
    for (const LTerm& t : a)
        r.push_back(LTerm{t.u, t.v, t.c * c});
    return r;
}

LElem l_mul(const Algebra& R, const LElem& a, const LElem& b)
{
    LElem r;
    for (const LTerm& ta : a)
        for (const LTerm& tb : b) {
            Scalar c = ta.c * tb.c;
            // (u (x) v)(u' (x) v') = uu' (x) v'v
            for (const Term& pu : R.prod(ta.u, tb.u))
                for (const Term& pv : R.prod(tb.v, ta.v))
                    l_add_term(r, pu.w, pv.w, c * pu.c * pv.c);
        }
    return r;
}

Elem l_act(const Algebra& R, const LElem& l, const Elem& a)
{
    Elem r;
    for (const LTerm& t : l) {
        Elem ua = R.mul(t.u, a);
        for (const Term& s : R.mul(ua, t.v))
            add_term(r, s.w, s.c * t.c);
    }
    return r;
}

/******** module elements ********/

MElem m_add(const MElem& a, const MElem& b)
{
    if (a.deg != b.deg || a.c.size() != b.c.size())
        throw std::invalid_argument("m_add: degree mismatch");
    MElem r = a;
    for (size_t i = 0; i < b.c.size(); ++i)
        r.c[i] = l_add(r.c[i], b.c[i]);
    return r;
}

MElem m_scale(const MElem& a, const Scalar& s)
{
    MElem r = a;
    for (LElem& l : r.c)
        l = l_scale(l, s);
    return r;
}

MElem m_left_mul(const Algebra& R, Word r, const MElem& e)
{
    MElem out{e.deg, std::vector<LElem>(e.c.size())};
    for (size_t i = 0; i < e.c.size(); ++i)
        for (const LTerm& t : e.c[i])
            for (const Term& p : R.prod(r, t.u))
                l_add_term(out.c[i], p.w, t.v, p.c * t.c);
    return out;
}

MElem m_left_mul(const Algebra& R, const Elem& r, const MElem& e)
{
    MElem out{e.deg, std::vector<LElem>(e.c.size())};
    for (const Term& rt : r) {
        MElem part = m_left_mul(R, rt.w, e);
        part = m_scale(part, rt.c);
        out = m_add(out, part);
    }
    return out;
}

MElem m_right_mul(const Algebra& R, const MElem& e, Word r)
{
    MElem out{e.deg, std::vector<LElem>(e.c.size())};
    for (size_t i = 0; i < e.c.size(); ++i)
        for (const LTerm& t : e.c[i])
            for (const Term& p : R.prod(t.v, r))
                l_add_term(out.c[i], t.u, p.w, p.c * t.c);
    return out;
}

MElem m_right_mul(const Algebra& R, const MElem& e, const Elem& r)
{
    MElem out{e.deg, std::vector<LElem>(e.c.size())};
    for (const Term& rt : r)
        out = m_add(out, m_scale(m_right_mul(R, e, rt.w), rt.c));
    return out;
}

bool m_is_zero(const MElem& e)
{
    for (const LElem& l : e.c)
        if (!l.empty())
            return false;
    return true;
}

/******** the resolution ********/

Resolution::Resolution(const Algebra& R) : R_(R)
{
    build();
}

std::string Resolution::gen_label(int deg, int j) const
{
    switch (((deg % 4) + 4) % 4) {
    case 0:
    case 3:
        return "1(x)1";
    case 1:
        return j == 0 ? "1(x)x(x)1" : "1(x)y(x)1";
    default:
        return j == 0 ? "1(x)rx(x)1" : "1(x)ry(x)1";
    }
}

void Resolution::build()
{
    const Algebra& R = R_;
    const FieldSpec& F = R.field();
    int k = R.k();
    Scalar one = F.one(), d = F.d(), d2 = d * d;
    Word X = R.letter(LETTER_X), Y = R.letter(LETTER_Y), U = R.unit();

    // d0 : P1 -> P0
    d_[0].src_deg = 1;
    d_[0].dst_deg = 0;
    d_[0].m.assign(1, std::vector<LElem>(2));
    l_add_term(d_[0].m[0][0], X, U, one);
    l_add_term(d_[0].m[0][0], U, X, one);
    l_add_term(d_[0].m[0][1], Y, U, one);
    l_add_term(d_[0].m[0][1], U, Y, one);

    // d1 : P2 -> P1
    d_[1].src_deg = 2;
    d_[1].dst_deg = 1;
    d_[1].m.assign(2, std::vector<LElem>(2));
    {
        LElem& xx = d_[1].m[0][0];  // x-row of the r_x column
        l_add_term(xx, U, X, one);
        l_add_term(xx, X, U, one);
        for (int i = 0; i <= k - 2; ++i)
            l_add_term(xx, R.y_xy(i), R.y_xy(k - 2 - i), one);
        LElem& yx = d_[1].m[1][0];
        for (int i = 0; i <= k - 1; ++i)
            l_add_term(yx, R.yx_pow(i), R.xy_pow(k - 1 - i), one);
        LElem& xy = d_[1].m[0][1];
        for (int i = 0; i <= k - 1; ++i) {
            l_add_term(xy, R.xy_pow(i), R.yx_pow(k - 1 - i), one);
            l_add_term(xy, R.xy_pow(i), R.y_xy(k - 1 - i), d);
        }
        LElem& yy = d_[1].m[1][1];
        l_add_term(yy, U, Y, one);
        l_add_term(yy, Y, U, one);
        for (int i = 0; i <= k - 2; ++i)
            l_add_term(yy, R.x_yx(i), R.x_yx(k - 2 - i), one);
        for (int i = 0; i <= k - 1; ++i)
            l_add_term(yy, R.x_yx(i), R.xy_pow(k - 1 - i), d);
    }

    // d2 : P3 -> P2
    d_[2].src_deg = 3;
    d_[2].dst_deg = 2;
    d_[2].m.assign(2, std::vector<LElem>(1));
    l_add_term(d_[2].m[0][0], X, U, one);
    l_add_term(d_[2].m[0][0], U, X, one);
    {
        LElem& ry = d_[2].m[1][0];
        l_add_term(ry, Y, U, one);
        l_add_term(ry, U, Y, one);
        l_add_term(ry, Y, Y, d);
        l_add_term(ry, U, R.x_yx(k - 1), d);
        l_add_term(ry, Y, R.x_yx(k - 1), d2);
    }

    // lambda = rho(1), and d3 : P4 -> P3
    for (int i = 0; i <= k; ++i)
        l_add_term(lambda_, R.xy_pow(i), R.xy_pow(k - i), one);
    for (int i = 1; i <= k - 1; ++i)
        l_add_term(lambda_, R.yx_pow(i), R.yx_pow(k - i), one);
    for (int i = 0; i <= k - 1; ++i)
        l_add_term(lambda_, R.y_xy(i), R.x_yx(k - i - 1), one);
    for (int i = 0; i <= k - 1; ++i)
        l_add_term(lambda_, R.x_yx(i), R.y_xy(k - i - 1), one);
    l_add_term(lambda_, R.x_yx(k - 1), R.x_yx(k - 1), d);

    d_[3].src_deg = 4;
    d_[3].dst_deg = 3;
    d_[3].m.assign(1, std::vector<LElem>(1));
    d_[3].m[0][0] = lambda_;
}

Elem Resolution::mu(const LElem& a) const
{
    Elem r;
    for (const LTerm& t : a)
        for (const Term& p : R_.prod(t.u, t.v))
            add_term(r, p.w, p.c * t.c);
    return r;
}

Elem Resolution::mu(const MElem& e) const
{
    if (e.c.size() != 1)
        throw std::invalid_argument("mu: not a rank-1 element");
    return mu(e.c[0]);
}

MElem Resolution::apply(const BiMap& m, const MElem& e) const
{
    if ((int)e.c.size() != rank_of(m.src_deg) || ((e.deg % 4) + 4) % 4 != m.src_deg % 4)
        throw std::invalid_argument("apply: shape mismatch");
    MElem out{e.deg - (m.src_deg - m.dst_deg), std::vector<LElem>(rank_of(m.dst_deg))};
    for (size_t i = 0; i < out.c.size(); ++i)
        for (size_t j = 0; j < e.c.size(); ++j)
            out.c[i] = l_add(out.c[i], l_mul(R_, e.c[j], m.m[i][j]));
    return out;
}

MElem Resolution::gen(int deg, int j) const
{
    MElem e{deg, std::vector<LElem>(rank_of(deg))};
    l_add_term(e.c[j], R_.unit(), R_.unit(), R_.field().one());
    return e;
}

BiMap Resolution::compose(const BiMap& f, const BiMap& g) const
{
    if (f.src_deg % 4 != g.dst_deg % 4)
        throw std::invalid_argument("compose: shape mismatch");
    BiMap r;
    r.src_deg = g.src_deg;
    r.dst_deg = f.dst_deg;
    int nt = rank_of(f.dst_deg), ns = rank_of(g.src_deg), nm = rank_of(f.src_deg);
    r.m.assign(nt, std::vector<LElem>(ns));
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < ns; ++j)
            for (int t = 0; t < nm; ++t)
                r.m[i][j] = l_add(r.m[i][j], l_mul(R_, g.m[t][j], f.m[i][t]));
    return r;
}

bool Resolution::map_is_zero(const BiMap& m, std::string* witness) const
{
    for (size_t i = 0; i < m.m.size(); ++i)
        for (size_t j = 0; j < m.m[i].size(); ++j)
            if (!m.m[i][j].empty()) {
                if (witness) {
                    const LTerm& t = m.m[i][j].front();
                    *witness = "entry(" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                               R_.word_str(t.u) + "(x)" + R_.word_str(t.v);
                }
                return false;
            }
    return true;
}

bool Resolution::map_is_minimal(const BiMap& m) const
{
    for (const auto& row : m.m)
        for (const LElem& e : row)
            for (const LTerm& t : e)
                if (R_.is_unit(t.u) && R_.is_unit(t.v))
                    return false;
    return true;
}

/******** flattened ranks ********/

namespace {

// column of the flattened map: image of (j, u (x) v) under the action
void flat_column(const Algebra& R, const BiMap& m, int j, Word u, Word v,
                 std::vector<std::pair<int, Scalar>>& out)
{
    int n = R.nwords();
    out.clear();
    for (size_t i = 0; i < m.m.size(); ++i) {
        for (const LTerm& t : m.m[i][j]) {
            for (const Term& pu : R.prod(u, t.u))
                for (const Term& pv : R.prod(t.v, v)) {
                    Scalar c = t.c * pu.c * pv.c;
                    if (!c.is_zero())
                        out.emplace_back((int)i * n * n + pu.w * n + pv.w, c);
                }
        }
    }
}

}  // namespace

int Resolution::flat_rank(const BiMap& m) const
{
    const Algebra& R = R_;
    int n = R.nwords();
    int ncols = rank_of(m.src_deg) * n * n;
    int nrows = rank_of(m.dst_deg) * n * n;
    std::vector<std::pair<int, Scalar>> col;
    if (!R.field().symbolic) {
        BitMat bm(ncols, nrows, R.field().m);  // rows of the transpose: one per column
        int r = 0;
        for (int j = 0; j < rank_of(m.src_deg); ++j)
            for (Word u = 0; u < n; ++u)
                for (Word v = 0; v < n; ++v, ++r) {
                    flat_column(R, m, j, u, v, col);
                    for (auto& [idx, c] : col)
                        bm.set(r, idx, bm.get(r, idx) ^ c.gf_bits());
                }
        return std::move(bm).rank();
    }
    std::vector<SparseRow> rows;
    rows.reserve(ncols);
    for (int j = 0; j < rank_of(m.src_deg); ++j)
        for (Word u = 0; u < n; ++u)
            for (Word v = 0; v < n; ++v) {
                flat_column(R, m, j, u, v, col);
                SparseRow row;
                for (auto& [idx, c] : col) {
                    auto it = row.find(idx);
                    if (it == row.end())
                        row.emplace(idx, c);
                    else {
                        it->second += c;
                        if (it->second.is_zero())
                            row.erase(it);
                    }
                }
                rows.push_back(std::move(row));
            }
    return sparse_rank(std::move(rows), nrows);
}

int Resolution::flat_rank_mu() const
{
    const Algebra& R = R_;
    int n = R.nwords();
    if (!R.field().symbolic) {
        BitMat bm(n * n, n, R.field().m);
        int r = 0;
        for (Word u = 0; u < n; ++u)
            for (Word v = 0; v < n; ++v, ++r)
                for (const Term& t : R.prod(u, v))
                    bm.set(r, t.w, bm.get(r, t.w) ^ t.c.gf_bits());
        return std::move(bm).rank();
    }
    std::vector<SparseRow> rows;
    for (Word u = 0; u < n; ++u)
        for (Word v = 0; v < n; ++v) {
            SparseRow row;
            for (const Term& t : R.prod(u, v))
                row.emplace(t.w, t.c);
            rows.push_back(std::move(row));
        }
    return sparse_rank(std::move(rows), n);
}

std::vector<DegreeReport> Resolution::verify_complex(int N) const
{
    // ranks of the four distinct differentials and of mu
    int rk[4];
    for (int i = 0; i < 4; ++i)
        rk[i] = flat_rank(d_[i]);
    int rk_mu = flat_rank_mu();

    std::vector<DegreeReport> rows;
    for (int deg = 0; deg <= N; ++deg) {
        DegreeReport rep;
        rep.degree = deg;
        rep.rank = rk[deg % 4];
        std::string wit;
        if (deg == 0) {
            // mu d0 = 0
            bool zero = true;
            for (int j = 0; j < 2 && zero; ++j) {
                Elem img = mu(d_[0].m[0][j]);
                if (!is_zero(img)) {
                    zero = false;
                    wit = "mu d0 != 0 on generator " + std::to_string(j);
                }
            }
            rep.composite_zero = zero;
            rep.nullity = dim(0) - rk_mu;
        } else {
            BiMap comp = compose(diff(deg - 1), diff(deg));
            rep.composite_zero = map_is_zero(comp, &wit);
            rep.nullity = dim(deg) - rk[(deg - 1) % 4];
        }
        rep.exact = (rep.nullity == rep.rank);
        rep.minimal = map_is_minimal(diff(deg));
        if (!rep.exact && wit.empty())
            wit = "nullity " + std::to_string(rep.nullity) + " != rank " + std::to_string(rep.rank);
        rep.witness = (rep.composite_zero && rep.exact && rep.minimal) ? "" : wit;
        rows.push_back(std::move(rep));
    }
    return rows;
}

}  // namespace qbv

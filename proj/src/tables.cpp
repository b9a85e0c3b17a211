#include "qbv/tables.hpp"

#include <sstream>
#include <stdexcept>

namespace qbv::tables {

namespace {

// one printed tensor: fixed left/middle slots, element-valued right factor
void fam(const Algebra& R, BarTensor& t, const Scalar& c, std::initializer_list<Word> slots,
         const Elem& right)
{
    int n = (int)slots.size() - 1;  // slots = a0, middles
    for (const Term& rt : right) {
        BarKey k;
        k.n = (uint8_t)n;
        int p = 0;
        bool dead = false;
        for (Word w : slots) {
            if (p > 0 && R.is_unit(w))
                dead = true;
            k.s[p++] = w;
        }
        if (dead)
            continue;
        k.s[p] = rt.w;
        bar_add_term(t, k, c * rt.c);
    }
}

}  // namespace

BarTensor phi_printed(const Transport& T, int n, int gen)
{
    const Algebra& R = T.R();
    int k = R.k();
    Scalar one = R.field().one(), d = R.field().d();
    Scalar d2 = d * d, d3 = d2 * d;
    Word U = R.unit(), X = R.letter(LETTER_X), Y = R.letter(LETTER_Y);

    if (n == 2 && gen == 0) {
        BarTensor t{2, {}};
        fam(R, t, one, {U, X, X}, R.one());
        for (int i = 0; i <= k - 2; ++i)
            fam(R, t, one, {U, R.y_xy(i), X}, R.elem(R.y_xy(k - i - 2)));
        for (int i = 1; i <= k - 1; ++i)
            fam(R, t, one, {U, R.yx_pow(i), Y}, R.elem(R.xy_pow(k - i - 1)));
        return t;
    }
    if (n == 2 && gen == 1) {
        BarTensor t{2, {}};
        fam(R, t, one, {U, Y, Y}, R.one());
        for (int i = 0; i <= k - 2; ++i)
            fam(R, t, one, {U, R.x_yx(i), Y}, R.elem(R.x_yx(k - i - 2)));
        for (int i = 0; i <= k - 1; ++i)
            fam(R, t, d, {U, R.x_yx(i), Y}, R.elem(R.xy_pow(k - i - 1)));
        for (int i = 1; i <= k - 1; ++i)
            fam(R, t, one, {U, R.xy_pow(i), X}, R.elem(R.yx_pow(k - i - 1)));
        for (int i = 1; i <= k - 1; ++i)
            fam(R, t, d, {U, R.xy_pow(i), X}, R.elem(R.y_xy(k - i - 1)));
        return t;
    }
    if (n == 3 && gen == 0) {
        BarTensor t{3, {}};
        fam(R, t, one, {U, X, X, X}, R.one());
        for (int i = 0; i <= k - 2; ++i)
            fam(R, t, one, {U, X, R.y_xy(i), X}, R.elem(R.y_xy(k - i - 2)));
        for (int i = 1; i <= k - 1; ++i)
            fam(R, t, one, {U, X, R.yx_pow(i), Y}, R.elem(R.xy_pow(k - i - 1)));
        fam(R, t, one, {U, Y, Y, Y}, R.one());
        fam(R, t, d, {U, Y, R.x_yx(k - 1), Y}, R.one());
        for (int i = 0; i <= k - 2; ++i)
            fam(R, t, one, {U, Y, R.x_yx(i), Y}, R.elem(R.x_yx(k - i - 2)));
        for (int i = 1; i <= k - 1; ++i)
            fam(R, t, one, {U, Y, R.xy_pow(i), X}, R.elem(R.yx_pow(k - i - 1)));
        fam(R, t, d, {U, Y, Y, Y}, R.elem(Y));
        fam(R, t, d2, {U, Y, R.x_yx(k - 1), Y}, R.elem(Y));
        fam(R, t, d2, {U, Y, Y, Y}, R.elem(R.x_yx(k - 1)));
        fam(R, t, d3, {U, Y, R.x_yx(k - 1), Y}, R.elem(R.x_yx(k - 1)));
        return t;
    }
    if ((n == 4 && gen == 0) || n == 5) {
        // the expanded remark; for n = 5 every term gains the letter a up front
        BarTensor t{n, {}};
        Elem y2 = R.prod(Y, Y);
        Word a = (n == 5) ? R.letter(gen) : 0;
        auto put = [&](const Scalar& c, std::initializer_list<Word> slots, const Elem& right) {
            if (n == 4) {
                fam(R, t, c, slots, right);
                return;
            }
            std::vector<Word> with_a;
            with_a.push_back(U);
            with_a.push_back(a);
            size_t p = 0;
            for (Word w : slots) {
                if (p++ == 0)
                    continue;  // drop the leading unit of the degree-4 slot list
                with_a.push_back(w);
            }
            for (const Term& rt : right) {
                BarKey kk;
                kk.n = (uint8_t)(with_a.size() - 1);
                bool dead = false;
                for (size_t q = 0; q < with_a.size(); ++q) {
                    if (q > 0 && R.is_unit(with_a[q]))
                        dead = true;
                    kk.s[q] = with_a[q];
                }
                if (dead)
                    continue;
                kk.s[with_a.size()] = rt.w;
                bar_add_term(t, kk, c * rt.c);
            }
        };

        for (Word b = 1; b < R.nwords(); ++b) {
            Word bs = R.dual_word(b);
            Elem bse = R.elem(bs);
            put(one, {U, b, X, X, X}, bse);
            for (int i = 0; i <= k - 2; ++i)
                put(one, {U, b, X, R.y_xy(i), X}, R.mul(R.y_xy(k - i - 2), bse));
            for (int i = 1; i <= k - 1; ++i)
                put(one, {U, b, X, R.yx_pow(i), Y}, R.mul(R.xy_pow(k - i - 1), bse));
            Elem c4 = R.elem(R.unit());
            add_term(c4, Y, d);
            add_term(c4, R.x_yx(k - 1), d2);
            put(one, {U, b, Y, Y, Y}, R.mul(c4, bse));
            for (int i = 0; i <= k - 2; ++i)
                put(one, {U, b, Y, R.x_yx(i), Y}, R.mul(R.x_yx(k - i - 2), bse));
            for (int i = 1; i <= k - 1; ++i)
                put(one, {U, b, Y, R.xy_pow(i), X}, R.mul(R.yx_pow(k - i - 1), bse));
            Elem c7;
            add_term(c7, R.unit(), d);
            add_term(c7, Y, d2);
            add_term(c7, R.x_yx(k - 1), d3);
            put(one, {U, b, Y, R.x_yx(k - 1), Y}, R.mul(c7, bse));
        }
        Word D = R.x_yx(k - 1);
        put(d, {U, D, X, X, X}, R.elem(D));
        put(d, {U, D, X, R.y_xy(k - 2), X}, R.elem(R.socle()));
        put(d, {U, D, X, R.yx_pow(k - 1), Y}, R.elem(D));
        put(d, {U, D, Y, Y, Y}, y2);
        put(d2, {U, D, Y, R.x_yx(k - 1), Y}, y2);
        put(d, {U, D, Y, R.xy_pow(k - 1), X}, R.elem(D));
        return t;
    }
    throw std::invalid_argument("phi_printed: no table for this degree/generator");
}

BarTensor phi4_structural(const Transport& T)
{
    const Algebra& R = T.R();
    const BarTensor& p3 = T.phi(3)[0];
    BarTensor t{4, {}};
    for (Word b = 0; b < R.nwords(); ++b) {
        BarTensor conj = bar_right_mul(R, bar_left_mul(R, R.elem(b), p3),
                                       R.elem(R.dual_word(b)));
        t = bar_add(t, s_contraction(R, conj));
    }
    Elem corr = R.elem(R.x_yx(R.k() - 1));
    BarTensor extra = s_contraction(R, bar_right_mul(R, bar_left_mul(R, corr, p3), corr));
    for (auto& [k, c] : extra.t)
        bar_add_term(t, k, c * R.field().d());
    return t;
}

BarTensor phi5_structural(const Transport& T, int gen)
{
    const Algebra& R = T.R();
    const BarTensor& p4 = T.phi(4)[0];
    BarTensor shifted = bar_left_mul(R, R.elem(R.letter(gen)), p4);
    return s_contraction(R, shifted);
}

/******** generator expressions ********/

CohClass eval_expr(const Transport& T, const GenExpr& e)
{
    if (e.empty())
        throw std::invalid_argument("eval_expr: empty expression");
    std::optional<CohClass> acc;
    for (const ProdTerm& t : e) {
        if (t.gens.empty())
            throw std::invalid_argument("eval_expr: empty monomial");
        CohClass m = T.generator(t.gens[0]);
        for (size_t i = 1; i < t.gens.size(); ++i)
            m = T.cup(m, T.generator(t.gens[i]));
        m = T.scale_class(m, t.c);
        acc = acc ? T.add_classes(*acc, m) : m;
    }
    return *acc;
}

std::string expr_str(const GenExpr& e)
{
    if (e.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const ProdTerm& t : e) {
        if (!first)
            os << " + ";
        first = false;
        if (!t.c.is_one())
            os << (t.c.str_needs_parens() ? "(" + t.c.str() + ")" : t.c.str()) << "*";
        for (size_t i = 0; i < t.gens.size(); ++i) {
            if (i)
                os << " ";
            os << t.gens[i];
        }
    }
    return os.str();
}

std::vector<std::pair<std::string, GenExpr>> ideal_relations(const Transport& T)
{
    const Scalar one = T.R().field().one();
    const Scalar d = T.R().field().d();
    int k = T.R().k();
    auto mono = [&](std::vector<std::string> g) { return ProdTerm{one, std::move(g)}; };
    auto dmono = [&](const Scalar& c, std::vector<std::string> g) {
        return ProdTerm{c, std::move(g)};
    };
    auto p1pow = [&](int i) {
        std::vector<std::string> g(i, "p1");
        return g;
    };

    std::vector<std::pair<std::string, GenExpr>> rels;
    auto rel = [&](std::string name, GenExpr e) { rels.emplace_back(std::move(name), std::move(e)); };

    // degree 0
    rel("p1^k", {mono(p1pow(k))});
    rel("p2^2", {mono({"p2", "p2"})});
    rel("p3^2", {mono({"p3", "p3"})});
    rel("p4^2", {mono({"p4", "p4"})});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            rel("p" + std::to_string(i) + " p" + std::to_string(j),
                {mono({"p" + std::to_string(i), "p" + std::to_string(j)})});

    // degree 1
    rel("p3 q1 + p2 q2", {mono({"p3", "q1"}), mono({"p2", "q2"})});
    {
        auto g = p1pow(k - 1);
        g.push_back("q1");
        rel("p1^{k-1} q1 + d p3 q1", {mono(g), dmono(d, {"p3", "q1"})});
    }
    rel("p1 q2 + p2 q1", {mono({"p1", "q2"}), mono({"p2", "q1"})});
    rel("p1^2 q2", {mono({"p1", "p1", "q2"})});

    // degree 2
    rel("q1 q2", {mono({"q1", "q2"})});
    {
        auto g = p1pow(k - 1);
        g.push_back("w3");
        rel("p1^{k-1} w3 + d p2 w2", {mono(g), dmono(d, {"p2", "w2"})});
    }
    rel("p2 w1", {mono({"p2", "w1"})});
    rel("p4 w1", {mono({"p4", "w1"})});
    rel("p3 w2", {mono({"p3", "w2"})});
    rel("p4 w2", {mono({"p4", "w2"})});
    rel("p4 w3", {mono({"p4", "w3"})});
    rel("p2 q1^2", {mono({"p2", "q1", "q1"})});
    rel("p3 q2^2", {mono({"p3", "q2", "q2"})});
    rel("p1 w1 + p2 w2", {mono({"p1", "w1"}), mono({"p2", "w2"})});
    rel("p1 w1 + p3 w3", {mono({"p1", "w1"}), mono({"p3", "w3"})});
    rel("p1 w1 + p4 q1^2", {mono({"p1", "w1"}), mono({"p4", "q1", "q1"})});
    rel("p3 w1 + p1 w2", {mono({"p3", "w1"}), mono({"p1", "w2"})});
    rel("p3 w1 + p2 w3", {mono({"p3", "w1"}), mono({"p2", "w3"})});
    rel("p3 w1 + p4 q2^2", {mono({"p3", "w1"}), mono({"p4", "q2", "q2"})});

    // degree 3
    rel("q1 w1 + q2 w2", {mono({"q1", "w1"}), mono({"q2", "w2"})});
    {
        // (k+2)/2 is an integer for even k; reduced mod 2 it scales d^3
        Scalar c = ((k + 2) / 2) % 2 ? d * d * d : T.R().field().zero();
        rel("q1^3 + q2^3 + (d^3 (k+2)/2) p1 q1 w1",
            {mono({"q1", "q1", "q1"}), mono({"q2", "q2", "q2"}),
             dmono(c, {"p1", "q1", "w1"})});
    }
    rel("p3 q2 w1 + p1 q2 w2", {mono({"p3", "q2", "w1"}), mono({"p1", "q2", "w2"})});
    rel("p3 q2 w1 + p2 q2 w3", {mono({"p3", "q2", "w1"}), mono({"p2", "q2", "w3"})});
    {
        auto g = p1pow(k - 2);
        g.push_back("q1");
        g.push_back("w3");
        rel("p1^{k-2} q1 w3 + d q2 w2", {mono(g), dmono(d, {"q2", "w2"})});
    }
    {
        auto g = p1pow(k - 2);
        g.push_back("q2");
        g.push_back("w3");
        rel("p1^{k-2} q2 w3", {mono(g)});
    }
    rel("p1 q2 w1", {mono({"p1", "q2", "w1"})});
    rel("p1 q2 w3", {mono({"p1", "q2", "w3"})});
    rel("q1 w2 + q2 w3", {mono({"q1", "w2"}), mono({"q2", "w3"})});

    // degree 4
    rel("w3^2 + p1^2 e", {mono({"w3", "w3"}), mono({"p1", "p1", "e"})});
    rel("q2^2 w1", {mono({"q2", "q2", "w1"})});
    rel("q1^2 w3", {mono({"q1", "q1", "w3"})});
    rel("q2^2 w1 (repeated)", {mono({"q2", "q2", "w1"})});
    rel("q2^2 w2", {mono({"q2", "q2", "w2"})});
    rel("w1^2", {mono({"w1", "w1"})});
    rel("w2^2", {mono({"w2", "w2"})});
    rel("w1 w2", {mono({"w1", "w2"})});
    rel("w1 w3", {mono({"w1", "w3"})});
    rel("w2 w3", {mono({"w2", "w3"})});

    return rels;
}

}  // namespace qbv::tables

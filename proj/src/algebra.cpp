#include "qbv/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qbv/linalg.hpp"

namespace qbv {

/******** sparse elements ********/

void add_term(Elem& e, Word w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = std::lower_bound(e.begin(), e.end(), w,
                               [](const Term& t, Word x) { return t.w < x; });
    if (it != e.end() && it->w == w) {
        it->c += c;
        if (it->c.is_zero())
            e.erase(it);
    } else {
        e.insert(it, Term{w, c});
    }
}

Elem add(const Elem& a, const Elem& b)
{
    Elem r = a;
    for (const Term& t : b)
        add_term(r, t.w, t.c);
    return r;
}

Elem scale(const Elem& a, const Scalar& c)
{
    if (c.is_zero())
        return {};
    Elem r;
    r.reserve(a.size());
    for (const Term& t : a)
        r.push_back(Term{t.w, t.c * c});
    return r;
}

const Scalar* coeff_of(const Elem& e, Word w)
{
    auto it = std::lower_bound(e.begin(), e.end(), w,
                               [](const Term& t, Word x) { return t.w < x; });
    return (it != e.end() && it->w == w) ? &it->c : nullptr;
}

bool is_zero(const Elem& e)
{
    return e.empty();
}

/******** words ********/

Word Algebra::alt(int first, int len) const
{
    if (len < 1 || len > 2 * k() - 1)
        throw std::invalid_argument("Algebra::alt: bad length");
    return (Word)(2 * len - 1 + first);
}

Word Algebra::xy_pow(int i) const
{
    if (i == 0)
        return unit();
    if (i == k())
        return socle();
    return alt(LETTER_X, 2 * i);
}

Word Algebra::yx_pow(int i) const
{
    if (i == 0)
        return unit();
    if (i == k())
        return socle();
    return alt(LETTER_Y, 2 * i);
}

Word Algebra::x_yx(int i) const
{
    return alt(LETTER_X, 2 * i + 1);
}

Word Algebra::y_xy(int i) const
{
    return alt(LETTER_Y, 2 * i + 1);
}

int Algebra::word_len(Word w) const
{
    if (w == 0)
        return 0;
    if (is_socle(w))
        return 2 * k();
    return (w % 2) ? (w + 1) / 2 : w / 2;
}

int Algebra::first_letter(Word w) const
{
    if (w == 0 || is_socle(w))
        return LETTER_X;
    return (w % 2) ? LETTER_X : LETTER_Y;
}

int Algebra::letter_at(Word w, int i) const
{
    return first_letter(w) ^ (i & 1);
}

std::vector<uint8_t> Algebra::letters(Word w) const
{
    int n = word_len(w);
    std::vector<uint8_t> ls(n);
    for (int i = 0; i < n; ++i)
        ls[i] = (uint8_t)letter_at(w, i);
    return ls;
}

/******** construction ********/

Algebra::Algebra(AlgebraSpec spec) : spec_(spec)
{
    if (spec_.k < 2)
        throw std::invalid_argument("Algebra: k must be >= 2");
    int n = nwords();
    table_.resize((size_t)n * n);
    for (Word a = 0; a < n; ++a) {
        std::vector<uint8_t> la = letters(a);
        for (Word b = 0; b < n; ++b) {
            std::vector<uint8_t> w = la;
            std::vector<uint8_t> lb = letters(b);
            w.insert(w.end(), lb.begin(), lb.end());
            table_[(size_t)a * n + b] = normal_form(w);
        }
    }
    build_duals();
}

/* Rewriting: xx -> y(xy)^{k-1}, yy -> x(yx)^{k-1} + d(xy)^k.  Rules never
 * shorten a word and alternating words above length 2k vanish, so anything
 * longer than 2k is already zero. */
void Algebra::normal_form_rec(std::vector<uint8_t>& w, const Scalar& c, Elem& out) const
{
    int n = (int)w.size(), kk = k();
    if (n > 2 * kk)
        return;
    int rep = -1;
    for (int i = 0; i + 1 < n; ++i)
        if (w[i] == w[i + 1]) {
            rep = i;
            break;
        }
    if (rep < 0) {
        if (n == 0)
            add_term(out, unit(), c);
        else if (n < 2 * kk)
            add_term(out, alt(w[0], n), c);
        else
            add_term(out, socle(), c);
        return;
    }
    std::vector<uint8_t> pre(w.begin(), w.begin() + rep);
    std::vector<uint8_t> suf(w.begin() + rep + 2, w.end());
    auto splice = [&](int first, int len) {
        std::vector<uint8_t> nw = pre;
        for (int i = 0; i < len; ++i)
            nw.push_back((uint8_t)(first ^ (i & 1)));
        nw.insert(nw.end(), suf.begin(), suf.end());
        return nw;
    };
    if (w[rep] == LETTER_X) {
        std::vector<uint8_t> nw = splice(LETTER_Y, 2 * kk - 1);
        normal_form_rec(nw, c, out);
    } else {
        std::vector<uint8_t> nw = splice(LETTER_X, 2 * kk - 1);
        normal_form_rec(nw, c, out);
        std::vector<uint8_t> nd = splice(LETTER_X, 2 * kk);
        normal_form_rec(nd, c * field().d(), out);
    }
}

Elem Algebra::normal_form(std::span<const uint8_t> ls) const
{
    Elem out;
    std::vector<uint8_t> w(ls.begin(), ls.end());
    normal_form_rec(w, field().one(), out);
    return out;
}

/******** products and the form ********/

Elem Algebra::mul(const Elem& a, const Elem& b) const
{
    Elem r;
    for (const Term& ta : a)
        for (const Term& tb : b) {
            Scalar c = ta.c * tb.c;
            for (const Term& t : prod(ta.w, tb.w))
                add_term(r, t.w, t.c * c);
        }
    return r;
}

Elem Algebra::mul(const Elem& a, Word b) const
{
    Elem r;
    for (const Term& ta : a)
        for (const Term& t : prod(ta.w, b))
            add_term(r, t.w, t.c * ta.c);
    return r;
}

Elem Algebra::mul(Word a, const Elem& b) const
{
    Elem r;
    for (const Term& tb : b)
        for (const Term& t : prod(a, tb.w))
            add_term(r, t.w, t.c * tb.c);
    return r;
}

Scalar Algebra::socle_coeff(const Elem& a) const
{
    const Scalar* c = coeff_of(a, socle());
    return c ? *c : field().zero();
}

Scalar Algebra::form(const Elem& a, const Elem& b) const
{
    return socle_coeff(mul(a, b));
}

Word Algebra::dual_word(Word b) const
{
    if (b == unit())
        return socle();
    if (is_socle(b))
        return unit();
    int len = word_len(b);
    int first = first_letter(b) ^ (len & 1);
    return alt(first, 2 * k() - len);
}

void Algebra::build_duals()
{
    int n = nwords();
    DenseMat gram(n, n, field());
    for (Word i = 0; i < n; ++i)
        for (Word j = 0; j < n; ++j)
            gram.at(i, j) = socle_coeff(prod(i, j));
    dual_elems_.resize(n);
    for (Word j = 0; j < n; ++j) {
        std::vector<Scalar> e(n, field().zero()), x;
        e[j] = field().one();
        if (!gram.solve(e, x))
            throw std::logic_error("Algebra: degenerate form");
        Elem dual;
        for (Word i = 0; i < n; ++i)
            add_term(dual, i, x[i]);
        dual_elems_[j] = std::move(dual);
    }
}

const Elem& Algebra::dual_elem(Word b) const
{
    return dual_elems_[b];
}

Elem Algebra::elem(Word w) const
{
    return Elem{Term{w, field().one()}};
}

std::vector<Elem> Algebra::center_basis() const
{
    int n = nwords();
    DenseMat sys(n * n, n, field());
    for (Word j = 0; j < n; ++j) {
        for (Word i = 0; i < n; ++i) {
            Elem comm = add(prod(i, j), prod(j, i));  // char 2
            for (const Term& t : comm)
                sys.at(j * n + t.w, i) += t.c;
        }
    }
    std::vector<Elem> basis;
    for (const std::vector<Scalar>& v : sys.kernel_basis()) {
        Elem z;
        for (Word i = 0; i < n; ++i)
            add_term(z, i, v[i]);
        basis.push_back(std::move(z));
    }
    return basis;
}

/******** printing and parsing ********/

std::string Algebra::word_str(Word w) const
{
    if (w == unit())
        return "1";
    if (is_socle(w))
        return "soc";
    int len = word_len(w), first = first_letter(w);
    auto raw = [&]() {
        std::string s;
        for (int i = 0; i < len; ++i)
            s += (letter_at(w, i) == LETTER_X) ? 'x' : 'y';
        return s;
    };
    if (len <= 3)
        return raw();
    const char* pat = (first == LETTER_X) ? "xy" : "yx";
    if (len % 2 == 0)
        return "(" + std::string(pat) + ")^" + std::to_string(len / 2);
    std::string head(1, (first == LETTER_X) ? 'x' : 'y');
    const char* tail = (first == LETTER_X) ? "yx" : "xy";
    return head + "(" + tail + ")^" + std::to_string(len / 2);
}

Word Algebra::parse_word(const std::string& text) const
{
    if (text == "1")
        return unit();
    if (text == "soc")
        return socle();
    std::vector<uint8_t> ls;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 'x' || c == 'y') {
            ls.push_back(c == 'x' ? LETTER_X : LETTER_Y);
            ++i;
        } else if (c == '(') {
            size_t close = text.find(')', i);
            if (close == std::string::npos)
                throw std::invalid_argument("bad word: " + text);
            std::string pat = text.substr(i + 1, close - i - 1);
            i = close + 1;
            int rep = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t j = i;
                while (j < text.size() && isdigit((unsigned char)text[j]))
                    ++j;
                if (j == i)
                    throw std::invalid_argument("bad word: " + text);
                rep = std::stoi(text.substr(i, j - i));
                i = j;
            }
            for (int r = 0; r < rep; ++r)
                for (char pc : pat) {
                    if (pc != 'x' && pc != 'y')
                        throw std::invalid_argument("bad word: " + text);
                    ls.push_back(pc == 'x' ? LETTER_X : LETTER_Y);
                }
        } else {
            throw std::invalid_argument("bad word: " + text);
        }
    }
    if (ls.empty())
        return unit();
    for (size_t j = 0; j + 1 < ls.size(); ++j)
        if (ls[j] == ls[j + 1])
            throw std::invalid_argument("not a basis word: " + text);
    int len = (int)ls.size();
    if (len == 2 * k())
        return socle();
    if (len > 2 * k())
        throw std::invalid_argument("word too long: " + text);
    return alt(ls[0], len);
}

std::string Algebra::elem_str(const Elem& e) const
{
    if (e.empty())
        return "0";
    std::string s;
    for (const Term& t : e) {
        if (!s.empty())
            s += " + ";
        if (t.c.is_one())
            s += word_str(t.w);
        else {
            std::string cs = t.c.str();
            if (t.c.str_needs_parens())
                cs = "(" + cs + ")";
            s += cs + "*" + word_str(t.w);
        }
    }
    return s;
}

Elem Algebra::parse_elem(const std::string& text) const
{
    {
        size_t a = text.find_first_not_of(" \t");
        size_t b = text.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty element");
        if (text.substr(a, b - a + 1) == "0")
            return {};
    }
    Elem e;
    size_t start = 0;
    int depth = 0;
    auto flush = [&](size_t end) {
        std::string term = text.substr(start, end - start);
        // trim
        size_t a = term.find_first_not_of(" \t");
        size_t b = term.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty term in: " + text);
        term = term.substr(a, b - a + 1);
        // split on the last '*' at depth 0
        int dep = 0;
        size_t star = std::string::npos;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(')
                ++dep;
            else if (term[i] == ')')
                --dep;
            else if (term[i] == '*' && dep == 0)
                star = i;
        }
        Scalar c = field().one();
        std::string wtext = term;
        if (star != std::string::npos) {
            std::string ctext = term.substr(0, star);
            size_t ca = ctext.find_first_not_of(" \t"), cb = ctext.find_last_not_of(" \t");
            ctext = ctext.substr(ca, cb - ca + 1);
            if (ctext.size() >= 2 && ctext.front() == '(' && ctext.back() == ')')
                ctext = ctext.substr(1, ctext.size() - 2);
            c = field().parse(ctext);
            wtext = term.substr(star + 1);
            size_t wa = wtext.find_first_not_of(" \t"), wb = wtext.find_last_not_of(" \t");
            wtext = wtext.substr(wa, wb - wa + 1);
        }
        add_term(e, parse_word(wtext), c);
    };
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (text[i] == '+' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return e;
}

}  // namespace qbv

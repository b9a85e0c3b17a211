#include "qbv/barcalc.hpp"

#include <sstream>
#include <stdexcept>

namespace qbv {

/******** bar tensors ********/

void bar_add_term(BarTensor& b, const BarKey& k, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = b.t.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            b.t.erase(it);
    }
}

BarTensor bar_add(const BarTensor& a, const BarTensor& b)
{
    BarTensor r = a;
    for (const auto& [k, c] : b.t)
        bar_add_term(r, k, c);
    return r;
}

BarTensor bar_left_mul(const Algebra& R, const Elem& r, const BarTensor& b)
{
    BarTensor out{b.deg, {}};
    for (const auto& [k, c] : b.t)
        for (const Term& rt : r)
            for (const Term& p : R.prod(rt.w, k.s[0])) {
                BarKey nk = k;
                nk.s[0] = p.w;
                bar_add_term(out, nk, c * rt.c * p.c);
            }
    return out;
}

BarTensor bar_right_mul(const Algebra& R, const BarTensor& b, const Elem& r)
{
    BarTensor out{b.deg, {}};
    for (const auto& [k, c] : b.t)
        for (const Term& rt : r)
            for (const Term& p : R.prod(k.s[k.n + 1], rt.w)) {
                BarKey nk = k;
                nk.s[k.n + 1] = p.w;
                bar_add_term(out, nk, c * rt.c * p.c);
            }
    return out;
}

BarTensor bar_differential(const Algebra& R, const BarTensor& b)
{
    if (b.deg < 1)
        throw std::invalid_argument("bar_differential: degree must be >= 1");
    BarTensor out{b.deg - 1, {}};
    for (const auto& [k, c] : b.t) {
        for (int i = 0; i <= k.n; ++i) {
            // merge slots i and i+1
            for (const Term& p : R.prod(k.s[i], k.s[i + 1])) {
                bool merged_is_middle = (i > 0 && i < k.n);
                if (merged_is_middle && R.is_unit(p.w))
                    continue;
                BarKey nk;
                nk.n = (uint8_t)(k.n - 1);
                int pos = 0;
                for (int j = 0; j <= k.n + 1; ++j) {
                    if (j == i) {
                        nk.s[pos++] = p.w;
                        ++j;  // skip the absorbed slot
                    } else {
                        nk.s[pos++] = k.s[j];
                    }
                }
                bar_add_term(out, nk, c * p.c);
            }
        }
    }
    return out;
}

BarTensor s_contraction(const Algebra& R, const BarTensor& b)
{
    if (b.deg + 1 > BAR_DEGREE_CAP)
        throw std::invalid_argument("s_contraction: degree cap exceeded");
    BarTensor out{b.deg + 1, {}};
    for (const auto& [k, c] : b.t) {
        if (R.is_unit(k.s[0]))
            continue;  // new middle slot would be the unit
        BarKey nk;
        nk.n = (uint8_t)(k.n + 1);
        nk.s[0] = R.unit();
        for (int j = 0; j <= k.n + 1; ++j)
            nk.s[j + 1] = k.s[j];
        bar_add_term(out, nk, c);
    }
    return out;
}

std::string bar_str(const Algebra& R, const BarTensor& b)
{
    if (b.t.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : b.t) {
        if (!first)
            os << " + ";
        first = false;
        if (!c.is_one())
            os << (c.str_needs_parens() ? "(" + c.str() + ")" : c.str()) << "*";
        for (int j = 0; j <= k.n + 1; ++j) {
            if (j)
                os << "(x)";
            os << R.word_str(k.s[j]);
        }
    }
    return os.str();
}

/******** cochains ********/

struct Cochain::Impl {
    const Algebra* R = nullptr;
    int deg = 0;
    std::function<Elem(std::span<const Word>)> fn;
    std::map<std::vector<Word>, Elem> memo;
};

Cochain Cochain::from_fn(const Algebra& R, int deg,
                         std::function<Elem(std::span<const Word>)> fn)
{
    Cochain c;
    c.impl_ = std::make_shared<Impl>();
    c.impl_->R = &R;
    c.impl_->deg = deg;
    c.impl_->fn = std::move(fn);
    return c;
}

Cochain Cochain::constant(const Algebra& R, const Elem& value)
{
    return from_fn(R, 0, [value](std::span<const Word>) { return value; });
}

Cochain Cochain::zero(const Algebra& R, int deg)
{
    return from_fn(R, deg, [](std::span<const Word>) { return Elem{}; });
}

int Cochain::deg() const
{
    return impl_->deg;
}

const Algebra& Cochain::algebra() const
{
    return *impl_->R;
}

Elem Cochain::operator()(std::span<const Word> words) const
{
    Impl& im = *impl_;
    if ((int)words.size() != im.deg)
        throw std::invalid_argument("Cochain: arity mismatch");
    for (Word w : words)
        if (im.R->is_unit(w))
            return {};
    std::vector<Word> key(words.begin(), words.end());
    auto it = im.memo.find(key);
    if (it != im.memo.end())
        return it->second;
    Elem v = im.fn(words);
    im.memo.emplace(std::move(key), v);
    return v;
}

Elem Cochain::at(std::initializer_list<Word> words) const
{
    std::vector<Word> v(words);
    return (*this)(v);
}

Elem Cochain::eval_elems(std::span<const Elem> args) const
{
    const Algebra& R = *impl_->R;
    Elem out;
    std::vector<Word> words(args.size());
    // cartesian expansion over the terms of every slot
    std::function<void(size_t, const Scalar&)> rec = [&](size_t slot, const Scalar& c) {
        if (slot == args.size()) {
            for (const Term& t : (*this)(words))
                add_term(out, t.w, t.c * c);
            return;
        }
        for (const Term& t : args[slot]) {
            if (R.is_unit(t.w))
                continue;  // normalized
            words[slot] = t.w;
            rec(slot + 1, c * t.c);
        }
    };
    rec(0, R.field().one());
    return out;
}

Elem Cochain::eval_tensor(const BarTensor& b) const
{
    const Algebra& R = *impl_->R;
    if (b.deg != impl_->deg)
        throw std::invalid_argument("eval_tensor: degree mismatch");
    Elem out;
    for (const auto& [k, c] : b.t) {
        Elem v = (*this)(std::span<const Word>(k.s.data() + 1, (size_t)k.n));
        Elem lrv = R.mul(R.mul(k.s[0], v), k.s[k.n + 1]);
        for (const Term& t : lrv)
            add_term(out, t.w, t.c * c);
    }
    return out;
}

/******** combinators ********/

Cochain cochain_coboundary(const Cochain& f)
{
    const Algebra& R = f.algebra();
    int n = f.deg();
    return Cochain::from_fn(R, n + 1, [f, &R, n](std::span<const Word> a) {
        Elem out = R.mul(a[0], f(a.subspan(1)));
        std::vector<Elem> slots(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 0; j < i - 1; ++j)
                slots[j] = R.elem(a[j]);
            slots[i - 1] = R.prod(a[i - 1], a[i]);
            for (int j = i; j < n; ++j)
                slots[j] = R.elem(a[j + 1]);
            out = add(out, f.eval_elems(slots));
        }
        out = add(out, R.mul(f(a.first(n)), a[n]));
        return out;
    });
}

Cochain cup(const Cochain& f, const Cochain& g)
{
    const Algebra& R = f.algebra();
    int n = f.deg(), m = g.deg();
    if (n + m > BAR_DEGREE_CAP)
        throw std::invalid_argument("cup: degree cap exceeded");
    return Cochain::from_fn(R, n + m, [f, g, &R, n](std::span<const Word> a) {
        return R.mul(f(a.first(n)), g(a.subspan(n)));
    });
}

Cochain circle_i(const Cochain& f, const Cochain& g, int i)
{
    const Algebra& R = f.algebra();
    int n = f.deg(), m = g.deg();
    if (n < 1 || i < 1 || i > n)
        throw std::invalid_argument("circle_i: slot out of range");
    return Cochain::from_fn(R, n + m - 1, [f, g, i, n, m, &R](std::span<const Word> a) {
        std::vector<Elem> slots(n);
        for (int j = 0; j < i - 1; ++j)
            slots[j] = R.elem(a[j]);
        slots[i - 1] = (m == 0) ? g(std::span<const Word>{}) : g(a.subspan(i - 1, m));
        for (int j = i; j < n; ++j)
            slots[j] = R.elem(a[j + m - 1]);
        return f.eval_elems(slots);
    });
}

Cochain circle(const Cochain& f, const Cochain& g)
{
    const Algebra& R = f.algebra();
    int n = f.deg(), m = g.deg();
    if (n == 0)
        return Cochain::zero(R, std::max(m - 1, 0));
    Cochain acc = circle_i(f, g, 1);
    for (int i = 2; i <= n; ++i) {
        Cochain c = circle_i(f, g, i), prev = acc;
        acc = Cochain::from_fn(R, n + m - 1, [prev, c](std::span<const Word> a) {
            return add(prev(a), c(a));
        });
    }
    return acc;
}

Cochain bracket(const Cochain& f, const Cochain& g)
{
    const Algebra& R = f.algebra();
    Cochain fg = circle(f, g), gf = circle(g, f);
    int deg = std::max(f.deg() + g.deg() - 1, 0);
    return Cochain::from_fn(R, deg, [fg, gf](std::span<const Word> a) {
        return add(fg(a), gf(a));
    });
}

Cochain tradler_delta(const Cochain& f, DualMode mode)
{
    const Algebra& R = f.algebra();
    int n = f.deg();
    if (n == 0)
        return Cochain::zero(R, 0);
    return Cochain::from_fn(R, n - 1, [f, &R, n, mode](std::span<const Word> a) {
        Elem out;
        std::vector<Word> args(n);
        for (Word b = 1; b < R.nwords(); ++b) {
            Elem cyc;
            for (int i = 1; i <= n; ++i) {
                // (a_i, ..., a_{n-1}, b, a_1, ..., a_{i-1})
                int p = 0;
                for (int j = i; j <= n - 1; ++j)
                    args[p++] = a[j - 1];
                args[p++] = b;
                for (int j = 1; j <= i - 1; ++j)
                    args[p++] = a[j - 1];
                cyc = add(cyc, f(args));
            }
            Scalar coef = R.socle_coeff(cyc);  // <sum_i f(...), 1>
            if (coef.is_zero())
                continue;
            const Elem& dual = (mode == DualMode::monomial)
                                   ? R.elem(R.dual_word(b))
                                   : R.dual_elem(b);
            for (const Term& t : dual)
                add_term(out, t.w, t.c * coef);
        }
        return out;
    });
}

}  // namespace qbv

#include "qbv/transport.hpp"

#include <sstream>
#include <stdexcept>

namespace qbv {

bool CohClass::is_zero() const
{
    for (const Scalar& c : canon)
        if (!c.is_zero())
            return false;
    return true;
}

Transport::Transport(const Homotopy& h, DualMode delta_mode)
    : R_(h.res().R()), res_(h.res()), h_(h), delta_mode_(delta_mode)
{
    psi_memo_.resize(BAR_DEGREE_CAP + 1);
    degree_.resize(BAR_DEGREE_CAP + 2);
    // Phi_0 and Phi_1 directly; higher degrees from the s-recursion on demand
    phi_.resize(2);
    BarTensor unit_tensor{0, {}};
    BarKey k0;
    k0.n = 0;
    k0.s[0] = R_.unit();
    k0.s[1] = R_.unit();
    bar_add_term(unit_tensor, k0, R_.field().one());
    phi_[0] = {unit_tensor};
    phi_[1].resize(2);
    for (int g = 0; g < 2; ++g) {
        BarTensor t{1, {}};
        BarKey k;
        k.n = 1;
        k.s[0] = R_.unit();
        k.s[1] = R_.letter(g);
        k.s[2] = R_.unit();
        bar_add_term(t, k, R_.field().one());
        phi_[1][g] = t;
    }
}

/******** comparison morphisms ********/

const std::vector<BarTensor>& Transport::phi(int n) const
{
    if (n < 0 || n > BAR_DEGREE_CAP)
        throw std::invalid_argument("phi: degree out of range");
    while ((int)phi_.size() <= n) {
        int deg = (int)phi_.size();
        // Phi_deg = s . Phi_{deg-1} . d_{deg-1}
        const BiMap& d = res_.diff(deg - 1);
        std::vector<BarTensor> imgs(Resolution::rank_of(deg));
        for (int j = 0; j < Resolution::rank_of(deg); ++j) {
            MElem de = res_.apply(d, res_.gen(deg, j));
            BarTensor acc{deg - 1, {}};
            for (size_t i = 0; i < de.c.size(); ++i)
                for (const LTerm& t : de.c[i]) {
                    BarTensor part = bar_left_mul(R_, R_.elem(t.u), phi_[deg - 1][i]);
                    part = bar_right_mul(R_, part, R_.elem(t.v));
                    for (auto& [kk, cc] : part.t)
                        bar_add_term(acc, kk, cc * t.c);
                }
            imgs[j] = s_contraction(R_, acc);
        }
        phi_.push_back(std::move(imgs));
    }
    return phi_[n];
}

MElem Transport::psi(int n, std::span<const Word> words) const
{
    if (n < 0 || n > BAR_DEGREE_CAP)
        throw std::invalid_argument("psi: degree out of range");
    if ((int)words.size() != n)
        throw std::invalid_argument("psi: arity mismatch");
    MElem zero{n, std::vector<LElem>(Resolution::rank_of(n))};
    for (Word w : words)
        if (R_.is_unit(w))
            return zero;
    if (n == 0)
        return res_.gen(0, 0);
    std::vector<Word> key(words.begin(), words.end());
    auto it = psi_memo_[n].find(key);
    if (it != psi_memo_[n].end())
        return it->second;
    MElem inner = psi(n - 1, words.subspan(1));
    MElem v = h_.t(n - 1, m_left_mul(R_, words[0], inner));
    psi_memo_[n].emplace(std::move(key), v);
    return v;
}

MElem Transport::psi(int n, std::initializer_list<Word> words) const
{
    std::vector<Word> v(words);
    return psi(n, std::span<const Word>(v));
}

Elem Transport::eval_min(const MinCochain& f, const MElem& e) const
{
    if ((int)f.val.size() != (int)e.c.size())
        throw std::invalid_argument("eval_min: rank mismatch");
    Elem out;
    for (size_t i = 0; i < e.c.size(); ++i)
        for (const LTerm& t : e.c[i]) {
            Elem v = R_.mul(R_.mul(t.u, f.val[i]), t.v);
            for (const Term& s : v)
                add_term(out, s.w, s.c * t.c);
        }
    return out;
}

Cochain Transport::min_to_bar(const MinCochain& f) const
{
    int n = f.deg;
    return Cochain::from_fn(R_, n, [this, f, n](std::span<const Word> a) {
        return eval_min(f, psi(n, a));
    });
}

MinCochain Transport::bar_to_min(const Cochain& g) const
{
    int n = g.deg();
    MinCochain out{n, {}};
    const std::vector<BarTensor>& ph = phi(n);
    out.val.reserve(ph.size());
    for (const BarTensor& t : ph)
        out.val.push_back(g.eval_tensor(t));
    return out;
}

/******** the minimal complex and its cohomology ********/

MinCochain Transport::min_coboundary(const MinCochain& f) const
{
    const BiMap& d = res_.diff(f.deg);
    MinCochain out{f.deg + 1, {}};
    for (int j = 0; j < Resolution::rank_of(f.deg + 1); ++j)
        out.val.push_back(eval_min(f, res_.apply(d, res_.gen(f.deg + 1, j))));
    return out;
}

bool Transport::is_cocycle(const MinCochain& f) const
{
    for (const Elem& e : min_coboundary(f).val)
        if (!is_zero(e))
            return false;
    return true;
}

std::vector<Scalar> Transport::coords(const MinCochain& f) const
{
    int n = R_.nwords();
    std::vector<Scalar> v((size_t)cochain_dim(f.deg), R_.field().zero());
    for (size_t i = 0; i < f.val.size(); ++i)
        for (const Term& t : f.val[i])
            v[i * n + t.w] = t.c;
    return v;
}

MinCochain Transport::from_coords(int deg, const std::vector<Scalar>& v) const
{
    int n = R_.nwords();
    MinCochain f{deg, std::vector<Elem>(Resolution::rank_of(deg))};
    for (size_t i = 0; i < f.val.size(); ++i)
        for (Word w = 0; w < n; ++w)
            add_term(f.val[i], w, v[i * n + w]);
    return f;
}

const Transport::DegreeData& Transport::degree_data(int deg) const
{
    if (deg < 0 || deg >= (int)degree_.size())
        throw std::invalid_argument("degree out of range");
    if (degree_[deg])
        return *degree_[deg];
    int dim = cochain_dim(deg);
    DegreeData data(dim, R_.field());
    // coboundary row space: images of the degree-(deg-1) basis cochains
    if (deg >= 1) {
        int pdim = cochain_dim(deg - 1);
        DenseMat rows(pdim, dim, R_.field());
        for (int b = 0; b < pdim; ++b) {
            std::vector<Scalar> e((size_t)pdim, R_.field().zero());
            e[b] = R_.field().one();
            MinCochain img = min_coboundary(from_coords(deg - 1, e));
            std::vector<Scalar> v = coords(img);
            for (int c = 0; c < dim; ++c)
                rows.at(b, c) = v[c];
        }
        data.pivots = rows.echelonize();
        data.dim_bound = (int)data.pivots.size();
        DenseMat packed((int)data.pivots.size(), dim, R_.field());
        for (int r = 0; r < (int)data.pivots.size(); ++r)
            for (int c = 0; c < dim; ++c)
                packed.at(r, c) = rows.at(r, c);
        data.bound = std::move(packed);
    }
    // cocycle dimension from the rank of the outgoing coboundary
    {
        int ndim = cochain_dim(deg + 1);
        DenseMat rows(dim, ndim, R_.field());
        for (int b = 0; b < dim; ++b) {
            std::vector<Scalar> e((size_t)dim, R_.field().zero());
            e[b] = R_.field().one();
            MinCochain img = min_coboundary(from_coords(deg, e));
            std::vector<Scalar> v = coords(img);
            for (int c = 0; c < ndim; ++c)
                rows.at(b, c) = v[c];
        }
        data.dim_cocycle = dim - rows.rank();
    }
    degree_[deg] = std::move(data);
    return *degree_[deg];
}

int Transport::hh_dim(int n) const
{
    const DegreeData& d = degree_data(n);
    return d.dim_cocycle - d.dim_bound;
}

CohClass Transport::class_of(const MinCochain& f, bool require_cocycle) const
{
    if (require_cocycle && !is_cocycle(f))
        throw std::domain_error("class_of: not a cocycle: " + min_str(f));
    const DegreeData& d = degree_data(f.deg);
    std::vector<Scalar> v = coords(f);
    if (f.deg >= 1)
        d.bound.reduce_vector(v, d.pivots);
    return CohClass{f.deg, f, std::move(v)};
}

CohClass Transport::zero_class(int n) const
{
    MinCochain z{n, std::vector<Elem>(Resolution::rank_of(n))};
    return class_of(z, false);
}

std::vector<CohClass> Transport::cohomology_basis(int n) const
{
    int dim = cochain_dim(n), ndim = cochain_dim(n + 1);
    DenseMat rows(dim, ndim, R_.field());
    for (int b = 0; b < dim; ++b) {
        std::vector<Scalar> e((size_t)dim, R_.field().zero());
        e[b] = R_.field().one();
        std::vector<Scalar> v = coords(min_coboundary(from_coords(n, e)));
        for (int c = 0; c < ndim; ++c)
            rows.at(b, c) = v[c];
    }
    // kernel of the transposed action: cocycles are left kernel vectors; use
    // kernel of the transpose by building the ndim x dim matrix
    DenseMat mt(ndim, dim, R_.field());
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < ndim; ++c)
            mt.at(c, r) = rows.at(r, c);
    std::vector<CohClass> classes;
    DenseMat picked(0, 0, R_.field());
    std::vector<std::vector<Scalar>> chosen;
    for (const std::vector<Scalar>& kv : mt.kernel_basis()) {
        CohClass cl = class_of(from_coords(n, kv), false);
        if (cl.is_zero())
            continue;
        // keep only classes independent from the chosen ones
        std::vector<std::vector<Scalar>> trial = chosen;
        trial.push_back(cl.canon);
        DenseMat m((int)trial.size(), dim, R_.field());
        for (size_t r = 0; r < trial.size(); ++r)
            for (int c = 0; c < dim; ++c)
                m.at((int)r, c) = trial[r][c];
        if (m.rank() == (int)trial.size()) {
            chosen = std::move(trial);
            classes.push_back(std::move(cl));
        }
    }
    return classes;
}

/******** class arithmetic ********/

CohClass Transport::cup(const CohClass& a, const CohClass& b) const
{
    if (a.deg == 0) {
        MinCochain rep{b.deg, {}};
        for (const Elem& e : b.rep.val)
            rep.val.push_back(R_.mul(a.rep.val[0], e));
        return class_of(rep);
    }
    if (b.deg == 0) {
        MinCochain rep{a.deg, {}};
        for (const Elem& e : a.rep.val)
            rep.val.push_back(R_.mul(e, b.rep.val[0]));
        return class_of(rep);
    }
    if (a.deg + b.deg > BAR_DEGREE_CAP)
        throw std::invalid_argument("cup: degree cap exceeded");
    Cochain h = qbv::cup(min_to_bar(a.rep), min_to_bar(b.rep));
    return class_of(bar_to_min(h));
}

CohClass Transport::delta(const CohClass& a) const
{
    if (a.deg == 0)
        return zero_class(0);
    if (a.deg > 5)
        throw std::invalid_argument("delta: degree cap exceeded");
    Cochain d = tradler_delta(min_to_bar(a.rep), delta_mode_);
    return class_of(bar_to_min(d));
}

CohClass Transport::bracket(const CohClass& a, const CohClass& b) const
{
    if (a.deg == 0 && b.deg == 0)
        return zero_class(0);
    if (a.deg + b.deg - 1 > 5)
        throw std::invalid_argument("bracket: degree cap exceeded");
    Cochain br = qbv::bracket(min_to_bar(a.rep), min_to_bar(b.rep));
    return class_of(bar_to_min(br));
}

CohClass Transport::add_classes(const CohClass& a, const CohClass& b) const
{
    if (a.deg != b.deg)
        throw std::invalid_argument("add_classes: degree mismatch");
    MinCochain rep{a.deg, {}};
    for (size_t i = 0; i < a.rep.val.size(); ++i)
        rep.val.push_back(add(a.rep.val[i], b.rep.val[i]));
    return class_of(rep, false);
}

CohClass Transport::scale_class(const CohClass& a, const Scalar& c) const
{
    MinCochain rep{a.deg, {}};
    for (const Elem& e : a.rep.val)
        rep.val.push_back(scale(e, c));
    return class_of(rep, false);
}

std::optional<std::vector<Scalar>> Transport::decompose(
    const CohClass& target, const std::vector<CohClass>& basis) const
{
    int dim = cochain_dim(target.deg);
    DenseMat m(dim, (int)basis.size(), R_.field());
    for (size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].deg != target.deg)
            throw std::invalid_argument("decompose: degree mismatch");
        for (int i = 0; i < dim; ++i)
            m.at(i, (int)j) = basis[j].canon[i];
    }
    std::vector<Scalar> x;
    if (!m.solve(target.canon, x))
        return std::nullopt;
    return x;
}

/******** the named generators ********/

void Transport::build_generators() const
{
    if (!gens_.empty())
        return;
    const Algebra& R = R_;
    int k = R.k();
    Scalar one = R.field().one(), d = R.field().d();
    auto E = [&](Word w) { return R.elem(w); };

    auto push = [&](const std::string& name, MinCochain f) {
        CohClass cl = class_of(f);  // throws if not a cocycle
        if (cl.is_zero())
            throw std::domain_error("generator " + name + " is a zero class");
        gens_.emplace_back(name, std::move(cl));
    };

    push("p1", MinCochain{0, {add(E(R.xy_pow(1)), E(R.yx_pow(1)))}});
    push("p2", MinCochain{0, {E(R.x_yx(k - 1))}});
    push("p3", MinCochain{0, {E(R.y_xy(k - 1))}});
    push("p4", MinCochain{0, {E(R.socle())}});

    Elem q1y = R.one();
    add_term(q1y, R.letter(LETTER_Y), d);
    push("q1", MinCochain{1, {E(R.y_xy(k - 2)), q1y}});
    Elem q2y = E(R.x_yx(k - 2));
    add_term(q2y, R.xy_pow(k - 1), d);
    push("q2", MinCochain{1, {R.one(), q2y}});

    push("w1", MinCochain{2, {E(R.letter(LETTER_X)), R.zero()}});
    push("w2", MinCochain{2, {R.zero(), E(R.letter(LETTER_Y))}});
    Elem w3y = E(R.letter(LETTER_X));
    add_term(w3y, R.xy_pow(1), d);
    push("w3", MinCochain{2, {E(R.letter(LETTER_Y)), w3y}});

    push("e", MinCochain{4, {R.one()}});
}

const std::vector<std::pair<std::string, CohClass>>& Transport::generators() const
{
    build_generators();
    return gens_;
}

const CohClass& Transport::generator(const std::string& name) const
{
    for (const auto& [n, cl] : generators())
        if (n == name)
            return cl;
    throw std::invalid_argument("unknown generator: " + name);
}

/******** printing ********/

std::string Transport::min_str(const MinCochain& f) const
{
    if (f.val.size() == 1)
        return R_.elem_str(f.val[0]);
    std::string s = "(";
    for (size_t i = 0; i < f.val.size(); ++i) {
        if (i)
            s += ", ";
        s += R_.elem_str(f.val[i]);
    }
    return s + ")";
}

std::string Transport::class_str(const CohClass& a) const
{
    return min_str(from_coords(a.deg, a.canon));
}

MinCochain Transport::parse_min(int deg, const std::string& text) const
{
    MinCochain f{deg, {}};
    int rank = Resolution::rank_of(deg);
    std::string body = text;
    if (rank == 1) {
        f.val.push_back(R_.parse_elem(body));
        return f;
    }
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    // split on the top-level comma
    int depth = 0;
    size_t comma = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(')
            ++depth;
        else if (body[i] == ')')
            --depth;
        else if (body[i] == ',' && depth == 0) {
            comma = i;
            break;
        }
    }
    if (comma == std::string::npos)
        throw std::invalid_argument("expected (f, g): " + text);
    f.val.push_back(R_.parse_elem(body.substr(0, comma)));
    f.val.push_back(R_.parse_elem(body.substr(comma + 1)));
    return f;
}

}  // namespace qbv

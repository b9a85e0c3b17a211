#include "qbv/scalar.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qbv {

/******** Gf2Poly ********/

uint64_t Gf2Poly::limb(int i) const
{
    if (i == 0)
        return lo_;
    return i <= (int)hi_.size() ? hi_[i - 1] : 0;
}

void Gf2Poly::xor_limb(int i, uint64_t v)
{
    if (v == 0)
        return;
    if (i == 0) {
        lo_ ^= v;
        return;
    }
    if ((int)hi_.size() < i)
        hi_.resize(i, 0);
    hi_[i - 1] ^= v;
}

void Gf2Poly::trim()
{
    while (!hi_.empty() && hi_.back() == 0)
        hi_.pop_back();
}

int Gf2Poly::degree() const
{
    if (!hi_.empty())
        return 64 * (int)hi_.size() + 63 - std::countl_zero(hi_.back());
    if (lo_ == 0)
        return -1;
    return 63 - std::countl_zero(lo_);
}

bool Gf2Poly::bit(int i) const
{
    return (limb(i >> 6) >> (i & 63)) & 1;
}

void Gf2Poly::flip(int i)
{
    xor_limb(i >> 6, uint64_t(1) << (i & 63));
    trim();
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const
{
    Gf2Poly r = *this;
    r.lo_ ^= o.lo_;
    if ((int)r.hi_.size() < (int)o.hi_.size())
        r.hi_.resize(o.hi_.size(), 0);
    for (size_t i = 0; i < o.hi_.size(); ++i)
        r.hi_[i] ^= o.hi_[i];
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::shifted(int s) const
{
    if (is_zero() || s == 0)
        return *this;
    Gf2Poly r;
    int limb_shift = s >> 6, bit_shift = s & 63;
    for (int i = 0; i < nlimbs(); ++i) {
        uint64_t w = limb(i);
        if (w == 0)
            continue;
        r.xor_limb(i + limb_shift, w << bit_shift);
        if (bit_shift)
            r.xor_limb(i + limb_shift + 1, w >> (64 - bit_shift));
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const
{
    if (is_zero() || o.is_zero())
        return Gf2Poly();
    // fast path: both fit one limb and the product does too
    if (hi_.empty() && o.hi_.empty() && degree() + o.degree() < 64) {
        uint64_t a = lo_, b = o.lo_, r = 0;
        while (b) {
            int i = std::countr_zero(b);
            r ^= a << i;
            b &= b - 1;
        }
        return Gf2Poly(r);
    }
    Gf2Poly r;
    for (int i = 0; i <= o.degree(); ++i)
        if (o.bit(i))
            r = r + shifted(i);
    return r;
}

void Gf2Poly::divmod(const Gf2Poly& a, const Gf2Poly& b, Gf2Poly& q, Gf2Poly& r)
{
    if (b.is_zero())
        throw std::domain_error("Gf2Poly: division by zero");
    q = Gf2Poly();
    r = a;
    int db = b.degree();
    for (int dr = r.degree(); dr >= db; dr = r.degree()) {
        q.flip(dr - db);
        r = r + b.shifted(dr - db);
    }
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& a, const Gf2Poly& b)
{
    Gf2Poly q, r;
    divmod(a, b, q, r);
    return r;
}

Gf2Poly Gf2Poly::div(const Gf2Poly& a, const Gf2Poly& b)
{
    Gf2Poly q, r;
    divmod(a, b, q, r);
    return q;
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b)
{
    while (!b.is_zero()) {
        Gf2Poly r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool Gf2Poly::operator<(const Gf2Poly& o) const
{
    int da = degree(), db = o.degree();
    if (da != db)
        return da < db;
    for (int i = std::max(nlimbs(), o.nlimbs()) - 1; i >= 0; --i)
        if (limb(i) != o.limb(i))
            return limb(i) < o.limb(i);
    return false;
}

uint32_t Gf2Poly::eval(const GaloisField& f, uint32_t point) const
{
    uint32_t acc = 0;
    for (int i = degree(); i >= 0; --i)
        acc = f.mul(acc, point) ^ (bit(i) ? 1u : 0u);
    return acc;
}

std::string Gf2Poly::str(char var) const
{
    if (is_zero())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!bit(i))
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += var;
        else {
            s += var;
            s += "^" + std::to_string(i);
        }
    }
    return s;
}

/******** GaloisField ********/

bool GaloisField::is_irreducible(uint64_t poly, int deg)
{
    if (deg < 1)
        return false;
    Gf2Poly p(poly);
    for (uint64_t q = 2; q < (uint64_t(1) << (deg / 2 + 1)); ++q) {
        if (Gf2Poly::mod(p, Gf2Poly(q)).is_zero())
            return false;
    }
    return true;
}

uint32_t GaloisField::least_irreducible(int m)
{
    for (uint32_t c = 1u << m; c < (2u << m); ++c)
        if (is_irreducible(c, m))
            return c;
    throw std::logic_error("no irreducible polynomial found");
}

GaloisField::GaloisField(int m) : m_(m)
{
    if (m < 1 || m > 16)
        throw std::invalid_argument("GaloisField: m must be in 1..16");
    modulus_ = least_irreducible(m);
    if (m_ == 1)
        return;
    // exp/log tables for some primitive element
    uint32_t n = order() - 1;
    for (uint32_t g = 2; g < order(); ++g) {
        exp_.assign(2 * n, 0);
        log_.assign(order(), 0);
        uint32_t v = 1;
        bool primitive = true;
        for (uint32_t i = 0; i < n; ++i) {
            if (i > 0 && v == 1) {
                primitive = false;
                break;
            }
            exp_[i] = (uint16_t)v;
            exp_[i + n] = (uint16_t)v;
            log_[v] = (uint16_t)i;
            v = mul_slow(v, g);
        }
        if (primitive)
            return;
    }
    throw std::logic_error("no primitive element found");
}

uint32_t GaloisField::mul_slow(uint32_t a, uint32_t b) const
{
    uint32_t r = 0;
    while (b) {
        if (b & 1)
            r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m_)
            a ^= modulus_;
    }
    return r;
}

uint32_t GaloisField::mul(uint32_t a, uint32_t b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (m_ == 1)
        return 1;
    return exp_[log_[a] + log_[b]];
}

uint32_t GaloisField::inv(uint32_t a) const
{
    if (a == 0)
        throw std::domain_error("GaloisField: inverse of zero");
    if (m_ == 1)
        return 1;
    uint32_t n = order() - 1;
    return exp_[(n - log_[a]) % n];
}

uint32_t GaloisField::pow(uint32_t a, uint64_t e) const
{
    uint32_t r = 1;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

const GaloisField& GaloisField::get(int m)
{
    static std::mutex mtx;
    static std::map<int, GaloisField> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, GaloisField(m)).first;
    return it->second;
}

Gf2Poly GaloisField::min_poly(uint32_t a) const
{
    // product of (x + a^{2^i}) over the distinct conjugates of a
    std::vector<uint32_t> conj;
    uint32_t c = a;
    do {
        conj.push_back(c);
        c = mul(c, c);
    } while (c != a);
    // multiply out with coefficients in GF(2^m); the result lands in GF(2)
    std::vector<uint32_t> coef = {1};  // leading first
    for (uint32_t r : conj) {
        std::vector<uint32_t> next(coef.size() + 1, 0);
        for (size_t i = 0; i < coef.size(); ++i) {
            next[i] ^= coef[i];
            next[i + 1] ^= mul(coef[i], r);
        }
        coef = std::move(next);
    }
    Gf2Poly p;
    int deg = (int)coef.size() - 1;
    for (int i = 0; i <= deg; ++i) {
        if (coef[i] == 1)
            p.flip(deg - i);
        else if (coef[i] != 0)
            throw std::logic_error("min_poly: coefficient not in GF(2)");
    }
    return p;
}

std::string GaloisField::elem_str(uint32_t a) const
{
    return Gf2Poly(a).str('w');
}

/******** Scalar ********/

Scalar Scalar::gf(int m, uint32_t bits)
{
    Scalar s;
    s.m_ = m;
    s.bits_ = bits;
    if (m < 1 || m > 16 || bits >= (1u << m))
        throw std::invalid_argument("Scalar::gf: bad element");
    return s;
}

Scalar Scalar::rational(Gf2Poly num, Gf2Poly den)
{
    if (den.is_zero())
        throw std::domain_error("Scalar: zero denominator");
    Scalar s;
    s.m_ = 0;
    if (num.is_zero()) {
        s.den_ = Gf2Poly::one();
        return s;
    }
    Gf2Poly g = Gf2Poly::gcd(num, den);
    s.num_ = Gf2Poly::div(num, g);
    s.den_ = Gf2Poly::div(den, g);
    return s;
}

bool Scalar::is_zero() const
{
    return m_ == 0 ? num_.is_zero() : bits_ == 0;
}

bool Scalar::is_one() const
{
    return m_ == 0 ? (num_.is_one() && den_.is_one()) : bits_ == 1;
}

void Scalar::check_same_backend(const Scalar& o) const
{
    if (m_ != o.m_)
        throw std::invalid_argument("Scalar: backend mismatch (" + str() + " vs " + o.str() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same_backend(o);
    if (m_ != 0)
        return gf(m_, bits_ ^ o.bits_);
    return rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same_backend(o);
    if (m_ != 0)
        return gf(m_, GaloisField::get(m_).mul(bits_, o.bits_));
    return rational(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inv() const
{
    if (is_zero())
        throw std::domain_error("Scalar: inverse of zero");
    if (m_ != 0)
        return gf(m_, GaloisField::get(m_).inv(bits_));
    return rational(den_, num_);
}

bool Scalar::operator==(const Scalar& o) const
{
    if (m_ != o.m_)
        return false;
    if (m_ != 0)
        return bits_ == o.bits_;
    return num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::specialize(const Scalar& d0) const
{
    if (m_ != 0)
        throw std::invalid_argument("Scalar::specialize: not a rational scalar");
    if (d0.m_ == 0)
        throw std::invalid_argument("Scalar::specialize: d0 must be concrete");
    const GaloisField& f = GaloisField::get(d0.m_);
    uint32_t dv = den_.eval(f, d0.bits_);
    if (dv == 0) {
        throw std::domain_error("Scalar::specialize: denominator " + den_.str('d') +
                                " vanishes at d = " + f.elem_str(d0.bits_) +
                                " (factor " + f.min_poly(d0.bits_).str('d') + ")");
    }
    uint32_t nv = num_.eval(f, d0.bits_);
    return gf(d0.m_, f.mul(nv, f.inv(dv)));
}

std::string Scalar::str() const
{
    if (m_ != 0)
        return Gf2Poly(bits_).str('w');
    if (den_.is_one())
        return num_.str('d');
    std::string n = num_.str('d'), d = den_.str('d');
    if (n.find('+') != std::string::npos)
        n = "(" + n + ")";
    if (d.find('+') != std::string::npos)
        d = "(" + d + ")";
    return n + "/" + d;
}

bool Scalar::str_needs_parens() const
{
    std::string s = str();
    return s.find('+') != std::string::npos || s.find('/') != std::string::npos;
}

/******** FieldSpec ********/

Scalar FieldSpec::zero() const
{
    return symbolic ? Scalar::rational(Gf2Poly()) : Scalar::gf(m, 0);
}

Scalar FieldSpec::one() const
{
    return symbolic ? Scalar::rational(Gf2Poly::one()) : Scalar::gf(m, 1);
}

Scalar FieldSpec::d() const
{
    return symbolic ? Scalar::rational(Gf2Poly::x()) : Scalar::gf(m, d_bits);
}

std::string FieldSpec::str() const
{
    if (symbolic)
        return "symbolic";
    std::ostringstream os;
    os << "gf" << (1u << m) << ",d=" << GaloisField::get(m).elem_str(d_bits);
    return os.str();
}

/* Scalar literal parser: sums of terms var^k over GF(2), optionally
 * "num/den" for the rational backend, with parentheses allowed. */
namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;
    char var;

    explicit ScalarParser(const std::string& text, char v) : s(text), var(v) {}

    void skip_ws()
    {
        while (pos < s.size() && isspace((unsigned char)s[pos]))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail()
    {
        throw std::invalid_argument("bad scalar literal: " + s);
    }

    Gf2Poly parse_sum()
    {
        Gf2Poly acc = parse_atom();
        while (true) {
            skip_ws();
            if (eat('+'))
                acc = acc + parse_atom();
            else
                return acc;
        }
    }

    Gf2Poly parse_atom()
    {
        skip_ws();
        if (pos >= s.size())
            fail();
        if (eat('(')) {
            Gf2Poly inner = parse_sum();
            if (!eat(')'))
                fail();
            return inner;
        }
        char c = s[pos];
        if (c == '0' || c == '1') {
            ++pos;
            return c == '0' ? Gf2Poly() : Gf2Poly::one();
        }
        if (c == var) {
            ++pos;
            int e = 1;
            if (eat('^')) {
                skip_ws();
                if (pos >= s.size() || !isdigit((unsigned char)s[pos]))
                    fail();
                e = 0;
                while (pos < s.size() && isdigit((unsigned char)s[pos]))
                    e = e * 10 + (s[pos++] - '0');
            }
            return Gf2Poly::one().shifted(e);
        }
        fail();
    }
};

}  // namespace

Scalar FieldSpec::parse(const std::string& text) const
{
    // concrete literals may be written in w or in d (the parameter's value)
    char var = symbolic ? 'd' : (text.find('d') != std::string::npos ? 'd' : 'w');
    ScalarParser p(text, var);
    Gf2Poly num = p.parse_sum();
    Gf2Poly den = Gf2Poly::one();
    if (p.eat('/'))
        den = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("bad scalar literal: " + text);
    if (symbolic)
        return Scalar::rational(num, den);
    if (!den.is_one())
        throw std::invalid_argument("division not allowed in concrete literals: " + text);
    if (m == 1 && var == 'w' && num.degree() > 0)
        throw std::invalid_argument("no element w in GF(2): " + text);
    const GaloisField& f = GaloisField::get(m);
    // reduce the polynomial in w (or in the value of d) inside the field
    uint32_t point = (var == 'd') ? d_bits : (m == 1 ? 0 : 2);
    return Scalar::gf(m, num.eval(f, point));
}

}  // namespace qbv

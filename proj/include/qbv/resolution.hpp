#pragma once

#include <string>
#include <vector>

#include "qbv/algebra.hpp"

namespace qbv {

/* Element of Lambda = R (x) R^op: sparse sum of u (x) v with coefficients,
 * sorted by (u, v).  (u(x)v)(u'(x)v') = uu' (x) v'v. */
struct LTerm {
    Word u, v;
    Scalar c;
    bool operator==(const LTerm& o) const = default;
};
using LElem = std::vector<LTerm>;

void l_add_term(LElem& e, Word u, Word v, const Scalar& c);
LElem l_add(const LElem& a, const LElem& b);
LElem l_scale(const LElem& a, const Scalar& c);
LElem l_mul(const Algebra& R, const LElem& a, const LElem& b);
// two-sided action on R: (u (x) v) . a = u a v
Elem l_act(const Algebra& R, const LElem& l, const Elem& a);

/* Element of the free module P_n, written on its generators. */
struct MElem {
    int deg = 0;
    std::vector<LElem> c;  // one Lambda-coefficient per generator
    bool operator==(const MElem& o) const = default;
};

MElem m_add(const MElem& a, const MElem& b);
MElem m_scale(const MElem& a, const Scalar& s);
MElem m_left_mul(const Algebra& R, const Elem& r, const MElem& e);
MElem m_left_mul(const Algebra& R, Word r, const MElem& e);
MElem m_right_mul(const Algebra& R, const MElem& e, const Elem& r);
MElem m_right_mul(const Algebra& R, const MElem& e, Word r);
bool m_is_zero(const MElem& e);

/* Bimodule map between free modules, one Lambda entry per (target generator,
 * source generator); entry sum u(x)v sends the source generator to
 * sum u . (target generator) . v. */
struct BiMap {
    int src_deg = 0, dst_deg = 0;
    std::vector<std::vector<LElem>> m;  // [target rank][source rank]
};

struct DegreeReport {
    int degree = 0;
    bool composite_zero = false;
    int rank = 0;     // rank of the differential into P_degree
    int nullity = 0;  // nullity of the map out of P_degree
    bool exact = false;
    bool minimal = false;
    std::string witness;  // first failure, if any
};

/* The minimal 4-periodic resolution P. of R with differentials d_n : P_{n+1}
 * -> P_n, the augmentation mu, and lambda = rho(1). */
class Resolution {
public:
    explicit Resolution(const Algebra& R);

    const Algebra& R() const { return R_; }
    static int rank_of(int n) { constexpr int r[4] = {1, 2, 2, 1}; return r[((n % 4) + 4) % 4]; }
    const BiMap& diff(int n) const { return d_[((n % 4) + 4) % 4]; }
    const LElem& lambda_elem() const { return lambda_; }
    std::string gen_label(int deg, int j) const;

    Elem mu(const LElem& a) const;  // P0 -> R
    Elem mu(const MElem& e) const;
    MElem apply(const BiMap& m, const MElem& e) const;
    MElem gen(int deg, int j) const;

    BiMap compose(const BiMap& f, const BiMap& g) const;  // f after g
    bool map_is_zero(const BiMap& m, std::string* witness = nullptr) const;
    bool map_is_minimal(const BiMap& m) const;  // entries have no 1(x)1 part

    int flat_rank(const BiMap& m) const;
    int flat_rank_mu() const;
    int dim(int n) const { return rank_of(n) * R_.nwords() * R_.nwords(); }

    std::vector<DegreeReport> verify_complex(int N) const;

private:
    const Algebra& R_;
    BiMap d_[4];
    LElem lambda_;
    void build();
};

}  // namespace qbv

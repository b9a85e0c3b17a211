#pragma once

#include "qbv/resolution.hpp"

namespace qbv {

struct HomotopyDegreeReport {
    int degree = 0;
    int checked = 0;
    std::vector<std::string> failures;
};

/* The derivation C and the weak self-homotopy t_{-1}, t_0, ..., extended by
 * t_{n+4} = t_n.  Each t_n is stored by its values on b (x) gen (x) 1 and
 * extended K-linearly and right-R-linearly. */
class Homotopy {
public:
    explicit Homotopy(const Resolution& res);

    const Resolution& res() const { return res_; }

    MElem C_word(Word b) const;     // derivation C on a basis word, in P1
    MElem C(const Elem& a) const;   // linear extension

    MElem t_minus1(const Elem& r) const;        // R -> P0
    MElem table(int n, Word b, int gen) const;  // t_n(b (x) gen (x) 1), 0 <= n <= 3
    MElem t(int n, const MElem& e) const;       // t_n on P_{n mod 4}, n >= 0

    std::vector<HomotopyDegreeReport> verify(int N) const;

private:
    const Resolution& res_;
    std::vector<MElem> cache_;  // (n mod 4, b, gen) -> table value
    MElem t1_x(Word b) const;
    MElem t1_y(Word b) const;
    MElem t2_x(Word b) const;
    MElem t2_y(Word b) const;
    MElem compute_table(int n, Word b, int gen) const;
};

}  // namespace qbv

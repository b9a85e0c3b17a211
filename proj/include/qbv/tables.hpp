#pragma once

#include "qbv/transport.hpp"

namespace qbv::tables {

/* Printed explicit expansions of the comparison morphism (degrees 2..5),
 * transcribed term by term; compared against the s-recursion output. */
BarTensor phi_printed(const Transport& T, int n, int gen);

/* The structural forms of the degree-4/5 images:
 *   Phi_4(1(x)1)     = sum_b 1 (x) b Phi_3(1(x)1) b*  +  d (x) x(yx)^{k-1} Phi_3(1(x)1) x(yx)^{k-1}
 *   Phi_5(1(x)a(x)1) = s(a . Phi_4(1(x)1))
 * evaluated with the recursion's Phi_3 / Phi_4. */
BarTensor phi4_structural(const Transport& T);
BarTensor phi5_structural(const Transport& T, int gen);

/* A polynomial in the named generators: sum of coeff * product-of-names. */
struct ProdTerm {
    Scalar c;
    std::vector<std::string> gens;
};
using GenExpr = std::vector<ProdTerm>;

CohClass eval_expr(const Transport& T, const GenExpr& e);
std::string expr_str(const GenExpr& e);

/* The relation ideal of the presentation, by degree, exactly as listed. */
std::vector<std::pair<std::string, GenExpr>> ideal_relations(const Transport& T);

}  // namespace qbv::tables

#pragma once

#include <optional>

#include "qbv/barcalc.hpp"
#include "qbv/homotopy.hpp"
#include "qbv/linalg.hpp"

namespace qbv {

/* Cochain on the minimal complex: Hom(P_n, R) given by the generator images,
 * printed in the (f,g) convention when the rank is 2. */
struct MinCochain {
    int deg = 0;
    std::vector<Elem> val;  // one element per generator of P_deg
    bool operator==(const MinCochain& o) const = default;
};

/* A cohomology class: representative plus its canonical coordinate vector
 * (representative reduced against the row-echelon coboundary basis). */
struct CohClass {
    int deg = 0;
    MinCochain rep;
    std::vector<Scalar> canon;
    bool is_zero() const;
    bool operator==(const CohClass& o) const { return deg == o.deg && canon == o.canon; }
    bool operator!=(const CohClass& o) const { return !(*this == o); }
};

/* Comparison morphisms between the minimal resolution and the normalized bar
 * resolution, plus the cohomology of the minimal complex and the transported
 * cup / bracket / Delta structure. */
class Transport {
public:
    explicit Transport(const Homotopy& h, DualMode delta_mode = DualMode::form);

    const Algebra& R() const { return R_; }
    const Resolution& res() const { return res_; }
    const Homotopy& homotopy() const { return h_; }
    DualMode delta_mode() const { return delta_mode_; }

    // Phi_n: images of P_n's generators in the bar resolution (n <= cap)
    const std::vector<BarTensor>& phi(int n) const;
    // Psi_n on 1 (x) words (x) 1, memoized; any unit argument gives 0
    MElem psi(int n, std::span<const Word> words) const;
    MElem psi(int n, std::initializer_list<Word> words) const;

    Cochain min_to_bar(const MinCochain& f) const;       // f . Psi_deg
    MinCochain bar_to_min(const Cochain& g) const;       // g . Phi_deg
    Elem eval_min(const MinCochain& f, const MElem& e) const;

    MinCochain min_coboundary(const MinCochain& f) const;
    bool is_cocycle(const MinCochain& f) const;
    int hh_dim(int n) const;
    int cochain_dim(int n) const { return Resolution::rank_of(n) * R_.nwords(); }

    CohClass class_of(const MinCochain& f, bool require_cocycle = true) const;
    CohClass zero_class(int n) const;
    std::vector<CohClass> cohomology_basis(int n) const;

    CohClass cup(const CohClass& a, const CohClass& b) const;
    CohClass delta(const CohClass& a) const;
    CohClass bracket(const CohClass& a, const CohClass& b) const;
    CohClass add_classes(const CohClass& a, const CohClass& b) const;
    CohClass scale_class(const CohClass& a, const Scalar& c) const;

    // the ten named generators of HH*(R); certified nonzero cocycle classes
    const std::vector<std::pair<std::string, CohClass>>& generators() const;
    const CohClass& generator(const std::string& name) const;

    /* Solve  target = sum_i coeff_i . basis_i  in canonical coordinates;
     * empty optional when the system is inconsistent. */
    std::optional<std::vector<Scalar>> decompose(const CohClass& target,
                                                 const std::vector<CohClass>& basis) const;

    std::string class_str(const CohClass& a) const;
    std::string min_str(const MinCochain& f) const;
    MinCochain parse_min(int deg, const std::string& text) const;

    int max_degree() const { return BAR_DEGREE_CAP; }

private:
    const Algebra& R_;
    const Resolution& res_;
    const Homotopy& h_;
    DualMode delta_mode_;

    mutable std::vector<std::vector<BarTensor>> phi_;
    mutable std::vector<std::map<std::vector<Word>, MElem>> psi_memo_;

    struct DegreeData {
        DenseMat bound;            // echelonized coboundary row space
        std::vector<int> pivots;
        int dim_bound = 0;
        int dim_cocycle = 0;
        DegreeData(int cols, const FieldSpec& f) : bound(0, cols, f) {}
    };
    mutable std::vector<std::optional<DegreeData>> degree_;
    mutable std::vector<std::pair<std::string, CohClass>> gens_;

    const DegreeData& degree_data(int n) const;
    std::vector<Scalar> coords(const MinCochain& f) const;
    MinCochain from_coords(int deg, const std::vector<Scalar>& v) const;
    void build_generators() const;
};

}  // namespace qbv

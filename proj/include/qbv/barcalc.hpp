#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <span>

#include "qbv/algebra.hpp"

namespace qbv {

constexpr int BAR_DEGREE_CAP = 6;

/* One normalized bar tensor slot list: s[0] (x) s[1] (x) ... (x) s[n+1],
 * with s[1..n] the middle slots (never the unit). */
struct BarKey {
    uint8_t n = 0;  // number of middle slots
    std::array<Word, BAR_DEGREE_CAP + 2> s{};
    auto operator<=>(const BarKey& o) const = default;
};

struct BarTensor {
    int deg = 0;
    std::map<BarKey, Scalar> t;
    bool is_zero() const { return t.empty(); }
    bool operator==(const BarTensor& o) const = default;
};

void bar_add_term(BarTensor& b, const BarKey& k, const Scalar& c);
BarTensor bar_add(const BarTensor& a, const BarTensor& b);
// outer bimodule action
BarTensor bar_left_mul(const Algebra& R, const Elem& r, const BarTensor& b);
BarTensor bar_right_mul(const Algebra& R, const BarTensor& b, const Elem& r);
// sum of adjacent-slot merges, middle units dropped (char-2 signs vacuous)
BarTensor bar_differential(const Algebra& R, const BarTensor& b);
// contracting homotopy: prepend the unit, pushing slot 0 into the middles
BarTensor s_contraction(const Algebra& R, const BarTensor& b);
std::string bar_str(const Algebra& R, const BarTensor& b);

/* A Hochschild cochain on the normalized bar resolution: an evaluator on
 * tuples of basis words, zero whenever an argument is the unit, memoized,
 * K-multilinear by construction. */
class Cochain {
public:
    Cochain() = default;
    static Cochain from_fn(const Algebra& R, int deg,
                           std::function<Elem(std::span<const Word>)> fn);
    static Cochain constant(const Algebra& R, const Elem& value);  // degree 0
    static Cochain zero(const Algebra& R, int deg);

    int deg() const;
    const Algebra& algebra() const;
    Elem operator()(std::span<const Word> words) const;
    Elem at(std::initializer_list<Word> words) const;
    // multilinear evaluation with whole elements in the slots
    Elem eval_elems(std::span<const Elem> args) const;
    // sum a0 . f(middles) . a_{n+1} over a tensor
    Elem eval_tensor(const BarTensor& b) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

Cochain cochain_coboundary(const Cochain& f);
Cochain cup(const Cochain& f, const Cochain& g);
Cochain circle_i(const Cochain& f, const Cochain& g, int i);  // 1 <= i <= deg f
Cochain circle(const Cochain& f, const Cochain& g);
Cochain bracket(const Cochain& f, const Cochain& g);

/* Which reconstruction the Delta formula uses for the output element. */
enum class DualMode {
    monomial,  // the complementary word b*, as displayed in the source formula
    form,      // the true dual basis of the symmetrizing form
};

Cochain tradler_delta(const Cochain& f, DualMode mode = DualMode::form);

}  // namespace qbv

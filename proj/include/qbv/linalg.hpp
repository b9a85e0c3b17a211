#pragma once

#include <map>
#include <vector>

#include "qbv/scalar.hpp"

namespace qbv {

/* Dense matrix over Scalar, for the small systems: Gram matrices, centers,
 * cochain coboundaries, class canonicalization. */
class DenseMat {
public:
    DenseMat(int rows, int cols, const FieldSpec& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[r * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }

    /* In-place row echelon, deterministic: scan columns left to right, pivot
     * on the first row with a nonzero entry.  Returns pivot columns. */
    std::vector<int> echelonize();
    int rank() const;
    std::vector<std::vector<Scalar>> kernel_basis() const;

    /* Reduce v against echelon rows (rows must be echelonized, pivots as
     * returned).  Canonicalizes v modulo the row space. */
    void reduce_vector(std::vector<Scalar>& v, const std::vector<int>& pivots) const;

    /* Solve  A x = b  if consistent; returns false otherwise. */
    bool solve(const std::vector<Scalar>& b, std::vector<Scalar>& x) const;

    const FieldSpec& field() const { return field_; }

private:
    int rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

/* Dense GF(2^m) matrix stored as m bit-planes per row, 64 columns per word.
 * Row operations act plane-wise: adding c times a row is a GF(2)-linear mix
 * of the source planes, so everything stays word-XORs. */
class BitMat {
public:
    BitMat(int rows, int cols, int m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void set(int r, int c, uint32_t v);
    uint32_t get(int r, int c) const;

    int rank() &&;  // destructive elimination

private:
    int rows_, cols_, m_, wpp_;  // words per plane
    std::vector<uint64_t> data_;
    uint64_t* plane(int r, int p) { return data_.data() + ((size_t)r * m_ + p) * wpp_; }
    const uint64_t* plane(int r, int p) const { return data_.data() + ((size_t)r * m_ + p) * wpp_; }
};

/* Sparse rows over Scalar for the symbolic backend's rank computations. */
using SparseRow = std::map<int, Scalar>;
int sparse_rank(std::vector<SparseRow> rows, int ncols);

}  // namespace qbv

#include "qbv/linalg.hpp"

#include <stdexcept>

namespace qbv {

/******** DenseMat ********/

DenseMat::DenseMat(int rows, int cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), a_((size_t)rows * cols, f.zero())
{
}

std::vector<int> DenseMat::echelonize()
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j)
                std::swap(at(p, j), at(r, j));
        Scalar piv_inv = at(r, c).inv();
        for (int j = c; j < cols_; ++j)
            at(r, j) = at(r, j) * piv_inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero())
                continue;
            Scalar f = at(i, c);
            for (int j = c; j < cols_; ++j)
                at(i, j) += f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int DenseMat::rank() const
{
    DenseMat copy = *this;
    return (int)copy.echelonize().size();
}

std::vector<std::vector<Scalar>> DenseMat::kernel_basis() const
{
    DenseMat e = *this;
    std::vector<int> pivots = e.echelonize();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<Scalar> v(cols_, field_.zero());
        v[c] = field_.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = e.at((int)r, c);  // char 2: -x = x
        basis.push_back(std::move(v));
    }
    return basis;
}

void DenseMat::reduce_vector(std::vector<Scalar>& v, const std::vector<int>& pivots) const
{
    for (size_t r = 0; r < pivots.size(); ++r) {
        const Scalar& lead = v[pivots[r]];
        if (lead.is_zero())
            continue;
        Scalar f = lead;
        for (int j = 0; j < cols_; ++j)
            v[j] += f * at((int)r, j);
    }
}

bool DenseMat::solve(const std::vector<Scalar>& b, std::vector<Scalar>& x) const
{
    if ((int)b.size() != rows_)
        throw std::invalid_argument("DenseMat::solve: size mismatch");
    DenseMat aug(rows_, cols_ + 1, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.echelonize();
    x.assign(cols_, field_.zero());
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_)
            return false;  // inconsistent
        x[pivots[r]] = aug.at((int)r, cols_);
    }
    return true;
}

/******** BitMat ********/

BitMat::BitMat(int rows, int cols, int m)
    : rows_(rows), cols_(cols), m_(m), wpp_((cols + 63) / 64),
      data_((size_t)rows * m * wpp_, 0)
{
}

void BitMat::set(int r, int c, uint32_t v)
{
    for (int p = 0; p < m_; ++p) {
        uint64_t mask = uint64_t(1) << (c & 63);
        uint64_t* w = plane(r, p) + (c >> 6);
        if ((v >> p) & 1)
            *w |= mask;
        else
            *w &= ~mask;
    }
}

uint32_t BitMat::get(int r, int c) const
{
    uint32_t v = 0;
    for (int p = 0; p < m_; ++p)
        v |= (uint32_t)((plane(r, p)[c >> 6] >> (c & 63)) & 1) << p;
    return v;
}

int BitMat::rank() &&
{
    const GaloisField& f = GaloisField::get(m_);
    // mix[j] caches c * x^j for the current row-op scalar c
    std::vector<uint32_t> mix(m_);
    std::vector<uint64_t> tmp((size_t)m_ * wpp_);
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int p = -1;
        for (int i = rank; i < rows_; ++i)
            if (get(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != rank)
            for (int q = 0; q < m_; ++q)
                std::swap_ranges(plane(p, q), plane(p, q) + wpp_, plane(rank, q));
        // scale the pivot row to make the pivot 1
        uint32_t piv = get(rank, c);
        if (piv != 1) {
            uint32_t s = f.inv(piv);
            for (int j = 0; j < m_; ++j)
                mix[j] = f.mul(s, 1u << j);
            std::fill(tmp.begin(), tmp.end(), 0);
            for (int j = 0; j < m_; ++j)
                for (int q = 0; q < m_; ++q)
                    if ((mix[j] >> q) & 1)
                        for (int w = 0; w < wpp_; ++w)
                            tmp[(size_t)q * wpp_ + w] ^= plane(rank, j)[w];
            std::copy(tmp.begin(), tmp.end(), plane(rank, 0));
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == rank)
                continue;
            uint32_t v = get(i, c);
            if (v == 0)
                continue;
            for (int j = 0; j < m_; ++j)
                mix[j] = f.mul(v, 1u << j);
            for (int j = 0; j < m_; ++j) {
                uint32_t row_mix = mix[j];
                for (int q = 0; q < m_; ++q)
                    if ((row_mix >> q) & 1) {
                        const uint64_t* src = plane(rank, j);
                        uint64_t* dst = plane(i, q);
                        for (int w = 0; w < wpp_; ++w)
                            dst[w] ^= src[w];
                    }
            }
        }
        ++rank;
    }
    return rank;
}

/******** sparse rank over the rational backend ********/

int sparse_rank(std::vector<SparseRow> rows, int ncols)
{
    // queue rows by leading column; repeatedly reduce against chosen pivots
    std::vector<SparseRow> pivot_of(ncols);
    std::vector<bool> has_pivot(ncols, false);
    int rank = 0;
    for (SparseRow& row : rows) {
        while (!row.empty()) {
            int lead = row.begin()->first;
            if (!has_pivot[lead]) {
                // normalize and install as pivot
                Scalar inv = row.begin()->second.inv();
                for (auto& [c, v] : row)
                    v = v * inv;
                pivot_of[lead] = std::move(row);
                has_pivot[lead] = true;
                ++rank;
                break;
            }
            const SparseRow& piv = pivot_of[lead];
            Scalar f = row.begin()->second;
            for (const auto& [c, v] : piv) {
                Scalar delta = f * v;
                auto it = row.find(c);
                if (it == row.end()) {
                    if (!delta.is_zero())
                        row.emplace(c, delta);
                } else {
                    it->second += delta;
                    if (it->second.is_zero())
                        row.erase(it);
                }
            }
        }
    }
    return rank;
}

}  // namespace qbv

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace biproj {

/// Dense matrix over GF(2). One uint64_t per row, so at most 64 columns.
class BitMatrix {
public:
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows), 0) {
        if (rows < 0 || cols < 0 || cols > 64)
            throw std::invalid_argument("BitMatrix: need 0 <= cols <= 64");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint64_t row(int r) const { return data_[static_cast<size_t>(r)]; }
    uint64_t& row(int r) { return data_[static_cast<size_t>(r)]; }

    bool get(int r, int c) const { return (data_[static_cast<size_t>(r)] >> c) & 1u; }
    void set(int r, int c, bool v) {
        uint64_t m = uint64_t(1) << c;
        if (v)
            data_[static_cast<size_t>(r)] |= m;
        else
            data_[static_cast<size_t>(r)] &= ~m;
    }

    int rank() const {
        std::vector<uint64_t> rows(data_);
        int rk = 0;
        for (int c = 0; c < cols_ && rk < rows_; ++c) {
            uint64_t m = uint64_t(1) << c;
            int piv = -1;
            for (int r = rk; r < rows_; ++r)
                if (rows[static_cast<size_t>(r)] & m) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rk)]);
            for (int r = 0; r < rows_; ++r)
                if (r != rk && (rows[static_cast<size_t>(r)] & m))
                    rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rk)];
            ++rk;
        }
        return rk;
    }

    /// Basis of { x : M x = 0 }, each vector packed into the low cols() bits.
    std::vector<uint64_t> kernel_basis() const {
        std::vector<uint64_t> rows(data_);
        std::vector<int> pivot_col;
        int rk = 0;
        for (int c = 0; c < cols_ && rk < rows_; ++c) {
            uint64_t m = uint64_t(1) << c;
            int piv = -1;
            for (int r = rk; r < rows_; ++r)
                if (rows[static_cast<size_t>(r)] & m) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rk)]);
            for (int r = 0; r < rows_; ++r)
                if (r != rk && (rows[static_cast<size_t>(r)] & m))
                    rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rk)];
            pivot_col.push_back(c);
            ++rk;
        }
        std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
        for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
        std::vector<uint64_t> basis;
        for (int f = 0; f < cols_; ++f) {
            if (is_pivot[static_cast<size_t>(f)]) continue;
            uint64_t v = uint64_t(1) << f;
            for (int i = 0; i < rk; ++i)
                if (rows[static_cast<size_t>(i)] & (uint64_t(1) << f))
                    v |= uint64_t(1) << pivot_col[static_cast<size_t>(i)];
            basis.push_back(v);
        }
        return basis;
    }

    /// One solution of M x = rhs, if any. rhs packed into the low rows() bits.
    std::optional<uint64_t> solve(uint64_t rhs) const {
        struct Aug { uint64_t row; bool b; };
        std::vector<Aug> rows(static_cast<size_t>(rows_));
        for (int r = 0; r < rows_; ++r)
            rows[static_cast<size_t>(r)] = {data_[static_cast<size_t>(r)], ((rhs >> r) & 1u) != 0};
        std::vector<int> pivot_col;
        int rk = 0;
        for (int c = 0; c < cols_ && rk < rows_; ++c) {
            uint64_t m = uint64_t(1) << c;
            int piv = -1;
            for (int r = rk; r < rows_; ++r)
                if (rows[static_cast<size_t>(r)].row & m) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rk)]);
            for (int r = 0; r < rows_; ++r)
                if (r != rk && (rows[static_cast<size_t>(r)].row & m)) {
                    rows[static_cast<size_t>(r)].row ^= rows[static_cast<size_t>(rk)].row;
                    rows[static_cast<size_t>(r)].b = rows[static_cast<size_t>(r)].b != rows[static_cast<size_t>(rk)].b;
                }
            pivot_col.push_back(c);
            ++rk;
        }
        for (int r = rk; r < rows_; ++r)
            if (rows[static_cast<size_t>(r)].b) return std::nullopt;
        uint64_t x = 0;
        for (int i = 0; i < rk; ++i)
            if (rows[static_cast<size_t>(i)].b) x |= uint64_t(1) << pivot_col[static_cast<size_t>(i)];
        return x;
    }

private:
    int rows_, cols_;
    std::vector<uint64_t> data_;
};

/// Incremental rank of a set of GF(2) vectors; the workhorse of the APN scan.
/// Pivots are indexed by their lowest set bit.
class GaussianRank {
public:
    GaussianRank() { reset(); }

    void reset() {
        n_ = 0;
        mask_ = 0;
    }

    /// Returns true if v was independent of the vectors added so far.
    bool add(uint64_t v) {
        while (v) {
            int b = __builtin_ctzll(v);
            if (!(mask_ >> b & 1)) {
                piv_[b] = v;
                mask_ |= uint64_t(1) << b;
                ++n_;
                return true;
            }
            v ^= piv_[b];
        }
        return false;
    }

    int rank() const { return n_; }

private:
    uint64_t piv_[64];
    uint64_t mask_;
    int n_;
};

}  // namespace biproj

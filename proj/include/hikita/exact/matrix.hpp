#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hikita/exact/error.hpp"

namespace hikita::exact {

/// Dense row-major matrix over an exact scalar type T (Rational, CycloNum, MPoly, RatFunc).
template <class T>
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }
    ExactMatrix(int rows, int cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (static_cast<int>(data_.size()) != rows * cols) throw DomainError("matrix data has wrong length");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static ExactMatrix diagonal(const std::vector<T>& d) {
        int n = static_cast<int>(d.size());
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
    }
    bool is_diagonal() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }
    /// True when the matrix is s times the identity; the scalar is written to out.
    bool is_scalar(T* out = nullptr) const {
        if (!is_square() || !is_diagonal()) return false;
        if (rows_ == 0) return true;
        for (int i = 1; i < rows_; ++i)
            if (!((*this)(i, i) == (*this)(0, 0))) return false;
        if (out) *out = (*this)(0, 0);
        return true;
    }
    std::vector<T> diagonal_entries() const {
        std::vector<T> d;
        for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
        return d;
    }
    T trace() const {
        T s{};
        for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class U, class F>
    ExactMatrix<U> map(F f) const {
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return ExactMatrix<U>(rows_, cols_, std::move(out));
    }

    ExactMatrix& operator+=(const ExactMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    ExactMatrix& operator-=(const ExactMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    ExactMatrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const T& s) { return a *= s; }
    friend ExactMatrix operator*(const T& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DomainError("matrix product shape mismatch " + a.shape() + " * " + b.shape());
        ExactMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (int i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (int j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << (*this)(i, j).to_string();
            }
        }
        os << ']';
        return os.str();
    }

   private:
    void check_same(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch " + shape() + " vs " + o.shape());
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

template <class T>
ExactMatrix<T> commutator(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
    return a * b - b * a;
}

/// Reduced row echelon form in place over a field; returns pivot columns.
template <class T>
std::vector<int> rref_in_place(ExactMatrix<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            T f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
int rank(ExactMatrix<T> m) {
    return static_cast<int>(rref_in_place(m).size());
}

/// Basis of the right null space {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> null_space(ExactMatrix<T> m) {
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols());
        v[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of m x = rhs (free variables set to zero), or nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve_linear(const ExactMatrix<T>& m, const std::vector<T>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw DomainError("right-hand side length mismatch");
    ExactMatrix<T> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<T> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), m.cols());
    return x;
}

/// Square sparse matrix stored as per-row maps; used for the seminormal generators, which have
/// at most two nonzero entries per column.
template <class T>
class SparseMatrix {
   public:
    SparseMatrix() = default;
    explicit SparseMatrix(int n) : rows_(n) {}

    static SparseMatrix identity(int n) {
        SparseMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, T(1));
        return m;
    }
    static SparseMatrix diagonal(const std::vector<T>& d) {
        SparseMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.size(); ++i) m.set(i, i, d[i]);
        return m;
    }

    int size() const { return static_cast<int>(rows_.size()); }
    const std::map<int, T>& row(int i) const { return rows_[i]; }

    void set(int i, int j, const T& v) {
        if (v.is_zero()) {
            rows_[i].erase(j);
        } else {
            rows_[i][j] = v;
        }
    }
    void add(int i, int j, const T& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = rows_[i].try_emplace(j, v);
        if (inserted) return;
        it->second += v;
        if (it->second.is_zero()) rows_[i].erase(it);
    }
    T get(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? T() : it->second;
    }

    bool is_zero() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
    }
    bool is_diagonal() const {
        for (int i = 0; i < size(); ++i)
            for (const auto& [j, v] : rows_[i])
                if (j != i) return false;
        return true;
    }
    std::vector<T> diagonal_entries() const {
        std::vector<T> d(size());
        for (int i = 0; i < size(); ++i) d[i] = get(i, i);
        return d;
    }

    SparseMatrix& operator+=(const SparseMatrix& o) {
        check_same(o);
        for (int i = 0; i < size(); ++i)
            for (const auto& [j, v] : o.rows_[i]) add(i, j, v);
        return *this;
    }
    SparseMatrix& operator-=(const SparseMatrix& o) {
        check_same(o);
        for (int i = 0; i < size(); ++i)
            for (const auto& [j, v] : o.rows_[i]) add(i, j, -v);
        return *this;
    }
    SparseMatrix& operator*=(const T& s) {
        for (int i = 0; i < size(); ++i) {
            std::map<int, T> scaled;
            for (const auto& [j, v] : rows_[i]) {
                T w = v * s;
                if (!w.is_zero()) scaled.emplace(j, std::move(w));
            }
            rows_[i] = std::move(scaled);
        }
        return *this;
    }

    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(SparseMatrix a, const T& s) { return a *= s; }
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        a.check_same(b);
        SparseMatrix c(a.size());
        for (int i = 0; i < a.size(); ++i)
            for (const auto& [k, aik] : a.rows_[i])
                for (const auto& [j, bkj] : b.rows_[k]) c.add(i, j, aik * bkj);
        return c;
    }
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.rows_ == b.rows_; }

    ExactMatrix<T> to_dense() const {
        ExactMatrix<T> m(size(), size());
        for (int i = 0; i < size(); ++i)
            for (const auto& [j, v] : rows_[i]) m(i, j) = v;
        return m;
    }

   private:
    void check_same(const SparseMatrix& o) const {
        if (size() != o.size()) throw DomainError("sparse matrix size mismatch");
    }

    std::vector<std::map<int, T>> rows_;
};

}  // namespace hikita::exact

#include "cokahler/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cokahler {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::fromColumns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("Matrix::fromColumns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other(k, j) != 0)
                    out(i, j) += a * other(k, j);
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Matrix::operator*: vector length mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (v[k] != 0 && (*this)(i, k) != 0)
                out[i] += (*this)(i, k) * v[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("Matrix::operator-: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= other.data_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::isZero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t pivotRow = 0;
    for (std::size_t c = 0; c < cols_ && pivotRow < rows_; ++c) {
        std::size_t r = pivotRow;
        while (r < rows_ && (*this)(r, c) == 0)
            ++r;
        if (r == rows_)
            continue;
        if (r != pivotRow)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(r, j), (*this)(pivotRow, j));
        Scalar inv = 1 / (*this)(pivotRow, c);
        for (std::size_t j = c; j < cols_; ++j)
            (*this)(pivotRow, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivotRow || (*this)(i, c) == 0)
                continue;
            Scalar f = (*this)(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if ((*this)(pivotRow, j) != 0)
                    (*this)(i, j) -= f * (*this)(pivotRow, j);
        }
        pivots.push_back(c);
        ++pivotRow;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

std::vector<Vector> Matrix::kernel() const {
    Matrix r = *this;
    auto pivots = r.rref();
    std::vector<bool> isPivot(cols_, false);
    for (auto p : pivots)
        isPivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (isPivot[f])
            continue;
        Vector v(cols_);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> Matrix::image() const {
    Matrix t = transpose();
    auto pivots = t.rref();
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        basis.push_back(t.row(i));
    return basis;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
    if (b.size() != rows_)
        throw std::invalid_argument("Matrix::solve: rhs length mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;
    Vector x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, cols_);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_)
        return std::nullopt;
    std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = (*this)(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

bool isZero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
    // Eliminating a pivot column only introduces entries in larger columns,
    // so a single increasing sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto pr = pivotRow_.find(it->first);
        if (pr == pivotRow_.end()) {
            ++it;
            continue;
        }
        Scalar f = it->second;
        std::size_t col = it->first;
        for (const auto& [c, x] : pr->second) {
            Scalar& slot = v[c];
            slot -= f * x;
        }
        // erase zeros at or after col, resume after col
        for (auto jt = v.find(col); jt != v.end();) {
            if (jt->second == 0)
                jt = v.erase(jt);
            else
                ++jt;
        }
        it = v.upper_bound(col);
    }
    return v;
}

bool SparseEchelon::insert(SparseVector row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->first >= columns_)
            throw std::out_of_range("SparseEchelon::insert: column out of range");
        if (it->second == 0)
            it = row.erase(it);
        else
            ++it;
    }
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    std::size_t pivot = row.begin()->first;
    Scalar inv = 1 / row.begin()->second;
    for (auto& [c, x] : row)
        x *= inv;
    for (auto& [p, other] : pivotRow_) {
        auto hit = other.find(pivot);
        if (hit == other.end())
            continue;
        Scalar f = hit->second;
        for (const auto& [c, x] : row) {
            Scalar& slot = other[c];
            slot -= f * x;
            if (slot == 0)
                other.erase(c);
        }
    }
    pivotRow_.emplace(pivot, std::move(row));
    return true;
}

std::vector<std::size_t> SparseEchelon::pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, row] : pivotRow_)
        out.push_back(p);
    return out;
}

std::vector<std::size_t> SparseEchelon::freeColumns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_; ++c)
        if (!pivotRow_.contains(c))
            out.push_back(c);
    return out;
}

std::vector<SparseVector> SparseEchelon::kernel() const {
    std::vector<SparseVector> basis;
    for (std::size_t f : freeColumns()) {
        SparseVector v;
        v[f] = 1;
        for (const auto& [p, row] : pivotRow_) {
            auto hit = row.find(f);
            if (hit != row.end())
                v[p] = -hit->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<SparseVector> SparseEchelon::rows() const {
    std::vector<SparseVector> out;
    for (const auto& [p, row] : pivotRow_)
        out.push_back(row);
    return out;
}

SparseVector toSparse(const Vector& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            s.emplace(i, v[i]);
    return s;
}

Vector toDense(const SparseVector& v, std::size_t size) {
    Vector d(size);
    for (const auto& [i, x] : v) {
        if (i >= size)
            throw std::out_of_range("toDense: index out of range");
        d[i] = x;
    }
    return d;
}

}  // namespace cokahler

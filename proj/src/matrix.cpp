#include "nodal/matrix.hpp"

#include <optional>
#include <stdexcept>

namespace nodal {

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

Matrix::Matrix(std::vector<std::vector<Scalar>> rows) {
    for (auto& r : rows) push_row(std::move(r));
}

void Matrix::push_row(std::vector<Scalar> row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix row");
    if (!data_.empty() && !row.empty()) row.front().match_field(data_.front());
    data_.insert(data_.end(), std::make_move_iterator(row.begin()),
                 std::make_move_iterator(row.end()));
    ++rows_;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<long>(r * cols_),
            data_.begin() + static_cast<long>((r + 1) * cols_)};
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, data_.empty() ? Scalar(0) : data_.front().zero_like());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::without_row(std::size_t r) const {
    Matrix m;
    for (std::size_t i = 0; i < rows_; ++i)
        if (i != r) m.push_row(row(i));
    if (m.rows_ == 0) m.cols_ = cols_;
    return m;
}

namespace {

/// Rank of an integer matrix by Bareiss fraction-free elimination.
int bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    BigInt denom = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / denom;
            m[i][c] = 0;
        }
        denom = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (data_.front().field() == Field::Rationals) {
        // Clear denominators row by row, then eliminate fraction-free.
        std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
        for (std::size_t r = 0; r < rows_; ++r) {
            BigInt lcm = 1;
            for (std::size_t c = 0; c < cols_; ++c)
                lcm = boost::multiprecision::lcm(
                    lcm, boost::multiprecision::denominator(at(r, c).rat()));
            for (std::size_t c = 0; c < cols_; ++c) {
                const BigRat& v = at(r, c).rat();
                m[r][c] = boost::multiprecision::numerator(v) *
                          (lcm / boost::multiprecision::denominator(v));
            }
        }
        return bareiss_rank(std::move(m));
    }
    Matrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    if (rows_ == 0 || cols_ == 0) return pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pivot, j));
        const Scalar inv = at(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            const Scalar f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    std::vector<std::vector<Scalar>> basis;
    if (cols_ == 0) return basis;
    const Scalar zero = rows_ ? data_.front().zero_like() : Scalar(0);
    const Scalar one = zero.one_like();
    if (rows_ == 0) {
        for (std::size_t c = 0; c < cols_; ++c) {
            std::vector<Scalar> v(cols_, zero);
            v[c] = one;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Matrix red = *this;
    const auto pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, zero);
        v[free] = one;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    const Scalar zero = rows_ ? b.empty() ? Scalar(0) : b.front().zero_like() : Scalar(0);
    Matrix aug(0, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto row_r = row(r);
        row_r.push_back(b[r]);
        aug.push_row(std::move(row_r));
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(cols_, zero);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, cols_);
    return x;
}

Matrix Matrix::inverted() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const Scalar zero = data_.front().zero_like();
    const Scalar one = zero.one_like();
    Matrix aug(0, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto row_r = row(r);
        for (std::size_t c = 0; c < cols_; ++c) row_r.push_back(r == c ? one : zero);
        aug.push_row(std::move(row_r));
    }
    const auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1)
        throw std::domain_error("matrix is singular");
    Matrix inv(rows_, cols_, zero);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

}  // namespace nodal

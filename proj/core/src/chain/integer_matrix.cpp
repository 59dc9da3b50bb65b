#include "sgm/chain/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "sgm/error.hpp"
#include "sgm/integer.hpp"

namespace sgm {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(ErrorKind::invalid_argument, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols)
{
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            fail(ErrorKind::invalid_argument, "matrix row " + std::to_string(i) + " has " +
                                                   std::to_string(rows[i].size()) + " entries, expected " +
                                                   std::to_string(cols));
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<std::int64_t>> IntegerMatrix::to_rows() const
{
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
}

std::vector<std::int64_t> IntegerMatrix::apply(const std::vector<std::int64_t>& v) const
{
    if (v.size() != cols_) fail(ErrorKind::invalid_argument, "matrix-vector size mismatch");
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (auto a = (*this)(i, j); a != 0 && v[j] != 0) out[i] = checked_add(out[i], checked_mul(a, v[j]));
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols_ != b.rows_) fail(ErrorKind::invalid_argument, "matrix product size mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            std::int64_t x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (auto y = b(k, j); y != 0) c(i, j) = checked_add(c(i, j), checked_mul(x, y));
        }
    return c;
}

std::string IntegerMatrix::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

}  // namespace sgm

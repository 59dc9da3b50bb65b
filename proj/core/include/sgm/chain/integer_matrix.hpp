#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sgm {

/// Dense row-major integer matrix. Chain-level data stays small, so entries
/// are 64-bit; arithmetic that could grow (Smith reduction) runs in `Integer`.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    IntegerMatrix transposed() const;
    std::vector<std::vector<std::int64_t>> to_rows() const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

}  // namespace sgm

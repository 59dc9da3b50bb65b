#include "sgm/chain/smith.hpp"

#include <algorithm>
#include <numeric>

#include "sgm/error.hpp"

namespace sgm {

namespace {

struct Overflow {};

// Arithmetic policy: 64-bit with overflow detection, or arbitrary precision.
struct Fast {
    using T = std::int64_t;
    static T sub_mul(T a, T q, T b)
    {
        T p, r;
        if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
        return r;
    }
    static T add(T a, T b)
    {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T abs(T a)
    {
        if (a == std::numeric_limits<T>::min()) throw Overflow{};
        return a < 0 ? -a : a;
    }
};

struct Big {
    using T = Integer;
    static T sub_mul(const T& a, const T& q, const T& b) { return a - q * b; }
    static T add(const T& a, const T& b) { return a + b; }
    static T abs(const T& a) { return a < 0 ? T(-a) : a; }
};

template <class P>
class Reducer {
  public:
    using T = typename P::T;

    Reducer(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    T& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    // Observers for transform tracking; empty by default.
    std::vector<std::vector<T>>* left = nullptr;      // row ops
    std::vector<std::vector<T>>* left_inv = nullptr;  // inverse: column ops
    std::vector<std::vector<T>>* right = nullptr;     // column ops

    std::vector<T> run()
    {
        std::vector<T> diag;
        const std::size_t n = std::min(r_, c_);
        for (std::size_t t = 0; t < n; ++t) {
            if (!pivot_min(t, t, t)) break;
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < r_; ++i) {
                    if (at(i, t) == 0) continue;
                    T q = at(i, t) / at(t, t);
                    row_sub(i, t, q, t);
                    if (at(i, t) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < c_; ++j) {
                    if (at(t, j) == 0) continue;
                    T q = at(t, j) / at(t, t);
                    col_sub(j, t, q, t);
                    if (at(t, j) != 0) clean = false;
                }
                if (!clean) {
                    pivot_cross(t);
                    continue;
                }
                // Pivot must divide the remaining block.
                bool divides = true;
                for (std::size_t i = t + 1; i < r_ && divides; ++i)
                    for (std::size_t j = t + 1; j < c_; ++j)
                        if (at(i, j) % at(t, t) != 0) {
                            row_add(t, i);
                            divides = false;
                            break;
                        }
                if (divides) break;
            }
            if (at(t, t) < 0) negate_row(t);
            diag.push_back(at(t, t));
        }
        return diag;
    }

  private:
    // Moves the least nonzero |entry| of the block [t.., t..] to (t, t).
    bool pivot_min(std::size_t t, std::size_t, std::size_t)
    {
        bool found = false;
        T best{};
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < r_; ++i)
            for (std::size_t j = t; j < c_; ++j) {
                const T& v = at(i, j);
                if (v == 0) continue;
                T av = P::abs(v);
                if (!found || av < best) {
                    found = true;
                    best = av;
                    bi = i;
                    bj = j;
                    if (best == 1) goto done;
                }
            }
    done:
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Least nonzero |entry| of row t and column t moves to (t, t).
    void pivot_cross(std::size_t t)
    {
        T best = P::abs(at(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r_; ++i)
            if (at(i, t) != 0 && P::abs(at(i, t)) < best) {
                best = P::abs(at(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < c_; ++j)
            if (at(t, j) != 0 && P::abs(at(t, j)) < best) {
                best = P::abs(at(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap(at(i, j), at(k, j));
        if (left) std::swap((*left)[i], (*left)[k]);
        if (left_inv)
            for (auto& row : *left_inv) std::swap(row[i], row[k]);
    }

    void swap_cols(std::size_t j, std::size_t k)
    {
        if (j == k) return;
        for (std::size_t i = 0; i < r_; ++i) std::swap(at(i, j), at(i, k));
        if (right)
            for (auto& row : *right) std::swap(row[j], row[k]);
    }

    // row_i -= q * row_k, columns from `from` on (earlier columns are zero in row k).
    void row_sub(std::size_t i, std::size_t k, const T& q, std::size_t from)
    {
        for (std::size_t j = from; j < c_; ++j)
            if (at(k, j) != 0) at(i, j) = P::sub_mul(at(i, j), q, at(k, j));
        if (left) {
            auto& li = (*left)[i];
            const auto& lk = (*left)[k];
            for (std::size_t j = 0; j < li.size(); ++j)
                if (lk[j] != 0) li[j] = P::sub_mul(li[j], q, lk[j]);
        }
        if (left_inv)  // inverse of R_i -= q R_k is C_k += q C_i
            for (auto& row : *left_inv)
                if (row[i] != 0) row[k] = P::sub_mul(row[k], T(-q), row[i]);
    }

    // col_j -= q * col_k.
    void col_sub(std::size_t j, std::size_t k, const T& q, std::size_t from)
    {
        for (std::size_t i = from; i < r_; ++i)
            if (at(i, k) != 0) at(i, j) = P::sub_mul(at(i, j), q, at(i, k));
        if (right)
            for (auto& row : *right)
                if (row[k] != 0) row[j] = P::sub_mul(row[j], q, row[k]);
    }

    // row_t += row_i.
    void row_add(std::size_t t, std::size_t i)
    {
        for (std::size_t j = 0; j < c_; ++j)
            if (at(i, j) != 0) at(t, j) = P::add(at(t, j), at(i, j));
        if (left) {
            auto& lt = (*left)[t];
            const auto& li = (*left)[i];
            for (std::size_t j = 0; j < lt.size(); ++j)
                if (li[j] != 0) lt[j] = P::add(lt[j], li[j]);
        }
        if (left_inv)  // inverse: C_i -= C_t
            for (auto& row : *left_inv)
                if (row[t] != 0) row[i] = P::sub_mul(row[i], T(1), row[t]);
    }

    void negate_row(std::size_t t)
    {
        for (std::size_t j = 0; j < c_; ++j) at(t, j) = T(-at(t, j));
        if (left)
            for (auto& v : (*left)[t]) v = T(-v);
        if (left_inv)
            for (auto& row : *left_inv) row[t] = T(-row[t]);
    }

    std::size_t r_, c_;
    std::vector<T> a_;
};

template <class P>
std::vector<typename P::T> diagonal_of(const IntegerMatrix& m, const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols)
{
    Reducer<P> red(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) red.at(i, j) = typename P::T(m(rows[i], cols[j]));
    return red.run();
}

std::vector<std::vector<Integer>> identity_big(std::size_t n)
{
    std::vector<std::vector<Integer>> id(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

// --- arithmetic mod p -----------------------------------------------------

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p)
{
    __extension__ using wide = __int128;
    return static_cast<std::int64_t>((static_cast<wide>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

// Reduced row echelon form of [m | extra columns] mod p; returns pivot columns.
struct ModPEchelon {
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::size_t> pivots;
};

ModPEchelon echelon_mod_p(std::vector<std::vector<std::int64_t>> a, std::size_t ncols_to_pivot, std::int64_t p)
{
    ModPEchelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols_to_pivot && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        std::int64_t inv = invmod(a[r][c], p);
        for (auto& v : a[r]) v = mulmod(v, inv, p);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::int64_t f = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j)
                if (a[r][j] != 0) a[i][j] = (a[i][j] - mulmod(f, a[r][j], p) + p) % p;
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rows = std::move(a);
    return e;
}

std::vector<std::vector<std::int64_t>> reduced_rows(const IntegerMatrix& m, std::int64_t p)
{
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::int64_t v = m(i, j) % p;
            a[i][j] = v < 0 ? v + p : v;
        }
    return a;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m)
{
    // Zero rows and columns do not affect the Smith form.
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) {
                rows.push_back(i);
                break;
            }
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) {
                cols.push_back(j);
                break;
            }
    SmithResult res;
    if (rows.empty()) return res;
    try {
        for (auto v : diagonal_of<Fast>(m, rows, cols)) res.diagonal.emplace_back(v);
    } catch (const Overflow&) {
        res.diagonal = diagonal_of<Big>(m, rows, cols);
    }
    res.rank = res.diagonal.size();
    for (const auto& d : res.diagonal)
        if (d != 1) res.invariants.push_back(d);
    return res;
}

SmithDecomposition smith_decomposition(const IntegerMatrix& m)
{
    SmithDecomposition out;
    out.left = identity_big(m.rows());
    out.left_inverse = identity_big(m.rows());
    out.right = identity_big(m.cols());
    Reducer<Big> red(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) red.at(i, j) = m(i, j);
    red.left = &out.left;
    red.left_inv = &out.left_inverse;
    red.right = &out.right;
    out.diagonal = red.run();
    out.rank = out.diagonal.size();
    return out;
}

std::size_t rank_over(const IntegerMatrix& m, const Coefficients& coeffs)
{
    if (coeffs.kind() == Coefficients::Kind::mod_p)
        return echelon_mod_p(reduced_rows(m, coeffs.prime()), m.cols(), coeffs.prime()).pivots.size();
    return smith_normal_form(m).rank;
}

std::optional<LinearSolution> solve_linear(const IntegerMatrix& m, const std::vector<std::int64_t>& b,
                                           const Coefficients& coeffs)
{
    if (b.size() != m.rows()) fail(ErrorKind::invalid_argument, "right-hand side has the wrong length");
    if (coeffs.kind() == Coefficients::Kind::mod_p) {
        const std::int64_t p = coeffs.prime();
        auto a = reduced_rows(m, p);
        for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(coeffs.reduce(b[i]));
        auto e = echelon_mod_p(std::move(a), m.cols(), p);
        for (std::size_t i = e.pivots.size(); i < e.rows.size(); ++i)
            if (e.rows[i][m.cols()] != 0) return std::nullopt;
        LinearSolution s;
        s.x.assign(m.cols(), 0);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) s.x[e.pivots[i]] = e.rows[i][m.cols()];
        return s;
    }
    auto dec = smith_decomposition(m);
    std::vector<Integer> lb(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            if (dec.left[i][j] != 0 && b[j] != 0) lb[i] += dec.left[i][j] * b[j];
    for (std::size_t i = dec.rank; i < m.rows(); ++i)
        if (lb[i] != 0) return std::nullopt;
    Integer scale = 1;
    if (coeffs.kind() == Coefficients::Kind::integers) {
        for (std::size_t i = 0; i < dec.rank; ++i)
            if (lb[i] % dec.diagonal[i] != 0) return std::nullopt;
    } else {
        for (std::size_t i = 0; i < dec.rank; ++i) {
            Integer g = boost::multiprecision::gcd(lb[i], dec.diagonal[i]);
            Integer need = dec.diagonal[i] / g;
            scale = scale / boost::multiprecision::gcd(scale, need) * need;
        }
    }
    std::vector<Integer> y(m.cols(), 0);
    for (std::size_t i = 0; i < dec.rank; ++i) y[i] = lb[i] * scale / dec.diagonal[i];
    LinearSolution s;
    s.scale = to_int64(scale);
    s.x.assign(m.cols(), 0);
    for (std::size_t i = 0; i < m.cols(); ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < dec.rank; ++j) acc += dec.right[i][j] * y[j];
        s.x[i] = to_int64(acc);
    }
    return s;
}

std::vector<std::vector<std::int64_t>> kernel_basis(const IntegerMatrix& m, const Coefficients& coeffs)
{
    std::vector<std::vector<std::int64_t>> basis;
    if (coeffs.kind() == Coefficients::Kind::mod_p) {
        const std::int64_t p = coeffs.prime();
        auto e = echelon_mod_p(reduced_rows(m, p), m.cols(), p);
        std::vector<bool> is_pivot(m.cols(), false);
        for (auto c : e.pivots) is_pivot[c] = true;
        for (std::size_t f = 0; f < m.cols(); ++f) {
            if (is_pivot[f]) continue;
            std::vector<std::int64_t> v(m.cols(), 0);
            v[f] = 1;
            for (std::size_t i = 0; i < e.pivots.size(); ++i)
                v[e.pivots[i]] = coeffs.reduce(-e.rows[i][f]);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    auto dec = smith_decomposition(m);
    for (std::size_t j = dec.rank; j < m.cols(); ++j) {
        std::vector<std::int64_t> v(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) v[i] = to_int64(dec.right[i][j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sgm

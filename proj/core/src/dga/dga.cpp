#include "sgm/dga/dga.hpp"

#include <algorithm>

#include "sgm/chain/smith.hpp"
#include "sgm/error.hpp"
#include "sgm/integer.hpp"

namespace sgm {

std::size_t FiniteDGA::add_generator(const std::string& name, int degree)
{
    if (name.empty()) fail(ErrorKind::invalid_argument, "DGA basis element without a name");
    if (degree < 0) fail(ErrorKind::invalid_argument, "negative degree for " + name);
    if (degree > kDefaultDegreeCap) fail(ErrorKind::degree_cap, "degree of " + name + " exceeds the degree cap");
    if (index_.count(name)) fail(ErrorKind::invalid_argument, "duplicate DGA basis name " + name);
    index_[name] = names_.size();
    names_.push_back(name);
    degrees_.push_back(degree);
    return names_.size() - 1;
}

void FiniteDGA::set_unit(std::size_t i)
{
    if (degree(i) != 0) fail(ErrorKind::invalid_argument, "the unit must have degree 0");
    unit_ = i;
}

void FiniteDGA::set_differential(std::size_t x, const Combination& dx)
{
    Combination n = normalize(dx);
    for (const auto& [i, c] : n)
        if (degree(i) != degree(x) + 1)
            fail(ErrorKind::structural, "d(" + name(x) + ") has a term " + name(i) + " of the wrong degree");
    if (n.empty())
        diff_.erase(x);
    else
        diff_[x] = n;
}

void FiniteDGA::set_product(std::size_t a, std::size_t b, const Combination& value)
{
    if (a >= size() || b >= size()) fail(ErrorKind::invalid_argument, "product of unknown basis elements");
    Combination n = normalize(value);
    if (n.empty())
        products_.erase({a, b});
    else
        products_[{a, b}] = n;
}

std::optional<std::size_t> FiniteDGA::find(const std::string& n) const
{
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FiniteDGA::top_degree() const
{
    int t = -1;
    for (int d : degrees_) t = std::max(t, d);
    return t;
}

std::vector<std::size_t> FiniteDGA::in_degree(int q) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (degrees_[i] == q) out.push_back(i);
    return out;
}

Combination FiniteDGA::normalize(const Combination& c) const
{
    Combination out;
    for (const auto& [i, v] : c) {
        const std::int64_t r = coeffs_.reduce(v);
        if (r != 0) out[i] = r;
    }
    return out;
}

Combination FiniteDGA::scale(const Combination& c, std::int64_t s) const
{
    Combination out;
    for (const auto& [i, v] : c) out[i] = checked_mul(v, s);
    return normalize(out);
}

Combination FiniteDGA::add(const Combination& a, const Combination& b) const
{
    Combination out = a;
    for (const auto& [i, v] : b) out[i] = checked_add(out[i], v);
    return normalize(out);
}

Combination FiniteDGA::d(std::size_t x) const
{
    auto it = diff_.find(x);
    return it == diff_.end() ? Combination{} : it->second;
}

Combination FiniteDGA::d(const Combination& c) const
{
    Combination out;
    for (const auto& [i, v] : c) out = add(out, scale(d(i), v));
    return out;
}

Combination FiniteDGA::multiply(std::size_t a, std::size_t b) const
{
    if (unit_ && a == *unit_) return {{b, 1}};
    if (unit_ && b == *unit_) return {{a, 1}};
    auto it = products_.find({a, b});
    return it == products_.end() ? Combination{} : it->second;
}

Combination FiniteDGA::multiply(const Combination& a, const Combination& b) const
{
    Combination out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) out = add(out, scale(multiply(i, j), checked_mul(x, y)));
    return out;
}

int FiniteDGA::degree_of(const Combination& c) const
{
    if (c.empty()) fail(ErrorKind::invalid_argument, "degree of the zero element");
    const int q = degree(c.begin()->first);
    for (const auto& [i, v] : c)
        if (degree(i) != q) fail(ErrorKind::invalid_argument, "inhomogeneous element " + str(c));
    return q;
}

IntegerMatrix FiniteDGA::differential_matrix(int q) const
{
    const auto src = in_degree(q);
    const auto dst = in_degree(q + 1);
    IntegerMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
        for (const auto& [i, v] : d(src[c])) {
            auto pos = std::find(dst.begin(), dst.end(), i);
            m(static_cast<std::size_t>(pos - dst.begin()), c) = v;
        }
    return m;
}

std::vector<std::int64_t> FiniteDGA::coordinates(const Combination& c, int q) const
{
    const auto basis = in_degree(q);
    std::vector<std::int64_t> x(basis.size(), 0);
    for (const auto& [i, v] : c) {
        auto pos = std::find(basis.begin(), basis.end(), i);
        if (pos == basis.end()) fail(ErrorKind::invalid_argument, name(i) + " is not in degree " + std::to_string(q));
        x[static_cast<std::size_t>(pos - basis.begin())] = v;
    }
    return x;
}

Combination FiniteDGA::from_coordinates(const std::vector<std::int64_t>& x, int q) const
{
    const auto basis = in_degree(q);
    Combination c;
    for (std::size_t i = 0; i < basis.size() && i < x.size(); ++i)
        if (x[i] != 0) c[basis[i]] = x[i];
    return normalize(c);
}

std::string FiniteDGA::str(const Combination& c) const
{
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [i, v] : c) {
        if (!s.empty()) s += v < 0 ? " - " : " + ";
        else if (v < 0) s += "-";
        const std::int64_t m = v < 0 ? -v : v;
        if (m != 1) s += std::to_string(m) + "*";
        s += name(i);
    }
    return s;
}

DgaVerdict validate_dga(const FiniteDGA& a)
{
    auto bad = [](std::string why) { return DgaVerdict{false, std::move(why)}; };
    const std::size_t n = a.size();
    if (!a.unit()) return bad("no unit");
    const std::size_t one = *a.unit();
    if (!a.d(one).empty()) return bad("d(" + a.name(one) + ") is not zero");
    for (std::size_t x = 0; x < n; ++x)
        if (!a.d(a.d(x)).empty()) return bad("d(d(" + a.name(x) + ")) = " + a.str(a.d(a.d(x))) + " is not zero");
    for (const auto& [key, v] : a.products()) {
        if (key.first == one || key.second == one)
            return bad("explicit product with the unit " + a.name(one) + " in the table");
        for (const auto& [i, c] : v)
            if (a.degree(i) != a.degree(key.first) + a.degree(key.second))
                return bad("product " + a.name(key.first) + "*" + a.name(key.second) + " has a term of the wrong degree");
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Combination lhs = a.d(a.multiply(x, y));
            const std::int64_t sign = a.degree(x) % 2 == 0 ? 1 : -1;
            const Combination rhs = a.add(a.multiply(a.d(x), Combination{{y, 1}}),
                                          a.scale(a.multiply(Combination{{x, 1}}, a.d(y)), sign));
            if (lhs != rhs)
                return bad("Leibniz fails on (" + a.name(x) + ", " + a.name(y) + "): d(xy) = " + a.str(lhs) +
                           " but (dx)y + (-1)^|x| x(dy) = " + a.str(rhs));
            if (!a.noncommutative_allowed()) {
                const std::int64_t s = (a.degree(x) * a.degree(y)) % 2 == 0 ? 1 : -1;
                if (a.multiply(x, y) != a.scale(a.multiply(y, x), s))
                    return bad("graded commutativity fails on (" + a.name(x) + ", " + a.name(y) + ")");
            }
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Combination xy = a.multiply(x, y);
            for (std::size_t z = 0; z < n; ++z) {
                const Combination l = a.multiply(xy, Combination{{z, 1}});
                const Combination r = a.multiply(Combination{{x, 1}}, a.multiply(y, z));
                if (l != r)
                    return bad("associativity fails on (" + a.name(x) + ", " + a.name(y) + ", " + a.name(z) + ")");
            }
        }
    return {};
}

GradedModule dga_cohomology(const FiniteDGA& a)
{
    if (auto v = validate_dga(a); !v.valid) fail(ErrorKind::structural, "invalid DGA: " + v.violation);
    GradedModule h(a.coefficients());
    for (int q = 0; q <= a.top_degree(); ++q) {
        const std::size_t r = a.in_degree(q).size();
        if (r == 0) continue;
        h.set(q, homology_at(r, a.differential_matrix(q), a.differential_matrix(q - 1), a.coefficients()));
    }
    return h;
}

ChainComplex dga_as_chain_complex(const FiniteDGA& a)
{
    const int top = a.top_degree();
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> bd;
    for (int j = 0; j <= top; ++j) ranks.push_back(a.in_degree(top - j).size());
    for (int j = 1; j <= top; ++j) bd.push_back(a.differential_matrix(top - j));
    return ChainComplex(ranks, bd);
}

namespace {

// Solves d x = b in degree q (b in degree q+1).
std::optional<LinearSolution> primitive(const FiniteDGA& a, const Combination& b, int q)
{
    if (q < 0) {
        if (b.empty()) return LinearSolution{{}, 1};
        return std::nullopt;
    }
    return solve_linear(a.differential_matrix(q), a.coordinates(b, q + 1), a.coefficients());
}

bool in_span(const FiniteDGA& a, const std::vector<std::vector<std::int64_t>>& columns, const std::vector<std::int64_t>& target)
{
    if (std::all_of(target.begin(), target.end(), [&](std::int64_t v) { return a.coefficients().reduce(v) == 0; }))
        return true;
    if (columns.empty()) return false;
    IntegerMatrix m(target.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < target.size(); ++i) m(i, j) = columns[j][i];
    return solve_linear(m, target, a.coefficients()).has_value();
}

Combination bar(const FiniteDGA& a, const Combination& c)
{
    if (c.empty()) return c;
    return a.degree_of(c) % 2 == 0 ? a.scale(c, -1) : c;
}

Combination perturb(const FiniteDGA& a, const Combination& x, std::int64_t scale, int q, std::mt19937_64& rng)
{
    if (q < 0) return x;
    auto kernel = kernel_basis(a.differential_matrix(q), a.coefficients());
    std::uniform_int_distribution<int> coef(-3, 3);
    Combination out = x;
    for (const auto& k : kernel) {
        const int c = coef(rng);
        if (c == 0) continue;
        out = a.add(out, a.scale(a.from_coordinates(k, q), checked_mul(c, scale)));
    }
    return out;
}

}  // namespace

MasseyResult triple_massey(const FiniteDGA& a, const Combination& u0, const Combination& v0, const Combination& w0,
                           const MasseyOptions& options)
{
    const Combination u = a.normalize(u0), v = a.normalize(v0), w = a.normalize(w0);
    for (const auto* c : {&u, &v, &w})
        if (!a.d(*c).empty()) fail(ErrorKind::invalid_argument, a.str(*c) + " is not a cocycle");
    MasseyResult r;
    r.defined = true;
    if (u.empty() || v.empty() || w.empty()) {
        // zero entry: the set contains 0; report it in the ambient degree when one is known
        r.reason = "an entry is zero";
        return r;
    }
    const int du = a.degree_of(u), dv = a.degree_of(v), dw = a.degree_of(w);
    r.degree = du + dv + dw - 1;
    const bool kraines = options.convention == MasseyConvention::kraines;
    const Combination uv = kraines ? a.multiply(bar(a, u), v) : a.multiply(u, v);
    const Combination vw = kraines ? a.multiply(bar(a, v), w) : a.multiply(v, w);
    auto sx = uv.empty() ? std::optional<LinearSolution>(LinearSolution{{}, 1}) : primitive(a, uv, du + dv - 1);
    auto sy = vw.empty() ? std::optional<LinearSolution>(LinearSolution{{}, 1}) : primitive(a, vw, dv + dw - 1);
    if (!sx || !sy) {
        r.defined = false;
        r.reason = !sx ? "[u][v] is not zero in cohomology" : "[v][w] is not zero in cohomology";
        return r;
    }
    Combination x = uv.empty() ? Combination{} : a.from_coordinates(sx->x, du + dv - 1);
    Combination y = vw.empty() ? Combination{} : a.from_coordinates(sy->x, dv + dw - 1);
    const std::int64_t s = sx->scale, t = sy->scale;
    if (options.perturb_seed) {
        std::mt19937_64 rng(*options.perturb_seed);
        x = perturb(a, x, s, du + dv - 1, rng);
        y = perturb(a, y, t, dv + dw - 1, rng);
    }
    r.x_primitive = x;
    r.y_primitive = y;
    r.scale = checked_mul(s, t);
    Combination z;
    if (kraines) {
        z = a.add(a.scale(a.multiply(x.empty() ? x : (((du + dv - 1) % 2 == 0) ? a.scale(x, -1) : x), w), t),
                  a.scale(a.multiply(bar(a, u), y), s));
    } else {
        const std::int64_t sign = (du + 1) % 2 == 0 ? 1 : -1;
        z = a.add(a.scale(a.multiply(x, w), t), a.scale(a.multiply(u, y), checked_mul(sign, s)));
    }
    if (!a.d(z).empty()) fail(ErrorKind::internal, "Massey representative is not a cocycle: " + a.str(z));
    for (const auto& [i, c] : z)
        if (a.degree(i) != r.degree) fail(ErrorKind::internal, "Massey representative in the wrong degree");
    r.representative = z;

    const int q = r.degree;
    std::vector<std::vector<std::int64_t>> boundaries;
    if (q >= 1) {
        const IntegerMatrix dm = a.differential_matrix(q - 1);
        for (std::size_t c = 0; c < dm.cols(); ++c) {
            std::vector<std::int64_t> col(dm.rows());
            for (std::size_t i = 0; i < dm.rows(); ++i) col[i] = dm(i, c);
            boundaries.push_back(col);
        }
    }
    std::vector<Combination> gens;
    auto cocycles = [&](int deg) {
        std::vector<Combination> out;
        if (deg < 0) return out;
        for (const auto& k : kernel_basis(a.differential_matrix(deg), a.coefficients()))
            out.push_back(a.from_coordinates(k, deg));
        return out;
    };
    for (const auto& c : cocycles(dv + dw - 1)) gens.push_back(a.multiply(u, c));
    for (const auto& c : cocycles(du + dv - 1)) gens.push_back(a.multiply(c, w));
    std::vector<std::vector<std::int64_t>> span = boundaries;
    for (const auto& g : gens) {
        if (g.empty()) continue;
        const auto coords = a.coordinates(g, q);
        if (in_span(a, span, coords)) continue;
        r.indeterminacy_basis.push_back(g);
        span.push_back(coords);
        r.indeterminacy_trivial = false;
    }
    r.nonvanishing = !in_span(a, span, a.coordinates(z, q));
    return r;
}

BasisChange random_basis_change(const FiniteDGA& a, std::mt19937_64& rng, int operations)
{
    BasisChange ch;
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int q = 0; q <= a.top_degree(); ++q) {
        const std::size_t r = a.in_degree(q).size();
        IntegerMatrix f = IntegerMatrix::identity(r), inv = IntegerMatrix::identity(r);
        if (q > 0 && r > 0) {
            std::uniform_int_distribution<std::size_t> pick(0, r - 1);
            for (int op = 0; op < operations; ++op) {
                const std::size_t i = pick(rng), j = pick(rng);
                if (i == j) {
                    // negate basis vector i
                    for (std::size_t k = 0; k < r; ++k) f(k, i) = -f(k, i);
                    for (std::size_t k = 0; k < r; ++k) inv(i, k) = -inv(i, k);
                    continue;
                }
                const int c = coef(rng);
                if (c == 0) continue;
                // new_j = new_j + c new_i: column op on f, inverse row op on inv
                for (std::size_t k = 0; k < r; ++k) f(k, j) = checked_add(f(k, j), checked_mul(c, f(k, i)));
                for (std::size_t k = 0; k < r; ++k) inv(i, k) = checked_add(inv(i, k), checked_mul(-c, inv(j, k)));
            }
        }
        ch.forward.emplace(q, f);
        ch.inverse.emplace(q, inv);
    }
    return ch;
}

namespace {

Combination map_coordinates(const FiniteDGA& target, const IntegerMatrix& m, const std::vector<std::int64_t>& x, int q)
{
    return target.from_coordinates(m.apply(x), q);
}

Combination old_vector(const FiniteDGA& a, const BasisChange& ch, std::size_t new_index_in_degree, int q)
{
    const IntegerMatrix& f = ch.forward.at(q);
    std::vector<std::int64_t> e(f.cols(), 0);
    e[new_index_in_degree] = 1;
    return a.from_coordinates(f.apply(e), q);
}

}  // namespace

FiniteDGA change_basis(const FiniteDGA& a, const BasisChange& ch)
{
    FiniteDGA out(a.coefficients());
    out.allow_noncommutative(a.noncommutative_allowed());
    std::vector<std::size_t> new_index(a.size());
    std::vector<std::pair<int, std::size_t>> position(a.size());
    for (int q = 0; q <= a.top_degree(); ++q) {
        const auto basis = a.in_degree(q);
        for (std::size_t p = 0; p < basis.size(); ++p) {
            const std::string nm = q == 0 ? a.name(basis[p]) : a.name(basis[p]) + "'";
            new_index[basis[p]] = out.add_generator(nm, q);
            position[basis[p]] = {q, p};
        }
    }
    if (a.unit()) out.set_unit(new_index[*a.unit()]);
    auto to_new = [&](const Combination& old, int q) {
        if (old.empty()) return Combination{};
        const auto x = map_coordinates(a, ch.inverse.at(q), a.coordinates(old, q), q);
        Combination c;
        for (const auto& [i, v] : x) c[new_index[i]] = v;
        return out.normalize(c);
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto [q, p] = position[i];
        const Combination dv = a.d(old_vector(a, ch, p, q));
        out.set_differential(new_index[i], to_new(dv, q + 1));
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a.unit() && (i == *a.unit() || j == *a.unit())) continue;
            const auto [qi, pi] = position[i];
            const auto [qj, pj] = position[j];
            const Combination prod = a.multiply(old_vector(a, ch, pi, qi), old_vector(a, ch, pj, qj));
            if (!prod.empty()) out.set_product(new_index[i], new_index[j], to_new(prod, qi + qj));
        }
    return out;
}

Combination to_new_basis(const FiniteDGA& a, const BasisChange& ch, const Combination& c)
{
    if (c.empty()) return c;
    const int q = a.degree_of(c);
    const auto basis = a.in_degree(q);
    const auto x = ch.inverse.at(q).apply(a.coordinates(c, q));
    // new basis elements keep the insertion order of the old ones per degree
    Combination out;
    std::size_t offset = 0;
    for (int d = 0; d < q; ++d) offset += a.in_degree(d).size();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out[offset + i] = x[i];
    return a.normalize(out);
}

FiniteDGA borromean_fixture(const Coefficients& coeffs)
{
    FiniteDGA a(coeffs);
    const std::size_t one = a.add_generator("1", 0);
    a.set_unit(one);
    const std::size_t x[3] = {a.add_generator("x1", 2), a.add_generator("x2", 2), a.add_generator("x3", 2)};
    const std::size_t y12 = a.add_generator("y12", 3), y13 = a.add_generator("y13", 3), y23 = a.add_generator("y23", 3);
    const std::size_t w12 = a.add_generator("w12", 4), w13 = a.add_generator("w13", 4), w23 = a.add_generator("w23", 4);
    const std::size_t v[3] = {a.add_generator("v1", 5), a.add_generator("v2", 5), a.add_generator("v3", 5)};
    const std::size_t t = a.add_generator("t", 6);

    a.set_differential(y12, {{w12, 1}});
    a.set_differential(y13, {{w13, 1}});
    a.set_differential(y23, {{w23, 1}});
    for (auto vi : v) a.set_differential(vi, {{t, 1}});

    auto both = [&](std::size_t p, std::size_t q, std::size_t r) {
        a.set_product(p, q, {{r, 1}});
        a.set_product(q, p, {{r, 1}});
    };
    both(x[0], x[1], w12);
    both(x[0], x[2], w13);
    both(x[1], x[2], w23);
    both(x[0], w23, t);
    both(x[1], w13, t);
    both(x[2], w12, t);
    both(x[0], y23, v[0]);
    both(x[1], y13, v[1]);
    both(x[2], y12, v[2]);
    return a;
}

}  // namespace sgm

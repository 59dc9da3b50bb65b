#include "sgm/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sgm/error.hpp"

namespace sgm {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::invalid_argument, what); }

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) bad(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

template <typename T>
T get(const Json& j, const std::string& where)
{
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        bad(where + ": " + e.what());
    }
}

Coefficients coefficients_of(const Json& j)
{
    if (!j.is_object() || !j.contains("coefficients")) return Coefficients::integers();
    return Coefficients::parse(get<std::string>(j.at("coefficients"), "coefficients"));
}

}  // namespace

Json to_json(const GradedModule& m)
{
    Json out = Json::object();
    for (const auto& [d, g] : m.by_degree())
        out[std::to_string(d)] = Json{{"rank", g.free_rank()}, {"torsion", g.invariant_factors()}};
    return out;
}

GradedModule graded_module_from_json(const Json& j, const Coefficients& coeffs)
{
    if (!j.is_object()) bad("graded module must be an object keyed by degree");
    GradedModule m(coeffs);
    for (const auto& [key, v] : j.items()) {
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            bad("graded module degree \"" + key + "\" is not an integer");
        }
        std::int64_t rank = 0;
        std::vector<std::int64_t> torsion;
        if (v.is_number_integer()) {
            rank = v.get<std::int64_t>();
        } else {
            if (v.contains("rank")) rank = get<std::int64_t>(v.at("rank"), "rank");
            if (v.contains("torsion")) torsion = get<std::vector<std::int64_t>>(v.at("torsion"), "torsion");
        }
        if (rank < 0) bad("negative rank in degree " + key);
        for (auto t : torsion)
            if (t < 2) bad("torsion factors must be at least 2");
        m.set(d, FgModule(coeffs, rank, torsion));
    }
    return m;
}

Json to_json(const ChainComplex& c)
{
    Json bds = Json::array();
    for (int d = 1; d <= c.top_degree(); ++d) bds.push_back(c.boundary(d).to_rows());
    return Json{{"ranks", c.ranks()}, {"boundaries", bds}};
}

ChainComplex chain_complex_from_json(const Json& j)
{
    const Json& bj = field(j, "boundaries", "chain complex");
    std::vector<IntegerMatrix> bds;
    for (const auto& m : bj) {
        auto rows = get<std::vector<std::vector<std::int64_t>>>(m, "boundary matrix");
        for (const auto& r : rows)
            if (r.size() != rows.front().size()) bad("boundary matrix rows differ in length");
        bds.push_back(IntegerMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size()));
    }
    std::vector<std::size_t> ranks;
    if (j.contains("ranks")) {
        ranks = get<std::vector<std::size_t>>(j.at("ranks"), "ranks");
    } else {
        if (bds.empty()) bad("chain complex without boundaries needs \"ranks\"");
        ranks.push_back(bds.front().rows());
        for (const auto& m : bds) ranks.push_back(m.cols());
    }
    // matrices given as empty row lists carry no shape; rebuild from ranks
    for (std::size_t d = 0; d < bds.size() && d + 1 < ranks.size(); ++d)
        if (bds[d].rows() == 0 || bds[d].cols() == 0) bds[d] = IntegerMatrix(ranks[d], ranks[d + 1]);
    return ChainComplex(ranks, bds);
}

Json to_json(const OrderedSimplicialComplex& k) { return Json{{"simplices", k.facets()}}; }

OrderedSimplicialComplex simplicial_complex_from_json(const Json& j)
{
    const Json& s = j.is_array() ? j : field(j, "simplices", "simplicial complex");
    return OrderedSimplicialComplex::from_simplices(get<std::vector<Simplex>>(s, "simplices"));
}

Json combination_json(const CohomologyRing& r, const Combination& c)
{
    Json out = Json::object();
    for (const auto& [i, v] : c) out[r.basis().at(i).label] = v;
    return out;
}

Json combination_json(const FiniteDGA& a, const Combination& c)
{
    Json out = Json::object();
    for (const auto& [i, v] : c) out[a.name(i)] = v;
    return out;
}

Json to_json(const CohomologyRing& r)
{
    Json basis = Json::array();
    for (const auto& b : r.basis()) basis.push_back({{"name", b.label}, {"degree", b.degree}});
    Json products = Json::array();
    for (const auto& [key, v] : r.table())
        if (!v.empty())
            products.push_back(
                {{"a", r.basis()[key.first].label}, {"b", r.basis()[key.second].label}, {"result", combination_json(r, v)}});
    Json out{{"coefficients", r.coefficients().name()}, {"n", r.ambient_dim()}, {"basis", basis}};
    if (r.has_unit()) out["unit"] = r.basis()[r.unit()].label;
    out["products"] = products;
    return out;
}

CohomologyRing ring_from_json(const Json& j)
{
    const Coefficients coeffs = coefficients_of(j);
    const int n = j.contains("n") ? get<int>(j.at("n"), "n") : 0;
    CohomologyRing r(coeffs, n);
    const Json& basis = field(j, "basis", "ring");
    std::string unit = j.contains("unit") ? get<std::string>(j.at("unit"), "unit") : std::string();
    // the unit goes first so add_class marks it
    if (!unit.empty()) {
        bool found = false;
        for (const auto& b : basis)
            if (get<std::string>(field(b, "name", "ring basis"), "name") == unit) {
                if (get<int>(field(b, "degree", "ring basis"), "degree") != 0) bad("ring unit must have degree 0");
                found = true;
            }
        if (!found) bad("ring unit " + unit + " is not a basis element");
        r.add_class(unit, 0);
    }
    for (const auto& b : basis) {
        const auto name = get<std::string>(field(b, "name", "ring basis"), "name");
        if (name == unit) continue;
        if (r.find(name)) bad("duplicate ring basis label " + name);
        r.add_class(name, get<int>(field(b, "degree", "ring basis"), "degree"));
    }
    auto id = [&](const Json& v) {
        const auto name = get<std::string>(v, "ring label");
        auto i = r.find(name);
        if (!i) bad("unknown ring label " + name);
        return *i;
    };
    if (j.contains("products"))
        for (const auto& p : j.at("products")) {
            Combination c;
            for (const auto& [label, coef] : field(p, "result", "ring product").items())
                c[id(Json(label))] += get<std::int64_t>(coef, "ring coefficient");
            const std::size_t x = id(field(p, "a", "ring product")), y = id(field(p, "b", "ring product"));
            if (r.has_unit() && (x == r.unit() || y == r.unit())) continue;
            r.set_product(x, y, c);
        }
    return r;
}

Json to_json(const FiniteDGA& a)
{
    Json basis = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) basis.push_back({{"name", a.name(i)}, {"degree", a.degree(i)}});
    Json d = Json::object();
    for (const auto& [x, v] : a.differentials()) d[a.name(x)] = combination_json(a, v);
    Json mul = Json::object();
    for (const auto& [key, v] : a.products()) mul[a.name(key.first) + "*" + a.name(key.second)] = combination_json(a, v);
    Json out{{"coefficients", a.coefficients().name()}, {"basis", basis}};
    if (a.unit()) out["unit"] = a.name(*a.unit());
    out["d"] = d;
    out["mul"] = mul;
    if (a.noncommutative_allowed()) out["allow_noncommutative"] = true;
    return out;
}

FiniteDGA dga_from_json(const Json& j)
{
    FiniteDGA a(coefficients_of(j));
    for (const auto& b : field(j, "basis", "DGA"))
        a.add_generator(get<std::string>(field(b, "name", "DGA basis"), "name"),
                        get<int>(field(b, "degree", "DGA basis"), "degree"));
    auto id = [&](const std::string& name) {
        auto i = a.find(name);
        if (!i) bad("unknown DGA basis element " + name);
        return *i;
    };
    auto comb = [&](const Json& c) {
        Combination out;
        for (const auto& [name, v] : c.items()) out[id(name)] += get<std::int64_t>(v, "DGA coefficient");
        return out;
    };
    if (j.contains("unit")) {
        a.set_unit(id(get<std::string>(j.at("unit"), "unit")));
    } else {
        auto zero = a.in_degree(0);
        if (zero.empty()) bad("DGA has no degree-0 element to serve as unit");
        a.set_unit(zero.front());
    }
    if (j.contains("allow_noncommutative")) a.allow_noncommutative(get<bool>(j.at("allow_noncommutative"), "flag"));
    if (j.contains("d"))
        for (const auto& [name, c] : j.at("d").items()) a.set_differential(id(name), comb(c));
    if (j.contains("mul"))
        for (const auto& [key, c] : j.at("mul").items()) {
            const auto star = key.find('*');
            if (star == std::string::npos) bad("DGA product key \"" + key + "\" must read a*b");
            const std::size_t x = id(key.substr(0, star)), y = id(key.substr(star + 1));
            if (a.unit() && (x == *a.unit() || y == *a.unit())) continue;
            a.set_product(x, y, comb(c));
        }
    return a;
}

Json to_json(const HoleSpec& h)
{
    Json linking = Json::array();
    for (const auto& [pair, v] : h.linking)
        linking.push_back({{"a", {pair.first.hole, pair.first.index}},
                           {"b", {pair.second.hole, pair.second.index}},
                           {"value", v}});
    return Json{{"holes", h.holes}, {"linking", linking}};
}

HoleSpec hole_spec_from_json(const Json& j)
{
    HoleSpec h;
    const Json& holes = j.is_array() ? j : field(j, "holes", "hole spec");
    h.holes = get<std::vector<std::vector<int>>>(holes, "holes");
    if (j.is_object() && j.contains("linking"))
        for (const auto& l : j.at("linking")) {
            auto ref = [&](const char* key) {
                auto v = get<std::vector<std::size_t>>(field(l, key, "linking entry"), "summand reference");
                if (v.size() != 2) bad("summand reference must be [hole, index]");
                return SummandRef{v[0], v[1]};
            };
            h.set_linking(ref("a"), ref("b"), get<std::int64_t>(field(l, "value", "linking entry"), "linking value"));
        }
    return h;
}

Json to_json(const SgmImage& img)
{
    Json out{{"kind", img.kind == SgmImage::Kind::handles ? "handles" : "holes"}, {"n", img.n}};
    if (img.kind == SgmImage::Kind::handles) {
        out["l"] = img.l;
    } else {
        const Json h = to_json(img.holes);
        out["holes"] = h["holes"];
        out["linking"] = h["linking"];
    }
    out["mode"] = img.mode == EmbeddingMode::embedded ? "embedded" : "immersed";
    return out;
}

SgmImage sgm_image_from_json(const Json& j)
{
    const auto kind = get<std::string>(field(j, "kind", "image"), "kind");
    const int n = get<int>(field(j, "n", "image"), "n");
    SgmImage img;
    if (kind == "handles") {
        img = SgmImage::handles(n, j.contains("l") ? get<std::vector<int>>(j.at("l"), "l") : std::vector<int>{});
    } else if (kind == "holes") {
        img = SgmImage::disc_with_holes(n, hole_spec_from_json(j));
    } else {
        bad("image kind must be handles or holes, got " + kind);
    }
    if (j.contains("mode")) {
        const auto mode = get<std::string>(j.at("mode"), "mode");
        if (mode == "embedded") img.mode = EmbeddingMode::embedded;
        else if (mode == "immersed") img.mode = EmbeddingMode::immersed;
        else bad("image mode must be embedded or immersed");
    }
    return img;
}

Json to_json(const AtomType& a)
{
    Json out{{"name", a.name},
             {"dim", a.dim},
             {"is_manifold", a.is_manifold},
             {"closed", a.closed},
             {"connected", a.connected},
             {"simply_connected", a.simply_connected},
             {"connectivity", a.connectivity >= kInfiniteConnectivity ? Json("inf") : Json(a.connectivity)},
             {"orientable", a.orientable},
             {"homotopy_sphere", a.homotopy_sphere},
             {"standard_sphere", a.standard_sphere}};
    out["spin"] = a.spin ? Json(*a.spin) : Json(nullptr);
    out["signature"] = a.signature ? Json(*a.signature) : Json(nullptr);
    out["homology"] = to_json(a.homology);
    return out;
}

AtomType atom_from_json(const Json& j)
{
    AtomType a;
    a.name = get<std::string>(field(j, "name", "atom"), "name");
    const std::string where = "atom " + a.name;
    a.dim = get<int>(field(j, "dim", where), "dim");
    auto flag = [&](const char* key, bool fallback) {
        return j.contains(key) ? get<bool>(j.at(key), where + "." + key) : fallback;
    };
    a.is_manifold = flag("is_manifold", true);
    a.closed = flag("closed", true);
    a.connected = flag("connected", true);
    a.simply_connected = flag("simply_connected", true);
    a.orientable = flag("orientable", true);
    a.homotopy_sphere = flag("homotopy_sphere", false);
    a.standard_sphere = flag("standard_sphere", false);
    if (j.contains("spin") && !j.at("spin").is_null()) a.spin = get<bool>(j.at("spin"), where + ".spin");
    if (j.contains("signature") && !j.at("signature").is_null())
        a.signature = get<std::int64_t>(j.at("signature"), where + ".signature");
    a.homology = graded_module_from_json(field(j, "homology", where), Coefficients::integers());
    if (j.contains("connectivity")) {
        const Json& c = j.at("connectivity");
        a.connectivity = c.is_string() && c.get<std::string>() == "inf" ? kInfiniteConnectivity
                                                                        : get<int>(c, where + ".connectivity");
    } else {
        // the homological connectivity from the stored groups
        a.connectivity = kInfiniteConnectivity;
        for (const auto& [d, m] : a.homology.reduced().by_degree())
            if (!m.is_zero()) {
                a.connectivity = d - 1;
                break;
            }
    }
    if (auto why = validate_atom(a)) bad(*why);
    return a;
}

AtomTable atom_table_from_json(const Json& j, AtomTable base)
{
    const Json& list = j.is_array() ? j : field(j, "atoms", "atom table");
    for (const auto& a : list) base.add(atom_from_json(a));
    return base;
}

RankVector parse_rank_vector(const std::string& text)
{
    RankVector r;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) bad("rank entry \"" + item + "\" must read degree:rank");
        try {
            std::size_t u1 = 0, u2 = 0;
            const std::string ds = item.substr(0, colon), rs = item.substr(colon + 1);
            const int d = std::stoi(ds, &u1);
            const long long v = std::stoll(rs, &u2);
            if (ds.find_first_not_of(" \t", u1) != std::string::npos || rs.find_first_not_of(" \t", u2) != std::string::npos)
                throw std::invalid_argument(item);
            if (v < 0) bad("negative rank in \"" + item + "\"");
            if (!r.emplace(d, v).second) bad("degree " + std::to_string(d) + " given twice");
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            bad("rank entry \"" + item + "\" must read degree:rank");
        }
    }
    return r;
}

RankVector rank_vector_from_json(const Json& j)
{
    if (j.is_string()) return parse_rank_vector(j.get<std::string>());
    if (!j.is_object()) bad("rank vector must be an object or a \"d:r,...\" string");
    RankVector r;
    for (const auto& [k, v] : j.items()) r[std::stoi(k)] = get<std::int64_t>(v, "rank");
    return r;
}

Json to_json(const RankVector& r)
{
    Json out = Json::object();
    for (const auto& [d, v] : r)
        if (v != 0) out[std::to_string(d)] = v;
    return out;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace sgm

#include <algorithm>
#include <sstream>

#include "sgm/chain/simplicial.hpp"
#include "sgm/cli/cli.hpp"
#include "sgm/error.hpp"
#include "sgm/invariants/term_homology.hpp"
#include "sgm/invariants/thm3.hpp"
#include "sgm/invariants/vanishing.hpp"
#include "sgm/term/classify.hpp"
#include "sgm/term/parser.hpp"

namespace sgm::cli {

const std::vector<std::string>& verbs()
{
    static const std::vector<std::string> v{"eval",       "ring",       "holes",    "realize", "massey",
                                            "sgm",        "check-root", "check-thm1", "pipeline", "oracle"};
    return v;
}

Json check_json(const std::string& name, const std::string& status, const std::string& detail)
{
    return Json{{"name", name}, {"status", status}, {"detail", detail}};
}

namespace {

[[noreturn]] void input_error(const std::string& what) { fail(ErrorKind::invalid_argument, what); }

struct Context {
    const Command& c;

    std::optional<std::string> opt(const std::string& key) const
    {
        auto it = c.options.find(key);
        if (it == c.options.end()) return std::nullopt;
        return it->second;
    }
    bool has(const std::string& key) const { return c.options.count(key) > 0; }

    std::string req(const std::string& key) const
    {
        auto v = opt(key);
        if (!v) input_error(c.verb + " needs --" + key);
        return *v;
    }

    static int to_int(const std::string& key, const std::string& s)
    {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size() || v < -(1LL << 30) || v > (1LL << 30)) throw std::invalid_argument(s);
            return static_cast<int>(v);
        } catch (const std::exception&) {
            input_error("--" + key + " expects an integer, got \"" + s + "\"");
        }
    }

    int req_int(const std::string& key) const { return to_int(key, req(key)); }
    int int_or(const std::string& key, int fallback) const
    {
        auto v = opt(key);
        return v ? to_int(key, *v) : fallback;
    }

    Coefficients coeffs() const { return Coefficients::parse(c.coeff.empty() ? "Z" : c.coeff); }

    AtomTable atoms() const
    {
        if (!c.atoms) return AtomTable::builtin();
        return atom_table_from_json(read_json_file(*c.atoms));
    }

    std::string positional(const char* what) const
    {
        if (c.args.size() != 1) input_error(c.verb + " expects exactly one " + std::string(what));
        return c.args.front();
    }
};

/// Inline JSON when the text opens with a bracket, a file path otherwise.
Json json_arg(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        try {
            return Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            input_error(std::string("inline JSON: ") + e.what());
        }
    }
    return read_json_file(text);
}

std::vector<std::int64_t> int_list(const std::string& key, const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(Context::to_int(key, item));
    return out;
}

Json connectivity_json(const ConnectivityReport& r)
{
    return Json{{"value", r.connectivity >= kInfiniteConnectivity ? Json("inf") : Json(r.connectivity)},
                {"homological_only", r.homological_only},
                {"flagged_atom", r.flagged_atom}};
}

Json verdict_json(const ClassifierVerdict& v)
{
    return Json{{"status", to_string(v.status)}, {"witness", v.witness}, {"reason", v.reason}};
}

Json thm1_json(const Thm1Verdict& v)
{
    return Json{{"pass", v.pass},
                {"vacuous", v.vacuous},
                {"complete", v.complete},
                {"factor_cap", v.factor_cap},
                {"products_checked", v.products_checked},
                {"witness", v.witness},
                {"witness_value", v.witness_value}};
}

Json massey_json(const FiniteDGA& a, const MasseyResult& m)
{
    Json ind = Json::array();
    for (const auto& c : m.indeterminacy_basis) ind.push_back(combination_json(a, c));
    Json out{{"defined", m.defined}, {"reason", m.reason}, {"degree", m.degree}};
    out["representative"] = combination_json(a, m.representative);
    out["x_primitive"] = combination_json(a, m.x_primitive);
    out["y_primitive"] = combination_json(a, m.y_primitive);
    out["indeterminacy_basis"] = ind;
    out["indeterminacy_trivial"] = m.indeterminacy_trivial;
    out["nonvanishing"] = m.nonvanishing;
    out["scale"] = m.scale;
    return out;
}

/// Labels with an optional sign and integer factor: "x1", "-x2", "2*x3", "x1+x2".
Combination combination_arg(const FiniteDGA& a, const std::string& text)
{
    Combination out;
    std::string term;
    auto flush = [&](const std::string& raw) {
        std::string t;
        for (char ch : raw)
            if (ch != ' ') t.push_back(ch);
        if (t.empty()) return;
        std::int64_t sign = 1;
        while (!t.empty() && (t[0] == '-' || t[0] == '+')) {
            if (t[0] == '-') sign = -sign;
            t.erase(0, 1);
        }
        std::int64_t factor = 1;
        if (auto star = t.find('*'); star != std::string::npos) {
            factor = Context::to_int("class", t.substr(0, star));
            t = t.substr(star + 1);
        }
        if (t == "0") return;
        auto i = a.find(t);
        if (!i) input_error("unknown DGA basis element " + t);
        out[*i] += sign * factor;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && i > 0 && text[i - 1] != '*') {
            flush(term);
            term.clear();
        }
        term.push_back(text[i]);
    }
    flush(term);
    return a.normalize(out);
}

CohomologyRing ring_source(const Context& ctx, Json& source)
{
    if (auto f = ctx.opt("ring")) {
        source = Json{{"ring", *f}};
        return ring_from_json(json_arg(*f));
    }
    if (auto g = ctx.opt("exterior")) {
        const int gens = Context::to_int("exterior", *g);
        const int deg = ctx.int_or("degree", 1);
        if (gens < 1 || gens > 16) input_error("--exterior expects 1..16 generators");
        source = Json{{"exterior", gens}, {"degree", deg}};
        return exterior_algebra_ring(gens, deg, ctx.coeffs());
    }
    input_error(ctx.c.verb + " needs --ring <file> or --exterior <g>");
}

int status_exit(bool ok) { return ok ? kExitOk : kExitCheckFailed; }

// ---- verbs ---------------------------------------------------------------

int do_eval(const Context& ctx, Json& r)
{
    const PolyhedronTerm t = parse_term(ctx.positional("term"), ctx.atoms());
    const Coefficients k = ctx.coeffs();
    Json atoms = Json::array();
    for (const auto& a : t.atoms()) atoms.push_back(a.name);
    r["term"] = t.str();
    r["coefficients"] = k.name();
    r["bit"] = t.bit();
    r["dim"] = t.dim();
    r["node_count"] = t.node_count();
    r["atoms"] = atoms;
    r["homology"] = to_json(homology_of_term(t, k));
    r["connectivity"] = connectivity_json(connectivity_of_term(t));
    return kExitOk;
}

int do_ring(const Context& ctx, Json& r)
{
    Json source;
    CohomologyRing ring = [&]() -> CohomologyRing {
        if (auto f = ctx.opt("simplicial")) {
            source = Json{{"simplicial", *f}};
            return simplicial_cup_product(simplicial_complex_from_json(json_arg(*f)), ctx.coeffs());
        }
        if (ctx.has("thm3")) {
            Thm3Params p;
            p.n = ctx.req_int("n");
            p.k = ctx.req_int("k");
            p.coeffs = ctx.coeffs();
            p.ranks = parse_rank_vector(ctx.req("ranks"));
            p.a = int_list("a", ctx.opt("a").value_or(""));
            p.a0 = int_list("a0", ctx.opt("a0").value_or(""));
            p.mode = parse_index_mode(ctx.c.index_mode);
            source = Json{{"thm3", {{"n", p.n}, {"k", p.k}, {"ranks", to_json(p.ranks)}, {"a", p.a}, {"a0", p.a0},
                                    {"index_mode", to_string(p.mode)}}}};
            return thm3_ring(p);
        }
        return ring_source(ctx, source);
    }();
    const auto axioms = ring.check_axioms();
    r["source"] = source;
    r["ring"] = to_json(ring);
    r["additive"] = to_json(ring.additive_structure());
    r["axioms"] = check_json("graded commutativity and associativity", axioms ? "fail" : "pass", axioms.value_or(""));
    return status_exit(!axioms);
}

int do_holes(const Context& ctx, Json& r)
{
    const int n = ctx.req_int("n");
    const int k = ctx.int_or("k", 2);
    const HoleSpec spec = hole_spec_from_json(json_arg(ctx.req("holes")));
    const Coefficients a = ctx.coeffs();
    const DiscHomology formula = disc_with_holes_homology(n, k, spec, a);
    const GradedModule oracle = disc_with_holes_oracle(n, spec, a);
    r["n"] = n;
    r["k"] = k;
    r["coefficients"] = a.name();
    r["holes"] = to_json(spec);
    r["homology"] = to_json(formula.homology);
    r["oracle"] = to_json(oracle);
    r["agree"] = formula.homology == oracle;
    r["warnings"] = formula.warnings;
    if (ctx.has("with-ring")) r["ring"] = to_json(ring_from_holes(n, k, spec, a, parse_index_mode(ctx.c.index_mode)));
    return status_exit(formula.homology == oracle);
}

int do_realize(const Context& ctx, Json& r)
{
    const int n = ctx.req_int("n");
    const int k = ctx.int_or("k", 2);
    const RankVector ranks = parse_rank_vector(ctx.req("ranks"));
    const HoleSpec spec = realize_ranks(n, k, ranks);
    const GradedModule h = disc_with_holes_homology(n, k, spec, Coefficients::integers()).homology;
    RankVector back;
    for (const auto& [d, m] : h.by_degree())
        if (d >= 1 && m.free_rank() > 0) back[d] = m.free_rank();
    RankVector wanted;
    for (const auto& [d, v] : ranks)
        if (v != 0) wanted[d] = v;
    r["n"] = n;
    r["k"] = k;
    r["ranks"] = to_json(ranks);
    r["holes"] = to_json(spec);
    r["homology"] = to_json(h);
    r["reproduced"] = back == wanted;
    return status_exit(back == wanted);
}

int do_massey(const Context& ctx, Json& r)
{
    FiniteDGA a(Coefficients::integers());
    std::string u = "x1", v = "x2", w = "x3";
    if (auto f = ctx.opt("dga")) {
        if (!ctx.c.args.empty()) input_error("massey takes either borromean or --dga, not both");
        Json j = json_arg(*f);
        if (!ctx.c.coeff.empty()) j["coefficients"] = ctx.c.coeff;
        a = dga_from_json(j);
        r["dga"] = *f;
        u = ctx.req("u");
        v = ctx.req("v");
        w = ctx.req("w");
    } else {
        if (ctx.positional("fixture name") != "borromean")
            input_error("massey knows the fixture borromean; use --dga <file> for others");
        a = borromean_fixture(ctx.coeffs());
        r["dga"] = "borromean";
        u = ctx.opt("u").value_or(u);
        v = ctx.opt("v").value_or(v);
        w = ctx.opt("w").value_or(w);
    }
    const auto valid = validate_dga(a);
    if (!valid.valid) fail(ErrorKind::structural, "invalid DGA: " + valid.violation);
    MasseyOptions opts;
    const std::string conv = ctx.opt("convention").value_or("standard");
    if (conv == "standard") opts.convention = MasseyConvention::standard;
    else if (conv == "kraines") opts.convention = MasseyConvention::kraines;
    else input_error("--convention expects standard or kraines");
    if (auto s = ctx.opt("seed")) opts.perturb_seed = static_cast<std::uint64_t>(Context::to_int("seed", *s));
    const Combination cu = combination_arg(a, u), cv = combination_arg(a, v), cw = combination_arg(a, w);
    r["coefficients"] = a.coefficients().name();
    r["cohomology"] = to_json(dga_cohomology(a));
    r["classes"] = Json{{"u", combination_json(a, cu)}, {"v", combination_json(a, cv)}, {"w", combination_json(a, cw)}};
    r["convention"] = conv;
    r["massey"] = massey_json(a, triple_massey(a, cu, cv, cw, opts));
    return kExitOk;
}

Json checks_json(const std::vector<NamedCheck>& checks)
{
    Json out = Json::array();
    for (const auto& c : checks) out.push_back(check_json(c.name, c.status, c.detail));
    return out;
}

int do_sgm(const Context& ctx, Json& r)
{
    SgmImage img;
    if (auto f = ctx.opt("image")) {
        img = sgm_image_from_json(json_arg(*f));
    } else if (auto l = ctx.opt("handles")) {
        std::vector<int> ls;
        for (auto v : int_list("handles", *l)) ls.push_back(static_cast<int>(v));
        img = SgmImage::handles(ctx.req_int("n"), ls);
    } else {
        input_error("sgm needs --image <json> or --handles <l1,l2,..> --n <n>");
    }
    const int m = ctx.req_int("m");
    const Coefficients a = ctx.coeffs();
    validate_image(img);
    const GradedModule h = source_homology(img, m, a);
    const GradedModule mv = source_homology_mv(img, m, a);
    std::vector<NamedCheck> checks;
    checks.push_back({"formula = Mayer-Vietoris", h == mv ? "pass" : "fail", ""});
    checks.push_back({"Poincare duality", poincare_duality_holds(h, m) ? "pass" : "fail", ""});
    checks.push_back({"H_0 and H_m of rank one", h.rank(0) == 1 && h.rank(m) == 1 ? "pass" : "fail", ""});
    r["m"] = m;
    r["n"] = img.n;
    r["coefficients"] = a.name();
    r["image"] = to_json(img);
    r["image_homology"] = to_json(image_homology(img, a));
    r["homology"] = to_json(h);
    r["homology_mv"] = to_json(mv);
    if (img.kind == SgmImage::Kind::handles) {
        const GradedModule closed = sphere_product_sum_homology(m, img.l, a);
        r["closed_form"] = to_json(closed);
        checks.push_back({"sphere-product closed form", closed == h ? "pass" : "fail", ""});
    }
    r["checks"] = checks_json(checks);
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.status != "fail";
    return status_exit(ok);
}

int do_check_root(const Context& ctx, Json& r)
{
    const PolyhedronTerm t = parse_term(ctx.positional("term"), ctx.atoms());
    const int n = ctx.req_int("n");
    const int k = ctx.req_int("k");
    const std::string mode_s = ctx.opt("mode").value_or("SEE");
    EmbeddingMode mode;
    if (mode_s == "SEE" || mode_s == "embedded") mode = EmbeddingMode::embedded;
    else if (mode_s == "SIE" || mode_s == "immersed") mode = EmbeddingMode::immersed;
    else input_error("--mode expects SEE or SIE");
    const ClassifierVerdict normal = classify_thm2_normal_form(t, n, k);
    r["term"] = t.str();
    r["n"] = n;
    r["k"] = k;
    r["mode"] = to_string(mode);
    r["classification"] = classify_sie_see(t, mode).label();
    r["connectivity"] = connectivity_json(connectivity_of_term(t));
    r["normal_form"] = verdict_json(normal);
    bool ok = normal.status != VerdictStatus::reject;
    if ((n == 5 || n == 6) && k == 2) {
        const ClassifierVerdict wl = validate_root_thm4_thm5(t.atoms(), n, k, mode);
        r["atom_whitelist"] = verdict_json(wl);
        ok = ok && wl.status != VerdictStatus::reject;
    } else {
        r["atom_whitelist"] = Json{{"status", "not applicable"}, {"witness", ""}, {"reason", "rule stated for (n, k) = (5, 2) and (6, 2) only"}};
    }
    return status_exit(ok);
}

int do_check_thm1(const Context& ctx, Json& r)
{
    Json source;
    const CohomologyRing ring = ring_source(ctx, source);
    const int m = ctx.req_int("m");
    const int n = ctx.req_int("n");
    const Thm1Verdict v = check_thm1_vanishing(ring, m, n, ctx.c.max_factors);
    r["source"] = source;
    r["m"] = m;
    r["n"] = n;
    r["verdict"] = thm1_json(v);
    return status_exit(v.pass);
}

int do_pipeline(const Context& ctx, Json& r)
{
    if (ctx.positional("pipeline name") != "borromean") input_error("the only pipeline is borromean");
    const SourceReport s = main_thm1_pipeline();
    const FiniteDGA fx = borromean_fixture();
    r["m"] = s.m;
    r["n"] = s.n;
    r["image"] = to_json(s.image);
    r["homology"] = to_json(s.homology);
    r["homology_mv"] = to_json(s.homology_mv);
    r["stated_h2_rank"] = kStatedH2Rank;
    r["massey"] = massey_json(fx, s.massey);
    r["thm1"] = thm1_json(s.thm1);
    r["checks"] = checks_json(s.checks);
    r["all_passed"] = s.all_passed();
    return status_exit(s.all_passed());
}

int do_oracle(const Context& ctx, Json& r)
{
    std::vector<Coefficients> rings;
    if (ctx.c.coeff.empty() || ctx.c.coeff == "all")
        rings = {Coefficients::integers(), Coefficients::rationals(), Coefficients::mod_p(2), Coefficients::mod_p(3)};
    else
        rings = {ctx.coeffs()};
    Json results = Json::array();
    bool ok = true;
    auto record = [&](const Coefficients& a, const std::optional<GradedModule>& formula, const GradedModule& oracle) {
        Json row{{"coefficients", a.name()}};
        if (formula) row["formula"] = to_json(*formula);
        row["oracle"] = to_json(oracle);
        if (formula) {
            row["agree"] = *formula == oracle;
            ok = ok && *formula == oracle;
        }
        results.push_back(row);
    };
    if (auto h = ctx.opt("holes")) {
        const int n = ctx.req_int("n");
        const HoleSpec spec = hole_spec_from_json(json_arg(*h));
        r["subject"] = Json{{"n", n}, {"holes", to_json(spec)}};
        for (const auto& a : rings)
            record(a, disc_with_holes_homology(n, ctx.int_or("k", 2), spec, a).homology, disc_with_holes_oracle(n, spec, a));
    } else if (auto f = ctx.opt("complex")) {
        const ChainComplex c = chain_complex_from_json(json_arg(*f));
        r["subject"] = Json{{"complex", *f}, {"ranks", c.ranks()}};
        const auto hs = homology_multi(c, rings);
        for (std::size_t i = 0; i < rings.size(); ++i) record(rings[i], std::nullopt, hs[i]);
    } else if (auto f = ctx.opt("simplicial")) {
        const OrderedSimplicialComplex k = simplicial_complex_from_json(json_arg(*f));
        r["subject"] = Json{{"simplicial", *f}, {"dimension", k.dimension()}};
        const auto hs = homology_multi(k.chain_complex(), rings);
        for (std::size_t i = 0; i < rings.size(); ++i) record(rings[i], std::nullopt, hs[i]);
    } else {
        const PolyhedronTerm t = parse_term(ctx.positional("term"), ctx.atoms());
        const ChainComplex model = term_chain_model(t);
        r["subject"] = Json{{"term", t.str()}, {"cells", model.total_cells()}};
        const auto hs = homology_multi(model, rings);
        for (std::size_t i = 0; i < rings.size(); ++i) record(rings[i], homology_of_term(t, rings[i]), hs[i]);
    }
    r["results"] = results;
    return status_exit(ok);
}

using Handler = int (*)(const Context&, Json&);

Handler handler_for(const std::string& verb)
{
    static const std::map<std::string, Handler> table{
        {"eval", do_eval},       {"ring", do_ring},           {"holes", do_holes},
        {"realize", do_realize}, {"massey", do_massey},       {"sgm", do_sgm},
        {"check-root", do_check_root}, {"check-thm1", do_check_thm1}, {"pipeline", do_pipeline},
        {"oracle", do_oracle}};
    auto it = table.find(verb);
    return it == table.end() ? nullptr : it->second;
}

}  // namespace

RunResult run(const Command& c)
{
    RunResult out;
    out.report = Json{{"verb", c.verb}};
    auto error = [&](const std::string& kind, const std::string& message, const std::string& clause) {
        out.exit_code = kExitInputError;
        out.report["status"] = "error";
        out.report["error"] = Json{{"kind", kind}, {"message", message}, {"clause", clause}};
    };
    const Handler h = handler_for(c.verb);
    if (!h) {
        error("unknown_verb", "unknown verb \"" + c.verb + "\"", "");
    } else {
        try {
            Json body = Json::object();
            out.exit_code = h(Context{c}, body);
            out.report["status"] = out.exit_code == kExitOk ? "ok" : "check failed";
            for (auto& [k, v] : body.items()) out.report[k] = v;
        } catch (const Error& e) {
            error(to_string(e.kind()), e.what(), e.clause());
        } catch (const nlohmann::json::exception& e) {
            error("json", e.what(), "");
        } catch (const std::invalid_argument& e) {
            error("invalid_argument", e.what(), "");
        } catch (const std::out_of_range& e) {
            error("out_of_range", e.what(), "");
        }
    }
    out.output = c.json ? out.report.dump(2) + "\n" : render_text(out.report);
    return out;
}

}  // namespace sgm::cli

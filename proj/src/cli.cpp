#include "fsw/cli.hpp"

#include "fsw/adgraph.hpp"
#include "fsw/afsw.hpp"
#include "fsw/dsl.hpp"
#include "fsw/hirzebruch.hpp"
#include "fsw/switching.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace fsw::cli {

namespace {

using nlohmann::json;

// Machine envelope: sorted keys, exact rationals rendered as "p/q".
struct Envelope {
    std::string command;
    json inputs = json::object();
    json result;
    std::vector<std::string> warnings;

    json to_json() const {
        json j;
        j["schema"] = 1;
        j["command"] = command;
        j["inputs"] = inputs;
        j["result"] = result;
        j["warnings"] = warnings;
        return j;
    }
};

json class_json(const GradedClass& c) {
    json terms = json::array();
    for (const auto& [m, coeff] : c.terms()) {
        json t;
        t["monomial"] = c.ring()->monomial_string(m);
        t["coeff"] = to_fraction_string(coeff);
        t["degree"] = c.ring()->monomial_degree(m);
        terms.push_back(t);
    }
    json j;
    j["terms"] = terms;
    j["text"] = c.str();
    return j;
}

json graph_json(const AdmissibleGraph& g) {
    json edges = json::array();
    for (const auto& [p, c] : g.edges())
        edges.push_back(json::array({p, c}));
    json j;
    j["n"] = g.n();
    j["edges"] = edges;
    return j;
}

AdmissibleGraph graph_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("n"))
        throw Error("graph must be JSON of the form {\"n\": N, \"edges\": [[p, c], ...]}");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j["edges"])
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return AdmissibleGraph(j["n"].get<int>(), edges);
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw Error(std::string(what) + ": expected a comma-separated integer list");
        }
    }
    if (out.empty())
        throw Error(std::string(what) + ": empty list");
    return out;
}

void emit(std::ostream& out, bool as_json, const Envelope& env,
          const std::string& human) {
    if (as_json) {
        out << env.to_json().dump() << "\n";
    } else {
        out << human;
        for (const auto& w : env.warnings)
            out << "warning: " << w << "\n";
    }
}

// ---- switch ----------------------------------------------------------------

int run_switch(long long m, int n, int k, bool with_u, int trunc, bool as_json,
               std::ostream& out) {
    SwitchProblem problem{m, n, k, std::nullopt};
    RingPtr ring;
    if (with_u) {
        ring = make_ring({{"u1", 1}, {"u2", 1}, {"l", 1}}, trunc);
        problem.base = SwitchBase{
            BundleSymbol::with_roots("U", {GradedClass::generator(ring, "u1"),
                                           GradedClass::generator(ring, "u2")}),
            LineTwist{"sqrt(L0)", GradedClass::generator(ring, "l")}};
    }
    SwitchReport report = analyze(problem);

    Envelope env;
    env.command = "switch";
    env.inputs = {{"m", m}, {"n", n}, {"k", k}, {"with_u", with_u}, {"trunc", trunc}};
    json steps = json::array();
    for (const auto& s : report.steps) {
        json js;
        js["p"] = s.p;
        js["delta"] = s.delta;
        js["kind"] = to_string(s.kind);
        js["piece_rank"] = s.piece_rank;
        if (s.sym_exponent)
            js["sym_exponent"] = *s.sym_exponent;
        steps.push_back(js);
    }
    env.result["steps"] = steps;
    env.result["virtual_rank"] = report.virtual_rank;
    env.result["v_class"] = report.v_class.str();
    if (report.chern_of_v)
        env.result["chern_of_v"] = class_json(*report.chern_of_v);
    if (with_u) {
        json pieces = json::array();
        for (const auto& piece : decompose_sym(problem)) {
            json jp;
            jp["p"] = piece.p;
            jp["sign"] = piece.sign;
            jp["exponent"] = piece.exponent;
            jp["dual"] = piece.dual;
            jp["twist"] = piece.twist;
            pieces.push_back(jp);
        }
        env.result["sym_decomposition"] = pieces;
    }

    std::ostringstream human;
    human << "switch m=" << m << " n=" << n << " k=" << k << "\n";
    for (const auto& s : report.steps) {
        human << "  p=" << s.p << "  delta=" << s.delta << "  kind=" << to_string(s.kind)
              << "  rank=" << s.piece_rank;
        if (s.sym_exponent)
            human << "  sym_exponent=" << *s.sym_exponent;
        human << "\n";
    }
    human << "virtual_rank = " << report.virtual_rank << "\n";
    human << "V = " << report.v_class.str() << "\n";
    if (report.chern_of_v)
        human << "c(V) = " << report.chern_of_v->str() << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

// ---- hirzebruch ------------------------------------------------------------

int run_hirzebruch(const std::string& which, int n, long long a, long long b, bool as_json,
                   std::ostream& out) {
    Envelope env;
    env.command = "hirzebruch " + which;
    std::ostringstream human;
    if (which == "chooseb") {
        ChooseB r = choose_b(a, n);
        env.inputs = {{"a", a}, {"n", n}};
        env.result["b"] = r.b;
        env.result["delta"] = {{"n", r.delta.n}, {"a", r.delta.a}, {"b", r.delta.b}};
        env.result["recipe_ok"] = r.recipe_ok;
        if (!r.warning.empty())
            env.warnings.push_back(r.warning);
        human << "b = " << r.b << "  delta = " << r.delta.str()
              << "  recipe_ok = " << (r.recipe_ok ? "true" : "false") << "\n";
    } else {
        FnDivisor d{n, a, b};
        env.inputs = {{"n", n}, {"a", a}, {"b", b}};
        long long value = 0;
        if (which == "h0")
            value = h0(d);
        else if (which == "h1")
            value = h1(d);
        else if (which == "h2")
            value = h2(d);
        else
            value = chi(d);
        env.result = value;
        human << value << "\n";
    }
    emit(out, as_json, env, human.str());
    return 0;
}

// ---- afsw ------------------------------------------------------------------

int run_afsw_pure(int dimb, int q, int rankv, int rankw, long long selfint, long long kpair,
                  int pg, int febd, bool have_family, bool as_json, std::ostream& out) {
    FamilyData fam;
    fam.dimB = dimb;
    fam.q = q;
    if (have_family) {
        fam.selfint = selfint;
        fam.kpair = kpair;
        fam.pg = pg;
        fam.febd = febd;
    } else {
        // Minimal family data consistent with the rank relation.
        fam.pg = 0;
        fam.febd = 0;
        fam.kpair = 0;
        fam.selfint = 2LL * (rankv - rankw + q - 1);
    }

    const int trunc = dimb + q;
    std::vector<Generator> gens;
    for (int i = 1; i <= rankv; ++i)
        gens.push_back({"v" + std::to_string(i), i});
    for (int i = 1; i <= rankw; ++i)
        gens.push_back({"w" + std::to_string(i), i});
    RingPtr ring = make_ring(gens, std::max(trunc, 1));
    auto formal = [&](const std::string& prefix, int rank) {
        std::vector<GradedClass> classes;
        for (int i = 1; i <= rank; ++i)
            classes.push_back(GradedClass::generator(ring, prefix + std::to_string(i)));
        return BundleSymbol::with_formal(prefix == "v" ? "V" : "W", std::move(classes));
    };
    KuranishiModel model{formal("v", rankv), formal("w", rankw)};
    GradedClass result = afsw_pure(model, fam);

    Envelope env;
    env.command = "afsw pure";
    env.inputs = {{"dimb", dimb}, {"q", q},           {"rankv", rankv}, {"rankw", rankw},
                  {"selfint", fam.selfint}, {"kpair", fam.kpair}, {"pg", fam.pg},
                  {"febd", fam.febd}};
    env.result = class_json(result);
    if (!have_family)
        env.warnings.push_back("family data defaulted to satisfy the rank relation");
    std::ostringstream human;
    human << "c_{dimB+q}(W - V) = " << result.str() << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

int run_afsw_ksteps(const std::string& degs_text, bool as_json, std::ostream& out) {
    std::vector<long long> degs = parse_int_list(degs_text, "--degs");
    auto steps = decompose_ksteps(static_cast<int>(degs.size()), degs);

    Envelope env;
    env.command = "afsw ksteps";
    env.inputs = {{"degs", degs}};
    json list = json::array();
    std::ostringstream human;
    for (const auto& s : steps) {
        const char* cls = s.cls == KStepClass::R0 ? "R0"
                          : s.cls == KStepClass::ZeroTerm ? "ZERO"
                                                          : "-R1";
        json js;
        js["p"] = s.p;
        js["class"] = cls;
        js["rank"] = s.rank;
        list.push_back(js);
        human << "  p=" << s.p << "  " << cls << "  rank=" << s.rank << "\n";
    }
    env.result["steps"] = list;
    env.result["virtual_rank"] = ksteps_virtual_rank(steps);
    human << "virtual_rank = " << ksteps_virtual_rank(steps) << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

int run_afsw_zero(long long esq, long long edotk, long long edotc, bool as_json,
                  std::ostream& out) {
    long long gap = prop_zero_gap(esq, edotk, edotc);
    Envelope env;
    env.command = "afsw zero";
    env.inputs = {{"esq", esq}, {"edotk", edotk}, {"edotc", edotc}};
    env.result = gap;
    std::ostringstream human;
    human << gap << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

// ---- graphs ----------------------------------------------------------------

PairingContext context_from(const std::string& m_text, int n, long long selfint,
                            long long kpair) {
    PairingContext ctx;
    ctx.m = parse_int_list(m_text, "--m");
    if (static_cast<int>(ctx.m.size()) != n)
        throw Error("--m: need one multiplicity per vertex");
    ctx.c_selfint = selfint;
    ctx.c_kpair = kpair;
    return ctx;
}

int run_graphs_enumerate(int n, bool as_json, std::ostream& out) {
    auto graphs = enumerate_admissible(n);
    Envelope env;
    env.command = "graphs enumerate";
    env.inputs = {{"n", n}};
    json list = json::array();
    for (const auto& g : graphs)
        list.push_back(graph_json(g));
    env.result["count"] = graphs.size();
    env.result["graphs"] = list;
    std::ostringstream human;
    human << graphs.size() << " admissible graphs on " << n << " vertices\n";
    for (const auto& g : graphs)
        human << "  " << g.str() << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

int run_graphs_compare(const std::string& g_text, const std::string& g2_text,
                       const std::string& m_text, long long selfint, long long kpair,
                       bool as_json, std::ostream& out) {
    AdmissibleGraph g = graph_from_json(g_text);
    AdmissibleGraph g2 = graph_from_json(g2_text);
    if (g.n() != g2.n())
        throw Error("graphs must share the vertex count");
    PairingContext ctx = context_from(m_text, g.n(), selfint, kpair);

    Envelope env;
    env.command = "graphs compare";
    env.inputs = {{"g", graph_json(g)}, {"g2", graph_json(g2)}, {"m", ctx.m},
                  {"selfint", selfint}, {"kpair", kpair}};
    env.result["gt"] = partial_gt(g, g2);
    env.result["sqsupset"] = partial_sqsupset(g, g2, ctx);
    env.result["gg"] = partial_gg(g, g2, ctx);
    env.result["special_condition_g"] = special_condition(g, ctx);
    env.result["negative_set_g"] = negative_set(g, ctx);
    env.result["negative_set_g2"] = negative_set(g2, ctx);
    env.result["codim_g"] = codim(g);
    env.result["codim_g2"] = codim(g2);
    std::ostringstream human;
    human << "gt = " << (partial_gt(g, g2) ? "true" : "false")
          << ", sqsupset = " << (partial_sqsupset(g, g2, ctx) ? "true" : "false")
          << ", gg = " << (partial_gg(g, g2, ctx) ? "true" : "false") << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

int run_graphs_interpolate(const std::string& g_text, const std::string& g2_text,
                           const std::string& m_text, long long selfint, long long kpair,
                           bool as_json, std::ostream& out) {
    AdmissibleGraph g = graph_from_json(g_text);
    AdmissibleGraph g2 = graph_from_json(g2_text);
    if (g.n() != g2.n())
        throw Error("graphs must share the vertex count");
    PairingContext ctx = context_from(m_text, g.n(), selfint, kpair);
    AdmissibleGraph mid = find_intermediate(g, g2, ctx);

    Envelope env;
    env.command = "graphs interpolate";
    env.inputs = {{"g", graph_json(g)}, {"g2", graph_json(g2)}, {"m", ctx.m},
                  {"selfint", selfint}, {"kpair", kpair}};
    env.result["intermediate"] = graph_json(mid);
    env.result["sqsupset_g_mid"] = partial_sqsupset(g, mid, ctx);
    env.result["gg_or_equal_mid_g2"] = partial_gg_or_equal(mid, g2, ctx);
    std::ostringstream human;
    human << "intermediate = " << mid.str() << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

// ---- eval ------------------------------------------------------------------

struct Binding {
    std::string name;
    int rank = 0;
    std::vector<std::string> root_names;
};

Binding parse_binding(const std::string& text) {
    // name=rank<k>[:roots a,b,...]
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw Error("--bind: expected name=rank<k>[:a,b,...]");
    Binding b;
    b.name = text.substr(0, eq);
    std::string rest = text.substr(eq + 1);
    if (rest.rfind("rank", 0) != 0)
        throw Error("--bind: expected 'rank<k>' after '='");
    auto colon = rest.find(':');
    std::string rank_text = colon == std::string::npos ? rest.substr(4) : rest.substr(4, colon - 4);
    try {
        b.rank = std::stoi(rank_text);
    } catch (const std::exception&) {
        throw Error("--bind: bad rank '" + rank_text + "'");
    }
    if (b.rank < 0)
        throw Error("--bind: rank must be non-negative");
    if (colon != std::string::npos) {
        std::stringstream ss(rest.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                b.root_names.push_back(item);
        if (static_cast<int>(b.root_names.size()) != b.rank)
            throw Error("--bind: got " + std::to_string(b.root_names.size()) + " roots for rank " +
                        std::to_string(b.rank));
    }
    return b;
}

int run_eval(const std::string& text, const std::vector<std::string>& binding_texts, int trunc,
             bool as_json, std::ostream& out) {
    std::vector<Binding> bindings;
    std::vector<Generator> gens;
    for (const auto& bt : binding_texts) {
        Binding b = parse_binding(bt);
        for (const auto& r : b.root_names)
            gens.push_back({r, 1});
        bindings.push_back(std::move(b));
    }
    if (!gens.empty() && trunc < 1)
        throw Error("--trunc: root generators need a truncation of at least 1");
    RingPtr ring = make_ring(gens, trunc);

    dsl::Environment env_dsl;
    env_dsl.ring = ring;
    for (const auto& b : bindings) {
        if (!b.root_names.empty()) {
            std::vector<GradedClass> roots;
            for (const auto& r : b.root_names) {
                roots.push_back(GradedClass::generator(ring, r));
                env_dsl.bindings.emplace(r, roots.back());
            }
            env_dsl.bindings.emplace(b.name,
                                     KClass::of(BundleSymbol::with_roots(b.name, roots)));
        } else {
            env_dsl.bindings.emplace(b.name,
                                     KClass::of(BundleSymbol::trivial(ring, b.rank, b.name)));
        }
    }

    dsl::ExprPtr expr = dsl::parse(text);
    dsl::Value value = dsl::eval(*expr, env_dsl);

    Envelope env;
    env.command = "eval";
    env.inputs = {{"expr", text}, {"bind", binding_texts}, {"trunc", trunc}};
    if (const auto* g = std::get_if<GradedClass>(&value))
        env.result = class_json(*g);
    else
        env.result = dsl::value_string(value);
    std::ostringstream human;
    human << dsl::value_string(value) << "\n";
    emit(out, as_json, env, human.str());
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic switching-formula calculus for -n exceptional rational curves"};
    app.fallthrough(); // subcommands pass --json up to the main app
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON envelope");

    // switch
    auto* sw = app.add_subcommand("switch", "per-step switching analysis");
    long long sw_m = 0;
    int sw_n = 1, sw_k = 1, sw_trunc = 6;
    bool sw_with_u = false;
    sw->add_option("--m", sw_m, "fiberwise degree of L along C")->required();
    sw->add_option("--n", sw_n, "-C.C fiberwise (>= 1)")->required();
    sw->add_option("--k", sw_k, "switch multiplicity (>= 1)")->required();
    sw->add_flag("--with-u", sw_with_u, "adjoin C = P(U) base data (ring Q[u1,u2,l])");
    sw->add_option("--trunc", sw_trunc, "ring truncation for --with-u (default 6)");

    // hirzebruch
    auto* hz = app.add_subcommand("hirzebruch", "line-bundle cohomology on F_n");
    int hz_n = 1;
    long long hz_a = 0, hz_b = 0;
    std::string hz_which;
    for (const char* name : {"h0", "h1", "h2", "chi"}) {
        auto* sub = hz->add_subcommand(name, std::string("compute ") + name + " of aF + bC-");
        sub->add_option("--n", hz_n, "surface index (>= 1)")->required();
        sub->add_option("--a", hz_a, "coefficient of F")->required();
        sub->add_option("--b", hz_b, "coefficient of C-")->required();
        sub->callback([&hz_which, name] { hz_which = name; });
    }
    auto* hz_cb = hz->add_subcommand("chooseb", "vanishing twist chooser");
    hz_cb->add_option("--a", hz_a, "degree a (a + n even)")->required();
    hz_cb->add_option("--n", hz_n, "surface index (>= 1)")->required();
    hz_cb->callback([&hz_which] { hz_which = "chooseb"; });
    hz->require_subcommand(1);

    // afsw
    auto* af = app.add_subcommand("afsw", "algebraic-family reductions");
    auto* af_pure = af->add_subcommand("pure", "c_{dimB+q}(W - V) for formal ranks");
    int af_dimb = 0, af_q = 0, af_rankv = 1, af_rankw = 1, af_pg = 0, af_febd = 0;
    long long af_selfint = 0, af_kpair = 0;
    af_pure->add_option("--dimb", af_dimb, "dim_C B")->required();
    af_pure->add_option("--q", af_q, "irregularity")->required();
    af_pure->add_option("--rankv", af_rankv, "rank of V")->required();
    af_pure->add_option("--rankw", af_rankw, "rank of W")->required();
    auto* opt_selfint = af_pure->add_option("--selfint", af_selfint, "C.C");
    af_pure->add_option("--kpair", af_kpair, "C.K_{X/B}")->needs(opt_selfint);
    af_pure->add_option("--pg", af_pg, "geometric genus")->needs(opt_selfint);
    af_pure->add_option("--febd", af_febd, "formal excess base dimension")->needs(opt_selfint);
    auto* af_ksteps = af->add_subcommand("ksteps", "k-step K-class decomposition");
    std::string af_degs;
    af_ksteps->add_option("--degs", af_degs, "comma-separated degrees, one per step")->required();
    auto* af_zero = af->add_subcommand("zero", "dimension-gap of the vanishing criterion");
    long long af_esq = 0, af_edotk = 0, af_edotc = 0;
    af_zero->add_option("--esq", af_esq, "e.e")->required();
    af_zero->add_option("--edotk", af_edotk, "e.K")->required();
    af_zero->add_option("--edotc", af_edotc, "e.(C - M(E)E)")->required();
    af->require_subcommand(1);

    // graphs
    auto* gr = app.add_subcommand("graphs", "admissible graph orderings");
    auto* gr_enum = gr->add_subcommand("enumerate", "all admissible graphs on n vertices");
    int gr_n = 1;
    gr_enum->add_option("--n", gr_n, "vertex count (<= 7)")->required();
    std::string gr_g, gr_g2, gr_m;
    long long gr_selfint = 0, gr_kpair = 0;
    auto* gr_cmp = gr->add_subcommand("compare", "evaluate the partial orders");
    auto* gr_int = gr->add_subcommand("interpolate", "find the intermediate graph");
    for (auto* sub : {gr_cmp, gr_int}) {
        sub->add_option("--g", gr_g, "graph JSON {\"n\":N,\"edges\":[[p,c],...]}")->required();
        sub->add_option("--g2", gr_g2, "second graph JSON")->required();
        sub->add_option("--m", gr_m, "comma-separated multiplicities")->required();
        sub->add_option("--selfint", gr_selfint, "C.C (default 0)");
        sub->add_option("--kpair", gr_kpair, "C.K_M (default 0)");
    }
    gr->require_subcommand(1);

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a class expression");
    std::string ev_expr;
    std::vector<std::string> ev_binds;
    int ev_trunc = 6;
    ev->add_option("expr", ev_expr, "expression, e.g. \"grade(c(V)*s(W), 2)\"")->required();
    ev->add_option("--bind", ev_binds,
                   "binding name=rank<k>[:roots a,b,...]; roots become degree-1 generators");
    ev->add_option("--trunc", ev_trunc, "ring truncation (default 6)");

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> raw;
        raw.push_back("fswcalc");
        for (const auto& a : argv)
            raw.push_back(a.c_str());
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sw->parsed())
            return run_switch(sw_m, sw_n, sw_k, sw_with_u, sw_trunc, as_json, out);
        if (hz->parsed())
            return run_hirzebruch(hz_which, hz_n, hz_a, hz_b, as_json, out);
        if (af->parsed()) {
            if (af_pure->parsed())
                return run_afsw_pure(af_dimb, af_q, af_rankv, af_rankw, af_selfint, af_kpair,
                                     af_pg, af_febd, opt_selfint->count() > 0, as_json, out);
            if (af_ksteps->parsed())
                return run_afsw_ksteps(af_degs, as_json, out);
            return run_afsw_zero(af_esq, af_edotk, af_edotc, as_json, out);
        }
        if (gr->parsed()) {
            if (gr_enum->parsed())
                return run_graphs_enumerate(gr_n, as_json, out);
            if (gr_cmp->parsed())
                return run_graphs_compare(gr_g, gr_g2, gr_m, gr_selfint, gr_kpair, as_json, out);
            return run_graphs_interpolate(gr_g, gr_g2, gr_m, gr_selfint, gr_kpair, as_json, out);
        }
        return run_eval(ev_expr, ev_binds, ev_trunc, as_json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fsw::cli

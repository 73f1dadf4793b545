#include "godeaux/commands.hpp"

#include "godeaux/embedded.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace godeaux {

using json = nlohmann::ordered_json;

const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::Negative: return "negative";
        case Status::Error: return "error";
    }
    return "?";
}

int Report::exit_code() const {
    switch (status) {
        case Status::Ok: return 0;
        case Status::Negative: return 1;
        case Status::Error: return 2;
    }
    return 2;
}

std::string Report::text() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["task"] = task;
    j["status"] = status_name(status);
    j["data"] = data;
    j["witnesses"] = witnesses;
    return j.dump(2) + "\n";
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string embedded_or_throw(const std::string& name) {
    auto t = embedded_file(name);
    if (!t) throw DomainError("no embedded file " + name);
    return *t;
}

json curve_json(const PlaneCurve& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back({c.str(), m.ex, m.ey, m.ez});
    return json{{"degree", f.degree()}, {"terms", terms}};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string l;
    while (std::getline(in, l)) out.push_back(l);
    return out;
}

int require_degree(const SceneFile& s) {
    if (!s.degree) throw DomainError("the scene declares no degree");
    return *s.degree;
}

LinearSystem scene_system(const SceneFile& s, const CommandOptions& opt) {
    return assemble(require_degree(s), s.scheme(), s.symmetry_for(opt.eigenspace));
}

// Full scheme of the declared items, symmetry images included.
Scheme full_scheme(const SceneFile& s, const CommandOptions& opt) { return s.full_scheme(opt.eigenspace); }

// Dimension with the optional mod-p prefilter: an empty reduction certifies
// an empty system.
int system_dimension(const LinearSystem& ls, const CommandOptions& opt, Report& r) {
    if (opt.modp) {
        auto dp = dimension_mod_p(ls, opt.modp);
        if (dp) {
            r.data["modp"] = {{"prime", opt.modp}, {"dimension_bound", *dp}};
            r.say("dimension mod " + std::to_string(opt.modp) + ": " + std::to_string(*dp) + " (upper bound)");
            if (*dp == -1) {
                r.say("empty mod " + std::to_string(opt.modp) + ", so empty over the field");
                return -1;
            }
        } else {
            r.say("prime " + std::to_string(opt.modp) + " not usable for this system; exact elimination only");
        }
    }
    return dimension(ls);
}

void describe_system(const SceneFile& s, const LinearSystem& ls, Report& r) {
    r.data["degree"] = ls.degree;
    r.data["unknowns"] = ls.matrix.cols();
    r.data["conditions"] = ls.matrix.rows();
    if (ls.symmetry) r.data["eigenspace"] = ls.symmetry->plus ? "plus" : "minus";
    if (!s.parametric_point().empty()) r.data["excluded"] = s.parametric_point();
    r.data["virtual_dimension"] = virtual_dimension(ls.degree, ls.full_scheme);
}

std::string chain_actual(const ChainReport& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.actual.size(); ++i) out += (i ? "," : "") + std::to_string(c.actual[i]);
    return out + "]";
}

std::string passed(bool b) { return b ? "pass" : "FAIL"; }

std::string point_list(const std::vector<SingularCandidate>& cs) {
    std::string out;
    for (const auto& c : cs) out += (out.empty() ? "" : "; ") + c.str();
    return out.empty() ? "none" : out;
}

// Verification of a curve against a scheme, shared by verify and reproduce.
bool verify_into(const PlaneCurve& f, int degree, const Scheme& scheme, const CommandOptions& opt, Report& r,
                 bool scan_singularities = true) {
    bool ok = true;
    if (f.degree() != degree) {
        r.negative("curve has degree " + std::to_string(f.degree()) + ", expected " + std::to_string(degree));
        return false;
    }
    SchemeReport rep = verify_scheme(f, scheme);
    json items = json::array();
    for (std::size_t i = 0; i < rep.items.size(); ++i) {
        const auto& c = rep.items[i];
        r.say(rep.names[i] + " " + scheme[i].point.str() + " " + scheme[i].chain.str() + ": " + verdict_name(c.verdict) +
              " (actual " + chain_actual(c) + ")" + (c.detail.empty() ? "" : " " + c.detail));
        items.push_back({{"name", rep.names[i]},
                         {"point", scheme[i].point.str()},
                         {"chain", scheme[i].chain.str()},
                         {"verdict", verdict_name(c.verdict)},
                         {"actual", c.actual},
                         {"tangent_cone", c.tangent_cone},
                         {"detail", c.detail}});
        if (c.verdict != Verdict::Exact) ok = false;
    }
    r.data["items"] = items;
    r.data["exact"] = rep.exact();
    if (!rep.exact()) r.negative("scheme not satisfied exactly");
    else r.say("all " + std::to_string(rep.items.size()) + " items EXACT");
    const bool sf = is_squarefree(f);
    r.data["squarefree"] = sf;
    if (!sf) {
        r.negative("curve is not reduced");
        return false;
    }
    try {
        int g = geometric_genus(degree, scheme);
        r.data["genus_declared"] = g;
        r.say("genus from the declared singularities: " + std::to_string(g));
    } catch (const DomainError& e) {
        r.say(e.what());
    }
    if (opt.quick) return ok;
    FactorCountOptions fo;
    fo.prime = opt.modp;
    int n = absolute_factor_count(f, fo);
    r.data["absolute_factors"] = n;
    r.say("absolutely irreducible factors: " + std::to_string(n));
    if (!scan_singularities) return ok;
    std::vector<ProjPoint> hints;
    for (const auto& it : scheme.items()) hints.push_back(it.point);
    auto scan = singular_locus_scan(f, hints);
    std::vector<SingularCandidate> extra;
    for (const auto& c : scan)
        if (!c.located() || scheme.find(c.point) < 0) extra.push_back(c);
    json ex = json::array();
    for (const auto& c : extra) ex.push_back(c.str());
    r.data["further_singularities"] = ex;
    r.say("singular points off the scheme: " + point_list(extra));
    return ok;
}

void resolution_into(const Resolution& res, Report& r) {
    r.data["branch_degree"] = 2 * res.k;
    r.data["chi"] = res.chi;
    r.data["K2_cover"] = res.K2;
    r.data["chi_noether"] = res.chi_noether;
    json centers = json::array();
    for (int i = 0; i < res.tree.size(); ++i) {
        centers.push_back({{"name", res.tree.centers[i].name},
                           {"m", res.ledger.m[i]},
                           {"d", res.ledger.d[i]},
                           {"joins_branch", static_cast<bool>(res.ledger.joins[i])}});
    }
    r.witnesses["centers"] = centers;
    r.say("chi " + std::to_string(res.chi) + ", Ksq_cover " + std::to_string(res.K2));
    r.say("Noether check (K^2 + e)/12 = " + std::to_string(res.chi_noether));
    std::string led;
    for (int i = 0; i < res.tree.size(); ++i)
        led += (i ? ", " : "") + res.tree.centers[i].name + " m=" + std::to_string(res.ledger.m[i]) + " d=" +
               std::to_string(res.ledger.d[i]);
    r.say("centers: " + led);
}

void selfcheck_into(const SelfCheckReport& sc, Report& r) {
    json checks = json::array();
    for (const auto& c : sc.checks) {
        r.say("self-check " + c.name + ": " + passed(c.passed) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    r.data["selfcheck"] = checks;
    r.witnesses["D"] = sc.D.str();
    r.witnesses["B0"] = sc.B0.str();
    json cs = json::array();
    for (const auto& c : sc.C) cs.push_back(c.str());
    r.witnesses["C"] = cs;
    if (!sc.passed()) r.negative("divisor self-check failed");
}

int component_curve_degree(const SceneFile& s) {
    for (const auto& c : s.components)
        if (c.line_name.empty()) return c.degree;
    return require_degree(s);
}

void torsion_into(const DuValConfig& cfg, const CommandOptions& opt, Report& r) {
    TorsionResult tr = duval_torsion(cfg);
    r.data["torsion"] = torsion_name(tr.torsion);
    r.data["octic_dimension"] = tr.dimension;
    r.data["residual_degree"] = tr.residual_degree;
    r.say("torsion " + std::string(torsion_name(tr.torsion)));
    r.say("degree-8 system: residual degree " + std::to_string(tr.residual_degree) + ", dimension " +
          std::to_string(tr.dimension));
    json sols = json::array();
    for (const auto& s : tr.solutions) {
        sols.push_back(curve_json(s));
        r.say("octic: " + s.str());
    }
    r.witnesses["octics"] = sols;
    json hyp = json::array();
    bool all = true;
    for (const auto& h : tr.hypotheses) {
        r.say("hypothesis " + h.name + ": " + passed(h.passed) + (h.detail.empty() ? "" : " (" + h.detail + ")"));
        hyp.push_back({{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
        all = all && h.passed;
    }
    r.data["hypotheses"] = hyp;
    int t2 = beauville_tors2(duval_branch_classes(cfg));
    r.data["tors2"] = t2;
    r.say("tors2 " + std::to_string(t2));
    if (!all) r.negative("a hypothesis of the torsion criterion fails");
    if (opt.quick) return;
    CampedelliResult cp = campedelli_obstruction(cfg);
    r.data["campedelli"] = campedelli_name(cp.verdict);
    r.data["cubic_factors"] = cp.factor_count;
    r.witnesses["cubic"] = curve_json(cp.cubic);
    json irr = json::array();
    for (const auto& c : cp.irrelevant) irr.push_back(c.str());
    r.witnesses["irrelevant"] = irr;
    r.say("campedelli " + std::string(campedelli_name(cp.verdict)) + ": cubic " + cp.cubic.str() + ", " +
          std::to_string(cp.factor_count) + " absolute factor(s)");
    r.say("irrelevant singular points: " + point_list(cp.irrelevant));
    if (!cp.detail.empty()) r.say(cp.detail);
}

std::string join_degrees(const std::vector<int>& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? " + " : "") + std::to_string(ds[i]);
    return out.empty() ? "0" : out;
}

std::vector<int> proper_degrees(const LocusResult& res) {
    std::vector<int> ds;
    for (const auto& f : res.factors)
        if (!f.degenerate && f.certified) ds.push_back(zpoly::degree(f.poly));
    std::sort(ds.begin(), ds.end());
    return ds;
}

LocusResult locus_into(const SceneFile& s, const CommandOptions& opt, Report& r) {
    ParamScheme ps = s.param_scheme();
    LocusOptions lo;
    lo.threads = std::max(1, opt.threads);
    LocusResult res = rank_drop_locus(require_degree(s), ps, lo);
    r.data["moving_point"] = ps.name;
    r.data["everything"] = res.everything;
    json facs = json::array();
    for (const auto& f : res.factors) {
        std::string p = zpoly::to_unipoly(f.poly).str("t");
        facs.push_back({{"factor", p},
                        {"degree", zpoly::degree(f.poly)},
                        {"multiplicity", f.multiplicity},
                        {"degenerate", f.degenerate},
                        {"reason", f.reason},
                        {"certified", f.certified}});
        r.say("factor (" + p + ")^" + std::to_string(f.multiplicity) + ": " +
              (f.degenerate ? "degenerate, " + f.reason : (f.certified ? "proper" : "not certified")));
    }
    r.witnesses["factors"] = facs;
    if (res.everything) {
        r.say("solvable for every parameter value");
        return res;
    }
    UniPoly p = res.proper_locus();
    auto ds = proper_degrees(res);
    r.data["proper_degree"] = std::max(p.degree(), 0);
    r.data["proper_factor_degrees"] = ds;
    r.witnesses["p"] = p.str("t");
    if (p.degree() <= 0) r.negative("p(t): empty, no parameter value gives a proper solution");
    else r.say("p(t): degree " + std::to_string(p.degree()) + " = " + join_degrees(ds));
    return res;
}

}  // namespace

PlaneCurve scene_curve(const SceneFile& s, const CommandOptions& opt) {
    if (!opt.curve_path.empty()) return read_curve_text(slurp(opt.curve_path), s.field);
    if (s.curve) {
        const std::string& c = *s.curve;
        if (c.rfind("golden:", 0) == 0) return read_curve_text(embedded_or_throw("golden/" + c.substr(7) + ".txt"), s.field);
        std::filesystem::path p(c);
        if (p.is_relative()) p = std::filesystem::path(opt.scene_dir) / p;
        return read_curve_text(slurp(p.string()), s.field);
    }
    LinearSystem ls = scene_system(s, opt);
    int d = dimension(ls);
    if (d != 0)
        throw DomainError("no curve given and the system has dimension " + std::to_string(d) + " (needs 0)");
    return solve_unique(ls);
}

Report cmd_dim(const SceneFile& s, const CommandOptions& opt) {
    Report r;
    r.task = "dim";
    LinearSystem ls = scene_system(s, opt);
    describe_system(s, ls, r);
    int d = system_dimension(ls, opt, r);
    r.data["dimension"] = d;
    r.lines.insert(r.lines.begin(), "dimension " + std::to_string(d));
    r.say("virtual dimension " + std::to_string(virtual_dimension(ls.degree, ls.full_scheme)) + " (" +
          std::to_string(ls.matrix.rows()) + " conditions on " + std::to_string(ls.matrix.cols()) + " coefficients)");
    if (!s.parametric_point().empty()) r.say("moving point " + s.parametric_point() + " left out");
    if (d < 0) r.status = Status::Negative;
    return r;
}

Report cmd_solve(const SceneFile& s, const CommandOptions& opt) {
    Report r;
    r.task = "solve";
    LinearSystem ls = scene_system(s, opt);
    describe_system(s, ls, r);
    int d = system_dimension(ls, opt, r);
    r.data["dimension"] = d;
    if (d < 0) {
        r.negative("empty (dimension -1)");
        return r;
    }
    auto sols = solve_basis(ls);
    json ws = json::array();
    for (const auto& f : sols) ws.push_back(curve_json(f));
    r.witnesses["curves"] = ws;
    if (d == 0) {
        r.say("unique curve of degree " + std::to_string(ls.degree) + ", " + std::to_string(sols[0].term_count()) +
              " terms");
        for (auto& l : split_lines(write_curve_text(sols[0]))) r.say(l);
    } else {
        r.say("dimension " + std::to_string(d) + ", basis:");
        for (const auto& f : sols) r.say("  " + f.str());
    }
    return r;
}

Report cmd_verify(const SceneFile& s, const CommandOptions& opt) {
    Report r;
    r.task = "verify";
    PlaneCurve f = scene_curve(s, opt);
    r.witnesses["curve"] = curve_json(f);
    verify_into(f, require_degree(s), full_scheme(s, opt), opt, r);
    return r;
}

Report cmd_invariants(const SceneFile& s, const CommandOptions& opt) {
    (void)opt;
    Report r;
    r.task = "invariants";
    if (s.duval) {
        DuValConfig cfg = s.duval_config(std::nullopt);
        int deg = 2;
        for (const auto& c : cfg.components) deg += c.degree;
        Resolution res = canonical_resolution(deg, cfg.branch_scheme());
        r.data["configuration"] = "Du Val";
        resolution_into(res, r);
        int pg = pg_adjoint(res);
        r.data["pg"] = pg;
        r.say("pg " + std::to_string(pg));
        int t2 = beauville_tors2(duval_branch_classes(cfg));
        r.data["tors2"] = t2;
        r.say("tors2 " + std::to_string(t2));
        r.say("five (-2)-curves over isolated fixed points: K^2 of the minimal model is Ksq_cover + 5");
        selfcheck_into(divisor_selfcheck(cfg), r);
    } else if (s.campedelli) {
        CampedelliConfig cfg = s.campedelli_config(std::nullopt);
        Resolution res = canonical_resolution(cfg.components[0].degree, total_branch_scheme(cfg.components));
        r.data["configuration"] = "Campedelli";
        resolution_into(res, r);
        int pg = pg_adjoint(res);
        r.data["pg"] = pg;
        r.say("pg " + std::to_string(pg));
        r.say("five (-2)-curves over isolated fixed points: K^2 of the minimal model is Ksq_cover + 5");
        selfcheck_into(divisor_selfcheck(cfg), r);
    } else {
        throw DomainError("invariants need a 'duval' or 'campedelli' configuration in the scene");
    }
    return r;
}

Report cmd_torsion(const SceneFile& s, const CommandOptions& opt) {
    Report r;
    r.task = "torsion";
    if (!s.duval) throw DomainError("torsion needs a 'duval' configuration in the scene");
    PlaneCurve f = scene_curve(s, opt);
    if (f.degree() != component_curve_degree(s))
        throw DomainError("curve has degree " + std::to_string(f.degree()) + ", the curve component needs " +
                          std::to_string(component_curve_degree(s)));
    r.witnesses["curve"] = curve_json(f);
    torsion_into(s.duval_config(f), opt, r);
    return r;
}

Report cmd_locus(const SceneFile& s, const CommandOptions& opt) {
    Report r;
    r.task = "locus";
    locus_into(s, opt, r);
    return r;
}

namespace {

SceneFile builtin_scene(const std::string& name) { return parse_scene(embedded_or_throw("scenes/" + name + ".scene")); }

void check(Report& r, bool ok, const std::string& what) {
    if (ok) r.say("ok: " + what);
    else r.negative("MISMATCH: " + what);
}

void reproduce_z4(const CommandOptions& opt, Report& r) {
    SceneFile s = builtin_scene("ex-z4");
    s.curve.reset();
    LinearSystem ls = scene_system(s, opt);
    Report sub;
    int d = system_dimension(ls, opt, sub);
    for (const auto& l : sub.lines) r.say(l);
    r.data["dimension"] = d;
    check(r, d == 0, "degree-12 symmetric system has dimension 0 (got " + std::to_string(d) + ")");
    if (d != 0) return;
    PlaneCurve f = solve_unique(ls).normalize_integer();
    PlaneCurve golden = read_curve_text(embedded_or_throw("golden/ex-z4-degree12.txt"));
    r.witnesses["curve"] = curve_json(f);
    std::vector<std::string> diff;
    for (const auto& [m, c] : golden.terms())
        if (f.coeff(m) != c)
            diff.push_back("x^" + std::to_string(m.ex) + " y^" + std::to_string(m.ey) + " z^" + std::to_string(m.ez) +
                           ": golden " + c.str() + ", solved " + f.coeff(m).str());
    for (const auto& [m, c] : f.terms())
        if (golden.coeff(m).is_zero())
            diff.push_back("x^" + std::to_string(m.ex) + " y^" + std::to_string(m.ey) + " z^" + std::to_string(m.ez) +
                           ": golden 0, solved " + c.str());
    r.data["terms"] = f.term_count();
    r.data["golden_diff"] = diff;
    check(r, diff.empty(), "solved curve equals the golden degree-12 curve (" + std::to_string(f.term_count()) + " terms)");
    for (const auto& l : diff) r.say("  " + l);
    if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        std::string path = (std::filesystem::path(opt.out_dir) / "ex-z4-degree12.txt").string();
        std::ofstream(path) << write_curve_text(f);
        r.say("wrote " + path);
    }
    Report v;
    bool exact = verify_into(f, 12, s.full_scheme(), opt, v);
    for (const auto& l : v.lines) r.say("  " + l);
    r.data["verify"] = v.data;
    check(r, exact && v.status == Status::Ok, "all seven scheme items EXACT");
    check(r, v.data.value("absolute_factors", 0) == 1, "absolutely irreducible");
    check(r, v.data.value("further_singularities", json::array()).empty(), "no singular points off the scheme");

    Report t;
    DuValConfig cfg = s.duval_config(f);
    torsion_into(cfg, opt, t);
    for (const auto& l : t.lines) r.say("  " + l);
    r.data["torsion"] = t.data;
    check(r, t.data["torsion"] == "Z4" && t.data["octic_dimension"] == 0, "torsion Z4 with a degree-8 system of dimension 0");
    TorsionResult tr = duval_torsion(cfg);
    PlaneCurve sextic = read_curve_text(embedded_or_throw("golden/ex-z4-sextic.txt"));
    PlaneCurve expect = (sextic * parse_form("y - z") * parse_form("y + z")).normalize_integer();
    check(r, tr.solutions.size() == 1 && tr.solutions[0].normalize_integer() == expect,
          "octic equals the golden sextic times (y - z)(y + z)");
    check(r, t.data["tors2"] == 2, "tors2 = 2");
}

LocusResult reproduce_deg11(const CommandOptions& opt, Report& r) {
    SceneFile s = builtin_scene("ex-deg11");
    Report sub;
    LocusResult res = locus_into(s, opt, sub);
    for (const auto& l : sub.lines) r.say(l);
    r.data["locus"] = sub.data;
    r.witnesses["locus"] = sub.witnesses;
    UniPoly p = res.proper_locus();
    auto ds = proper_degrees(res);
    check(r, p.degree() == 15 && ds == std::vector<int>{5, 10}, "p(t) has degree 15 = 5 + 10");
    check(r, p.degree() > 0 && gcd(p, derivative(p)).degree() == 0, "p(t) squarefree");
    return res;
}

void reproduce_deg11_full(const CommandOptions& opt, Report& r) {
    LocusResult res = reproduce_deg11(opt, r);
    SceneFile s = builtin_scene("ex-deg11");
    json runs = json::array();
    std::vector<LocusFactor> proper;
    for (const auto& f : res.factors)
        if (!f.degenerate && f.certified) proper.push_back(f);
    std::sort(proper.begin(), proper.end(),
              [](const LocusFactor& a, const LocusFactor& b) { return zpoly::degree(a.poly) < zpoly::degree(b.poly); });
    for (const auto& fac : proper) {
        const int n = zpoly::degree(fac.poly);
        std::vector<Rational> mp;
        for (const auto& c : fac.poly) mp.push_back(Rational(c));
        SceneFile k = s.specialize(mp);
        r.say("-- over Q[t]/(" + zpoly::to_unipoly(fac.poly).str("t") + "), degree " + std::to_string(n));
        json run;
        run["field_degree"] = n;
        LinearSystem ls = scene_system(k, opt);
        int d = dimension(ls);
        run["dimension"] = d;
        check(r, d == 0, "degree-11 system has dimension 0");
        if (d != 0) {
            runs.push_back(run);
            continue;
        }
        PlaneCurve b1 = solve_unique(ls);
        run["terms"] = b1.term_count();
        Report v;
        // The Campedelli test below scans the whole branch curve.
        bool exact = verify_into(b1, 11, k.scheme(), opt, v, false);
        for (const auto& l : v.lines) r.say("  " + l);
        run["verify"] = v.data;
        check(r, exact, "scheme EXACT");
        Report t;
        torsion_into(k.duval_config(b1), opt, t);
        for (const auto& l : t.lines) r.say("  " + l);
        run["torsion"] = t.data;
        const std::string want = n == 5 ? "Z4" : "Z2";
        check(r, t.data["torsion"] == want, "torsion " + want);
        if (!opt.quick) check(r, t.data["campedelli"] == "NOT_CAMPEDELLI", "NOT_CAMPEDELLI");
        runs.push_back(run);
    }
    r.data["fields"] = runs;
}

}  // namespace

Report cmd_reproduce(const std::string& target, const CommandOptions& opt) {
    Report r;
    r.task = "reproduce " + target;
    if (target == "ex-z4") reproduce_z4(opt, r);
    else if (target == "ex-deg11") reproduce_deg11(opt, r);
    else if (target == "ex-deg11-full") reproduce_deg11_full(opt, r);
    else throw DomainError("unknown target '" + target + "' (ex-z4, ex-deg11, ex-deg11-full)");
    return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact linear systems of singular plane curves and double-plane invariants"};
    app.require_subcommand(1);
    CommandOptions opt;
    bool as_json = false;
    std::string scene_arg, target;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--curve", opt.curve_path, "Curve file (one 'coeff ex ey ez' line per term)");
        sub->add_flag("--json", as_json, "Emit JSON {task, status, data, witnesses}");
        sub->add_option("--modp", opt.modp, "Prime for the mod-p prefilters")->check(CLI::PositiveNumber);
        sub->add_option("--eigenspace", opt.eigenspace, "Eigenspace of the symmetry")
            ->check(CLI::IsMember({"plus", "minus"}));
        sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--quick", opt.quick, "Skip the singular scan, the factor count and the Campedelli test");
    };
    const char* names[] = {"dim", "solve", "verify", "invariants", "torsion", "locus"};
    const char* help[] = {"Dimension of the linear system",
                          "Solve the linear system",
                          "Verify a curve against the declared singularities",
                          "Invariants of the double plane",
                          "Torsion and Campedelli criteria",
                          "Parameter values where a moving point makes the system nonempty"};
    for (int i = 0; i < 6; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], help[i]);
        sub->add_option("scene", scene_arg, "Scene file, or builtin:<name>")->required();
        common(sub);
    }
    CLI::App* rep = app.add_subcommand("reproduce", "Reproduce the shipped examples");
    rep->add_option("target", target, "ex-z4, ex-deg11 or ex-deg11-full")
        ->required()
        ->check(CLI::IsMember({"ex-z4", "ex-deg11", "ex-deg11-full"}));
    rep->add_option("--out", opt.out_dir, "Directory for the reproduced curve files");
    common(rep);
    CLI::App* show = app.add_subcommand("show", "Print a shipped scene or golden file");
    std::string show_name;
    show->add_option("name", show_name, "e.g. scenes/ex-z4.scene; omit to list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string task = app.get_subcommands().front()->get_name();
    auto fail = [&](const std::string& msg) {
        if (as_json) {
            Report r;
            r.task = task;
            r.status = Status::Error;
            r.data["message"] = msg;
            out << r.json();
        }
        err << msg << "\n";
        return 2;
    };
    try {
        if (task == "show") {
            if (show_name.empty()) {
                for (const auto& n : embedded_names()) out << n << "\n";
                return 0;
            }
            out << embedded_or_throw(show_name);
            return 0;
        }
        Report r;
        if (task == "reproduce") {
            r = cmd_reproduce(target, opt);
        } else {
            std::string text;
            if (scene_arg.rfind("builtin:", 0) == 0) {
                std::string n = scene_arg.substr(8);
                if (n.size() > 6 && n.substr(n.size() - 6) == ".scene") n.resize(n.size() - 6);
                text = embedded_or_throw("scenes/" + n + ".scene");
            } else {
                text = slurp(scene_arg);
                opt.scene_dir = std::filesystem::path(scene_arg).parent_path().string();
                if (opt.scene_dir.empty()) opt.scene_dir = ".";
            }
            SceneFile s;
            try {
                s = parse_scene(text);
            } catch (const SceneError& e) {
                std::string msg;
                for (const auto& i : e.issues())
                    msg += (msg.empty() ? "" : "\n") + scene_arg + ":" + std::to_string(i.line) + ": " + i.message;
                return fail(msg);
            }
            if (task == "dim") r = cmd_dim(s, opt);
            else if (task == "solve") r = cmd_solve(s, opt);
            else if (task == "verify") r = cmd_verify(s, opt);
            else if (task == "invariants") r = cmd_invariants(s, opt);
            else if (task == "torsion") r = cmd_torsion(s, opt);
            else r = cmd_locus(s, opt);
        }
        out << (as_json ? r.json() : r.text());
        return r.exit_code();
    } catch (const std::exception& e) {
        std::string where = task == "reproduce" ? target : scene_arg;
        return fail(where + ": error: " + e.what());
    }
}

}  // namespace godeaux

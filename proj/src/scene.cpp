#include "godeaux/scene.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace godeaux {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

// Splits "[a, b, [c, d]]" into its top-level entries.
std::vector<std::string> bracket_list(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw DomainError("expected a bracketed list: " + t);
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        char c = t[i];
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else cur += c;
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw DomainError("malformed integer '" + s + "'");
    }
    if (pos != s.size()) throw DomainError("malformed integer '" + s + "'");
    return v;
}

// Polynomial in t with rational coefficients, e.g. "t^2 - 2" or "3*t^5 + t/2 - 1".
std::vector<Rational> parse_minimal_polynomial(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw DomainError("empty minimal polynomial");
    std::map<int, Rational> coeffs;
    std::size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        if (term.empty()) throw DomainError("malformed minimal polynomial '" + text + "'");
        Rational c = 1;
        int k = 0;
        std::size_t at = term.find('t');
        if (at == std::string::npos) c = parse_rational(term);
        else {
            std::string pre = term.substr(0, at), post = term.substr(at + 1);
            std::string div;
            if (!post.empty() && post[0] == '^') {
                std::size_t e = 1;
                while (e < post.size() && std::isdigit(static_cast<unsigned char>(post[e]))) ++e;
                k = parse_int(post.substr(1, e - 1));
                div = post.substr(e);
            } else {
                k = 1;
                div = post;
            }
            if (!pre.empty()) {
                if (pre.back() != '*') throw DomainError("malformed term '" + term + "'");
                c = parse_rational(pre.substr(0, pre.size() - 1));
            }
            if (!div.empty()) {
                if (div[0] != '/') throw DomainError("malformed term '" + term + "'");
                c /= parse_rational(div.substr(1));
            }
        }
        coeffs[k] += sign * c;
    }
    int deg = coeffs.rbegin()->first;
    std::vector<Rational> out(deg + 1, Rational(0));
    for (const auto& [k, c] : coeffs) out[k] = c;
    while (!out.empty() && out.back() == 0) out.pop_back();
    if (out.size() < 2) throw DomainError("minimal polynomial must have degree >= 1");
    return out;
}

std::string minimal_polynomial_str(const std::vector<Rational>& m) {
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(m.size()) - 1; k >= 0; --k) {
        if (m[k] == 0) continue;
        Rational a = abs(m[k]);
        if (!first) os << (m[k] < 0 ? " - " : " + ");
        else if (m[k] < 0) os << "-";
        first = false;
        if (k == 0 || a != 1) {
            os << a.get_str();
            if (k > 0) os << "*";
        }
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

const char* const kTasks[] = {"dim", "solve", "verify", "invariants", "torsion", "locus"};

}  // namespace

SceneError::SceneError(std::vector<SceneIssue> issues)
    : std::runtime_error([&] {
          std::ostringstream os;
          for (std::size_t i = 0; i < issues.size(); ++i)
              os << (i ? "\n" : "") << "line " << issues[i].line << ": " << issues[i].message;
          return os.str();
      }()),
      issues_(std::move(issues)) {}

const ScenePoint* SceneFile::point(const std::string& name) const {
    for (const auto& p : points)
        if (p.name == name) return &p;
    return nullptr;
}

const SceneLine* SceneFile::line(const std::string& name) const {
    for (const auto& l : lines)
        if (l.name == name) return &l;
    return nullptr;
}

std::string SceneFile::parametric_point() const {
    for (const auto& p : points)
        if (p.param_coord >= 0) return p.name;
    return "";
}

namespace {

SingChain make_chain(const SceneFile& s, const SceneSing& d) {
    std::vector<Tangent> ts;
    if (d.multiplicities.size() == 2) {
        if (d.tangent == "free") ts.push_back(Tangent::free_direction());
        else ts.push_back(Tangent::assigned(s.line(d.tangent)->form));
    }
    return SingChain(d.multiplicities, ts);
}

ProjPoint proper(const SceneFile& s, const std::string& name) {
    const ScenePoint* p = s.point(name);
    if (!p) throw DomainError("undeclared point " + name);
    if (p->param_coord >= 0) throw DomainError("point " + name + " depends on the family parameter");
    return ProjPoint(p->coords);
}

}  // namespace

Scheme SceneFile::scheme() const {
    Scheme out;
    for (const auto& d : sings) {
        const ScenePoint* p = point(d.point);
        if (p->param_coord >= 0) continue;
        out.add({d.point, ProjPoint(p->coords), make_chain(*this, d)});
    }
    return out;
}

Scheme SceneFile::full_scheme(const std::string& eigenspace) const {
    if (!symmetry || !degree) return scheme();
    Scheme full = assemble(*degree, scheme(), symmetry_for(eigenspace)).full_scheme;
    Scheme out;
    for (const auto& it : full.items()) {
        SchemeItem named = it;
        for (const auto& p : points)
            if (p.param_coord < 0 && ProjPoint(p.coords) == it.point) named.name = p.name;
        out.add(named);
    }
    return out;
}

std::optional<Symmetry> SceneFile::symmetry_for(const std::string& eigenspace) const {
    if (!symmetry) {
        if (!eigenspace.empty()) throw DomainError("--eigenspace given but the scene declares no symmetry");
        return std::nullopt;
    }
    bool plus = symmetry->plus;
    if (eigenspace == "plus") plus = true;
    else if (eigenspace == "minus") plus = false;
    else if (!eigenspace.empty()) throw DomainError("eigenspace must be plus or minus");
    return Symmetry{ProjInvolution(symmetry->matrix), plus};
}

ParamScheme SceneFile::param_scheme() const {
    const std::string name = parametric_point();
    if (name.empty()) throw DomainError("the scene has no point depending on the parameter s");
    ParamScheme ps;
    ps.fixed = scheme();
    ps.name = name;
    const ScenePoint* p = point(name);
    ps.base = p->coords;
    ps.coord = p->param_coord;
    bool found = false;
    for (const auto& d : sings)
        if (d.point == name) {
            ps.chain = make_chain(*this, d);
            found = true;
        }
    if (!found) throw DomainError("the moving point " + name + " carries no singularity");
    return ps;
}

DuValConfig SceneFile::duval_config(const std::optional<PlaneCurve>& curve) const {
    if (!duval) throw DomainError("the scene declares no Du Val configuration");
    DuValConfig cfg;
    for (int i = 0; i < 7; ++i) cfg.q[i] = proper(*this, duval->q[i]);
    cfg.r1 = line(duval->r[0])->form;
    cfg.r2 = line(duval->r[1])->form;
    cfg.r3 = line(duval->r[2])->form;
    Scheme declared = full_scheme();
    auto curve_component = [&](std::string name, int deg) {
        BranchComponent c;
        c.name = std::move(name);
        c.degree = deg;
        c.scheme = declared;
        c.curve = curve;
        return c;
    };
    if (components.empty()) {
        if (!degree) throw DomainError("the Du Val configuration needs a degree");
        cfg.components.push_back(curve_component("B", *degree));
    }
    for (const auto& c : components) {
        if (!c.line_name.empty()) cfg.components.push_back(BranchComponent::from_curve(c.name, line(c.line_name)->form));
        else cfg.components.push_back(curve_component(c.name, c.degree));
    }
    if (fixed) cfg.fixed_part = line(*fixed)->form;
    return cfg;
}

CampedelliConfig SceneFile::campedelli_config(const std::optional<PlaneCurve>& curve) const {
    if (!campedelli) throw DomainError("the scene declares no Campedelli configuration");
    CampedelliConfig cfg;
    cfg.p0 = proper(*this, campedelli->p0);
    for (int i = 0; i < 5; ++i) {
        cfg.p[i] = proper(*this, campedelli->p[i]);
        cfg.tangents[i] = line(campedelli->tangents[i])->form;
    }
    BranchComponent c;
    c.name = "B";
    c.degree = degree.value_or(10);
    c.scheme = sings.empty() ? cfg.curve_scheme() : scheme();
    c.curve = curve;
    cfg.components.push_back(c);
    return cfg;
}

SceneFile SceneFile::specialize(const std::vector<Rational>& minimal_polynomial) const {
    if (parametric_point().empty()) throw DomainError("specialize: the scene has no family parameter");
    if (!this->minimal_polynomial.empty()) throw DomainError("specialize: the scene is already over a number field");
    SceneFile out = *this;
    out.minimal_polynomial = minimal_polynomial;
    out.field = make_field(minimal_polynomial, "t");
    for (auto& p : out.points) {
        for (auto& c : p.coords) c = c.in_field(out.field);
        if (p.param_coord >= 0) {
            p.coords[p.param_coord] = Scalar::generator(out.field);
            p.param_coord = -1;
        }
    }
    out.tasks.erase(std::remove(out.tasks.begin(), out.tasks.end(), "locus"), out.tasks.end());
    return out;
}

bool operator==(const SceneFile& a, const SceneFile& b) {
    if (a.minimal_polynomial != b.minimal_polynomial) return false;
    if (a.points.size() != b.points.size() || a.lines.size() != b.lines.size() || a.sings.size() != b.sings.size())
        return false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const auto &p = a.points[i], &q = b.points[i];
        if (p.name != q.name || p.coords != q.coords || p.param_coord != q.param_coord) return false;
    }
    for (std::size_t i = 0; i < a.lines.size(); ++i)
        if (a.lines[i].name != b.lines[i].name || a.lines[i].form != b.lines[i].form) return false;
    for (std::size_t i = 0; i < a.sings.size(); ++i) {
        const auto &p = a.sings[i], &q = b.sings[i];
        if (p.point != q.point || p.multiplicities != q.multiplicities || p.tangent != q.tangent) return false;
    }
    if (a.symmetry.has_value() != b.symmetry.has_value()) return false;
    if (a.symmetry) {
        if (a.symmetry->plus != b.symmetry->plus) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (a.symmetry->matrix(i, j) != b.symmetry->matrix(i, j)) return false;
    }
    if (a.duval.has_value() != b.duval.has_value()) return false;
    if (a.duval && (a.duval->q != b.duval->q || a.duval->r != b.duval->r)) return false;
    if (a.campedelli.has_value() != b.campedelli.has_value()) return false;
    if (a.campedelli && (a.campedelli->p0 != b.campedelli->p0 || a.campedelli->p != b.campedelli->p ||
                         a.campedelli->tangents != b.campedelli->tangents))
        return false;
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        const auto &p = a.components[i], &q = b.components[i];
        if (p.name != q.name || p.line_name != q.line_name || p.degree != q.degree) return false;
    }
    return a.degree == b.degree && a.fixed == b.fixed && a.curve == b.curve && a.tasks == b.tasks;
}

SceneFile parse_scene(const std::string& text) {
    SceneFile s;
    std::vector<SceneIssue> issues;
    std::vector<std::pair<int, std::string>> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int n = 0;
        while (std::getline(in, raw)) {
            ++n;
            auto h = raw.find('#');
            if (h != std::string::npos) raw = raw.substr(0, h);
            raw = trim(raw);
            if (!raw.empty()) lines.emplace_back(n, raw);
        }
    }
    // The field comes first so that residues anywhere in the scene can be read.
    int field_line = 0;
    for (const auto& [n, l] : lines) {
        auto w = words(l);
        if (w[0] != "field") continue;
        if (field_line) {
            issues.push_back({n, "field declared twice (first at line " + std::to_string(field_line) + ")"});
            continue;
        }
        field_line = n;
        std::string rest = trim(l.substr(5));
        if (rest == "rational" || rest == "Q") continue;
        try {
            s.minimal_polynomial = parse_minimal_polynomial(rest);
            s.field = make_field(s.minimal_polynomial, "t");
            if (s.field->degree() == 1) {
                s.minimal_polynomial.clear();
                s.field = nullptr;
                issues.push_back({n, "field of degree 1: write 'field rational'"});
            }
        } catch (const std::exception& e) {
            issues.push_back({n, e.what()});
        }
    }
    auto split_eq = [](const std::string& l, std::string& name, std::string& rhs) {
        auto eq = l.find('=');
        if (eq == std::string::npos) return false;
        auto w = words(l.substr(0, eq));
        if (w.size() != 2) return false;
        name = w[1];
        rhs = trim(l.substr(eq + 1));
        return true;
    };
    std::set<std::string> sing_points;
    for (const auto& [n, l] : lines) {
        auto w = words(l);
        const std::string& kw = w[0];
        try {
            if (kw == "field") continue;
            if (kw == "point") {
                ScenePoint p;
                std::string rhs;
                if (!split_eq(l, p.name, rhs)) throw DomainError("expected 'point <name> = [x, y, z]'");
                if (s.point(p.name)) throw DomainError("point " + p.name + " declared twice");
                auto c = bracket_list(rhs);
                if (c.size() != 3) throw DomainError("a point needs three coordinates");
                for (int k = 0; k < 3; ++k) {
                    if (c[k] == "s") {
                        if (p.param_coord >= 0) throw DomainError("only one coordinate may be the parameter s");
                        p.param_coord = k;
                        p.coords[k] = Scalar::zero(s.field);
                    } else {
                        p.coords[k] = parse_scalar(c[k], s.field);
                    }
                }
                if (p.param_coord < 0) ProjPoint check(p.coords);
                else if (!s.parametric_point().empty())
                    throw DomainError("a second point depends on the parameter s");
                p.line = n;
                s.points.push_back(p);
            } else if (kw == "line") {
                SceneLine ln;
                std::string rhs;
                if (!split_eq(l, ln.name, rhs)) throw DomainError("expected 'line <name> = <linear form>'");
                if (s.line(ln.name)) throw DomainError("line " + ln.name + " declared twice");
                ln.form = parse_form(rhs, s.field);
                if (ln.form.degree() != 1) throw DomainError("line " + ln.name + " is not linear");
                ln.line = n;
                s.lines.push_back(ln);
            } else if (kw == "sing") {
                SceneSing d;
                d.line = n;
                if (w.size() < 4) throw DomainError("expected 'sing <point> mult <m>' or 'sing <point> chain [m1,m2] tangent <line|free>'");
                d.point = w[1];
                const ScenePoint* p = s.point(d.point);
                if (!p) throw DomainError("undeclared point " + d.point);
                if (w[2] == "mult") {
                    if (w.size() != 4) throw DomainError("trailing text after the multiplicity");
                    d.multiplicities = {parse_int(w[3])};
                } else if (w[2] == "chain") {
                    auto cpos = l.find('['), tpos = l.find("tangent");
                    if (cpos == std::string::npos || tpos == std::string::npos || tpos < cpos)
                        throw DomainError("expected 'chain [m1,m2] tangent <line|free>'");
                    for (const auto& m : bracket_list(l.substr(cpos, l.find(']', cpos) - cpos + 1)))
                        d.multiplicities.push_back(parse_int(m));
                    auto tw = words(l.substr(tpos + 7));
                    if (tw.size() != 1) throw DomainError("expected one tangent after 'tangent'");
                    d.tangent = tw[0];
                    if (d.multiplicities.size() != 2) throw DomainError("a chain has two multiplicities");
                    if (d.tangent != "free") {
                        const SceneLine* t = s.line(d.tangent);
                        if (!t) throw DomainError("undeclared line " + d.tangent);
                        bool through = t->form.evaluate(p->coords).is_zero();
                        if (p->param_coord >= 0) {
                            Point3 e{Scalar(0), Scalar(0), Scalar(0)};
                            e[p->param_coord] = Scalar(1);
                            through = through && t->form.evaluate(e).is_zero();
                        }
                        if (!through) throw DomainError("tangent " + d.tangent + " does not pass through " + d.point);
                    }
                } else throw DomainError("expected 'mult' or 'chain' after the point name");
                if (!sing_points.insert(d.point).second) throw DomainError("second singularity at " + d.point);
                make_chain(s, d);
                s.sings.push_back(d);
            } else if (kw == "symmetry") {
                auto open = l.find('['), close = l.rfind(']');
                if (open == std::string::npos || close == std::string::npos)
                    throw DomainError("expected 'symmetry [[..],[..],[..]] plus|minus'");
                auto rows = bracket_list(l.substr(open, close - open + 1));
                if (rows.size() != 3) throw DomainError("symmetry matrix must be 3x3");
                SceneSymmetry sym;
                sym.matrix = Matrix(3, 3, s.field);
                for (int i = 0; i < 3; ++i) {
                    auto r = bracket_list(rows[i]);
                    if (r.size() != 3) throw DomainError("symmetry matrix must be 3x3");
                    for (int j = 0; j < 3; ++j) sym.matrix.set(i, j, parse_scalar(r[j], s.field));
                }
                auto tail = words(l.substr(close + 1));
                if (tail.size() != 1 || (tail[0] != "plus" && tail[0] != "minus"))
                    throw DomainError("symmetry needs the eigenspace 'plus' or 'minus'");
                sym.plus = tail[0] == "plus";
                ProjInvolution check(sym.matrix);
                if (s.symmetry) throw DomainError("symmetry declared twice");
                s.symmetry = sym;
            } else if (kw == "degree") {
                if (w.size() != 2) throw DomainError("expected 'degree <d>'");
                if (s.degree) throw DomainError("degree declared twice");
                int d = parse_int(w[1]);
                if (d < 1) throw DomainError("degree must be positive");
                s.degree = d;
            } else if (kw == "duval") {
                if (w.size() != 12 || w[8] != "lines")
                    throw DomainError("expected 'duval q0 q1 q2 q3 q4 q5 q6 lines r1 r2 r3'");
                SceneDuVal dv;
                for (int i = 0; i < 7; ++i) dv.q[i] = w[1 + i];
                for (int i = 0; i < 3; ++i) dv.r[i] = w[9 + i];
                s.duval = dv;
            } else if (kw == "campedelli") {
                if (w.size() != 13 || w[7] != "tangents")
                    throw DomainError("expected 'campedelli p0 p1 p2 p3 p4 p5 tangents l1 l2 l3 l4 l5'");
                SceneCampedelli c;
                c.p0 = w[1];
                for (int i = 0; i < 5; ++i) {
                    c.p[i] = w[2 + i];
                    c.tangents[i] = w[8 + i];
                }
                s.campedelli = c;
            } else if (kw == "component") {
                if (w.size() != 4 || (w[2] != "line" && w[2] != "degree"))
                    throw DomainError("expected 'component <name> line <line>' or 'component <name> degree <d>'");
                SceneComponent c;
                c.name = w[1];
                if (w[2] == "line") c.line_name = w[3];
                else c.degree = parse_int(w[3]);
                s.components.push_back(c);
            } else if (kw == "fixed") {
                if (w.size() != 2) throw DomainError("expected 'fixed <line>'");
                s.fixed = w[1];
            } else if (kw == "curve") {
                if (w.size() != 2) throw DomainError("expected 'curve <path>'");
                s.curve = w[1];
            } else if (kw == "task") {
                if (w.size() < 2) throw DomainError("expected 'task <name> ...'");
                for (std::size_t i = 1; i < w.size(); ++i) {
                    if (std::find(std::begin(kTasks), std::end(kTasks), w[i]) == std::end(kTasks))
                        throw DomainError("unknown task '" + w[i] + "'");
                    s.tasks.push_back(w[i]);
                }
            } else {
                throw DomainError("unknown keyword '" + kw + "'");
            }
        } catch (const SceneError&) {
            throw;
        } catch (const std::exception& e) {
            issues.push_back({n, e.what()});
        }
    }

    // Cross references that may point forward.
    auto line_of = [&](const std::string& kw) {
        for (const auto& [n, l] : lines)
            if (words(l)[0] == kw) return n;
        return 0;
    };
    auto need_point = [&](const std::string& name, int n) {
        if (!s.point(name)) issues.push_back({n, "undeclared point " + name});
    };
    auto need_line = [&](const std::string& name, int n) {
        if (!s.line(name)) issues.push_back({n, "undeclared line " + name});
    };
    if (s.duval) {
        int n = line_of("duval");
        for (const auto& q : s.duval->q) need_point(q, n);
        for (const auto& r : s.duval->r) need_line(r, n);
    }
    if (s.campedelli) {
        int n = line_of("campedelli");
        need_point(s.campedelli->p0, n);
        for (const auto& p : s.campedelli->p) need_point(p, n);
        for (const auto& t : s.campedelli->tangents) need_line(t, n);
        for (int i = 0; i < 5; ++i) {
            const ScenePoint* p = s.point(s.campedelli->p[i]);
            const SceneLine* t = s.line(s.campedelli->tangents[i]);
            if (p && t && !t->form.evaluate(p->coords).is_zero())
                issues.push_back({n, "tangent " + t->name + " does not pass through " + p->name});
        }
    }
    for (const auto& c : s.components)
        if (!c.line_name.empty()) need_line(c.line_name, line_of("component"));
    if (s.fixed) need_line(*s.fixed, line_of("fixed"));
    std::sort(issues.begin(), issues.end(), [](const SceneIssue& a, const SceneIssue& b) { return a.line < b.line; });
    if (!issues.empty()) throw SceneError(std::move(issues));
    return s;
}

std::string write_scene(const SceneFile& s) {
    std::ostringstream os;
    os << "field " << (s.minimal_polynomial.empty() ? "rational" : minimal_polynomial_str(s.minimal_polynomial)) << "\n";
    for (const auto& p : s.points) {
        os << "point " << p.name << " = [";
        for (int k = 0; k < 3; ++k) os << (k ? ", " : "") << (k == p.param_coord ? std::string("s") : p.coords[k].str());
        os << "]\n";
    }
    for (const auto& l : s.lines) os << "line " << l.name << " = " << l.form.str() << "\n";
    for (const auto& d : s.sings) {
        os << "sing " << d.point;
        if (d.multiplicities.size() == 1) os << " mult " << d.multiplicities[0] << "\n";
        else os << " chain [" << d.multiplicities[0] << "," << d.multiplicities[1] << "] tangent " << d.tangent << "\n";
    }
    if (s.symmetry) {
        os << "symmetry [";
        for (int i = 0; i < 3; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << s.symmetry->matrix(i, j).str();
            os << "]";
        }
        os << "] " << (s.symmetry->plus ? "plus" : "minus") << "\n";
    }
    if (s.degree) os << "degree " << *s.degree << "\n";
    if (s.duval) {
        os << "duval";
        for (const auto& q : s.duval->q) os << " " << q;
        os << " lines";
        for (const auto& r : s.duval->r) os << " " << r;
        os << "\n";
    }
    if (s.campedelli) {
        os << "campedelli " << s.campedelli->p0;
        for (const auto& p : s.campedelli->p) os << " " << p;
        os << " tangents";
        for (const auto& t : s.campedelli->tangents) os << " " << t;
        os << "\n";
    }
    for (const auto& c : s.components) {
        os << "component " << c.name;
        if (!c.line_name.empty()) os << " line " << c.line_name << "\n";
        else os << " degree " << c.degree << "\n";
    }
    if (s.fixed) os << "fixed " << *s.fixed << "\n";
    if (s.curve) os << "curve " << *s.curve << "\n";
    if (!s.tasks.empty()) {
        os << "task";
        for (const auto& t : s.tasks) os << " " << t;
        os << "\n";
    }
    return os.str();
}

}  // namespace godeaux

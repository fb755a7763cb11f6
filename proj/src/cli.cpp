#include "curveforge/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "curveforge/diophantine.hpp"
#include "curveforge/parametrize.hpp"
#include "curveforge/parse.hpp"
#include "curveforge/rational_map.hpp"
#include "curveforge/resultant.hpp"
#include "curveforge/singular.hpp"

namespace curveforge {

namespace {

using json = nlohmann::json;
using P3 = TriPoly<Rat>;

constexpr int kDefaultDegreeCap = 8;
constexpr int kDefaultHeightBound = 50;

struct Options {
    bool json = false;
    int height_bound = kDefaultHeightBound;
    std::optional<int> degree_cap;

    std::string curve;
    std::string point;
    std::string nodes;
    std::string map;
    std::string x_expr, y_expr;
    std::string from, to;
    std::string solution;
    std::vector<std::string> args;
    bool cross_check = false;
    std::int64_t prime_cap = 10007;
};

/// Result of one subcommand: exit code, JSON payload and text lines.
struct Outcome {
    int code = kExitOk;
    json data = json::object();
    std::vector<std::string> lines;

    void line(std::string s) { lines.push_back(std::move(s)); }
};

std::string field_name(std::int64_t d) { return d == 0 ? "Q" : "Q(sqrt(" + std::to_string(d) + "))"; }

std::string curve_text(const P3& F) { return render_poly(F, kProjectiveNames); }

template <ExactField K>
std::string form_text(const BinaryForm<K>& f) {
    return render_poly(f, kFormNames);
}

VarNames<2> remaining_upper(std::size_t eliminated) {
    VarNames<2> n;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != eliminated)
            n[k++] = kProjectiveNames[i];
    return n;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError(what + ": expected an integer, got '" + s + "'");
    return v;
}

BigInt parse_bigint(const std::string& s, const std::string& what) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError(what + ": expected an integer, got '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

Rat parse_rational(const std::string& s, const std::string& what) {
    QuadExt q = parse_scalar({s, what});
    if (!q.is_rational())
        throw InputError(what + ": expected a rational number");
    return q.a();
}

UniPoly<Rat> parse_univariate(const std::string& s, const std::string& what) {
    try {
        return parse_poly<1>({s, what}, VarNames<1>{"T"});
    } catch (const UnknownVariable&) {
        return parse_poly<1>({s, what}, VarNames<1>{"t"});
    }
}

std::string uni_text(const UniPoly<Rat>& p) { return render_poly(p, VarNames<1>{"T"}); }

struct Curve {
    P3 F;
    CurveInput input;
};

Curve read_curve(const std::string& text, Outcome& o) {
    Curve c;
    c.input = parse_curve({text, "<curve>"});
    c.F = c.input.curve;
    o.data["curve"] = curve_text(c.F);
    if (c.input.affine)
        o.data["diagnostics"].push_back("affine input homogenized with Z; affine chart z = 1");
    return c;
}

SingularConfig singular_config(const Options& opt) {
    SingularConfig cfg;
    cfg.degree_cap = opt.degree_cap.value_or(kDefaultDegreeCap);
    return cfg;
}

json point_json(const SingularPointReport& r) {
    auto names = chart_names(r.cone.chart);
    json j;
    j["point"] = render_point(r.point);
    j["field"] = field_name(r.field);
    j["multiplicity"] = r.cone.multiplicity;
    j["kind"] = to_string(r.cone.kind);
    j["ordinary"] = r.cone.ordinary;
    j["chart"] = kProjectiveNames[r.cone.chart];
    j["cone"] = render_poly(r.cone.cone, VarNames<2>{names[0], names[1]});
    json tangents = json::array();
    for (const auto& t : r.cone.tangents)
        tangents.push_back(render_poly(t, VarNames<2>{names[0], names[1]}));
    j["tangents"] = tangents;
    if (r.cone.tangent_field != 0)
        j["tangent_field"] = field_name(r.cone.tangent_field);
    if (r.conjugate_partner)
        j["conjugate"] = render_point(*r.conjugate_partner);
    return j;
}

std::string point_line(const SingularPointReport& r) {
    auto names = chart_names(r.cone.chart);
    std::string s = render_point(r.point) + " " + to_string(r.cone.kind) + ", multiplicity " +
                    std::to_string(r.cone.multiplicity) + ", tangent cone " +
                    render_poly(r.cone.cone, VarNames<2>{names[0], names[1]}) + " (chart " +
                    std::string(1, static_cast<char>(std::tolower(kProjectiveNames[r.cone.chart][0]))) + " = 1)";
    if (!r.cone.ordinary)
        s += ", not an ordinary cusp";
    if (r.field != 0)
        s += ", over " + field_name(r.field);
    if (r.conjugate_partner)
        s += ", conjugate " + render_point(*r.conjugate_partner);
    return s;
}

json evidence_json(const NonsingularityEvidence& e) {
    json j;
    json elim = json::object();
    for (std::size_t i = 0; i < 3; ++i)
        elim[kProjectiveNames[i]] = e.eliminants[i] ? json(render_poly(*e.eliminants[i], remaining_upper(i))) : json();
    j["eliminants"] = elim;
    json centers = json::object();
    for (std::size_t i = 0; i < 3; ++i)
        centers[kProjectiveNames[i]] = e.center_singular[i];
    j["center_singular"] = centers;
    if (e.coordinate_change) {
        json m = json::array();
        for (const auto& row : *e.coordinate_change) {
            json r = json::array();
            for (const auto& x : row)
                r.push_back(x.str());
            m.push_back(r);
        }
        j["coordinate_change"] = m;
    }
    return j;
}

void evidence_lines(const NonsingularityEvidence& e, Outcome& o) {
    if (e.coordinate_change) {
        std::string s = "coordinate change:";
        for (const auto& row : *e.coordinate_change) {
            s += " [";
            for (std::size_t k = 0; k < 3; ++k)
                s += (k ? " " : "") + row[k].str();
            s += "]";
        }
        o.line(s);
    }
    for (std::size_t i = 0; i < 3; ++i)
        o.line("eliminant without " + kProjectiveNames[i] + ": " +
               (e.eliminants[i] ? render_poly(*e.eliminants[i], remaining_upper(i)) : std::string("(degenerate)")));
}

template <ExactField K>
json map_json(const RationalMap<K>& m) {
    json j;
    j["f"] = form_text(m.f);
    j["g"] = form_text(m.g);
    j["h"] = form_text(m.h);
    j["degree"] = m.degree();
    j["map"] = render_map(m);
    return j;
}

void add_affine(const RationalMap<Rat>& m, Outcome& o) {
    if (m.h.is_zero())
        return;
    AffineView v = affine_view(m);
    o.data["x"] = render_fraction(v.x_num, v.x_den, "t");
    o.data["y"] = render_fraction(v.y_num, v.y_den, "t");
    o.line(render_affine(v));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

Outcome cmd_singular(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    auto locus = enumerate_singular_points(c.F, singular_config(opt));
    o.line("curve: " + curve_text(c.F));
    o.line("singular points: " + std::to_string(locus.points.size()));
    json pts = json::array();
    for (const auto& r : locus.points) {
        pts.push_back(point_json(r));
        o.line("  " + point_line(r));
    }
    o.data["points"] = pts;
    o.data["clusters"] = locus.clusters;
    if (!locus.clusters.empty()) {
        for (int d : locus.clusters)
            o.line("unresolved cluster of degree " + std::to_string(d) + " (points outside quadratic fields)");
        o.data["verdict"] = "inconclusive";
        o.code = kExitInconclusive;
    } else {
        o.data["verdict"] = locus.points.empty() ? "smooth" : "singular";
    }
    return o;
}

Outcome cmd_genus(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    auto locus = enumerate_singular_points(c.F, singular_config(opt));
    auto g = genus(c.F, locus);
    o.data["genus"] = g.genus;
    o.data["degree"] = g.degree;
    o.data["double_points"] = g.double_points;
    o.data["bound"] = g.bound;
    for (const auto& d : g.diagnostics)
        o.data["diagnostics"].push_back(d);
    o.data["verdict"] = "genus";
    o.line("curve: " + curve_text(c.F));
    o.line("genus: " + std::to_string(g.genus));
    o.line("degree: " + std::to_string(g.degree) + ", double points: " + std::to_string(g.double_points) +
           ", bound (d-1)(d-2)/2: " + std::to_string(g.bound));
    for (const auto& d : g.diagnostics)
        o.line("note: " + d);
    return o;
}

Outcome cmd_smooth(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    auto res = nonsingularity_certificate(c.F, singular_config(opt));
    o.line("curve: " + curve_text(c.F));
    if (res.evidence)
        o.data["evidence"] = evidence_json(*res.evidence);
    switch (res.outcome) {
        case NonsingularityResult::Outcome::Nonsingular:
            o.data["verdict"] = "smooth";
            o.line("smooth: yes");
            evidence_lines(*res.evidence, o);
            break;
        case NonsingularityResult::Outcome::Singular:
            o.data["verdict"] = "singular";
            o.code = kExitNegative;
            o.line("smooth: no");
            if (res.witness) {
                o.data["witness"] = point_json(*res.witness);
                o.line("witness: " + point_line(*res.witness));
            }
            if (!res.detail.empty()) {
                o.data["detail"] = res.detail;
                o.line("detail: " + res.detail);
            }
            break;
        case NonsingularityResult::Outcome::Inconclusive:
            o.data["verdict"] = "inconclusive";
            o.data["detail"] = res.detail;
            o.data["cluster_degree"] = res.cluster_degree;
            o.code = kExitInconclusive;
            o.line("smooth: inconclusive (" + res.detail + ")");
            break;
    }
    return o;
}

Outcome cmd_param_conic(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    if (opt.point.empty())
        throw InputError("param conic needs --point");
    ProjPoint P = parse_point({opt.point, "--point"});
    auto m = param_conic(c.F, P);
    o.data["point"] = render_point(normalize_point(P));
    o.data["verdict"] = "parametrized";
    if (auto r = rational_map(m)) {
        o.data["param"] = map_json(*r);
        o.data["field"] = "Q";
        o.line(render_map(*r));
        add_affine(*r, o);
    } else {
        o.data["param"] = map_json(m);
        o.data["field"] = field_name(field_of(m.f) ? field_of(m.f) : (field_of(m.g) ? field_of(m.g) : field_of(m.h)));
        o.line(render_map(m));
    }
    return o;
}

Outcome cmd_param_split(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    BinaryForm<Rat> f = c.input.affine ? c.input.affine_poly : dehomogenize(c.F, 2);
    auto m = param_split_degree(f);
    o.data["param"] = map_json(m);
    o.data["verdict"] = "parametrized";
    add_affine(m, o);
    o.line(render_map(m));
    return o;
}

Outcome cmd_param_quartic3(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    auto parts = split_top_level(opt.nodes, ';');
    if (parts.size() != 3)
        throw InputError("--nodes expects three points separated by ';'");
    std::array<ProjPoint, 3> nodes;
    for (std::size_t k = 0; k < 3; ++k)
        nodes[k] = parse_point({parts[k], "--nodes"});
    QuarticConfig cfg;
    cfg.height_bound = opt.height_bound;
    try {
        auto r = param_quartic_three_nodes(c.F, nodes, cfg);
        o.data["param"] = map_json(r.map);
        o.data["conic"] = curve_text(r.conic);
        o.data["conic_point"] = render_point(r.conic_point);
        o.data["transformed"] = curve_text(r.transformed);
        o.data["verdict"] = "parametrized";
        o.line(render_map(r.map));
        add_affine(r.map, o);
        o.line("conic: " + curve_text(r.conic) + " through " + render_point(r.conic_point));
    } catch (const NoRationalPoint& e) {
        o.data["conic"] = curve_text(e.conic());
        o.data["verdict"] = "inconclusive";
        o.data["detail"] = e.what();
        o.code = kExitInconclusive;
        o.line("inconclusive: " + std::string(e.what()));
        o.line("conic: " + curve_text(e.conic()));
    }
    return o;
}

AffineView read_affine_pair(const std::string& x, const std::string& y) {
    AffineView v;
    auto frac = [](const std::string& s, const std::string& what) {
        try {
            return parse_fraction({s, what}, "t");
        } catch (const UnknownVariable&) {
            return parse_fraction({s, what}, "T");
        }
    };
    std::tie(v.x_num, v.x_den) = frac(x, "--x");
    std::tie(v.y_num, v.y_den) = frac(y, "--y");
    return v;
}

Outcome cmd_implicitize(const Options& opt) {
    Outcome o;
    if (opt.x_expr.empty() || opt.y_expr.empty())
        throw InputError("implicitize needs --x and --y");
    auto f = implicitize(read_affine_pair(opt.x_expr, opt.y_expr));
    o.data["implicit"] = render_poly(f, kAffineNames);
    o.data["verdict"] = "implicitized";
    o.line(render_poly(f, kAffineNames));
    return o;
}

RationalMap<Rat> read_map(const Options& opt, const char* cmd) {
    if (opt.map.empty())
        throw InputError(std::string(cmd) + " needs --map");
    return parse_map({opt.map, "--map"});
}

Outcome cmd_verify(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    auto m = read_map(opt, "verify");
    auto residual = substitute_forms(c.F, m);
    bool ok = residual.is_zero();
    o.data["param"] = map_json(m);
    o.data["residual"] = form_text(residual);
    o.data["verdict"] = ok ? "valid" : "invalid";
    o.code = ok ? kExitOk : kExitNegative;
    o.line(ok ? "valid: F(f, g, h) = 0" : "invalid: F(f, g, h) = " + form_text(residual));
    return o;
}

Outcome cmd_kapferer(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    auto m = read_map(opt, "kapferer");
    auto w = kapferer_witness(c.F, m);
    static const char* kMinor[3] = {"P", "Q", "R"};
    static const char* kPartial[3] = {"F_X", "F_Y", "F_Z"};
    json minors, partials;
    for (std::size_t k = 0; k < 3; ++k) {
        minors[kMinor[k]] = form_text(w.minors[k]);
        partials[kPartial[k]] = form_text(w.evaluated[k]);
    }
    o.data["param"] = map_json(m);
    o.data["minors"] = minors;
    o.data["evaluated_partials"] = partials;
    o.data["gcd"] = form_text(w.gcd);
    o.data["complete"] = w.complete;
    o.data["curve_degree"] = w.curve_degree;
    o.data["map_degree"] = w.map_degree;
    o.data["minor_degree"] = w.minor_degree;
    o.data["partial_degree"] = w.partial_degree;
    o.data["degree_law_holds"] = w.degree_law_holds;
    for (std::size_t k = 0; k < 3; ++k)
        o.line("minor " + std::string(kMinor[k]) + " = " + form_text(w.minors[k]));
    for (std::size_t k = 0; k < 3; ++k)
        o.line(std::string(kPartial[k]) + "(f, g, h) = " + form_text(w.evaluated[k]));
    o.line("gcd of evaluated partials: " + form_text(w.gcd));
    o.line("degrees: 2m - 2 = " + std::to_string(w.minor_degree) + ", m(n - 1) = " +
           std::to_string(w.partial_degree) + (w.degree_law_holds ? " (2m - 2 >= m(n - 1))" : " (2m - 2 < m(n - 1))"));
    if (w.complete) {
        o.data["p"] = form_text(w.p);
        o.data["q"] = form_text(w.q);
        o.data["verdict"] = "complete";
        o.line("complete: q * (P, Q, R) = p * (F_X, F_Y, F_Z) with p = " + form_text(w.p) + ", q = " +
               form_text(w.q));
    } else {
        json pts = json::array();
        for (const auto& P : w.singular_points)
            pts.push_back(render_point(P));
        o.data["singular_points"] = pts;
        o.data["unresolved_degree"] = w.unresolved_degree;
        o.data["verdict"] = "singular";
        std::string s = "singular points from the gcd roots:";
        for (const auto& P : w.singular_points)
            s += " " + render_point(P);
        o.line(s);
        if (w.unresolved_degree > 0)
            o.line("gcd roots outside quadratic fields: degree " + std::to_string(w.unresolved_degree));
    }
    return o;
}

Outcome cmd_certificate(const Options& opt) {
    Outcome o;
    auto c = read_curve(opt.curve, o);
    auto r = nonparam_certificate(c.F, singular_config(opt));
    o.data["degree"] = r.degree;
    o.data["conclusion"] = r.conclusion;
    if (r.evidence)
        o.data["evidence"] = evidence_json(*r.evidence);
    switch (r.status) {
        case CertificateOutcome::Status::Certified:
            o.data["verdict"] = "certified";
            o.line("certificate: not parametrizable");
            o.line("degree: " + std::to_string(r.degree));
            evidence_lines(*r.evidence, o);
            break;
        case CertificateOutcome::Status::Singular:
            o.data["verdict"] = "singular";
            o.code = kExitNegative;
            o.line("refused: the curve is singular");
            if (r.witness) {
                o.data["witness"] = point_json(*r.witness);
                o.line("witness: " + point_line(*r.witness));
            }
            break;
        case CertificateOutcome::Status::Inapplicable:
            o.data["verdict"] = "inapplicable";
            o.code = kExitNegative;
            o.line("inapplicable: degree " + std::to_string(r.degree));
            break;
    }
    o.line(r.conclusion);
    return o;
}

Outcome cmd_area(const Options& opt) {
    Outcome o;
    auto m = read_map(opt, "area");
    if (opt.from.empty() || opt.to.empty())
        throw InputError("area needs --from and --to");
    Rat a = loop_area(m, parse_rational(opt.from, "--from"), parse_rational(opt.to, "--to"));
    o.data["param"] = map_json(m);
    o.data["area"] = a.str();
    o.data["verdict"] = "area";
    o.line(a.str());
    return o;
}

void require_args(const Options& opt, std::size_t n, const char* usage) {
    if (opt.args.size() != n)
        throw InputError(std::string("usage: ") + usage);
}

Outcome cmd_pythagorean(const Options& opt) {
    Outcome o;
    require_args(opt, 2, "pythagorean <m> <n>");
    auto t = pythagorean_triple(parse_bigint(opt.args[0], "m"), parse_bigint(opt.args[1], "n"));
    o.data["x"] = t[0].get_str();
    o.data["y"] = t[1].get_str();
    o.data["z"] = t[2].get_str();
    o.data["verdict"] = "triple";
    o.line("x = " + t[0].get_str() + ", y = " + t[1].get_str() + ", z = " + t[2].get_str());
    return o;
}

Outcome cmd_mason(const Options& opt) {
    Outcome o;
    require_args(opt, 3, "mason <A> <B> <C>");
    auto r = mason_check(parse_univariate(opt.args[0], "A"), parse_univariate(opt.args[1], "B"),
                         parse_univariate(opt.args[2], "C"));
    o.data["degrees"] = {r.deg_a, r.deg_b, r.deg_c};
    o.data["rad_degree"] = r.rad_degree;
    o.data["slack"] = r.slack;
    o.data["verdict"] = "holds";
    o.line("deg A = " + std::to_string(r.deg_a) + ", deg B = " + std::to_string(r.deg_b) +
           ", deg C = " + std::to_string(r.deg_c));
    o.line("deg rad(ABC) = " + std::to_string(r.rad_degree) + ", slack = " + std::to_string(r.slack));
    o.line("holds: max deg <= deg rad(ABC) - 1");
    return o;
}

Outcome cmd_fermatpoly(const Options& opt) {
    Outcome o;
    require_args(opt, 4, "fermatpoly <x> <y> <z> <n>");
    std::int64_t n = parse_int(opt.args[3], "n");
    if (n < 2 || n > 1024)
        throw InputError("n must lie in [2, 1024]");
    auto r = fermat_poly_check(parse_univariate(opt.args[0], "x"), parse_univariate(opt.args[1], "y"),
                               parse_univariate(opt.args[2], "z"), static_cast<int>(n));
    o.data["verdict"] = to_string(r.verdict);
    o.data["detail"] = r.detail;
    o.data["common_factor"] = uni_text(r.common);
    o.code = r.verdict == FermatReport::Verdict::Solution ? kExitOk : kExitNegative;
    o.line(to_string(r.verdict) + ": " + r.detail);
    return o;
}

Outcome cmd_pell(const Options& opt) {
    Outcome o;
    require_args(opt, 1, "pell <D> [--solution <X;Y>]");
    UniPoly<Rat> D = parse_univariate(opt.args[0], "D");
    std::optional<std::pair<UniPoly<Rat>, UniPoly<Rat>>> sol;
    if (!opt.solution.empty()) {
        auto parts = split_top_level(opt.solution, ';');
        if (parts.size() != 2)
            throw InputError("--solution expects 'X;Y'");
        sol = std::make_pair(parse_univariate(parts[0], "X"), parse_univariate(parts[1], "Y"));
    }
    auto r = pell_bound_check(D, sol);
    o.data["degree"] = r.degree;
    o.data["distinct_roots"] = r.distinct_roots;
    o.data["bound"] = r.bound;
    o.data["verdict"] = r.possible ? "possible" : "impossible";
    o.data["solution"] = to_string(r.solution);
    o.code = r.possible && (r.solution == PellReport::SolutionStatus::None ||
                            r.solution == PellReport::SolutionStatus::Verified)
                 ? kExitOk
                 : kExitNegative;
    o.line(std::string(r.possible ? "possible" : "impossible") + ": deg D = " + std::to_string(r.degree) +
           ", n(D) = " + std::to_string(r.distinct_roots) + ", bound 2n(D) - 2 = " + std::to_string(r.bound));
    if (sol)
        o.line("solution: " + to_string(r.solution));
    return o;
}

Outcome cmd_local(const Options& opt) {
    Outcome o;
    require_args(opt, 4, "local <b1> <a> <b2> <p>");
    LocalConfig cfg;
    cfg.cross_check = opt.cross_check;
    cfg.prime_cap = opt.prime_cap;
    auto c = local_solvability(parse_int(opt.args[0], "b1"), parse_int(opt.args[1], "a"),
                               parse_int(opt.args[2], "b2"), parse_int(opt.args[3], "p"), cfg);
    o.data["p"] = c.p;
    o.data["solution"] = {{"m", c.m}, {"n", c.n}, {"e", c.e}};
    o.data["witness"] = {{"partial", c.witness}, {"value", c.witness_value}};
    o.data["condition"] = c.condition;
    o.data["verdict"] = "certified";
    if (c.cross_check_found)
        o.data["cross_check"] = *c.cross_check_found ? "found" : "none";
    else if (opt.cross_check)
        o.data["cross_check"] = "skipped";
    o.line("solution mod " + std::to_string(c.p) + ": (m, n, e) = (" + std::to_string(c.m) + ", " +
           std::to_string(c.n) + ", " + std::to_string(c.e) + ")");
    o.line("smooth: partial " + c.witness + " = " + std::to_string(c.witness_value) + " mod " + std::to_string(c.p));
    o.line(std::string("condition p does not divide 2*a*b1*b2*(a^2 - 4*b1*b2): ") + (c.condition ? "yes" : "no"));
    if (c.cross_check_found)
        o.line(std::string("conic route: ") + (*c.cross_check_found ? "found" : "none"));
    else if (opt.cross_check)
        o.line("conic route: skipped (the conic is degenerate mod p)");
    return o;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

void emit(const Outcome& o, const std::string& command, const Options& opt, std::ostream& out) {
    if (opt.json) {
        json j = o.data;
        j["command"] = command;
        j["exit_code"] = o.code;
        if (!j.contains("diagnostics"))
            j["diagnostics"] = json::array();
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& l : o.lines)
        out << l << "\n";
    if (o.data.contains("diagnostics"))
        for (const auto& d : o.data["diagnostics"])
            if (std::find(o.lines.begin(), o.lines.end(), "note: " + d.get<std::string>()) == o.lines.end())
                out << "note: " << d.get<std::string>() << "\n";
}

int report_error(const std::string& command, const std::string& kind, const std::string& message, int code,
                 const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.json) {
        json j;
        j["command"] = command;
        j["verdict"] = "error";
        j["error"] = {{"kind", kind}, {"message", message}};
        j["exit_code"] = code;
        j["diagnostics"] = json::array();
        out << j.dump(2) << "\n";
    } else {
        err << kind << ": " << message << "\n";
    }
    return code;
}

std::optional<int> degree_cap_from_env() {
    const char* env = std::getenv("CURVE_FORGE_DEGREE_CAP");
    if (!env || !*env)
        return std::nullopt;
    std::int64_t v = parse_int(env, "CURVE_FORGE_DEGREE_CAP");
    if (v < 1 || v > 1000)
        throw InputError("CURVE_FORGE_DEGREE_CAP must lie in [1, 1000]");
    return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact computations with plane algebraic curves over the rationals", "curveforge"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "JSON output with sorted keys");
    app.add_option("--height-bound", opt.height_bound, "Height bound of rational point searches")
        ->check(CLI::Range(1, 100000));
    int cap = 0;
    auto* cap_opt = app.add_option("--degree-cap", cap, "Largest curve degree for singular-point work")
                        ->check(CLI::Range(1, 1000));

    std::string command;
    std::function<Outcome(const Options&)> handler;
    auto bind = [&](CLI::App* sub, std::string name, Outcome (*fn)(const Options&)) {
        sub->callback([&, name, fn] {
            command = name;
            handler = fn;
        });
    };
    auto curve_cmd = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("curve", opt.curve, "Curve F(X, Y, Z) or f(x, y); 'lhs = rhs' allowed")->required();
        bind(sub, name, fn);
        return sub;
    };

    curve_cmd("singular", "Singular points over Q and quadratic fields", cmd_singular);
    curve_cmd("genus", "Genus of a curve with only double points", cmd_genus);
    curve_cmd("smooth", "Nonsingularity certificate or a singular point", cmd_smooth);
    curve_cmd("certificate", "Non-parametrizability certificate for smooth curves of degree >= 3",
              cmd_certificate);
    curve_cmd("verify", "Check F(f, g, h) = 0", cmd_verify)->add_option("--map", opt.map, "x(t);y(t) or f;g;h");
    curve_cmd("kapferer", "Jacobian-minor witness for a parametrization", cmd_kapferer)
        ->add_option("--map", opt.map, "x(t);y(t) or f;g;h");

    auto* param = app.add_subcommand("param", "Rational parametrizations");
    param->require_subcommand(1);
    auto* conic = param->add_subcommand("conic", "Pencil of lines through a point of a conic");
    conic->add_option("curve", opt.curve, "Conic")->required();
    conic->add_option("--point", opt.point, "Point [a:b:c] on the conic");
    bind(conic, "param conic", cmd_param_conic);
    auto* split = param->add_subcommand("split", "Curves F_n + F_(n-1)");
    split->add_option("curve", opt.curve, "Curve")->required();
    bind(split, "param split", cmd_param_split);
    auto* quartic = param->add_subcommand("quartic3", "Quartic with three rational double points");
    quartic->add_option("curve", opt.curve, "Quartic")->required();
    quartic->add_option("--nodes", opt.nodes, "P1;P2;P3")->required();
    bind(quartic, "param quartic3", cmd_param_quartic3);

    auto* impl = app.add_subcommand("implicitize", "Implicit equation of x(t), y(t)");
    impl->add_option("--x", opt.x_expr, "x(t)")->required();
    impl->add_option("--y", opt.y_expr, "y(t)")->required();
    bind(impl, "implicitize", cmd_implicitize);

    auto* area = app.add_subcommand("area", "|integral of y dx| for a polynomial parametrization");
    area->add_option("--map", opt.map, "x(t);y(t)")->required();
    area->add_option("--from", opt.from, "t0")->required();
    area->add_option("--to", opt.to, "t1")->required();
    bind(area, "area", cmd_area);

    auto numeric_cmd = [&](const char* name, const char* help, const char* what, Outcome (*fn)(const Options&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("args", opt.args, what)->required()->allow_extra_args();
        bind(sub, name, fn);
        return sub;
    };
    numeric_cmd("pythagorean", "(m^2 - n^2, 2mn, m^2 + n^2)", "m n", cmd_pythagorean);
    numeric_cmd("mason", "Polynomial abc inequality for A + B + C = 0", "A B C", cmd_mason);
    numeric_cmd("fermatpoly", "Classify x^n + y^n = z^n over Q[T]", "x y z n", cmd_fermatpoly);
    numeric_cmd("pell", "Degree obstruction for X^2 - D*Y^2 = 1", "D", cmd_pell)
        ->add_option("--solution", opt.solution, "X;Y");
    auto* local = numeric_cmd("local", "Local solvability of b1*m^4 + a*m^2*n^2 + b2*n^4 = e^2 mod p",
                              "b1 a b2 p", cmd_local);
    local->add_flag("--cross-check", opt.cross_check, "Also run the conic-route search");
    local->add_option("--prime-cap", opt.prime_cap, "Largest accepted prime")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*cap_opt)
            opt.degree_cap = cap;
        else
            opt.degree_cap = degree_cap_from_env();
        Outcome o = handler(opt);
        emit(o, command, opt, out);
        return o.code;
    } catch (const ParseError& e) {
        return report_error(command, "parse error", e.what(), kExitInput, opt, out, err);
    } catch (const IncompatibleField& e) {
        return report_error(command, "incompatible field", e.what(), kExitInput, opt, out, err);
    } catch (const InputError& e) {
        return report_error(command, "input error", e.what(), kExitInput, opt, out, err);
    } catch (const NotApplicable& e) {
        return report_error(command, "not applicable", e.what(), kExitNegative, opt, out, err);
    } catch (const Inconclusive& e) {
        return report_error(command, "inconclusive", e.what(), kExitInconclusive, opt, out, err);
    } catch (const TheoremContradiction& e) {
        return report_error(command, "theorem contradiction", e.what(), kExitContradiction, opt, out, err);
    } catch (const std::exception& e) {
        return report_error(command, "internal error", e.what(), kExitContradiction, opt, out, err);
    }
}

}  // namespace curveforge

#include "reylie/json_io.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace reylie::io {

InputError::InputError(const std::string &where, const std::string &what)
    : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where), message_(what) {}

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

std::string at(const std::string &where, const std::string &key) { return where + "/" + key; }
std::string at(const std::string &where, std::size_t i) { return where + "/" + std::to_string(i); }

const json &field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object())
        throw InputError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(where, std::string("missing field \"") + key + "\"");
    return *it;
}

const json &array_field(const json &j, const char *key, const std::string &where) {
    const json &a = field(j, key, where);
    if (!a.is_array())
        throw InputError(at(where, key), "expected an array");
    return a;
}

int int_value(const json &j, const std::string &where, int lo = 0, int hi = std::numeric_limits<int>::max()) {
    if (!j.is_number_integer())
        throw InputError(where, "expected an integer");
    auto v = j.get<long long>();
    if (v < lo || v > hi)
        throw InputError(where, "integer " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    return static_cast<int>(v);
}

int int_field(const json &j, const char *key, const std::string &where, int lo = 0,
              int hi = std::numeric_limits<int>::max()) {
    return int_value(field(j, key, where), at(where, key), lo, hi);
}

Matrix square_field(const json &j, const char *key, int n, const std::string &where) {
    Matrix m = matrix_from_json(field(j, key, where), at(where, key));
    if (m.rows() != sz(n) || m.cols() != sz(n))
        throw InputError(at(where, key), "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return m;
}

std::string tuple_key(const std::vector<int> &t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + "]";
}

// {"dimL", "dimV", "rho", "R", "RV", "dV", "d"} on a known algebra
RLDRep rep_fields(const LieAlgebra &l, const Matrix &r, const Matrix &d, const json &j, const std::string &where) {
    const int v = int_field(j, "dimV", where);
    const json &rho = array_field(j, "rho", where);
    if (rho.size() != sz(l.dim()))
        throw InputError(at(where, "rho"), "expected " + std::to_string(l.dim()) + " matrices, one per basis vector");
    Representation rep{l, v, {}};
    for (std::size_t i = 0; i < rho.size(); ++i) {
        Matrix m = matrix_from_json(rho[i], at(at(where, "rho"), i));
        if (m.rows() != sz(v) || m.cols() != sz(v))
            throw InputError(at(at(where, "rho"), i), "expected a dimV x dimV matrix");
        rep.action.push_back(std::move(m));
    }
    return {{rep, r, square_field(j, "RV", v, where)}, d, square_field(j, "dV", v, where)};
}

} // namespace

json to_json(const Scalar &s) { return format_scalar(s); }

json to_json(const Vector &v) {
    json a = json::array();
    for (const auto &s : v)
        a.push_back(to_json(s));
    return a;
}

json to_json(const Matrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(to_json(m.row(r)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const LieAlgebra &l) {
    json b = json::array();
    for (const auto &t : increasing_tuples(l.dim(), 2)) {
        Vector v = l.basis_bracket(t[0], t[1]);
        if (!is_zero(v))
            b.push_back({{"i", t[0]}, {"j", t[1]}, {"value", to_json(v)}});
    }
    return {{"dim", l.dim()}, {"brackets", b}};
}

json to_json(const Cochain &c) {
    json values = json::object();
    const auto &tuples = increasing_tuples(c.dim_l(), c.degree());
    for (std::size_t r = 0; r < tuples.size(); ++r)
        values[tuple_key(tuples[r])] = to_json(c.value(r));
    return {{"degree", c.degree()}, {"dimL", c.dim_l()}, {"dimV", c.dim_v()}, {"values", values}};
}

json to_json(const PairCochain &c) {
    return {{"first", to_json(c.first)}, {"second", c.second ? to_json(*c.second) : json(nullptr)}};
}

json to_json(const ReynoldsLieDerPair &p) {
    return {{"algebra", to_json(p.algebra)}, {"R", to_json(p.r)}, {"d", to_json(p.d)}};
}

json to_json(const RLDRep &r) {
    json rho = json::array();
    for (const auto &m : r.rep().action)
        rho.push_back(to_json(m));
    return {{"algebra", to_json(r.algebra())}, {"R", to_json(r.base.r)}, {"d", to_json(r.d)},
            {"dimV", r.rep().dim_v},          {"rho", rho},               {"RV", to_json(r.base.r_v)},
            {"dV", to_json(r.d_v)}};
}

json to_json(const Violation &v) {
    return {{"identity", v.identity}, {"indices", v.indices}, {"residual", to_json(v.residual)}};
}

json to_json(const Verdict &v) {
    json list = json::array();
    for (const auto &x : v.violations())
        list.push_back(to_json(x));
    return {{"ok", v.ok()}, {"violations", list}};
}

json to_json(const CohomologyReport &r) {
    json basis = json::array();
    for (const auto &b : r.cocycle_basis)
        basis.push_back(to_json(b));
    return {{"kind", to_string(r.kind)},
            {"degree", r.degree},
            {"dim_cochains", r.dim_cochains},
            {"dim_cocycles", r.dim_cocycles},
            {"dim_coboundaries", r.dim_coboundaries},
            {"dim_h", r.dim_h},
            {"cocycle_basis", basis},
            {"note", r.note}};
}

json to_json(const DeformationTruncation &t) {
    json mu = json::array(), rs = json::array(), ds = json::array();
    for (int k = 0; k < t.order; ++k) {
        mu.push_back(to_json(t.mu[sz(k)]));
        rs.push_back(to_json(t.rs[sz(k)]));
        ds.push_back(to_json(t.ds[sz(k)]));
    }
    return {{"pair", to_json(t.base)}, {"order", t.order}, {"mu", mu}, {"R", rs}, {"d", ds}};
}

json to_json(const ExtensionDatum &d) {
    return {{"theta", to_json(d.theta)}, {"xi", to_json(d.xi)}, {"chi", to_json(d.chi)}};
}

Scalar scalar_from_json(const json &j, const std::string &where) {
    if (j.is_number_integer())
        return Scalar(std::to_string(j.get<long long>()));
    if (!j.is_string())
        throw InputError(where, "expected a rational \"p/q\" string or an integer");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::exception &e) {
        throw InputError(where, e.what());
    }
}

Vector vector_from_json(const json &j, const std::string &where) {
    if (!j.is_array())
        throw InputError(where, "expected an array of rationals");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(scalar_from_json(j[i], at(where, i)));
    return v;
}

Matrix matrix_from_json(const json &j, const std::string &where) {
    const int rows = int_field(j, "rows", where), cols = int_field(j, "cols", where);
    const json &e = array_field(j, "entries", where);
    if (e.size() != sz(rows))
        throw InputError(at(where, "entries"), "expected " + std::to_string(rows) + " rows");
    Matrix m(sz(rows), sz(cols));
    for (std::size_t r = 0; r < e.size(); ++r) {
        Vector row = vector_from_json(e[r], at(at(where, "entries"), r));
        if (row.size() != sz(cols))
            throw InputError(at(at(where, "entries"), r), "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < row.size(); ++c)
            m(r, c) = row[c];
    }
    return m;
}

LieAlgebra algebra_from_json(const json &j, const std::string &where) {
    const int n = int_field(j, "dim", where);
    LieAlgebra l(n);
    const json &b = array_field(j, "brackets", where);
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const std::string w = at(at(where, "brackets"), k);
        const int i = int_field(b[k], "i", w, 0, n - 1), jj = int_field(b[k], "j", w, 0, n - 1);
        Vector v = vector_from_json(field(b[k], "value", w), at(w, "value"));
        if (v.size() != sz(n))
            throw InputError(at(w, "value"), "expected " + std::to_string(n) + " entries");
        if (i == jj) {
            if (!is_zero(v))
                throw InputError(w, "[e_i, e_i] must be zero");
            continue;
        }
        if (!seen.insert({std::min(i, jj), std::max(i, jj)}).second)
            throw InputError(w, "bracket of the pair given twice");
        l.set_bracket(i, jj, std::move(v));
    }
    return l;
}

ReynoldsLieAlgebra reynolds_algebra_from_json(const json &j, const std::string &where) {
    LieAlgebra l = algebra_from_json(field(j, "algebra", where), at(where, "algebra"));
    return {l, square_field(j, "R", l.dim(), where)};
}

ReynoldsLieDerPair pair_from_json(const json &j, const std::string &where) {
    LieAlgebra l = algebra_from_json(field(j, "algebra", where), at(where, "algebra"));
    return {l, square_field(j, "R", l.dim(), where), square_field(j, "d", l.dim(), where)};
}

RLDRep rep_from_json(const json &j, const std::string &where) {
    if (j.is_object() && j.contains("pair")) {
        ReynoldsLieDerPair p = pair_from_json(j["pair"], at(where, "pair"));
        if (j.value("adjoint", false))
            return {{adjoint_action(p.algebra), p.r, p.r}, p.d, p.d};
        return rep_fields(p.algebra, p.r, p.d, j, where);
    }
    LieAlgebra l = algebra_from_json(field(j, "algebra", where), at(where, "algebra"));
    return rep_fields(l, square_field(j, "R", l.dim(), where), square_field(j, "d", l.dim(), where), j, where);
}

Cochain cochain_from_json(const json &j, int dim_l, int dim_v, const std::string &where) {
    const int k = int_field(j, "degree", where, 0, dim_l);
    if (j.contains("dimL") && int_field(j, "dimL", where) != dim_l)
        throw InputError(at(where, "dimL"), "expected " + std::to_string(dim_l));
    if (j.contains("dimV") && int_field(j, "dimV", where) != dim_v)
        throw InputError(at(where, "dimV"), "expected " + std::to_string(dim_v));
    const json &values = field(j, "values", where);
    if (!values.is_object())
        throw InputError(at(where, "values"), "expected an object keyed by index tuples");
    Cochain c(k, dim_l, dim_v);
    std::set<std::vector<int>> seen;
    for (const auto &[key, val] : values.items()) {
        const std::string w = at(at(where, "values"), key);
        json parsed = json::parse(key, nullptr, false);
        if (!parsed.is_array() || parsed.size() != sz(k))
            throw InputError(w, "key must be a list of " + std::to_string(k) + " indices");
        std::vector<int> t;
        for (const auto &x : parsed)
            t.push_back(int_value(x, w, 0, dim_l - 1));
        Vector v = vector_from_json(val, w);
        if (v.size() != sz(dim_v))
            throw InputError(w, "expected " + std::to_string(dim_v) + " entries");
        // sorting sign via the alternating evaluation of a unit cochain
        std::vector<int> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            if (!is_zero(v))
                throw InputError(w, "repeated index with a nonzero value");
            continue;
        }
        if (!seen.insert(sorted).second)
            throw InputError(w, "tuple given twice");
        Cochain unit(k, dim_l, 1);
        unit.set(sorted, Vector{1});
        c.set(sorted, unit.eval_basis(t)[0] * v);
    }
    return c;
}

DeformationTruncation truncation_from_json(const json &j, const std::string &where) {
    DeformationTruncation t;
    t.base = pair_from_json(field(j, "pair", where), at(where, "pair"));
    const int n = t.base.algebra.dim();
    t.order = int_field(j, "order", where, 1);
    const json &mu = array_field(j, "mu", where), &rs = array_field(j, "R", where), &ds = array_field(j, "d", where);
    for (const auto *key : {"mu", "R", "d"})
        if (j[key].size() != sz(t.order))
            throw InputError(at(where, key), "expected " + std::to_string(t.order) + " terms");
    for (std::size_t i = 0; i < sz(t.order); ++i) {
        Cochain m = cochain_from_json(mu[i], n, n, at(at(where, "mu"), i));
        if (m.degree() != 2)
            throw InputError(at(at(where, "mu"), i), "expected a degree-2 cochain");
        t.mu.push_back(std::move(m));
        for (auto [arr, key, out] : {std::tuple{&rs, "R", &t.rs}, std::tuple{&ds, "d", &t.ds}}) {
            Matrix x = matrix_from_json((*arr)[i], at(at(where, key), i));
            if (x.rows() != sz(n) || x.cols() != sz(n))
                throw InputError(at(at(where, key), i), "expected a square matrix of the algebra's dimension");
            out->push_back(std::move(x));
        }
    }
    return t;
}

ExtensionInput extension_from_json(const json &j, const std::string &where) {
    ExtensionInput in;
    in.rep = rep_from_json(field(j, "rep", where), at(where, "rep"));
    const int m = in.rep.algebra().dim(), v = in.rep.rep().dim_v;
    const json &d = field(j, "datum", where);
    const std::string w = at(where, "datum");
    in.datum.theta = cochain_from_json(field(d, "theta", w), m, v, at(w, "theta"));
    in.datum.xi = cochain_from_json(field(d, "xi", w), m, v, at(w, "xi"));
    in.datum.chi = cochain_from_json(field(d, "chi", w), m, v, at(w, "chi"));
    for (auto [c, key, deg] : {std::tuple{&in.datum.theta, "theta", 2}, std::tuple{&in.datum.xi, "xi", 1},
                               std::tuple{&in.datum.chi, "chi", 1}})
        if (c->degree() != deg)
            throw InputError(at(w, key), "expected degree " + std::to_string(deg));
    std::string mode = j.value("mode", "abelian");
    if (mode == "central")
        in.mode = ExtensionMode::Central;
    else if (mode != "abelian")
        throw InputError(at(where, "mode"), "expected \"abelian\" or \"central\"");
    return in;
}

CentralExtension central_from_json(const json &j, const std::string &where) {
    ReynoldsLieAlgebra base = reynolds_algebra_from_json(field(j, "base", where), at(where, "base"));
    const int m = base.algebra.dim();
    Matrix r_v = matrix_from_json(field(j, "RV", where), at(where, "RV"));
    if (!r_v.square())
        throw InputError(at(where, "RV"), "expected a square matrix");
    const int v = static_cast<int>(r_v.rows());
    Cochain theta = cochain_from_json(field(j, "theta", where), m, v, at(where, "theta"));
    Cochain xi = cochain_from_json(field(j, "xi", where), m, v, at(where, "xi"));
    if (theta.degree() != 2)
        throw InputError(at(where, "theta"), "expected degree 2");
    if (xi.degree() != 1)
        throw InputError(at(where, "xi"), "expected degree 1");
    CentralExtension e = central_extension(base, r_v, theta, xi);
    if (j.contains("section_shift")) {
        Matrix g = matrix_from_json(j["section_shift"], at(where, "section_shift"));
        if (g.rows() != sz(v) || g.cols() != sz(m))
            throw InputError(at(where, "section_shift"), "expected a dimV x dimL matrix");
        e = with_section(e, g);
    }
    return e;
}

ObstructionInput obstruction_from_json(const json &j, const std::string &where) {
    CentralExtension e = central_from_json(field(j, "extension", where), at(where, "extension"));
    Matrix d = square_field(j, "d", e.base.algebra.dim(), where);
    Matrix d_v = square_field(j, "dV", e.dim_v, where);
    return {std::move(e), std::move(d), std::move(d_v)};
}

json parse(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(source, "JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

} // namespace reylie::io

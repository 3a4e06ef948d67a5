#include "reylie/commands.hpp"

#include <charconv>
#include <sstream>

namespace reylie::cli {

using io::json;

namespace {

std::string vec_text(const Vector &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + format_scalar(v[i]);
    return s + ")";
}

std::string indices_text(const std::vector<int> &ix) {
    std::string s = "[";
    for (std::size_t i = 0; i < ix.size(); ++i)
        s += (i ? ", " : "") + std::to_string(ix[i]);
    return s + "]";
}

std::string matrix_text(const Matrix &m, const std::string &indent) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r)
        s += indent + vec_text(m.row(r)) + "\n";
    return s;
}

void verdict_text(std::ostringstream &os, const Verdict &v, const std::string &indent) {
    for (const auto &x : v.violations())
        os << indent << x.identity << " " << indices_text(x.indices) << ": residual " << vec_text(x.residual)
           << "\n";
}

/// One named validator result; `verdict` empty when its preconditions failed.
struct Check {
    std::string label;
    std::optional<Verdict> verdict;
    std::string note;

    bool ok() const { return verdict && verdict->ok(); }
};

template <class F> Check run_check(const std::string &label, F &&f) {
    try {
        return {label, f(), ""};
    } catch (const PreconditionFailure &e) {
        return {label, std::nullopt, std::string("not evaluated: ") + e.what()};
    }
}

json checks_json(const std::vector<Check> &cs) {
    json a = json::array();
    for (const auto &c : cs) {
        json j = {{"check", c.label}};
        if (c.verdict) {
            j["ok"] = c.verdict->ok();
            j["violations"] = io::to_json(*c.verdict)["violations"];
        } else {
            j["ok"] = false;
            j["violations"] = json::array();
            j["note"] = c.note;
        }
        a.push_back(j);
    }
    return a;
}

void checks_text(std::ostringstream &os, const std::vector<Check> &cs, const std::string &indent) {
    for (const auto &c : cs) {
        if (!c.verdict) {
            os << indent << c.label << ": skipped (" << c.note << ")\n";
            continue;
        }
        os << indent << c.label << ": " << (c.verdict->ok() ? "ok" : "FAIL") << "\n";
        verdict_text(os, *c.verdict, indent + "  ");
    }
}

bool all_ok(const std::vector<Check> &cs) {
    for (const auto &c : cs)
        if (!c.ok())
            return false;
    return true;
}

std::vector<Check> pair_checks(const ReynoldsLieDerPair &p) {
    return {{"jacobi", jacobi_check(p.algebra), ""},
            {"reynolds", is_reynolds(p.algebra, p.r), ""},
            {"derivation", is_derivation(p.algebra, p.d), ""},
            {"commutation", commutation_check(p.r, p.d), ""}};
}

std::vector<Check> rep_checks(const RLDRep &r) {
    auto cs = pair_checks(r.pair());
    cs.push_back({"representation", check_rep(r.rep()), ""});
    cs.push_back({"reynolds-representation", reynolds_rep_identity(r.base), ""});
    cs.push_back(run_check("rld-representation", [&] { return check_rld_rep(r); }));
    return cs;
}

struct ItemChecks {
    std::vector<Check> checks;
    std::vector<Check> audit;
};

ItemChecks item_checks(const io::Item &it, const Options &opt) {
    ItemChecks out;
    auto &cs = out.checks;
    const std::string &k = it.kind;
    const json &p = it.payload;
    if (k == "lie_algebra") {
        cs.push_back({"jacobi", jacobi_check(io::algebra_from_json(p)), ""});
    } else if (k == "reynolds_lie_algebra") {
        auto ra = io::reynolds_algebra_from_json(p);
        cs.push_back({"jacobi", jacobi_check(ra.algebra), ""});
        cs.push_back({"reynolds", is_reynolds(ra.algebra, ra.r), ""});
        if (opt.strict_literal)
            out.audit.push_back({"reynolds (literal form)", is_reynolds(ra.algebra, ra.r, ReynoldsForm::Literal), ""});
    } else if (k == "pair") {
        auto pr = io::pair_from_json(p);
        cs = pair_checks(pr);
        if (opt.strict_literal)
            out.audit.push_back({"reynolds (literal form)", is_reynolds(pr.algebra, pr.r, ReynoldsForm::Literal), ""});
    } else if (k == "rep") {
        auto r = io::rep_from_json(p);
        cs = rep_checks(r);
        if (opt.strict_literal) {
            out.audit.push_back({"reynolds (literal form)", is_reynolds(r.algebra(), r.base.r, ReynoldsForm::Literal), ""});
            out.audit.push_back(run_check("rld-representation (literal compatibility)",
                                          [&] { return check_rld_rep(r, DerivationCompat::Literal); }));
        }
    } else if (k == "cochain") {
        if (!p.contains("dimL") || !p.contains("dimV"))
            throw io::InputError("/payload", "a standalone cochain needs \"dimL\" and \"dimV\"");
        if (!p["dimL"].is_number_unsigned() || !p["dimV"].is_number_unsigned())
            throw io::InputError("/payload", "\"dimL\" and \"dimV\" must be nonnegative integers");
        io::cochain_from_json(p, p["dimL"].get<int>(), p["dimV"].get<int>());
        cs.push_back({"shape", Verdict{}, ""});
    } else if (k == "truncation") {
        auto t = io::truncation_from_json(p);
        cs = pair_checks(t.base);
        cs.push_back(run_check("deformation equations", [&] { return validate_truncation(t); }));
        cs.push_back(run_check("infinitesimal cocycle", [&] { return infinitesimal_is_cocycle(t); }));
    } else if (k == "extension") {
        auto in = io::extension_from_json(p);
        cs = rep_checks(in.rep);
        try {
            auto t = build_extension(in.rep, in.datum, in.mode);
            cs.push_back({"extension axioms", t.direct, ""});
            cs.push_back({"2-cocycle", t.cocycle, ""});
        } catch (const PreconditionFailure &e) {
            cs.push_back({"extension axioms", std::nullopt, std::string("not evaluated: ") + e.what()});
        }
    } else if (k == "central_extension" || k == "obstruction") {
        const json &ce = k == "obstruction" ? p.at("extension") : p;
        try {
            CentralExtension e = io::central_from_json(ce, k == "obstruction" ? "/extension" : "");
            cs.push_back({"central", check_central(e), ""});
            if (k == "obstruction") {
                auto in = io::obstruction_from_json(p);
                cs.push_back({"derivation", is_derivation(e.base.algebra, in.d), ""});
                cs.push_back({"R d = d R", commutation_check(e.base.r, in.d, "R d = d R"), ""});
                cs.push_back({"R_V d_V = d_V R_V", commutation_check(e.r_v, in.d_v, "R_V d_V = d_V R_V"), ""});
            }
        } catch (const PreconditionFailure &e) {
            cs.push_back({"reynolds (extension)", e.verdict(), ""});
        }
    }
    return out;
}

std::string degree_tag(const CohomologyReport &r) {
    return "H^" + std::to_string(r.degree) + " (" + to_string(r.kind) + ")";
}

json verdict_section(const Verdict &v) { return io::to_json(v); }

} // namespace

std::pair<int, int> parse_degrees(const std::string &text) {
    auto num = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
            throw io::InputError("--degrees", "expected N or A..B with 0 <= A <= B, got \"" + text + "\"");
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = num(text);
        return {n, n};
    }
    int a = num(std::string_view(text).substr(0, dots)), b = num(std::string_view(text).substr(dots + 2));
    if (a > b)
        throw io::InputError("--degrees", "empty range \"" + text + "\"");
    return {a, b};
}

Outcome validate(const io::Workspace &ws, const Options &opt) {
    Outcome out;
    std::ostringstream os;
    json items = json::array();
    bool pass = true;
    for (const auto &it : ws.items()) {
        if (!opt.item.empty() && it.name != opt.item)
            continue;
        ItemChecks ic = item_checks(it, opt);
        const bool ok = all_ok(ic.checks);
        pass = pass && ok;
        json j = {{"name", it.name},
                  {"kind", it.kind},
                  {"status", ok ? "valid" : "quarantined"},
                  {"checks", checks_json(ic.checks)}};
        os << it.name << " (" << it.kind << "): " << (ok ? "valid" : "quarantined") << "\n";
        checks_text(os, ic.checks, "  ");
        if (opt.strict_literal) {
            j["audit"] = checks_json(ic.audit);
            if (!ic.audit.empty()) {
                os << "  audit (literal variants, informational):\n";
                checks_text(os, ic.audit, "    ");
            }
        }
        items.push_back(j);
    }
    if (!opt.item.empty() && items.empty())
        ws.get(opt.item);
    out.status = pass ? Pass : MathFailure;
    out.report = {{"command", "validate"}, {"status", pass ? "pass" : "fail"}, {"items", items}};
    out.text = os.str();
    return out;
}

Outcome cohomology(const io::Workspace &ws, const CohomologyOptions &opt) {
    const io::Item &it = ws.select({"rep", "pair"}, opt.item);
    RLDRep rld = it.kind == "rep" ? io::rep_from_json(it.payload) : adjoint_rep(io::pair_from_json(it.payload));
    Conventions conv;
    if (opt.strict_literal)
        conv = {PhiZeroMode::Identity, DerivationCompat::Literal};
    Complexes cx(rld, conv);
    auto [lo, hi] = opt.degrees.value_or(std::pair{0, cx.top_degree(opt.complex)});

    Outcome out;
    std::ostringstream os;
    json reports = json::array();
    for (int n = lo; n <= hi; ++n) {
        CohomologyReport r = cohomology(cx, opt.complex, n);
        if (!opt.basis)
            r.cocycle_basis.clear();
        reports.push_back(io::to_json(r));
        os << degree_tag(r) << ": dim C = " << r.dim_cochains << ", dim Z = " << r.dim_cocycles
           << ", dim B = " << r.dim_coboundaries << ", dim H = " << r.dim_h << "\n";
        for (std::size_t b = 0; b < r.cocycle_basis.size(); ++b)
            os << "  z" << b << " = " << vec_text(r.cocycle_basis[b]) << "\n";
    }
    out.report = {{"command", "cohomology"},
                  {"item", it.name},
                  {"complex", to_string(opt.complex)},
                  {"conventions", opt.strict_literal ? "literal" : "default"},
                  {"reports", reports}};
    out.text = os.str();
    return out;
}

Outcome deform(const io::Workspace &ws, const Options &opt) {
    const io::Item &it = ws.select({"truncation", "pair"}, opt.item);
    Outcome out;
    std::ostringstream os;
    std::optional<DeformationTruncation> t;
    ReynoldsLieDerPair base;
    if (it.kind == "truncation") {
        t = io::truncation_from_json(it.payload);
        base = t->base;
    } else {
        base = io::pair_from_json(it.payload);
    }
    require(is_reylieder(base), "deform: base pair invalid");

    json report = {{"command", "deform"}, {"item", it.name}};
    bool pass = true;
    if (t) {
        Verdict eq = validate_truncation(*t), inf = infinitesimal_is_cocycle(*t);
        pass = eq.ok();
        report["order"] = t->order;
        report["deformation_equations"] = verdict_section(eq);
        report["infinitesimal_cocycle"] = verdict_section(inf);
        os << "deformation equations up to order " << t->order << ": " << (eq.ok() ? "ok" : "FAIL") << "\n";
        verdict_text(os, eq, "  ");
        os << "infinitesimal 2-cocycle: " << (inf.ok() ? "ok" : "FAIL") << "\n";
        verdict_text(os, inf, "  ");
    }
    RigidityReport rr = rigidity_probe(base, t);
    json rj = {{"h2", io::to_json(rr.h2)}, {"rigid", rr.rigid}};
    rj["h2"]["cocycle_basis"] = json::array();
    if (rr.class_trivial)
        rj["class_trivial"] = *rr.class_trivial;
    rj["witness"] = rr.witness ? io::to_json(*rr.witness) : json(nullptr);
    rj["witness_verified"] = rr.witness_verified;
    rj["note"] = rr.note;
    report["rigidity"] = rj;
    os << "H^2 (rlieder): dim Z = " << rr.h2.dim_cocycles << ", dim B = " << rr.h2.dim_coboundaries
       << ", dim H = " << rr.h2.dim_h << (rr.rigid ? " (rigid)" : "") << "\n";
    if (rr.class_trivial)
        os << "infinitesimal class: " << (*rr.class_trivial ? "trivial" : "nontrivial") << "\n";
    if (rr.witness)
        os << "psi_1 witness" << (rr.witness_verified ? " (verified)" : "") << ":\n" << matrix_text(*rr.witness, "  ");
    if (!rr.note.empty())
        os << "note: " << rr.note << "\n";
    report["status"] = pass ? "pass" : "fail";
    out.status = pass ? Pass : MathFailure;
    out.report = report;
    out.text = os.str();
    return out;
}

Outcome extend(const io::Workspace &ws, const Options &opt) {
    const io::Item &it = ws.select({"extension"}, opt.item);
    auto in = io::extension_from_json(it.payload);
    ExtensionTotal t = build_extension(in.rep, in.datum, in.mode);
    Outcome out;
    std::ostringstream os;
    const bool pass = t.direct.ok();
    out.status = pass ? Pass : MathFailure;
    out.report = {{"command", "extend"},
                  {"item", it.name},
                  {"mode", in.mode == ExtensionMode::Central ? "central" : "abelian"},
                  {"status", pass ? "pass" : "fail"},
                  {"extension_axioms", verdict_section(t.direct)},
                  {"cocycle", verdict_section(t.cocycle)},
                  {"total", io::to_json(t.total)}};
    os << "extension axioms on L+V: " << (t.direct.ok() ? "ok" : "FAIL") << "\n";
    verdict_text(os, t.direct, "  ");
    os << "2-cocycle condition: " << (t.cocycle.ok() ? "ok" : "FAIL") << "\n";
    verdict_text(os, t.cocycle, "  ");
    out.text = os.str();
    return out;
}

Outcome obstruct(const io::Workspace &ws, const Options &opt) {
    const io::Item &it = ws.select({"obstruction"}, opt.item);
    auto in = io::obstruction_from_json(it.payload);
    ExtensibilityReport r = extensibility(in.extension, in.d_v, in.d);
    Outcome out;
    std::ostringstream os;
    json report = {{"command", "obstruction"},
                   {"item", it.name},
                   {"status", r.extensible ? "extensible" : "obstructed"},
                   {"ob2", io::to_json(r.obstruction.ob2)},
                   {"ob1", io::to_json(r.obstruction.ob1)},
                   {"cocycle", verdict_section(r.obstruction.cocycle)},
                   {"class_trivial", r.extensible},
                   {"gamma", r.gamma ? io::to_json(*r.gamma) : json(nullptr)},
                   {"d_hat", r.d_hat ? io::to_json(*r.d_hat) : json(nullptr)},
                   {"note", r.note}};
    os << "obstruction: " << (r.obstruction.ob2.is_zero() && r.obstruction.ob1.is_zero() ? "zero" : "nonzero")
       << ", cocycle check " << (r.obstruction.cocycle.ok() ? "ok" : "FAIL") << "\n";
    os << "class: " << (r.extensible ? "trivial, extensible" : "nontrivial, obstructed") << "\n";
    if (r.gamma)
        os << "gamma:\n" << matrix_text(*r.gamma, "  ");
    if (r.d_hat)
        os << "d_hat:\n" << matrix_text(*r.d_hat, "  ");
    if (!r.note.empty())
        os << "note: " << r.note << "\n";
    if (opt.strict_literal) {
        ObstructionReport lit = obstruction(in.extension, in.d_v, in.d, Ob2Mode::Literal);
        report["audit"] = {{"ob2_literal", io::to_json(lit.ob2)}, {"cocycle_literal", verdict_section(lit.cocycle)}};
        os << "audit (literal Ob2, informational): cocycle check " << (lit.cocycle.ok() ? "ok" : "FAIL") << "\n";
        verdict_text(os, lit.cocycle, "  ");
    }
    out.status = r.extensible ? Pass : MathFailure;
    out.report = report;
    out.text = os.str();
    return out;
}

Outcome guarded(const std::function<Outcome()> &body) {
    auto fail = [](int status, const std::string &kind, const std::string &msg, const Verdict *v) {
        Outcome o;
        o.status = status;
        o.report = {{"status", kind}, {"error", msg}};
        o.text = kind + ": " + msg + "\n";
        if (v) {
            o.report["violations"] = io::to_json(*v)["violations"];
            std::ostringstream os;
            verdict_text(os, *v, "  ");
            o.text += os.str();
        }
        return o;
    };
    try {
        return body();
    } catch (const io::InputError &e) {
        return fail(InputFailure, "input error", e.what(), nullptr);
    } catch (const ContractViolation &e) {
        return fail(InputFailure, "input error", e.what(), nullptr);
    } catch (const json::exception &e) {
        return fail(InputFailure, "input error", e.what(), nullptr);
    } catch (const PreconditionFailure &e) {
        return fail(MathFailure, "refused", e.what(), &e.verdict());
    } catch (const PostconditionFailure &e) {
        return fail(InternalFailure, "internal error", e.what(), &e.verdict());
    }
}

Outcome run_file(const std::string &path, const std::function<Outcome(const io::Workspace &)> &command) {
    return guarded([&] { return command(io::Workspace::load_file(path)); });
}

} // namespace reylie::cli

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   acceptance [--golden PATH] [--write-golden] [--log PATH]

#include "reylie/commands.hpp"
#include "support/corpus.hpp"
#include "support/direct.hpp"
#include "support/oracle.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace reylie;
using io::json;

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

struct Result {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string &why) {
        if (pass)
            first_failure = why;
        pass = false;
    }
    void expect(bool ok, const std::string &why) {
        if (!ok)
            fail(why);
    }
};

const ComplexKind kAllKinds[] = {ComplexKind::CE, ComplexKind::Reynolds, ComplexKind::R, ComplexKind::RLieDer};

const std::vector<corpus::Instance> &instances() {
    static const auto c = corpus::build(20240601u, 60);
    return c;
}

Result differential_squares() {
    Result r;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t products = 0;
    for (const auto &inst : instances()) {
        r.expect(inst.rld.algebra().dim() <= 4 && inst.rld.rep().dim_v <= 3, inst.name + ": outside size bounds");
        r.expect(check_rld_rep(inst.rld).ok(), inst.name + ": invalid instance");
        Complexes cx(inst.rld);
        for (auto kind : kAllKinds)
            for (int n = -1; n <= cx.top_degree(kind); ++n) {
                Matrix sq = cx.differential(kind, n + 1) * cx.differential(kind, n);
                r.expect(sq.is_zero(), inst.name + " " + to_string(kind) + " n=" + std::to_string(n));
                ++products;
            }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.expect(instances().size() >= 50, "corpus smaller than 50");
    r.expect(secs < 60.0, "over 60 s");
    std::ostringstream os;
    os << instances().size() << " instances, " << products << " products d_{n+1} d_n, " << std::fixed
       << std::setprecision(2) << secs << " s";
    r.detail = os.str();
    return r;
}

Result chain_maps(const std::string &log_path) {
    Result r;
    std::ofstream log(log_path);
    std::map<std::string, int> chosen;
    std::size_t identities = 0;
    for (const auto &inst : instances()) {
        Complexes cx(inst.rld);
        if (!cx.has_induced()) {
            r.fail(inst.name + ": no induced structure");
            continue;
        }
        const auto &audit = cx.induced().audit;
        chosen[to_string(audit.chosen)]++;
        log << inst.name << ": " << to_string(audit.chosen) << " (outer " << (audit.outer.ok() ? "passes" : "fails")
            << ", inner " << (audit.inner_evaluated ? (audit.inner.ok() ? "passes" : "fails") : "not evaluated")
            << ")\n";
        for (int n = 0; n <= cx.top_degree(ComplexKind::CE); ++n) {
            Matrix ph = cx.phi_matrix(n), ph1 = cx.phi_matrix(n + 1);
            Matrix dl = cx.big_delta_matrix(n), dl1 = cx.big_delta_matrix(n + 1);
            Matrix ce = cx.differential(ComplexKind::CE, n), re = cx.differential(ComplexKind::Reynolds, n);
            const std::string at = inst.name + " n=" + std::to_string(n);
            r.expect(re * ph == ph1 * ce, at + ": delta_R phi = phi delta_CE");
            r.expect(ph * dl == dl * ph, at + ": phi Delta = Delta phi");
            r.expect(ce * dl == dl1 * ce, at + ": delta_CE Delta = Delta delta_CE");
            r.expect(re * dl == dl1 * re, at + ": delta_R Delta = Delta delta_R");
            identities += 4;
        }
        for (int n = 0; n <= cx.top_degree(ComplexKind::R); ++n) {
            Matrix dr = cx.differential(ComplexKind::R, n);
            r.expect(dr * cx.big_delta_pair_matrix(n) == cx.big_delta_pair_matrix(n + 1) * dr,
                     inst.name + " n=" + std::to_string(n) + ": D_R Delta = Delta D_R");
            ++identities;
        }
    }
    std::ostringstream os;
    os << identities << " identities on " << instances().size() << " instances; induced variant";
    for (const auto &[k, v] : chosen)
        os << " " << k << "=" << v;
    os << " (log: " << log_path << ")";
    r.detail = os.str();
    return r;
}

Result induced_structure() {
    Result r;
    std::size_t checked = 0;
    for (const auto &fam : corpus::families()) {
        LieAlgebra l = corpus::to_algebra(fam.algebra);
        const int n = l.dim();
        for (const auto &ir : fam.reynolds) {
            Matrix rm = corpus::to_matrix(ir);
            const std::string at = fam.name + " R#" + std::to_string(checked);
            if (!is_reynolds(l, rm).ok()) {
                r.fail(at + ": corpus operator not Reynolds");
                continue;
            }
            LieAlgebra lr = induced_bracket(l, rm);
            r.expect(jacobi_check(lr).ok(), at + ": Jacobi of L_R");
            r.expect(is_reynolds(lr, rm).ok(), at + ": R not Reynolds on L_R");
            for (const auto &t : increasing_tuples(n, 2)) {
                Vector lhs = rm.apply(lr.basis_bracket(t[0], t[1]));
                Vector rhs = l.bracket(rm.column(sz(t[0])), rm.column(sz(t[1])));
                r.expect(lhs == rhs, at + ": R[x,y]_R != [Rx,Ry]");
            }
            // the same statements with integer arithmetic on the oracle tables
            oracle::IAlgebra ia(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto ri = oracle::image(ir, oracle::unit(n, i)), rj = oracle::image(ir, oracle::unit(n, j));
                    auto a = fam.algebra.bracket(ri, oracle::unit(n, j));
                    auto b = fam.algebra.bracket(oracle::unit(n, i), rj);
                    auto c = fam.algebra.bracket(ri, rj);
                    oracle::IVec v(sz(n));
                    for (std::size_t k = 0; k < sz(n); ++k)
                        v[k] = a[k] + b[k] - c[k];
                    r.expect(oracle::image(ir, v) == c, at + ": oracle R[x,y]_R != [Rx,Ry]");
                    ia.set(i, j, v);
                }
            r.expect(oracle::jacobi(ia), at + ": oracle Jacobi of L_R");
            r.expect(oracle::reynolds(ia, ir), at + ": oracle Reynolds on L_R");
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        r.expect(lr.basis_bracket(i, j)[sz(k)] == Scalar(static_cast<long>(ia.c[sz(i)][sz(j)][sz(k)])),
                                 at + ": L_R tables differ");
            ++checked;
        }
    }
    for (const auto &inst : instances()) {
        const LieAlgebra &l = inst.rld.algebra();
        const Matrix &rm = inst.rld.base.r;
        LieAlgebra lr = induced_bracket(l, rm);
        r.expect(jacobi_check(lr).ok(), inst.name + ": Jacobi of L_R");
        r.expect(is_reynolds(lr, rm).ok(), inst.name + ": R not Reynolds on L_R");
        for (const auto &t : increasing_tuples(l.dim(), 2))
            r.expect(rm.apply(lr.basis_bracket(t[0], t[1])) == l.bracket(rm.column(sz(t[0])), rm.column(sz(t[1]))),
                     inst.name + ": R[x,y]_R != [Rx,Ry]");
    }
    r.detail = std::to_string(checked) + " (L, R) from the searches plus " + std::to_string(instances().size()) +
               " corpus instances, library and integer oracle";
    return r;
}

Result abelian_cohomology() {
    Result r;
    int groups = 0;
    for (int m = 1; m <= 4; ++m)
        for (int v = 1; v <= 2; ++v) {
            Representation rep = trivial_rep(LieAlgebra::abelian(m), v);
            RLDRep rld{{rep, Matrix::zero(sz(m), sz(m)), Matrix::zero(sz(v), sz(v))},
                       Matrix::zero(sz(m), sz(m)),
                       Matrix::zero(sz(v), sz(v))};
            Complexes cx(rld);
            for (int n = 0; n <= m; ++n) {
                auto h = cohomology(cx, ComplexKind::CE, n);
                auto expect = static_cast<std::size_t>(oracle::binom(m, n) * v);
                r.expect(h.dim_h == expect, "m=" + std::to_string(m) + " v=" + std::to_string(v) + " n=" +
                                                std::to_string(n) + ": " + std::to_string(h.dim_h) +
                                                " != " + std::to_string(expect));
                r.expect(cx.differential(ComplexKind::CE, n).is_zero(), "nonzero differential");
                ++groups;
            }
        }
    r.detail = std::to_string(groups) + " groups, m <= 4, v <= 2";
    return r;
}

Result h1_characterization() {
    Result r;
    std::size_t total = 0;
    for (const auto &inst : instances()) {
        auto h = cohomology(ComplexKind::RLieDer, inst.rld, 1);
        auto oracle = direct::h1_rlieder(inst.rld);
        r.expect(h.dim_h == oracle.size(), inst.name + ": dimension");
        r.expect(span_contains(h.dim_cochains, h.cocycle_basis, oracle), inst.name + ": oracle not in H^1");
        r.expect(span_contains(h.dim_cochains, oracle, h.cocycle_basis), inst.name + ": H^1 not in oracle");
        total += h.dim_h;
    }
    r.detail = std::to_string(instances().size()) + " instances, total dim H^1 = " + std::to_string(total);
    return r;
}

Result extension_iff_cocycle() {
    Result r;
    int valid = 0, invalid = 0, sampled = 0, n = 0;
    for (const auto &c : corpus::extension_cases(2025, 240)) {
        ExtensionTotal t = build_extension(c.rep, c.datum);
        r.expect(t.direct.ok() == t.cocycle.ok(), c.name + ": verdicts disagree");
        if (c.from_cocycles) {
            ++sampled;
            r.expect(t.direct.ok(), c.name + ": sampled cocycle rejected");
        }
        (t.direct.ok() ? valid : invalid)++;
        ++n;
    }
    r.expect(n >= 200, "fewer than 200 data");
    r.expect(2 * sampled == n, "sampled half is not half");
    r.expect(valid > 0 && invalid > 0, "one direction untested");
    r.detail = std::to_string(n) + " data (" + std::to_string(sampled) + " from cocycles), valid " +
               std::to_string(valid) + ", invalid " + std::to_string(invalid);
    return r;
}

Result deformation_equivalence() {
    Result r;
    std::mt19937 rng(77);
    const auto bases = corpus::pairs(4242, 40);
    int pass = 0, fail = 0;
    for (const auto &p : bases) {
        Complexes cx(adjoint_rep(p));
        const int n = p.algebra.dim();
        auto cocycles = corpus::slot_free_cocycles(cx);
        const std::size_t dim = quad_space_dim(2, n, n);
        for (int trial = 0; trial < 3; ++trial) {
            Vector flat = cocycles.empty() ? Vector(dim) : corpus::random_combination(rng, cocycles, dim);
            if (trial == 1)
                flat[rng() % (dim - sz(n))] += 1;
            if (trial == 2)
                for (std::size_t k = 0; k + sz(n) < dim; ++k)
                    flat[k] += static_cast<long>(rng() % 3) - 1;
            auto t = order1_truncation(p, quad_from_flat(2, n, n, flat));
            bool direct = validate_truncation(t).ok();
            r.expect(direct == infinitesimal_is_cocycle(t).ok(), "order-1 verdicts disagree");
            (direct ? pass : fail)++;
        }
    }
    r.expect(pass + fail >= 100, "fewer than 100 truncations");
    r.expect(pass > 0 && fail > 0, "one side untested");

    int transports = 0;
    for (std::size_t k = 0; k < 20; ++k) {
        const auto &p = bases[k];
        const std::size_t n = sz(p.algebra.dim());
        Complexes cx(adjoint_rep(p));
        Matrix psi1 = corpus::random_matrix(rng, n, n, -2, 2);
        auto moved = transport_equivalence(trivial_truncation(p, 1), {1, {psi1}});
        r.expect(infinitesimal(moved).flat() == cx.d_rlieder(psi_cochain(psi1, p.algebra.dim())).flat(),
                 "transported infinitesimal differs from D(psi_1)");
        // order-1 terms written out: mu(psi a, b) + mu(a, psi b) - psi mu(a, b), [R, psi], [d, psi]
        for (const auto &t : increasing_tuples(p.algebra.dim(), 2)) {
            Vector a = unit_vector(n, sz(t[0])), b = unit_vector(n, sz(t[1]));
            Vector expect = p.algebra.bracket(psi1.apply(a), b) + p.algebra.bracket(a, psi1.apply(b)) -
                            psi1.apply(p.algebra.bracket(a, b));
            r.expect(moved.mu[0].at(t) == expect, "mu_1 of the transported deformation");
        }
        r.expect(moved.rs[0] == p.r * psi1 - psi1 * p.r, "R_1 of the transported deformation");
        r.expect(moved.ds[0] == p.d * psi1 - psi1 * p.d, "d_1 of the transported deformation");
        ++transports;
    }
    r.detail = std::to_string(pass + fail) + " order-1 truncations (valid " + std::to_string(pass) + ", invalid " +
               std::to_string(fail) + "), " + std::to_string(transports) + " psi_1 transports";
    return r;
}

Result obstruction_correctness() {
    Result r;
    int yes = 0, no = 0, h2_zero = 0, n = 0;
    for (const auto &c : corpus::central_cases(9090, 60)) {
        r.expect(c.ext.hat.algebra.dim() <= 5, c.name + ": middle term too large");
        auto rep = extensibility(c.ext, c.d_v, c.d);
        bool oracle = direct::extension_derivation(c.ext, c.d_v, c.d).has_value();
        r.expect(rep.extensible == oracle, c.name + ": verdict differs from brute force");
        r.expect(rep.obstruction.cocycle.ok(), c.name + ": obstruction not a cocycle");
        RLDRep triv = trivial_coefficients(c.ext, c.d_v, c.d);
        Complexes cx(triv);
        Vector image = cx.differential(ComplexKind::R, 2).apply(rep.obstruction.pair().flat());
        r.expect(is_zero(image), c.name + ": D_R(obstruction) != 0");
        if (cohomology(cx, ComplexKind::R, 2).dim_h == 0) {
            ++h2_zero;
            r.expect(rep.extensible, c.name + ": obstructed although H^2_R = 0");
        }
        (rep.extensible ? yes : no)++;
        ++n;
    }
    r.expect(n >= 50, "fewer than 50 central extensions");
    r.expect(yes > 0 && no > 0, "one verdict untested");
    r.expect(h2_zero > 0, "no instance with H^2_R = 0");
    r.detail = std::to_string(n) + " central extensions: extensible " + std::to_string(yes) + ", obstructed " +
               std::to_string(no) + ", H^2_R = 0 on " + std::to_string(h2_zero);
    return r;
}

// The two-dimensional example: [e0,e1] = e0, d = [[a,b],[0,a]], R = [[c,-c],[0,0]],
// read with columns as images (as everywhere else) and, for comparison, with rows as images.
json example_workspace() {
    const int cases[3][3] = {{1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    json items = json::object();
    items["aff"] = {{"kind", "lie_algebra"}, {"payload", io::to_json(LieAlgebra::affine_plane())}};
    for (const auto &abc : cases) {
        const long a = abc[0], b = abc[1], c = abc[2];
        Matrix d = Matrix::from_ints(2, 2, {a, b, 0, a}), r = Matrix::from_ints(2, 2, {c, -c, 0, 0});
        std::string tag = "a" + std::to_string(a) + "_b" + std::to_string(b) + "_c" + std::to_string(c);
        for (bool rows : {false, true}) {
            json p = {{"algebra", "aff"},
                      {"R", io::to_json(rows ? r.transpose() : r)},
                      {"d", io::to_json(rows ? d.transpose() : d)}};
            items[tag + (rows ? "_rows" : "_columns")] = {{"kind", "pair"}, {"payload", p}};
        }
    }
    return {{"kind", "workspace"}, {"payload", {{"items", items}}}};
}

// Hand values (docs/fixture_audit.md): residual LHS - RHS on the named tuple.
std::map<std::string, std::vector<std::pair<std::vector<int>, Vector>>> hand_residuals(long a, long b, long c,
                                                                                    bool rows) {
    std::map<std::string, std::vector<std::pair<std::vector<int>, Vector>>> out;
    auto add = [&](const std::string &id, std::vector<int> ix, Vector v) {
        if (!is_zero(v))
            out[id].push_back({std::move(ix), std::move(v)});
    };
    if (!rows) {
        add("reynolds", {0, 1}, {Scalar(-c * c), 0});
        add("derivation", {0, 1}, {Scalar(-a), 0});
        add("commutation", {1}, {Scalar(b * c), 0});
    } else {
        add("reynolds", {0, 1}, {Scalar(-c * c), Scalar(c * c)});
        add("derivation", {0, 1}, {Scalar(-a), Scalar(b)});
        add("commutation", {0}, {0, Scalar(-b * c)});
    }
    return out;
}

Result fixture_audit(const std::string &golden, bool write) {
    Result r;
    auto out = cli::validate(io::Workspace::from_json(example_workspace()), {true, ""});
    const std::string text = out.report.dump(2) + "\n";
    if (write) {
        std::ofstream(golden) << text;
        r.detail = "golden written to " + golden;
    }
    std::ifstream in(golden);
    std::stringstream ss;
    if (!in)
        r.fail("golden file missing: " + golden);
    ss << in.rdbuf();
    r.expect(ss.str() == text, "report differs from the golden file");

    int compared = 0;
    for (const auto &item : out.report["items"]) {
        const std::string name = item["name"];
        if (item["kind"] != "pair")
            continue;
        long a = name[1] - '0', b = name[4] - '0', c = name[7] - '0';
        bool rows = name.find("_rows") != std::string::npos;
        auto hand = hand_residuals(a, b, c, rows);
        for (const auto &chk : item["checks"]) {
            std::vector<std::pair<std::vector<int>, Vector>> got;
            for (const auto &v : chk["violations"])
                got.push_back({v["indices"].get<std::vector<int>>(), io::vector_from_json(v["residual"])});
            r.expect(got == hand[chk["check"].get<std::string>()], name + ": " + chk["check"].get<std::string>());
            ++compared;
        }
        // the literal Reynolds form happens to hold on every case
        for (const auto &chk : item["audit"])
            r.expect(chk["violations"].empty(), name + ": literal form residual");
        r.expect(item["status"] == "quarantined", name + ": expected to fail");
    }
    r.expect(compared == 24, "expected 6 pairs x 4 checks");
    if (r.detail.empty())
        r.detail = std::to_string(compared) + " checks on 3 parameter points x 2 orientations compared with the hand values";
    return r;
}

} // namespace

int main(int argc, char **argv) {
    std::string golden = REYLIE_GOLDEN_DIR "/two_dim_example_audit.json", log_path = "induced_variants.log";
    bool write = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--golden" && i + 1 < argc)
            golden = argv[++i];
        else if (a == "--log" && i + 1 < argc)
            log_path = argv[++i];
        else if (a == "--write-golden")
            write = true;
        else {
            std::cerr << "usage: acceptance [--golden PATH] [--write-golden] [--log PATH]\n";
            return 2;
        }
    }
    struct Criterion {
        int id;
        const char *title;
        std::function<Result()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "differentials square to zero", differential_squares},
        {2, "chain-map identities", [&] { return chain_maps(log_path); }},
        {3, "induced structure", induced_structure},
        {4, "abelian cohomology is binomial", abelian_cohomology},
        {5, "H^1 equals the direct solve", h1_characterization},
        {6, "extension iff cocycle", extension_iff_cocycle},
        {7, "order-1 deformations and transport", deformation_equivalence},
        {8, "obstruction correctness", obstruction_correctness},
        {9, "fixture audit", [&] { return fixture_audit(golden, write); }},
    };
    bool all = true;
    for (const auto &c : criteria) {
        Result r;
        try {
            r = c.run();
        } catch (const std::exception &e) {
            r.fail(std::string("exception: ") + e.what());
        }
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << ": " << r.detail;
        if (!r.pass)
            std::cout << " [first failure: " << r.first_failure << "]";
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}

#include "reylie/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace reylie;

namespace {

using Command = std::function<cli::Outcome(const io::Workspace &)>;

// Runs a command on a JSON document given as text; returns (status, report text).
std::pair<int, std::string> run_text(const std::string &doc, const Command &command) {
    cli::Outcome out = cli::guarded([&] { return command(io::Workspace::from_json(io::parse(doc))); });
    return {out.status, out.report.dump()};
}

cli::Options options(bool strict_literal, const std::string &item) {
    cli::Options o;
    o.strict_literal = strict_literal;
    o.item = item;
    return o;
}

std::string complex_matrix(const std::string &doc, const std::string &kind, int n, const std::string &item) {
    auto ws = io::Workspace::from_json(io::parse(doc));
    const io::Item &it = ws.select({"rep", "pair"}, item);
    RLDRep rld = it.kind == "rep" ? io::rep_from_json(it.payload) : adjoint_rep(io::pair_from_json(it.payload));
    auto k = parse_complex_kind(kind);
    if (!k)
        throw io::InputError("complex", "expected ce, reynolds, r or rlieder");
    return io::to_json(Complexes(rld).differential(*k, n)).dump();
}

} // namespace

PYBIND11_MODULE(_reylie, m) {
    m.doc() = "Exact computations with Reynolds LieDer pairs (JSON in, JSON out)";

    py::register_exception<io::InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "validate",
        [](const std::string &doc, bool strict, const std::string &item) {
            return run_text(doc, [&](const io::Workspace &ws) { return cli::validate(ws, options(strict, item)); });
        },
        py::arg("doc"), py::arg("strict_literal") = false, py::arg("item") = "");
    m.def(
        "cohomology",
        [](const std::string &doc, const std::string &complex, std::optional<std::pair<int, int>> degrees,
           bool basis, bool strict, const std::string &item) {
            cli::CohomologyOptions o;
            o.strict_literal = strict;
            o.item = item;
            o.basis = basis;
            o.degrees = degrees;
            return run_text(doc, [&](const io::Workspace &ws) {
                auto k = parse_complex_kind(complex);
                if (!k)
                    throw io::InputError("complex", "expected ce, reynolds, r or rlieder");
                o.complex = *k;
                return cli::cohomology(ws, o);
            });
        },
        py::arg("doc"), py::arg("complex") = "ce", py::arg("degrees") = std::nullopt, py::arg("basis") = false,
        py::arg("strict_literal") = false, py::arg("item") = "");
    m.def(
        "deform",
        [](const std::string &doc, bool strict, const std::string &item) {
            return run_text(doc, [&](const io::Workspace &ws) { return cli::deform(ws, options(strict, item)); });
        },
        py::arg("doc"), py::arg("strict_literal") = false, py::arg("item") = "");
    m.def(
        "extend",
        [](const std::string &doc, bool strict, const std::string &item) {
            return run_text(doc, [&](const io::Workspace &ws) { return cli::extend(ws, options(strict, item)); });
        },
        py::arg("doc"), py::arg("strict_literal") = false, py::arg("item") = "");
    m.def(
        "obstruction",
        [](const std::string &doc, bool strict, const std::string &item) {
            return run_text(doc, [&](const io::Workspace &ws) { return cli::obstruct(ws, options(strict, item)); });
        },
        py::arg("doc"), py::arg("strict_literal") = false, py::arg("item") = "");
    m.def("differential", &complex_matrix, py::arg("doc"), py::arg("complex"), py::arg("degree"),
          py::arg("item") = "", "Matrix of the degree-n differential, as a JSON matrix.");
}

#pragma once

// JSON encodings. Scalars are "p/q" strings ("p" when q = 1); integers are
// accepted on input. Indices are 0-based. Key order in output is fixed, so
// reports are byte-for-byte reproducible.
//
//   matrix        {"rows": r, "cols": c, "entries": [[s, ...], ...]}   row-major
//   lie_algebra   {"dim": n, "brackets": [{"i": i, "j": j, "value": [s, ...]}]}
//   reynolds_lie_algebra  {"algebra": A, "R": M}
//   pair          {"algebra": A, "R": M, "d": M}
//   rep           {"algebra": A, "R": M, "d": M, "dimV": v, "rho": [M, ...],
//                  "RV": M, "dV": M}
//                 or {"pair": P, "adjoint": true}
//   cochain       {"degree": k, "values": {"[i1,...,ik]": [s, ...]}}; absent
//                 tuples are zero, non-increasing keys are alternated
//   truncation    {"pair": P, "order": N, "mu": [C, ...], "R": [M, ...], "d": [M, ...]}
//   extension     {"rep": REP, "datum": {"theta": C, "xi": C, "chi": C},
//                  "mode": "abelian" | "central"}
//   central_extension  {"base": {"algebra": A, "R": M}, "RV": M, "theta": C,
//                  "xi": C, "section_shift": M (optional)}
//   obstruction   {"extension": CENTRAL, "d": M, "dV": M}

#include "reylie/deform.hpp"
#include "reylie/ext.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace reylie::io {

using json = nlohmann::ordered_json;

/// Malformed or ill-typed input; `where` is a JSON-pointer-like path.
class InputError : public std::runtime_error {
  public:
    InputError(const std::string &where, const std::string &what);
    const std::string &where() const { return where_; }
    const std::string &message() const { return message_; }

  private:
    std::string where_;
    std::string message_;
};

json to_json(const Scalar &s);
json to_json(const Vector &v);
json to_json(const Matrix &m);
json to_json(const LieAlgebra &l);
json to_json(const Cochain &c);
json to_json(const PairCochain &c);
json to_json(const ReynoldsLieDerPair &p);
json to_json(const RLDRep &r);
json to_json(const Violation &v);
json to_json(const Verdict &v);
json to_json(const CohomologyReport &r);
json to_json(const DeformationTruncation &t);
json to_json(const ExtensionDatum &d);

Scalar scalar_from_json(const json &j, const std::string &where = "");
Vector vector_from_json(const json &j, const std::string &where = "");
Matrix matrix_from_json(const json &j, const std::string &where = "");
LieAlgebra algebra_from_json(const json &j, const std::string &where = "");
ReynoldsLieAlgebra reynolds_algebra_from_json(const json &j, const std::string &where = "");
ReynoldsLieDerPair pair_from_json(const json &j, const std::string &where = "");
RLDRep rep_from_json(const json &j, const std::string &where = "");
Cochain cochain_from_json(const json &j, int dim_l, int dim_v, const std::string &where = "");
DeformationTruncation truncation_from_json(const json &j, const std::string &where = "");

struct ExtensionInput {
    RLDRep rep;
    ExtensionDatum datum;
    ExtensionMode mode = ExtensionMode::Abelian;
};
ExtensionInput extension_from_json(const json &j, const std::string &where = "");

CentralExtension central_from_json(const json &j, const std::string &where = "");

struct ObstructionInput {
    CentralExtension extension;
    Matrix d;
    Matrix d_v;
};
ObstructionInput obstruction_from_json(const json &j, const std::string &where = "");

/// Parses text; syntax errors become InputError with the byte offset.
json parse(const std::string &text, const std::string &source = "<input>");

} // namespace reylie::io

#include "doctest.h"

#include "reylie/rep.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <random>

using namespace reylie;

TEST_CASE("check_rep") {
    LieAlgebra h = LieAlgebra::heisenberg();
    CHECK(check_rep(trivial_rep(h, 2)).ok());
    CHECK(check_rep(adjoint_action(h)).ok());
    CHECK(check_rep(adjoint_action(LieAlgebra::affine_plane())).ok());

    Representation bad = adjoint_action(h);
    bad.action[0](0, 0) = 1;
    Verdict v = check_rep(bad);
    CHECK_FALSE(v.ok());
    CHECK(v.violations()[0].identity == "representation");

    Representation shape = trivial_rep(h, 2);
    shape.action.pop_back();
    CHECK_THROWS_AS(check_rep(shape), ContractViolation);
}

TEST_CASE("check_rep agrees with the integer oracle") {
    auto il = oracle::affine_plane();
    LieAlgebra l = corpus::to_algebra(il);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        oracle::IRep ir{2, {}};
        Representation r = trivial_rep(l, 2);
        for (int i = 0; i < 2; ++i) {
            oracle::IMat m{2, {}};
            for (int k = 0; k < 4; ++k)
                m.a.push_back(static_cast<int>(rng() % 3) - 1);
            ir.rho.push_back(m);
            r.action[static_cast<std::size_t>(i)] = corpus::to_matrix(m);
        }
        CHECK(check_rep(r).ok() == oracle::representation(il, ir));
    }
}

TEST_CASE("check_reynolds_rep") {
    LieAlgebra h = LieAlgebra::heisenberg();
    for (const auto &ir : oracle::reynolds_operators(oracle::heisenberg(), -1, 1)) {
        Matrix r = corpus::to_matrix(ir);
        CHECK(check_reynolds_rep({trivial_rep(h, 2), r, Matrix::from_ints(2, 2, {1, 2, 3, 4})}).ok());
        CHECK(check_reynolds_rep({adjoint_action(h), r, r}).ok());
    }
    ReynoldsRep adj{adjoint_action(h), Matrix::identity(3), Matrix::identity(3)};
    ReynoldsRep triv{trivial_rep(h, 1), Matrix::identity(3), Matrix::from_ints(1, 1, {5})};
    auto sum = direct_sum_rep({adj, triv});
    CHECK(sum.base.dim_v == 4);
    CHECK(check_reynolds_rep(sum).ok());
    CHECK(direct_sum_rep({adj}).base.action == adj.base.action);
    CHECK_THROWS_AS(check_reynolds_rep({trivial_rep(LieAlgebra::affine_plane(), 1),
                                        Matrix::from_ints(2, 2, {1, 0, 0, 0}), Matrix::identity(1)}),
                    PreconditionFailure);
}

TEST_CASE("direct sum validity is blockwise") {
    LieAlgebra l = LieAlgebra::affine_plane();
    Matrix r = Matrix::from_ints(2, 2, {0, 1, 0, 1});
    Representation aff2 = trivial_rep(l, 2);
    aff2.action[0] = Matrix::from_ints(2, 2, {0, 1, 0, 0});
    aff2.action[1] = Matrix::from_ints(2, 2, {0, 0, 0, 1});
    ReynoldsRep good{adjoint_action(l), r, r};
    oracle::grid_search(2, -1, 1, [&](const oracle::IMat &m) {
        ReynoldsRep other{aff2, r, corpus::to_matrix(m)};
        bool each = check_reynolds_rep(other).ok();
        CHECK(check_reynolds_rep(direct_sum_rep({good, other})).ok() == each);
        return false;
    });
}

TEST_CASE("check_rld_rep") {
    LieAlgebra l = LieAlgebra::abelian(2);
    Matrix r = Matrix::from_ints(2, 2, {0, 1, 0, 0});
    RLDRep triv{{trivial_rep(l, 2), r, Matrix::from_ints(2, 2, {1, 1, 0, 1})}, Matrix::identity(2),
                Matrix::from_ints(2, 2, {2, 3, 0, 2})};
    CHECK(check_rld_rep(triv).ok());

    RLDRep noncomm = triv;
    noncomm.d_v = Matrix::from_ints(2, 2, {1, 0, 0, 2});
    Verdict v = check_rld_rep(noncomm);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations()[0].identity == "representation-commutation");

    // adjoint of every corpus pair passes under the default reading
    for (const auto &p : corpus::pairs(3, 40))
        CHECK(check_rld_rep(adjoint_rep(p)).ok());
}

TEST_CASE("literal derivation-compatibility reading rejects some adjoint reps") {
    int literal_fail = 0;
    for (const auto &p : corpus::pairs(11, 60)) {
        RLDRep adj = adjoint_rep(p);
        literal_fail += !check_rld_rep(adj, DerivationCompat::Literal).ok();
    }
    CHECK(literal_fail > 0);
}

TEST_CASE("adjoint_rep") {
    LieAlgebra a = LieAlgebra::abelian(2);
    auto r = adjoint_rep({a, Matrix::identity(2), Matrix::identity(2)});
    for (const auto &m : r.rep().action)
        CHECK(m.is_zero());
    LieAlgebra h = LieAlgebra::heisenberg();
    CHECK_NOTHROW(adjoint_rep({h, Matrix::identity(3), Matrix::zero(3, 3)}));
    CHECK_THROWS_AS(adjoint_rep({LieAlgebra::affine_plane(), Matrix::zero(2, 2), Matrix::identity(2)}),
                    PreconditionFailure);
}

TEST_CASE("induced representation") {
    LieAlgebra h = LieAlgebra::heisenberg();
    auto zero = induced_rep({trivial_rep(h, 2), Matrix::identity(3), Matrix::identity(2)});
    for (const auto &m : zero.rep.action)
        CHECK(m.is_zero());

    // R = Id, R_V = Id: both candidates collapse to rho
    ReynoldsRep id{adjoint_action(h), Matrix::identity(3), Matrix::identity(3)};
    CHECK(induced_action(id, InducedVariant::Outer) == id.base.action);
    CHECK(induced_action(id, InducedVariant::Inner) == id.base.action);
    auto ir = induced_rep(id);
    CHECK(ir.rep.algebra == h);
    CHECK(ir.audit.chosen == InducedVariant::Outer);

    for (const auto &inst : corpus::build(99, 60)) {
        auto res = induced_rep(inst.rld.base);
        CHECK(check_rep(res.rep).ok());
        CHECK(res.rep.algebra == induced_bracket(inst.rld.algebra(), inst.rld.base.r));
        CHECK(res.audit.chosen == InducedVariant::Outer);
    }
}

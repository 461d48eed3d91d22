#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/instances.hpp"

using namespace leonard;
using leonard::testing::load_instance;
using leonard::testing::rational_instance_files;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FieldElement q(long n, long den = 1) {
    return FieldElement::from_rational(mpq_class(n, den));
}

} // namespace

TEST_CASE("d = 0 system is trivially valid") {
    auto [sys, pa] = from_split_form({q(7)}, {q(-2)}, {});
    CHECK(sys.d() == 0);
    CHECK(sys.A() == Matrix::from_ints({{7}}, Q));
    CHECK(sys.Astar() == Matrix::from_ints({{-2}}, Q));
    CHECK(sys.E(0) == Matrix::identity(1, Q));
    CHECK(pa.varphi().empty());
    CHECK(pa.varphi_product() == q(1));
    CHECK(validate_system(sys).all_pass());
}

TEST_CASE("the smallest d = 1 instance has the expected split form") {
    auto [sys, pa] = leonard::testing::tiny_d1();
    CHECK(sys.A() == Matrix::from_ints({{0, 0}, {1, 1}}, Q));
    CHECK(sys.Astar() == Matrix::from_ints({{0, 1}, {0, 1}}, Q));
    CHECK(validate_system(sys).all_pass());

    // second split sequence by the trace-ratio definition, written out
    Matrix eta1 = sys.A() - Matrix::identity(2, Q); // (A - theta_1 I)
    FieldElement phi1 = (sys.theta_star(0) - sys.theta_star(1)) *
                        (eta1 * sys.Estar(0)).trace() / sys.Estar(0).trace();
    CHECK(pa.phi().at(0) == phi1);
    CHECK(phi1 == q(2));
}

TEST_CASE("invariant violations are rejected with named errors") {
    CHECK_THROWS_WITH_AS(from_split_form({q(1), q(1)}, {q(0), q(1)}, {q(1)}),
                         doctest::Contains("theta entries are not mutually distinct"), Error);
    CHECK_THROWS_WITH_AS(from_split_form({q(0), q(1)}, {q(2), q(2)}, {q(1)}),
                         doctest::Contains("theta_star entries are not mutually distinct"),
                         Error);
    CHECK_THROWS_WITH_AS(from_split_form({q(0), q(1)}, {q(0), q(1)}, {q(0)}),
                         doctest::Contains("varphi entries must be nonzero"), Error);
}

TEST_CASE("primitive idempotents of a diagonal matrix") {
    Matrix A = Matrix::from_ints({{0, 0}, {0, 1}}, Q);
    auto E = primitive_idempotents(A, {q(0), q(1)});
    CHECK(E[0] == Matrix::from_ints({{1, 0}, {0, 0}}, Q));
    CHECK(E[1] == Matrix::from_ints({{0, 0}, {0, 1}}, Q));

    CHECK_THROWS_AS(primitive_idempotents(A, {q(0), q(0)}), Error);
    CHECK_THROWS_AS(primitive_idempotents(A, {q(0), q(2)}), Error); // 2 is not an eigenvalue

    Matrix single = Matrix::from_ints({{5}}, Q);
    auto E0 = primitive_idempotents(single, {q(5)});
    CHECK(E0[0] == Matrix::identity(1, Q));
}

TEST_CASE("idempotent family relations hold on frozen instances") {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (const auto& name : rational_instance_files(d)) {
            auto [sys, pa] = load_instance(name);
            std::size_t n = d + 1;
            Matrix sum = Matrix::zero(n, n, sys.field());
            Matrix recA = Matrix::zero(n, n, sys.field());
            for (std::size_t i = 0; i <= d; ++i) {
                sum = sum + sys.E(i);
                recA = recA + sys.E(i).scaled(sys.theta(i));
                for (std::size_t j = 0; j <= d; ++j) {
                    Matrix prod = sys.E(i) * sys.E(j);
                    if (i == j) CHECK(prod == sys.E(i));
                    else CHECK(prod.is_zero());
                }
            }
            CHECK(sum == Matrix::identity(n, sys.field()));
            CHECK(recA == sys.A());
        }
    }
}

TEST_CASE("split sequences round-trip through the constructor") {
    for (std::size_t d = 1; d <= 5; ++d) {
        for (const auto& name : rational_instance_files(d)) {
            auto [sys, pa] = load_instance(name);
            SplitSequences ss = split_sequences(sys);
            CHECK(ss.varphi == pa.varphi());
            CHECK(ss.phi == pa.phi());
            for (const auto& x : ss.phi) CHECK_FALSE(x.is_zero());
        }
        auto [sysp, pap] = load_instance(leonard::testing::gf101_instance_file(d));
        SplitSequences ssp = split_sequences(sysp);
        CHECK(ssp.varphi == pap.varphi());
        for (const auto& x : ssp.phi) CHECK_FALSE(x.is_zero());
    }
}

TEST_CASE("parameter_array assembles the full quadruple") {
    auto [sys, pa] = leonard::testing::small_d2();
    ParameterArray again = parameter_array(sys);
    CHECK(again == pa);
    FieldElement prod = field_one(Q);
    for (const auto& x : pa.varphi()) prod *= x;
    CHECK(pa.varphi_product() == prod);
}

TEST_CASE("validate_system on a raw pair recovers admissible orderings") {
    auto [sys, pa] = leonard::testing::small_d2();
    ValidationReport rep = validate_system(sys.A(), sys.Astar());
    CHECK(rep.all_pass());
    REQUIRE(rep.system.has_value());
    // two traversals per side
    CHECK(rep.systems.size() == 4);
    bool found_original = false;
    for (const auto& cand : rep.systems) {
        CHECK(validate_system(cand).all_pass());
        if (cand.eigenvalues() == sys.eigenvalues() &&
            cand.dual_eigenvalues() == sys.dual_eigenvalues())
            found_original = true;
    }
    CHECK(found_original);
}

TEST_CASE("validate_system rejects non-Leonard pairs") {
    // diagonal pair: all off-diagonal E_i A* E_j vanish
    Matrix D1 = Matrix::from_ints({{0, 0}, {0, 1}}, Q);
    Matrix D2 = Matrix::from_ints({{3, 0}, {0, 4}}, Q);
    ValidationReport rep = validate_system(D1, D2);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.systems.empty());

    // irreducible characteristic polynomial over Q
    Matrix rot = Matrix::from_ints({{0, -1}, {1, 0}}, Q);
    ValidationReport rep2 = validate_system(rot, D2);
    CHECK_FALSE(rep2.all_pass());
    bool mf_failed = false;
    for (const auto& c : rep2.conditions)
        if (c.name == "A multiplicity-free" && !c.pass) mf_failed = true;
    CHECK(mf_failed);
}

TEST_CASE("supplied phi is cross-checked") {
    auto [sys, pa] = leonard::testing::tiny_d1();
    ParameterArray good(pa.theta(), pa.theta_star(), pa.varphi(), pa.phi());
    CHECK_NOTHROW(from_split_form(good));
    ParameterArray bad(pa.theta(), pa.theta_star(), pa.varphi(), {q(5)});
    CHECK_THROWS_WITH_AS(from_split_form(bad), doctest::Contains("phi"), Error);
}

TEST_CASE("GF(101) instances validate end to end") {
    for (std::size_t d = 1; d <= 5; ++d) {
        auto [sys, pa] = load_instance(leonard::testing::gf101_instance_file(d));
        CHECK(sys.field().is_prime_field());
        CHECK(validate_system(sys).all_pass());
    }
}

TEST_CASE("other prime moduli work, and degenerate reductions are rejected") {
    // the d = 1 instance reduces cleanly mod 7 and mod 7919
    for (std::uint64_t p : {7ull, 7919ull}) {
        FieldSpec f = FieldSpec::prime_field(p);
        auto e = [&](long v) { return FieldElement::from_int(v, f); };
        auto [sys, pa] = from_split_form({e(0), e(1)}, {e(0), e(1)}, {e(1)});
        CHECK(validate_system(sys).all_pass());
        CHECK(pa.phi().at(0) == e(2));
    }
    // mod 2 the derived second split sequence vanishes, so the same data
    // is not a parameter array there
    FieldSpec f2 = FieldSpec::prime_field(2);
    auto e2 = [&](long v) { return FieldElement::from_int(v, f2); };
    CHECK_THROWS_AS(from_split_form({e2(0), e2(1)}, {e2(0), e2(1)}, {e2(1)}), Error);
}

TEST_CASE("randomized valid arrays satisfy the core invariants") {
    for (std::size_t d : {2, 3, 4}) {
        auto found =
            leonard::testing::random_valid_instances(d, 4, 1000 + static_cast<unsigned>(d));
        CHECK(found.size() >= 3); // the generator finds plenty at these sizes
        for (auto& [sys, pa] : found) {
            CHECK(validate_system(sys).all_pass());
            SplitSequences ss = split_sequences(sys);
            CHECK(ss.varphi == pa.varphi());
            CHECK(ss.phi == pa.phi());
        }
    }
}

TEST_CASE("raw-pair validation reports out-of-range searches instead of throwing") {
    // eigenvalue scanning over a huge prime field is refused as a verdict
    FieldSpec f = FieldSpec::prime_field(1000000000000000003ull);
    auto e = [&](long v) { return FieldElement::from_int(v, f); };
    auto [sys, pa] = from_split_form({e(0), e(1)}, {e(0), e(1)}, {e(1)});
    CHECK(validate_system(sys).all_pass()); // known eigenvalues: no scan needed
    ValidationReport raw = validate_system(sys.A(), sys.Astar());
    CHECK_FALSE(raw.all_pass());
    bool reported = false;
    for (const auto& c : raw.conditions)
        if (!c.pass && c.detail.find("root scan") != std::string::npos) reported = true;
    CHECK(reported);
}

TEST_CASE("raw-pair validation recovers orderings at full size") {
    auto [sys, pa] = load_instance("q_d5_a.json");
    ValidationReport rep = validate_system(sys.A(), sys.Astar());
    CHECK(rep.all_pass());
    CHECK(rep.systems.size() == 4);
    bool found_original = false;
    for (const auto& cand : rep.systems)
        if (cand.eigenvalues() == sys.eigenvalues() &&
            cand.dual_eigenvalues() == sys.dual_eigenvalues())
            found_original = true;
    CHECK(found_original);
}

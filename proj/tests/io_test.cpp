#include "adft/io.hpp"

#include <random>

#include "adft/slim.hpp"
#include "gtest/gtest.h"

namespace adft {
namespace {

TEST(RationalStrings, RoundTrip) {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 997);
    for (int i = 0; i < 500; ++i) {
        Rat r = make_rat(num(rng), den(rng));
        EXPECT_EQ(rat_from_string(rat_to_string(r)), r);
    }
    EXPECT_EQ(rat_to_string(make_rat(4, 2)), "2");
    EXPECT_EQ(rat_to_string(make_rat(-1, 2)), "-1/2");
    EXPECT_THROW(rat_from_string("1/0"), std::invalid_argument);
    EXPECT_THROW(rat_from_string("x"), std::invalid_argument);
    EXPECT_THROW(rat_from_string("1.5"), std::invalid_argument);
    EXPECT_THROW(rat_from_string(""), std::invalid_argument);
}

TEST(VectorFiles, RoundTrip) {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 64);
    std::vector<Rat> v(17);
    for (Rat& x : v) x = make_rat(num(rng), den(rng));
    EXPECT_EQ(parse_vector(serialize_vector(v)), v);
    EXPECT_THROW(parse_vector("2\n1\n"), std::invalid_argument);
    EXPECT_THROW(parse_vector(""), std::invalid_argument);
}

TEST(MatrixFiles, SlimIsIntegerCsv) {
    auto m = adft_matrix_slim(4);
    std::string text = serialize_matrix(m);
    EXPECT_EQ(text, "4,slim\n1,1,1,1\n1,1,-1,-1\n1,-1,1,-1\n1,-1,-1,1\n");
    EXPECT_EQ(parse_matrix(text), m);
    EXPECT_EQ(parse_matrix(text).provenance(), Provenance::ClosedForm);
}

TEST(MatrixFiles, OracleRoundTripWithRationalEntries) {
    // A non-slim generator produces genuine rational entries.
    auto ring = ring_create(3);
    CycloElem theta = zeta_power(ring, 1) + CycloElem::from_rational(ring, 2);
    auto m = adft_matrix_oracle(theta, 3);
    EXPECT_FALSE(m.is_slim());
    EXPECT_EQ(parse_matrix(serialize_matrix(m)), m);
    EXPECT_EQ(parse_matrix(serialize_matrix(m)).provenance(), Provenance::Oracle);
}

TEST(MatrixFiles, BodyIdenticalAcrossProvenances) {
    auto slim_lines = detail::split_lines(serialize_matrix(adft_matrix_slim(8)));
    auto oracle_lines =
        detail::split_lines(serialize_matrix(adft_matrix_oracle(slim_nbg(8).theta, 8)));
    ASSERT_EQ(slim_lines.size(), oracle_lines.size());
    for (std::size_t i = 1; i < slim_lines.size(); ++i) EXPECT_EQ(slim_lines[i], oracle_lines[i]);
}

TEST(MatrixFiles, RejectsMalformedInput) {
    EXPECT_THROW(parse_matrix("2,slim\n1,1\n"), std::invalid_argument);
    EXPECT_THROW(parse_matrix("2,wat\n1,1\n1,-1\n"), std::invalid_argument);
    // Not of ADFT shape: entry (k,l) must depend on kl mod n only.
    EXPECT_THROW(parse_matrix("2,slim\n1,1\n0,-1\n"), std::invalid_argument);
}

TEST(PlanExport, SingleButterflyIsTwoLines) {
    std::string text = export_plan(plan(1));
    EXPECT_EQ(text, "ADD 2 0 1\nSUB 3 0 1\n");
}

TEST(PlanExport, LineCountsAndOpcodes) {
    auto p = plan(3);
    auto lines = detail::split_lines(export_plan(p));
    long adds = 0, subs = 0, perms = 0;
    for (const auto& line : lines) {
        if (line.rfind("ADD", 0) == 0) ++adds;
        if (line.rfind("SUB", 0) == 0) ++subs;
        if (line.rfind("PERM", 0) == 0) ++perms;
    }
    EXPECT_EQ(adds + subs, 22);
    EXPECT_EQ(perms, 1);
}

TEST(PlanExport, InterpreterMatchesExecute) {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    for (int t = 1; t <= 6; ++t) {
        auto p = plan(t);
        std::string program = export_plan(p);
        std::vector<Rat> v(static_cast<std::size_t>(p.n));
        for (Rat& x : v) x = make_rat(num(rng), den(rng));
        ASSERT_EQ(run_straight_line(program, v), execute(p, v)) << "t=" << t;
    }
}

TEST(PlanExport, InterpreterRejectsBadPrograms) {
    std::vector<Rat> v(2, Rat(1));
    EXPECT_THROW(run_straight_line("MUL 2 0 1\n", v), std::invalid_argument);
    EXPECT_THROW(run_straight_line("ADD 2 0\n", v), std::invalid_argument);
}

}  // namespace
}  // namespace adft

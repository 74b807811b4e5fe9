#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cct/comparison.hpp"
#include "cct/simplicial.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace cct;

namespace {

SimplicialComplex edge() { return SimplicialComplex::parse_facets("a b\n"); }

Chain chain_of(const SimplicialComplex& K, std::vector<std::vector<std::string>> simplices) {
    std::vector<SimplexId> ids;
    for (auto& v : simplices) ids.push_back(*K.find(Simplex(v)));
    return Chain(std::move(ids));
}

}  // namespace

TEST_CASE("coboundary of a vertex indicator on the edge complex") {
    auto K = edge();
    Field F(FieldSpec::rationals());
    Cochain f = Cochain::indicator(K, F, Side::simplicial, chain_of(K, {{"a"}}));
    Cochain df = simplicial_coboundary(f);
    CHECK(df.at(chain_of(K, {{"a"}, {"a", "b"}})) == F.from_int(-1));
    CHECK(df.at(chain_of(K, {{"b"}, {"a", "b"}})) == F.zero());
    CHECK(df.support_size() == 1);
    CHECK(simplicial_coboundary(df).is_zero());
}

TEST_CASE("coboundary of the constant cochain vanishes") {
    for (const char* name : {"interval.facets", "circle.facets", "triangle.facets"}) {
        auto K = testing::load(name);
        Field F(FieldSpec::prime(7));
        CHECK(simplicial_coboundary(Cochain::unit(K, F, Side::simplicial)).is_zero());
    }
}

TEST_CASE("d after d is zero on random cochains of all corpus complexes") {
    for (const char* name : {"interval.facets", "circle.facets", "triangle.facets",
                             "sphere.facets", "rp2.facets", "torus.facets"}) {
        auto K = testing::load(name);
        const bool small = K.size() <= 7;
        for (FieldSpec spec : small ? std::vector<FieldSpec>{FieldSpec::prime(101),
                                                             FieldSpec::rationals()}
                                    : std::vector<FieldSpec>{FieldSpec::prime(101)}) {
            Field F(spec);
            SplitMix64 rng(5);
            for (int degree = 0; degree <= 4; ++degree) {
                Cochain f = random_cochain(K, F, Side::simplicial, degree, rng);
                CHECK(simplicial_coboundary(simplicial_coboundary(f)).is_zero());
            }
        }
    }
}

TEST_CASE("cup in degree zero is the pointwise product") {
    auto K = edge();
    Field F(FieldSpec::prime(7));
    SplitMix64 rng(11);
    Cochain f = random_cochain(K, F, Side::simplicial, 0, rng);
    Cochain g = random_cochain(K, F, Side::simplicial, 0, rng);
    Cochain fg = simplicial_cup(f, g);
    for (const Chain& c : enumerate_chains(K, 0, false))
        CHECK(fg.at(c) == F.mul(f.at(c), g.at(c)));
}

TEST_CASE("cup of indicators hits the glued chain") {
    auto K = edge();
    Field F(FieldSpec::rationals());
    Cochain f = Cochain::indicator(K, F, Side::simplicial, chain_of(K, {{"a"}}));
    Cochain g = Cochain::indicator(K, F, Side::simplicial,
                                   chain_of(K, {{"a"}, {"a", "b"}}));
    Cochain fg = simplicial_cup(f, g);
    CHECK(fg.support_size() == 1);
    CHECK(fg.at(chain_of(K, {{"a"}, {"a", "b"}})) == F.one());
}

TEST_CASE("the constant degree-0 cochain is a two-sided cup unit") {
    auto K = testing::load("triangle.facets");
    Field F(FieldSpec::prime(101));
    Cochain unit = Cochain::unit(K, F, Side::simplicial);
    SplitMix64 rng(3);
    for (int degree = 0; degree <= 2; ++degree) {
        Cochain f = random_cochain(K, F, Side::simplicial, degree, rng);
        CHECK(simplicial_cup(f, unit) == f);
        CHECK(simplicial_cup(unit, f) == f);
    }
}

TEST_CASE("cup is associative") {
    auto K = testing::load("circle.facets");
    Field F(FieldSpec::rationals());
    SplitMix64 rng(17);
    for (int t = 0; t < 6; ++t) {
        Cochain f = random_cochain(K, F, Side::simplicial, t % 2, rng);
        Cochain g = random_cochain(K, F, Side::simplicial, (t + 1) % 2, rng);
        Cochain h = random_cochain(K, F, Side::simplicial, 1, rng);
        CHECK(simplicial_cup(simplicial_cup(f, g), h) ==
              simplicial_cup(f, simplicial_cup(g, h)));
    }
}

TEST_CASE("brace of two degree-1 cochains is the pointwise product") {
    auto K = edge();
    Field F(FieldSpec::prime(7));
    SplitMix64 rng(23);
    Cochain f = random_cochain(K, F, Side::simplicial, 1, rng);
    Cochain g = random_cochain(K, F, Side::simplicial, 1, rng);
    std::vector<Cochain> args{g};
    Cochain fg = simplicial_brace(f, args);
    REQUIRE(fg.degree() == 1);
    for (const Chain& c : enumerate_chains(K, 1, false))
        CHECK(fg.at(c) == F.mul(f.at(c), g.at(c)));
}

TEST_CASE("degree-0 outer cochain braces to zero") {
    auto K = testing::load("circle.facets");
    Field F(FieldSpec::rationals());
    SplitMix64 rng(29);
    Cochain f = random_cochain(K, F, Side::simplicial, 0, rng);
    for (int d = 1; d <= 2; ++d) {
        Cochain g = random_cochain(K, F, Side::simplicial, d, rng);
        std::vector<Cochain> args{g};
        Cochain fg = simplicial_brace(f, args);
        CHECK(fg.degree() == d - 1);
        CHECK(fg.is_zero());
    }
}

TEST_CASE("brace rejects an empty argument list") {
    auto K = edge();
    Field F(FieldSpec::prime(5));
    Cochain f = Cochain::unit(K, F, Side::simplicial);
    CHECK_THROWS_AS((void)simplicial_brace(f, {}), std::invalid_argument);
}

TEST_CASE("degree bookkeeping") {
    auto K = testing::load("triangle.facets");
    Field F(FieldSpec::prime(101));
    SplitMix64 rng(31);
    for (int t = 0; t < 8; ++t) {
        const int df = static_cast<int>(rng.below(3));
        const int r = 1 + static_cast<int>(rng.below(2));
        Cochain f = random_cochain(K, F, Side::simplicial, df, rng);
        std::vector<Cochain> args;
        int expected = df;
        for (int i = 0; i < r; ++i) {
            const int d = static_cast<int>(rng.below(3));
            args.push_back(random_cochain(K, F, Side::simplicial, d, rng));
            expected += d - 1;
        }
        CHECK(simplicial_brace(f, args).degree() == expected);
    }
}

TEST_CASE("optimized brace agrees with the naive full-tuple oracle") {
    for (const char* name : {"interval.facets", "circle.facets", "triangle.facets"}) {
        auto K = testing::load(name);
        for (FieldSpec spec : {FieldSpec::prime(101), FieldSpec::rationals()}) {
            Field F(spec);
            SplitMix64 rng(37);
            for (int t = 0; t < 10; ++t) {
                const int r = 1 + static_cast<int>(rng.below(2));
                Cochain f = random_cochain(K, F, Side::simplicial,
                                           static_cast<int>(rng.below(3)), rng);
                std::vector<Cochain> args;
                for (int i = 0; i < r; ++i)
                    args.push_back(random_cochain(K, F, Side::simplicial,
                                                  static_cast<int>(rng.below(3)), rng));
                CHECK(simplicial_brace(f, args) ==
                      oracle::naive_simplicial_brace(f, args));
            }
        }
    }
}

TEST_CASE("the flipped sign convention changes the result") {
    auto K = testing::load("triangle.facets");
    Field F(FieldSpec::prime(101));
    SplitMix64 rng(41);
    Cochain f = random_cochain(K, F, Side::simplicial, 2, rng);
    std::vector<Cochain> args{random_cochain(K, F, Side::simplicial, 1, rng)};
    CHECK(simplicial_brace_signed(f, args, BraceSign::standard) !=
          simplicial_brace_signed(f, args, BraceSign::flipped));
}

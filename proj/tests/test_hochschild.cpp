#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cct/comparison.hpp"
#include "cct/hochschild.hpp"
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

IncidenceElement gen(const SimplicialComplex& K, const Field& F, SimplexId a, SimplexId b) {
    IncidenceElement e(K, F);
    e.accumulate({a, b}, F.one());
    return e;
}

}  // namespace

TEST_CASE("generator products") {
    auto K = edge();  // 0 = {a}, 1 = {b}, 2 = {a,b}
    Field F(FieldSpec::rationals());
    auto prod = incidence_multiply(gen(K, F, 0, 2), gen(K, F, 2, 2));
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.at({0, 2}) == F.one());

    CHECK(incidence_multiply(gen(K, F, 0, 2), gen(K, F, 1, 2)).is_zero());
}

TEST_CASE("the diagonal sum is a two-sided unit") {
    auto K = testing::load("circle.facets");
    Field F(FieldSpec::prime(7));
    IncidenceElement unit = incidence_unit(K, F);
    SplitMix64 rng(3);
    IncidenceElement x(K, F);
    for (SimplexId a = 0; a < K.size(); ++a)
        for (SimplexId b = 0; b < K.size(); ++b)
            if (K.face_leq(a, b))
                x.accumulate({a, b}, F.from_int(static_cast<std::int64_t>(rng.below(7))));
    CHECK(incidence_multiply(unit, x).terms() == x.terms());
    CHECK(incidence_multiply(x, unit).terms() == x.terms());
}

TEST_CASE("incidence multiplication is associative") {
    auto K = testing::load("triangle.facets");
    Field F(FieldSpec::prime(101));
    SplitMix64 rng(9);
    auto draw = [&] {
        IncidenceElement x(K, F);
        for (SimplexId a = 0; a < K.size(); ++a)
            for (SimplexId b = 0; b < K.size(); ++b)
                if (K.face_leq(a, b))
                    x.accumulate({a, b},
                                 F.from_int(static_cast<std::int64_t>(rng.below(101))));
        return x;
    };
    for (int t = 0; t < 5; ++t) {
        auto x = draw(), y = draw(), z = draw();
        CHECK(incidence_multiply(incidence_multiply(x, y), z).terms() ==
              incidence_multiply(x, incidence_multiply(y, z)).terms());
    }
}

TEST_CASE("the path basis is the chain basis") {
    for (const char* name : {"interval.facets", "circle.facets", "triangle.facets",
                             "sphere.facets"}) {
        auto K = testing::load(name);
        for (int degree = 0; degree <= 4; ++degree) {
            for (bool normalized : {false, true}) {
                auto paths = enumerate_paths(K, degree, normalized);
                auto chains = enumerate_chains(K, degree, normalized);
                CHECK(paths == chains);
            }
        }
    }
}

TEST_CASE("coboundary of a degree-0 cochain is the difference function") {
    auto K = edge();
    Field F(FieldSpec::rationals());
    // F = indicator of the poset element {a}
    Cochain f = Cochain::indicator(K, F, Side::hochschild, chain_of(K, {{"a"}}));
    Cochain df = hochschild_coboundary(f);
    // (dF)[(s <= t)] = c(t) - c(s)
    CHECK(df.at(chain_of(K, {{"a"}, {"a", "b"}})) == F.from_int(-1));
    CHECK(df.at(chain_of(K, {{"b"}, {"a", "b"}})) == F.zero());
    CHECK(df.at(chain_of(K, {{"a"}, {"a"}})) == F.zero());
}

TEST_CASE("coboundary of the diagonal unit vanishes") {
    for (const char* name : {"interval.facets", "circle.facets"}) {
        auto K = testing::load(name);
        Field F(FieldSpec::prime(101));
        CHECK(hochschild_coboundary(Cochain::unit(K, F, Side::hochschild)).is_zero());
    }
}

TEST_CASE("d after d vanishes") {
    auto K = testing::load("circle.facets");
    for (FieldSpec spec : {FieldSpec::prime(2), FieldSpec::rationals()}) {
        Field F(spec);
        SplitMix64 rng(13);
        for (int degree = 0; degree <= 2; ++degree) {
            Cochain f = random_cochain(K, F, Side::hochschild, degree, rng);
            CHECK(hochschild_coboundary(hochschild_coboundary(f)).is_zero());
        }
    }
}

TEST_CASE("bimodule coboundary reduces to the delete-one alternating sum") {
    // on every basis cochain of degree <= 3 of every corpus complex
    for (const char* name : {"interval.facets", "circle.facets", "triangle.facets",
                             "sphere.facets", "rp2.facets", "torus.facets"}) {
        auto K = testing::load(name);
        Field F(FieldSpec::prime(7));
        for (int degree = 0; degree <= 3; ++degree) {
            for (const Chain& c : enumerate_chains(K, degree, false)) {
                Cochain f = Cochain::indicator(K, F, Side::hochschild, c);
                const Cochain lhs = hochschild_coboundary(f);
                const Cochain rhs = oracle::delete_one_coboundary(f);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("cup matches the bimodule-map evaluation on the edge complex") {
    auto K = edge();
    Field F(FieldSpec::rationals());
    // every basis path of degree <= 2
    for (int p = 0; p <= 2; ++p) {
        for (int q = 0; p + q <= 2; ++q) {
            for (const Chain& cf : enumerate_chains(K, p, false)) {
                for (const Chain& cg : enumerate_chains(K, q, false)) {
                    Cochain f = Cochain::indicator(K, F, Side::hochschild, cf);
                    Cochain g = Cochain::indicator(K, F, Side::hochschild, cg);
                    CHECK(hochschild_cup(f, g) == oracle::bimodule_hochschild_cup(f, g));
                }
            }
        }
    }
}

TEST_CASE("cup unit and pointwise degree zero") {
    auto K = testing::load("circle.facets");
    Field F(FieldSpec::prime(101));
    Cochain unit = Cochain::unit(K, F, Side::hochschild);
    SplitMix64 rng(19);
    for (int degree = 0; degree <= 2; ++degree) {
        Cochain f = random_cochain(K, F, Side::hochschild, degree, rng);
        CHECK(hochschild_cup(f, unit) == f);
        CHECK(hochschild_cup(unit, f) == f);
    }
    Cochain a = random_cochain(K, F, Side::hochschild, 0, rng);
    Cochain b = random_cochain(K, F, Side::hochschild, 0, rng);
    Cochain ab = hochschild_cup(a, b);
    for (const Chain& c : enumerate_chains(K, 0, false))
        CHECK(ab.at(c) == F.mul(a.at(c), b.at(c)));
}

TEST_CASE("brace of two degree-1 cochains composes on generators") {
    auto K = edge();
    Field F(FieldSpec::prime(7));
    SplitMix64 rng(23);
    Cochain x = random_cochain(K, F, Side::hochschild, 1, rng);
    Cochain y = random_cochain(K, F, Side::hochschild, 1, rng);
    std::vector<Cochain> args{y};
    Cochain xy = hochschild_brace(x, args);
    for (const Chain& c : enumerate_chains(K, 1, false))
        CHECK(xy.at(c) == F.mul(x.at(c), y.at(c)));
}

TEST_CASE("two insertion positions, both with positive sign") {
    // deg x = 2, deg x_1 = 1: on a degree-2 path the positions are i_1 = 0, 1
    // and (deg x_1 - 1) = 0 kills the sign exponent.
    auto K = testing::load("triangle.facets");
    Field F(FieldSpec::rationals());
    Cochain x(K, F, Side::hochschild, 2);
    for (const Chain& c : enumerate_chains(K, 2, false)) x.set(c, F.one());
    Cochain y(K, F, Side::hochschild, 1);
    for (const Chain& c : enumerate_chains(K, 1, false)) y.set(c, F.one());
    std::vector<Cochain> args{y};
    Cochain xy = hochschild_brace(x, args);
    for (const Chain& c : enumerate_chains(K, 2, false))
        CHECK(xy.at(c) == F.from_int(2));  // 1*1 + 1*1
}

TEST_CASE("brace agrees with the bimodule insertion oracle") {
    for (const char* name : {"interval.facets", "circle.facets"}) {
        auto K = testing::load(name);
        for (FieldSpec spec : {FieldSpec::prime(101), FieldSpec::rationals()}) {
            Field F(spec);
            SplitMix64 rng(29);
            for (int t = 0; t < 8; ++t) {
                const int r = 1 + static_cast<int>(rng.below(2));
                Cochain x = random_cochain(K, F, Side::hochschild,
                                           static_cast<int>(rng.below(3)), rng);
                std::vector<Cochain> args;
                for (int i = 0; i < r; ++i)
                    args.push_back(random_cochain(K, F, Side::hochschild,
                                                  static_cast<int>(rng.below(3)), rng));
                CHECK(hochschild_brace(x, args) ==
                      oracle::bimodule_hochschild_brace(x, args));
            }
        }
    }
}

TEST_CASE("brace rejects an empty argument list") {
    auto K = edge();
    Field F(FieldSpec::prime(5));
    Cochain x = Cochain::unit(K, F, Side::hochschild);
    CHECK_THROWS_AS((void)hochschild_brace(x, {}), std::invalid_argument);
}

TEST_CASE("gerstenhaber bracket of cocycles is a cocycle") {
    auto K = testing::load("circle.facets");
    for (FieldSpec spec : {FieldSpec::prime(101), FieldSpec::rationals()}) {
        Field F(spec);
        SplitMix64 rng(31);
        auto bracket = [&](const Cochain& x, const Cochain& y) {
            std::vector<Cochain> ay{y}, ax{x};
            const long e = static_cast<long>(x.degree() - 1) * (y.degree() - 1);
            Cochain second = hochschild_brace(y, ax);
            if (e % 2 != 0) second = negated(second);
            return sub(hochschild_brace(x, ay), second);
        };
        for (int t = 0; t < 6; ++t) {
            // coboundaries are cocycles
            Cochain x = hochschild_coboundary(random_cochain(
                K, F, Side::hochschild, static_cast<int>(rng.below(2)), rng));
            Cochain y = hochschild_coboundary(random_cochain(
                K, F, Side::hochschild, static_cast<int>(rng.below(2)), rng));
            Cochain br = bracket(x, y);
            CHECK(hochschild_coboundary(br).is_zero());
            // antisymmetry
            const long e = static_cast<long>(x.degree() - 1) * (y.degree() - 1);
            Cochain anti = bracket(y, x);
            if (e % 2 != 0) anti = negated(anti);
            CHECK(add(br, anti).is_zero());
        }
    }
}

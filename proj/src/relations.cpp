#include "cct/relations.hpp"

#include "cct/hochschild.hpp"
#include "cct/simplicial.hpp"

#include <cassert>

namespace cct {

namespace {

int bar(const Cochain& x) { return x.degree() - 1; }

bool odd(long e) { return ((e % 2) + 2) % 2 == 1; }

Cochain signed_term(const Cochain& t, long exponent) {
    return odd(exponent) ? negated(t) : t;
}

}  // namespace

BdgaOps BdgaOps::simplicial() {
    return {
        [](const Cochain& f) { return simplicial_coboundary(f); },
        [](const Cochain& f, const Cochain& g) { return simplicial_cup(f, g); },
        [](const Cochain& f, std::span<const Cochain> a) { return simplicial_brace(f, a); },
    };
}

BdgaOps BdgaOps::hochschild() {
    return {
        [](const Cochain& f) { return hochschild_coboundary(f); },
        [](const Cochain& f, const Cochain& g) { return hochschild_cup(f, g); },
        [](const Cochain& f, std::span<const Cochain> a) { return hochschild_brace(f, a); },
    };
}

Cochain brace_relation_discrepancy(const BdgaOps& ops, const Cochain& v,
                                   std::span<const Cochain> vs,
                                   std::span<const Cochain> ws) {
    const int m = static_cast<int>(vs.size());
    const int n = static_cast<int>(ws.size());
    Cochain inner = ops.brace0(v, vs);
    Cochain lhs = ops.brace0(inner, ws);
    Cochain rhs(v.complex(), v.field(), v.side(), lhs.degree());

    // recurse over 0 <= i_1 <= j_1 <= ... <= i_m <= j_m <= n
    std::vector<std::pair<int, int>> picked;
    auto rec = [&](auto&& self, int k, int lo) -> void {
        if (k == m) {
            std::vector<Cochain> args;
            long exponent = 0;
            int pos = 0;
            for (int t = 0; t < m; ++t) {
                const auto [i_t, j_t] = picked[static_cast<std::size_t>(t)];
                for (int l = pos; l < i_t; ++l) args.push_back(ws[l]);
                std::vector<Cochain> inner_args(ws.begin() + i_t, ws.begin() + j_t);
                args.push_back(ops.brace0(vs[t], inner_args));
                long wsum = 0;
                for (int l = 0; l < i_t; ++l) wsum += bar(ws[l]);
                exponent += static_cast<long>(bar(vs[t])) * wsum;
                pos = j_t;
            }
            for (int l = pos; l < n; ++l) args.push_back(ws[l]);
            rhs = add(rhs, signed_term(ops.brace0(v, args), exponent));
            return;
        }
        for (int i = lo; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                picked.emplace_back(i, j);
                self(self, k + 1, j);
                picked.pop_back();
            }
        }
    };
    rec(rec, 0, 0);
    return sub(lhs, rhs);
}

Cochain distributivity_relation_discrepancy(const BdgaOps& ops, const Cochain& v,
                                            const Cochain& w,
                                            std::span<const Cochain> vs) {
    const int n = static_cast<int>(vs.size());
    Cochain lhs = ops.brace0(ops.cup(v, w), vs);
    Cochain rhs(v.complex(), v.field(), v.side(), lhs.degree());
    for (int k = 0; k <= n; ++k) {
        std::vector<Cochain> front(vs.begin(), vs.begin() + k);
        std::vector<Cochain> tail(vs.begin() + k, vs.end());
        Cochain left = ops.brace0(v, front);
        Cochain right = ops.brace0(w, tail);
        long tail_bars = 0;
        for (int p = k; p < n; ++p) tail_bars += bar(vs[p]);
        rhs = add(rhs, signed_term(ops.cup(left, right),
                                   static_cast<long>(left.degree()) * tail_bars));
    }
    return sub(lhs, rhs);
}

Cochain boundary_relation_discrepancy(const BdgaOps& ops, const Cochain& v,
                                      std::span<const Cochain> vs) {
    const int n = static_cast<int>(vs.size());
    assert(n >= 1);
    Cochain lhs = ops.coboundary(ops.brace0(v, vs));
    Cochain rhs(v.complex(), v.field(), v.side(), lhs.degree());

    auto bars_from = [&](int first) {
        long s = 0;
        for (int l = first; l < n; ++l) s += bar(vs[l]);
        return s;
    };

    // differential moved into each slot; slot 0 is v itself
    for (int i = 0; i <= n; ++i) {
        Cochain term(v.complex(), v.field(), v.side(), 0);
        if (i == 0) {
            term = ops.brace0(ops.coboundary(v), vs);
        } else {
            std::vector<Cochain> args(vs.begin(), vs.end());
            args[static_cast<std::size_t>(i - 1)] = ops.coboundary(vs[i - 1]);
            term = ops.brace0(v, args);
        }
        rhs = add(rhs, signed_term(term, bars_from(i)));
    }

    // v_1 . v{v_2..v_n}
    {
        std::vector<Cochain> rest(vs.begin() + 1, vs.end());
        long e = static_cast<long>(bar(vs[0])) * bars_from(1) + bar(vs[0]) + 1;
        rhs = add(rhs, signed_term(ops.cup(vs[0], ops.brace0(v, rest)), e));
    }

    // v{v_1,..,v_j . v_{j+1},..,v_n}, j = 1..n-1
    for (int j = 1; j < n; ++j) {
        std::vector<Cochain> args;
        for (int l = 0; l < j - 1; ++l) args.push_back(vs[l]);
        args.push_back(ops.cup(vs[j - 1], vs[j]));
        for (int l = j + 1; l < n; ++l) args.push_back(vs[l]);
        long e = bars_from(j + 1) + static_cast<long>(bar(vs[j - 1])) * bar(vs[j]) +
                 bar(vs[j - 1]);
        rhs = add(rhs, signed_term(ops.brace0(v, args), e));
    }

    // v{v_1..v_{n-1}} . v_n
    {
        std::vector<Cochain> front(vs.begin(), vs.end() - 1);
        long front_bars = 0;
        for (int l = 0; l + 1 < n; ++l) front_bars += bar(vs[l]);
        long e = static_cast<long>(bar(vs[n - 1]) + 1) * (bar(v) + front_bars) + 1;
        rhs = add(rhs, signed_term(ops.cup(ops.brace0(v, front), vs[n - 1]), e));
    }
    return sub(lhs, rhs);
}

CheckReport verify_bdga(const SimplicialComplex& K, const Field& F, Side side,
                        int max_degree, int max_args, std::uint64_t seed,
                        int trials, const std::string& name,
                        std::optional<Cochain>* first_failure) {
    CheckReport report{name, true, 0, trials, seed};
    const BdgaOps ops = side == Side::simplicial ? BdgaOps::simplicial()
                                                 : BdgaOps::hochschild();
    SplitMix64 rng(seed ^ (side == Side::simplicial ? 0x62646761732020ULL
                                                    : 0x62646761682020ULL));
    auto draw = [&](int degree) { return random_cochain(K, F, side, degree, rng); };
    auto draw_degree = [&]() { return static_cast<int>(rng.below(max_degree + 1)); };

    for (int t = 0; t < trials; ++t) {
        const int m = 1 + static_cast<int>(rng.below(max_args));
        const int n = 1 + static_cast<int>(rng.below(max_args));
        Cochain v = draw(draw_degree());
        Cochain w = draw(draw_degree());
        std::vector<Cochain> vs, ws;
        for (int i = 0; i < m; ++i) vs.push_back(draw(draw_degree()));
        for (int i = 0; i < n; ++i) ws.push_back(draw(draw_degree()));

        auto record = [&](const Cochain& disc) {
            if (disc.is_zero()) return;
            report.pass = false;
            report.max_support = std::max(report.max_support, disc.support_size());
            if (first_failure && !first_failure->has_value()) *first_failure = disc;
        };
        record(brace_relation_discrepancy(ops, v, vs, ws));
        record(distributivity_relation_discrepancy(ops, v, w, vs));
        record(boundary_relation_discrepancy(ops, v, vs));
    }
    return report;
}

}  // namespace cct

#include "cct/simplicial.hpp"

#include <cassert>
#include <stdexcept>

namespace cct {

Cochain simplicial_coboundary(const Cochain& f) {
    assert(f.side() == Side::simplicial);
    const auto& K = f.complex();
    const auto& F = f.field();
    Cochain out(K, F, Side::simplicial, f.degree() + 1);
    if (f.is_zero()) return out;
    for (const Chain& c : enumerate_chains(K, f.degree() + 1, false)) {
        Scalar acc = F.zero();
        for (int i = 0; i <= c.degree(); ++i) {
            Scalar term = f.at(c.without(i));
            acc = (i % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
        }
        out.set(c, acc);
    }
    return out;
}

Cochain simplicial_cup(const Cochain& f, const Cochain& g) {
    assert(f.side() == Side::simplicial && g.side() == Side::simplicial);
    assert(&f.complex() == &g.complex());
    const auto& F = f.field();
    Cochain out(f.complex(), F, Side::simplicial, f.degree() + g.degree());
    for (const auto& [cf, vf] : f.coefficients()) {
        for (const auto& [cg, vg] : g.coefficients()) {
            if (cf.back() != cg.front()) continue;
            std::vector<SimplexId> glued(cf.entries().begin(), cf.entries().end());
            glued.insert(glued.end(), cg.entries().begin() + 1, cg.entries().end());
            out.accumulate(Chain(std::move(glued)), F.mul(vf, vg));
        }
    }
    return out;
}

namespace {

// Evaluates f{args} on a single chain by recursing over admissible
// (b_k', b_k) tuples with b_k - b_k' pinned to deg(args[k]).
struct BraceEval {
    const Cochain& f;
    std::span<const Cochain> args;
    const Chain& c;
    BraceSign sign;
    const Field& F;

    std::vector<std::pair<int, int>> picked;
    Scalar total;

    BraceEval(const Cochain& f, std::span<const Cochain> args, const Chain& c,
              BraceSign sign)
        : f(f), args(args), c(c), sign(sign), F(f.field()), total(F.zero()) {
        picked.reserve(args.size());
    }

    void run(int k, int lo) {
        const int n = c.degree();
        if (k == static_cast<int>(args.size())) {
            emit();
            return;
        }
        const int d = args[static_cast<std::size_t>(k)].degree();
        if (d < 0) return;  // identically zero argument of negative degree
        for (int bp = lo; bp + d <= n; ++bp) {
            picked.emplace_back(bp, bp + d);
            run(k + 1, bp + d);
            picked.pop_back();
        }
    }

    void emit() {
        const int n = c.degree();
        std::vector<int> outer;
        for (int i = 0; i <= picked.front().first; ++i) outer.push_back(i);
        for (std::size_t k = 0; k < picked.size(); ++k) {
            const int hi = k + 1 < picked.size() ? picked[k + 1].first : n;
            for (int i = picked[k].second; i <= hi; ++i) outer.push_back(i);
        }
        Scalar val = f.at(c.restricted(outer));
        if (F.is_zero(val)) return;
        long exponent = 0;
        for (std::size_t k = 0; k < picked.size(); ++k) {
            const auto [bp, b] = picked[k];
            exponent += sign == BraceSign::standard ? bp * (b - bp - 1) : bp * (b - bp);
            std::vector<int> segment;
            for (int i = bp; i <= b; ++i) segment.push_back(i);
            val = F.mul(val, args[k].at(c.restricted(segment)));
            if (F.is_zero(val)) return;
        }
        if (exponent % 2 != 0) val = F.negate(val);
        total = F.add(total, val);
    }
};

}  // namespace

Cochain simplicial_brace_signed(const Cochain& f, std::span<const Cochain> args,
                                BraceSign sign) {
    assert(f.side() == Side::simplicial);
    if (args.empty()) throw std::invalid_argument("brace requires at least one argument");
    int degree = f.degree();
    for (const Cochain& a : args) {
        assert(a.side() == Side::simplicial && &a.complex() == &f.complex());
        degree += a.degree() - 1;
    }
    const auto& K = f.complex();
    Cochain out(K, f.field(), Side::simplicial, degree);
    if (degree < 0 || f.is_zero()) return out;
    for (const Chain& c : enumerate_chains(K, degree, false)) {
        BraceEval eval(f, args, c, sign);
        eval.run(0, 0);
        out.set(c, eval.total);
    }
    return out;
}

Cochain simplicial_brace(const Cochain& f, std::span<const Cochain> args) {
    return simplicial_brace_signed(f, args, BraceSign::standard);
}

}  // namespace cct

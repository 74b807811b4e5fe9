#include "cct/hochschild.hpp"

#include <cassert>
#include <stdexcept>

namespace cct {

void IncidenceElement::accumulate(const IncidencePair& p, const Scalar& v) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (!field_->is_zero(v)) terms_.emplace(p, v);
        return;
    }
    it->second = field_->add(it->second, v);
    if (field_->is_zero(it->second)) terms_.erase(it);
}

Scalar IncidenceElement::at(const IncidencePair& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? field_->zero() : it->second;
}

IncidenceElement incidence_multiply(const IncidenceElement& x, const IncidenceElement& y) {
    assert(&x.complex() == &y.complex());
    const Field& F = x.field();
    IncidenceElement out(x.complex(), F);
    for (const auto& [p, vp] : x.terms())
        for (const auto& [q, vq] : y.terms())
            if (p.dst == q.src) out.accumulate({p.src, q.dst}, F.mul(vp, vq));
    return out;
}

IncidenceElement incidence_unit(const SimplicialComplex& K, const Field& F) {
    IncidenceElement out(K, F);
    for (SimplexId i = 0; i < K.size(); ++i) out.accumulate({i, i}, F.one());
    return out;
}

std::vector<Chain> enumerate_paths(const SimplicialComplex& K, int degree,
                                   bool normalized) {
    std::vector<Chain> out;
    if (degree < 0) return out;
    const SimplexId n = static_cast<SimplexId>(K.size());
    if (degree == 0) {
        for (SimplexId i = 0; i < n; ++i) out.emplace_back(std::vector<SimplexId>{i});
        return out;
    }
    // generators in (src, dst) lexicographic order
    std::vector<IncidencePair> gens;
    for (SimplexId a = 0; a < n; ++a)
        for (SimplexId b = 0; b < n; ++b)
            if (K.face_leq(a, b) && (!normalized || a != b)) gens.push_back({a, b});

    std::vector<IncidencePair> seq;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == degree) {
            std::vector<SimplexId> trace;
            trace.push_back(seq.front().src);
            for (const auto& g : seq) trace.push_back(g.dst);
            out.emplace_back(std::move(trace));
            return;
        }
        for (const auto& g : gens) {
            if (!seq.empty() && seq.back().dst != g.src) continue;
            seq.push_back(g);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    return out;
}

IncidenceElement apply_on_generators(const Cochain& f,
                                     std::span<const IncidencePair> pairs) {
    assert(f.side() == Side::hochschild);
    const auto& K = f.complex();
    const Field& F = f.field();
    IncidenceElement out(K, F);
    if (static_cast<int>(pairs.size()) != f.degree()) return out;
    if (pairs.empty()) {
        // degree-0 cochain applied to the unit of S
        for (const auto& [c, v] : f.coefficients())
            out.accumulate({c.front(), c.front()}, v);
        return out;
    }
    std::vector<SimplexId> trace;
    trace.push_back(pairs.front().src);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0 && pairs[i - 1].dst != pairs[i].src) return out;  // not composable
        trace.push_back(pairs[i].dst);
    }
    Scalar v = f.at(Chain(std::move(trace)));
    out.accumulate({pairs.front().src, pairs.back().dst}, v);
    return out;
}

Cochain hochschild_coboundary(const Cochain& f) {
    assert(f.side() == Side::hochschild);
    const auto& K = f.complex();
    const Field& F = f.field();
    const int n = f.degree();
    Cochain out(K, F, Side::hochschild, n + 1);
    if (f.is_zero()) return out;
    for (const Chain& path : enumerate_paths(K, n + 1, false)) {
        std::vector<IncidencePair> pairs;
        for (int i = 0; i < n + 1; ++i)
            pairs.push_back({path.at(i), path.at(i + 1)});

        IncidenceElement gen_first(K, F), gen_last(K, F);
        gen_first.accumulate(pairs.front(), F.one());
        gen_last.accumulate(pairs.back(), F.one());

        IncidenceElement total =
            incidence_multiply(gen_first, apply_on_generators(f, {pairs.begin() + 1, pairs.end()}));
        for (int i = 1; i <= n; ++i) {
            std::vector<IncidencePair> fused;
            for (int j = 0; j < n + 1; ++j) {
                if (j == i - 1) {
                    fused.push_back({pairs[j].src, pairs[j + 1].dst});
                    ++j;
                } else {
                    fused.push_back(pairs[j]);
                }
            }
            IncidenceElement term = apply_on_generators(f, fused);
            for (const auto& [p, v] : term.terms())
                total.accumulate(p, i % 2 == 0 ? v : F.negate(v));
        }
        IncidenceElement last =
            incidence_multiply(apply_on_generators(f, {pairs.begin(), pairs.end() - 1}), gen_last);
        for (const auto& [p, v] : last.terms())
            total.accumulate(p, (n + 1) % 2 == 0 ? v : F.negate(v));

        out.set(path, total.at({path.front(), path.back()}));
    }
    return out;
}

Cochain hochschild_cup(const Cochain& f, const Cochain& g) {
    assert(f.side() == Side::hochschild && g.side() == Side::hochschild);
    assert(&f.complex() == &g.complex());
    const Field& F = f.field();
    Cochain out(f.complex(), F, Side::hochschild, f.degree() + g.degree());
    for (const auto& [cf, vf] : f.coefficients()) {
        for (const auto& [cg, vg] : g.coefficients()) {
            if (cf.back() != cg.front()) continue;  // output pairs do not compose
            std::vector<SimplexId> glued(cf.entries().begin(), cf.entries().end());
            glued.insert(glued.end(), cg.entries().begin() + 1, cg.entries().end());
            out.accumulate(Chain(std::move(glued)), F.mul(vf, vg));
        }
    }
    return out;
}

namespace {

struct InsertionEval {
    const Cochain& x;
    std::span<const Cochain> args;
    const Chain& path;
    const Field& F;

    std::vector<int> picked;
    Scalar total;

    InsertionEval(const Cochain& x, std::span<const Cochain> args, const Chain& path)
        : x(x), args(args), path(path), F(x.field()), total(F.zero()) {
        picked.reserve(args.size());
    }

    void run(int k, int lo) {
        const int m = path.degree();
        if (k == static_cast<int>(args.size())) {
            emit();
            return;
        }
        const int d = args[static_cast<std::size_t>(k)].degree();
        if (d < 0) return;
        for (int i = lo; i + d <= m; ++i) {
            picked.push_back(i);
            run(k + 1, i + d);
            picked.pop_back();
        }
    }

    void emit() {
        const int m = path.degree();
        // outer path: segments collapsed to their endpoint pairs
        std::vector<SimplexId> outer;
        for (int i = 0; i <= picked.front(); ++i) outer.push_back(path.at(i));
        for (std::size_t k = 0; k < picked.size(); ++k) {
            const int seg_end = picked[k] + args[k].degree();
            const int hi = k + 1 < picked.size() ? picked[k + 1] : m;
            for (int i = seg_end; i <= hi; ++i) outer.push_back(path.at(i));
        }
        Scalar val = x.at(Chain(std::move(outer)));
        if (F.is_zero(val)) return;
        long exponent = 0;
        for (std::size_t k = 0; k < picked.size(); ++k) {
            const int d = args[k].degree();
            exponent += picked[k] * (d - 1);
            std::vector<SimplexId> segment;
            for (int i = picked[k]; i <= picked[k] + d; ++i) segment.push_back(path.at(i));
            val = F.mul(val, args[k].at(Chain(std::move(segment))));
            if (F.is_zero(val)) return;
        }
        if (((exponent % 2) + 2) % 2 != 0) val = F.negate(val);
        total = F.add(total, val);
    }
};

}  // namespace

Cochain hochschild_brace(const Cochain& x, std::span<const Cochain> args) {
    assert(x.side() == Side::hochschild);
    if (args.empty()) throw std::invalid_argument("brace requires at least one argument");
    int degree = x.degree();
    for (const Cochain& a : args) {
        assert(a.side() == Side::hochschild && &a.complex() == &x.complex());
        degree += a.degree() - 1;
    }
    const auto& K = x.complex();
    Cochain out(K, x.field(), Side::hochschild, degree);
    if (degree < 0 || x.is_zero()) return out;
    for (const Chain& path : enumerate_paths(K, degree, false)) {
        InsertionEval eval(x, args, path);
        eval.run(0, 0);
        out.set(path, eval.total);
    }
    return out;
}

}  // namespace cct

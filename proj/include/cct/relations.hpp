#pragma once

#include "cct/comparison.hpp"

#include <functional>
#include <span>
#include <vector>

namespace cct {

/// The three operations of one brace differential graded algebra, bound to a
/// side. One relation harness serves both complexes.
struct BdgaOps {
    std::function<Cochain(const Cochain&)> coboundary;
    std::function<Cochain(const Cochain&, const Cochain&)> cup;
    std::function<Cochain(const Cochain&, std::span<const Cochain>)> brace;

    static BdgaOps simplicial();
    static BdgaOps hochschild();

    /// brace with the convention x{} = x.
    Cochain brace0(const Cochain& x, std::span<const Cochain> args) const {
        return args.empty() ? x : brace(x, args);
    }
};

/// Discrepancy (zero iff the identity holds) of the brace relation
///   (v{v_1..v_m}){w_1..w_n} =
///     sum over 0<=i_1<=j_1<=...<=i_m<=j_m<=n of
///       (-1)^{sum_k (|v_k|-1) sum_{l<=i_k} (|w_l|-1)}
///       v{w_1..w_{i_1}, v_1{w_{i_1+1}..w_{j_1}}, ..., v_m{..}, .., w_n}.
Cochain brace_relation_discrepancy(const BdgaOps& ops, const Cochain& v,
                                   std::span<const Cochain> vs,
                                   std::span<const Cochain> ws);

/// Discrepancy of the distributivity relation
///   (v.w){v_1..v_n} = sum_k (-1)^{deg(v{v_1..v_k}) * sum_{p>k} (|v_p|-1)}
///                     v{v_1..v_k} . w{v_{k+1}..v_n}.
Cochain distributivity_relation_discrepancy(const BdgaOps& ops, const Cochain& v,
                                            const Cochain& w,
                                            std::span<const Cochain> vs);

/// Discrepancy of the boundary relation. Writing |x|' = |x| - 1,
///   d(v{v_1..v_n}) =
///       sum_{i=0..n} (-1)^{sum_{l>i} |v_l|'} v{v_1,..,d v_i,..,v_n}
///           (the i = 0 term is (dv){v_1..v_n})
///     + (-1)^{|v_1|' sum_{l>=2} |v_l|' + |v_1|' + 1} v_1 . v{v_2..v_n}
///     + sum_{j=1..n-1} (-1)^{sum_{l>j+1} |v_l|' + |v_j|'|v_{j+1}|' + |v_j|'}
///           v{v_1,..,v_j.v_{j+1},..,v_n}
///     + (-1)^{(|v_n|'+1)(|v|' + sum_{l<n} |v_l|') + 1} v{v_1..v_{n-1}} . v_n.
Cochain boundary_relation_discrepancy(const BdgaOps& ops, const Cochain& v,
                                      std::span<const Cochain> vs);

/// Runs all three relations on `trials` random instances (degrees drawn in
/// [0, max_degree], argument counts in [1, max_args]).
CheckReport verify_bdga(const SimplicialComplex& K, const Field& F, Side side,
                        int max_degree, int max_args, std::uint64_t seed,
                        int trials, const std::string& name,
                        std::optional<Cochain>* first_failure = nullptr);

}  // namespace cct

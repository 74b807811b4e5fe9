#pragma once

#include "cct/cochain.hpp"

#include <span>
#include <vector>

namespace cct {

/// Sign rule for the summands of the simplicial brace. `standard` uses
/// exponent sum_k b_k' * (b_k - b_k' - 1), the convention under which the
/// comparison map intertwines the two brace families. `flipped` uses
/// sum_k b_k' * (b_k - b_k') and exists as a mutation fixture for tests.
enum class BraceSign { standard, flipped };

/// (df)(s_0 <= ... <= s_{n+1}) = sum_i (-1)^i f(entry i deleted).
Cochain simplicial_coboundary(const Cochain& f);

/// Front/back face product, no sign:
/// (f.g)(s_0 <= ... <= s_{p+q}) = f(s_0..s_p) * g(s_p..s_{p+q}).
Cochain simplicial_cup(const Cochain& f, const Cochain& g);

/// The brace f{f_1,...,f_r}, the dual of the iterated diagonal on the
/// subdivision: on a chain c of degree n it sums over index tuples
/// 0 <= b_1' <= b_1 <= ... <= b_r' <= b_r <= n with b_k - b_k' = deg f_k,
/// the summand being
///   sign * f(c restricted to [0..b_1'] [b_1..b_2'] ... [b_r..n]) *
///   prod_k f_k(c restricted to [b_k'..b_k]),
/// where the outer restriction keeps both endpoints of every inner segment
/// (so segments of degree 0 duplicate an entry). Result degree is
/// deg f + sum_k deg f_k - r. Throws std::invalid_argument when args is
/// empty.
Cochain simplicial_brace(const Cochain& f, std::span<const Cochain> args);

/// Same, with an explicit summand sign rule.
Cochain simplicial_brace_signed(const Cochain& f, std::span<const Cochain> args,
                                BraceSign sign);

}  // namespace cct

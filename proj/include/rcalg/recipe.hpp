#pragma once

#include "rcalg/engine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rcalg {

RingPtr make_ring(int n, uint32_t p = 32003);

/// Prefix functional construction language, e.g.
///   link(ci(4,4,4,11), general-forms(4,4,4,4,11))
///   ann(perp-pick(5, 4, general-forms(2)))
///
/// Ideal-valued:  general-forms(d..)  ci(d..)  monomial-ci(d..)  mpower(k)
///                ideal("poly", ..)  sum(A, B, ..)  link(C, X)  ann(D)
/// Dual-valued:   dual("poly", ..)  perp-pick(s, c, X)
///
/// A ci(...) given as the first argument of link is a general complete intersection
/// inside the second argument; elsewhere it is a sequence of general forms.
/// Randomness comes from one generator seeded with `seed`, consumed left to right
/// (the second argument of link before the first).
struct RecipeResult
{
    GradedIdeal ideal;
    std::vector<std::string> warnings;
    /// Set when the outermost construction is link(C, X).
    bool is_link = false;
    GradedIdeal link_ci;
    GradedIdeal link_source;
};

RecipeResult evaluate_recipe(RingPtr ring, const std::string& recipe, uint64_t seed);

/// Replays a witness produced by GradedIdeal::witness_json.
GradedIdeal load_witness(const std::string& json_text);

} // namespace rcalg

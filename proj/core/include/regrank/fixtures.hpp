#pragma once

#include "regrank/preference.hpp"
#include "regrank/ratings.hpp"

namespace regrank {
namespace fixtures {

// Tiny scenarios used by doc-tests, the verification oracle and the CLI.
// Each mirrors one of the schematic figures of the underlying construction.

// Two users who picked the same item in different contexts and therefore
// share no preference node: Lee rates B over A, Martin rates B over C.
RatingTable fig2();

// Direct user similarities: Jack and John share pairwise preferences (B>A,
// D>A), John also holds C>A (shared undesirable side with Jack's B>A), Lee
// holds the lone opposite preference A>D.
RatingTable fig3();

// Unreliable-path witness. Ratings give Jack {B>A, C>A} and Mary {B>C}; the
// graph additionally carries the phantom preference <A over C> that no user
// agrees with. The raw walk reaches A_d from Jack only through a
// representative-preference-representative detour, while every projected
// variant leaves A_d unreachable.
struct Fig6 {
    RatingTable ratings;
    TripartitePreferenceGraph graph;
    NodeId jack;  // user id
    NodeId a_d;   // rep id of A_d
    NodeId b_d;   // rep id of B_d
};
Fig6 fig6();

// Projection example: Mike and Martin share {A>B, D>B}, Jack holds A>C.
RatingTable fig7();

} // namespace fixtures
} // namespace regrank

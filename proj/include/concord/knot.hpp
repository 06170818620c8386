#pragma once
#include <memory>
#include <string>
#include <vector>

#include "concord/errors.hpp"

namespace concord {

// Expression tree for the input DSL:
//   expr := term (('#') term)* ; term := '-' term | atom 'r'? ;
//   atom := 'U' | 'T(' int ',' int ')' | 'C(' int ',' int ';' expr ')' | '(' expr ')'
// '-' is the concordance inverse and parses to Mirror(Reverse(.)).
struct KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

struct KnotExpr {
    enum Kind { Unknot, Torus, Cable, Mirror, Reverse, Sum };
    Kind kind = Unknot;
    int p = 0, q = 0;           // Torus / Cable indices
    KnotPtr child;              // Cable companion, Mirror/Reverse operand
    std::vector<KnotPtr> kids;  // Sum summands (>= 2)
};

KnotPtr make_unknot();
KnotPtr make_torus(int p, int q);
KnotPtr make_cable(int p, int q, KnotPtr companion);
KnotPtr make_mirror(KnotPtr k);
KnotPtr make_reverse(KnotPtr k);
KnotPtr make_sum(std::vector<KnotPtr> kids);

// Recursive-descent parser; throws input_error with the byte offset on bad
// input. Validation (coprimality, index ranges) happens during the parse.
KnotPtr parse_knot(const std::string& text);

// Canonical printer. parse_knot(render(e)) == e for normalized e.
std::string render(const KnotPtr& e);

// Canonical form: Mirror/Reverse distribute over Sum and cancel pairwise,
// Reverse is pushed through Cable and dropped on Torus/Unknot (so normalized
// trees carry no Reverse), Mirror(Unknot) -> Unknot, Cable over the unknot
// collapses to the torus knot, Torus indices sorted ascending, Sums are
// flattened with unknot summands dropped.
KnotPtr normalize(const KnotPtr& e);

bool equal(const KnotPtr& a, const KnotPtr& b);

// Cabling indices (p1,q1),...,(pn,qn) read innermost-first, with the
// q_{i+1} > p_i q_i p_{i+1} flags. flags[0] is the positivity condition alone.
struct AlgebraicKnotWitness {
    std::vector<std::pair<int, int>> indices;
    std::vector<bool> flags;
    bool valid = false;
};

bool is_iterated_torus(const KnotPtr& e); // no Sum/Mirror anywhere (after normalize)

// Classification witness; throws input_error on Sum/Mirror/Reverse nodes
// (classification is undefined there) and on the unknot.
AlgebraicKnotWitness is_algebraic(const KnotPtr& e);

} // namespace concord

#pragma once

#include "bbapart/apartness.hpp"
#include "bbapart/logic.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace bbapart
{

enum class Direction
{
    left_holds,
    right_holds,
    none,
};

std::string_view to_string( Direction d );

struct Verdict
{
    bool distinguishes;
    Direction direction;
};

// Closes `lts` first when it lacks reflexive silent steps.
Verdict verify_distinguishes( const Lts& lts, const Formula& f, StateId p, StateId q );

// P-formula read off a directed branching derivation for (p, q): at each node
// Delta <alpha> (/\psi+ & /\~psi-), with Delta the conjunction over left_pair children,
// psi+ over right_pair_forward and psi- over right_pair_backward children.
// Re-validates `d` first (InvariantViolation when it does not check).
PFormula formula_from_derivation( const Lts& lts, const Derivation& d );

class NotDistinguishingError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct ChainStage
{
    std::size_t index;  // 1-based position on the witness path
    StateId state;
    PFormula delta_plus;   // conjunction of the members of P_delta the state satisfies
    PFormula delta_minus;  // disjunction of the members it does not satisfy
};

struct RightSide
{
    std::vector<PFormula> pos;
    std::vector<PFormula> neg;
};

enum class ChainOutcome
{
    delta_minus,  // q |= Delta-_1
    delta_plus,   // q does not satisfy Delta+_1
    chain,        // Phi_1
};

std::string_view to_string( ChainOutcome o );

// The outermost diamond case met while converting.
struct DiamondTrace
{
    StateId p;  // the state satisfying the diamond
    StateId q;
    std::vector<ChainStage> stages;
    StateId target;  // p'' with p_n ->alpha p''
    RightSide right;
    ChainOutcome outcome;
};

struct Conversion
{
    PFormula formula;
    std::optional<DiamondTrace> trace;
};

// Turns an HMLU formula distinguishing p and q into a P-formula distinguishing them.
// The finite sets P_delta are realised relative to `lts`: one converted formula per ordered
// pair of states that delta distinguishes, memoised per subformula for the whole call.
// Negations swap the roles of p and q, so the result may hold on either side.
// Throws NotDistinguishingError when f does not distinguish p and q.
Conversion convert_hmlu( const Lts& lts, const Formula& f, StateId p, StateId q );
PFormula pformula_from_hmlu( const Lts& lts, const Formula& f, StateId p, StateId q );

// Unit and absorption laws, plus dropping a silent diamond layer whose single positive
// conjunct is a diamond with the same left side. Without an LTS the layer is only dropped
// when it has no negated conjuncts (always equivalent under reflexive silent steps); with
// one, any such candidate is kept iff both versions have the same satisfaction set there.
PFormula simplify( const PFormula& f );
PFormula simplify( const PFormula& f, const Lts& lts );

} // namespace bbapart

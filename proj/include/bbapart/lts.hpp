#pragma once

#include "bbapart/state_set.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bbapart
{

// Malformed input text (LTS files, formulas, name maps).
class ParseError : public std::runtime_error
{
public:
    ParseError( const std::string& what, std::size_t line = 0 )
            : std::runtime_error( line == 0 ? what : "line " + std::to_string( line ) + ": " + what ),
              _line{ line }
    {}

    // 1-based line of the offending input, 0 when not line-oriented.
    [[nodiscard]] std::size_t line() const { return _line; }

private:
    std::size_t _line;
};

// A theorem-level property that the implementation guarantees was found violated.
class InvariantViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Either the silent action tau or a visible, case-sensitive name.
// Ordering: the silent action precedes all visible ones; visible labels order by name.
class ActionLabel
{
public:
    static ActionLabel silent() { return ActionLabel{}; }
    static ActionLabel visible( std::string name );

    [[nodiscard]] bool is_silent() const { return _name.empty(); }
    // "tau" for the silent action.
    [[nodiscard]] std::string_view name() const { return is_silent() ? std::string_view{ "tau" } : _name; }

    friend bool operator==( const ActionLabel&, const ActionLabel& ) = default;
    friend std::strong_ordering operator<=>( const ActionLabel& a, const ActionLabel& b )
    {
        return a._name <=> b._name;  // silent is the empty name, so it sorts first
    }

private:
    ActionLabel() = default;
    std::string _name;
};

using ActionId = std::size_t;
inline constexpr ActionId kSilent = 0;

struct Transition
{
    StateId src;
    ActionId action;
    StateId dst;

    friend auto operator<=>( const Transition&, const Transition& ) = default;
};

struct LabelledTransition
{
    StateId src;
    ActionLabel label;
    StateId dst;
};

// Finite labelled transition system with a distinguished silent action.
//
// Action ids follow label order: id 0 is always tau, visible labels follow sorted by name.
// Transitions are deduplicated and kept sorted by (src, action, dst), so the successors of a
// state under one action form a contiguous, ascending range.
class Lts
{
public:
    Lts( std::size_t num_states, const std::vector<LabelledTransition>& transitions, StateId initial = 0,
         std::vector<std::string> names = {}, const std::vector<ActionLabel>& extra_actions = {} );

    [[nodiscard]] std::size_t num_states() const { return _num_states; }
    [[nodiscard]] std::size_t num_actions() const { return _actions.size(); }
    [[nodiscard]] std::size_t num_transitions() const { return _transitions.size(); }
    [[nodiscard]] StateId initial() const { return _initial; }

    [[nodiscard]] const ActionLabel& action( ActionId a ) const { return _actions[ a ]; }
    [[nodiscard]] const std::vector<ActionLabel>& actions() const { return _actions; }
    [[nodiscard]] std::optional<ActionId> find_action( const ActionLabel& label ) const;

    [[nodiscard]] std::span<const Transition> transitions() const { return _transitions; }
    [[nodiscard]] std::span<const StateId> successors( StateId s, ActionId a ) const;
    [[nodiscard]] bool has_transition( StateId src, ActionId a, StateId dst ) const;

    [[nodiscard]] bool has_silent_steps() const;
    [[nodiscard]] bool has_reflexive_silent_steps() const;

    // Display name of a state: the sidecar name if present, else its decimal index.
    [[nodiscard]] std::string state_name( StateId s ) const;
    [[nodiscard]] const std::vector<std::string>& names() const { return _names; }
    [[nodiscard]] std::optional<StateId> find_state( std::string_view name_or_index ) const;

    [[nodiscard]] std::vector<LabelledTransition> labelled_transitions() const;
    [[nodiscard]] Lts with_names( std::vector<std::string> names ) const;

    friend bool operator==( const Lts& a, const Lts& b )
    {
        return a._num_states == b._num_states && a._initial == b._initial && a._actions == b._actions &&
               a._transitions == b._transitions;
    }

private:
    std::size_t _num_states;
    StateId _initial;
    std::vector<ActionLabel> _actions;
    std::vector<Transition> _transitions;
    std::vector<std::size_t> _offsets;  // (state * num_actions + action) -> first index in _targets
    std::vector<StateId> _targets;
    std::vector<std::string> _names;
};

struct AutOptions
{
    // Label token that denotes the silent action; "tau" and "i" are the common conventions.
    std::string silent_label = "tau";
};

// Reads the Aldebaran format: a `des (<initial>,<#transitions>,<#states>)` header followed by
// one `(<from>,"<label>",<to>)` line per transition. Throws ParseError naming the line.
Lts parse_aut( std::istream& in, const AutOptions& options = {} );
Lts parse_aut( std::string_view text, const AutOptions& options = {} );
Lts load_aut( const std::string& path, const AutOptions& options = {} );

void write_aut( std::ostream& out, const Lts& lts );
std::string to_aut( const Lts& lts );

// The input plus a tau self-loop on every state.
Lts reflexive_closure( const Lts& lts );

// Reflexive-transitive tau reachability, precomputed as one bitset row per state, together
// with the step triples q ->>tau q' ->alpha q'' for every (q, alpha).
class TauClosure
{
public:
    explicit TauClosure( const Lts& lts );

    [[nodiscard]] const StateSet& reach( StateId s ) const { return _reach[ s ]; }
    [[nodiscard]] bool reaches( StateId from, StateId to ) const { return _reach[ from ].contains( to ); }

    // Pairs (q', q'') with q ->>tau q' ->alpha q'', sorted.
    [[nodiscard]] std::span<const std::pair<StateId, StateId>> triples( StateId q, ActionId alpha ) const
    {
        return _triples[ q * _num_actions + alpha ];
    }

private:
    std::size_t _num_actions;
    std::vector<StateSet> _reach;
    std::vector<std::vector<std::pair<StateId, StateId>>> _triples;
};

inline TauClosure tau_closure( const Lts& lts ) { return TauClosure{ lts }; }

// States reachable from p along tau paths that stay entirely inside `allowed`
// (both endpoints included); empty when p itself is not allowed.
StateSet constrained_tau_reach( const Lts& lts, StateId p, const StateSet& allowed );

} // namespace bbapart

#include "bbapart/apartness.hpp"

#include <map>
#include <unordered_set>

namespace bbapart
{

std::string_view to_string( ChildTag tag )
{
    switch ( tag )
    {
    case ChildTag::left_pair: return "left";
    case ChildTag::right_pair_forward: return "rightFwd";
    case ChildTag::right_pair_backward: return "rightBwd";
    }
    return "?";
}

namespace
{

class Extractor
{
public:
    Extractor( const Lts& lts, const DirectedPairRelation& rel ) : _closed{ reflexive_closure( lts ) }, _tc{ _closed }, _rel{ rel } {}

    std::shared_ptr<const Derivation> build( StateId p, StateId q )
    {
        if ( auto it = _memo.find( { p, q } ); it != _memo.end() )
            return it->second;

        const auto k = _rel.round( p, q );
        if ( k == 0 )
            throw InvariantViolation( "derivation requested for a pair outside the relation" );

        for ( ActionId a = 0; a < _closed.num_actions(); ++a )
            for ( auto p1 : _closed.successors( p, a ) )
            {
                auto node = try_witness( p, q, k, a, p1 );
                if ( node )
                {
                    _memo.emplace( std::pair{ p, q }, node );
                    return node;
                }
            }
        throw InvariantViolation( "no witness step justifies the round stamp of (" + std::to_string( p ) + ", " +
                                  std::to_string( q ) + ")" );
    }

private:
    std::shared_ptr<const Derivation> try_witness( StateId p, StateId q, std::uint32_t k, ActionId a, StateId p1 )
    {
        struct Pick
        {
            StateId q1, q2;
            ChildTag tag;
        };
        std::vector<Pick> picks;
        for ( auto [ q1, q2 ] : _tc.triples( q, a ) )
        {
            // Earliest sub-derivation wins; equal rounds fall back to tag order.
            const std::pair<StateId, StateId> options[] = { { p, q1 }, { p1, q2 }, { q2, p1 } };
            const ChildTag tags[] = { ChildTag::left_pair, ChildTag::right_pair_forward, ChildTag::right_pair_backward };
            int best = -1;
            for ( int i = 0; i < 3; ++i )
                if ( _rel.holds_before( options[ i ].first, options[ i ].second, k ) &&
                     ( best < 0 || _rel.round( options[ i ].first, options[ i ].second ) <
                                           _rel.round( options[ best ].first, options[ best ].second ) ) )
                    best = i;
            if ( best < 0 )
                return nullptr;
            picks.push_back( { q1, q2, tags[ best ] } );
        }

        auto node = std::make_shared<Derivation>();
        node->left = p;
        node->right = q;
        node->round = k;
        node->action = a;
        node->witness_target = p1;
        for ( const auto& pick : picks )
        {
            std::shared_ptr<const Derivation> sub;
            switch ( pick.tag )
            {
            case ChildTag::left_pair: sub = build( p, pick.q1 ); break;
            case ChildTag::right_pair_forward: sub = build( p1, pick.q2 ); break;
            case ChildTag::right_pair_backward: sub = build( pick.q2, p1 ); break;
            }
            node->children.push_back( { pick.q1, pick.q2, pick.tag, std::move( sub ) } );
        }
        return node;
    }

    Lts _closed;
    TauClosure _tc;
    const DirectedPairRelation& _rel;
    std::map<std::pair<StateId, StateId>, std::shared_ptr<const Derivation>> _memo;
};

void validate_node( const Lts& closed, const TauClosure& tc, const Derivation& d,
                    std::unordered_set<const Derivation*>& seen )
{
    if ( !seen.insert( &d ).second )
        return;
    auto where = [ & ] { return "derivation node (" + std::to_string( d.left ) + ", " + std::to_string( d.right ) + "): "; };
    if ( d.left >= closed.num_states() || d.right >= closed.num_states() || d.action >= closed.num_actions() )
        throw InvariantViolation( where() + "out of range" );
    if ( !closed.has_transition( d.left, d.action, d.witness_target ) )
        throw InvariantViolation( where() + "witness step is not a transition" );
    auto triples = tc.triples( d.right, d.action );
    if ( triples.size() != d.children.size() )
        throw InvariantViolation( where() + "children do not cover the quantifier" );
    for ( std::size_t i = 0; i < triples.size(); ++i )
    {
        const auto& c = d.children[ i ];
        if ( c.q_prime != triples[ i ].first || c.q_double_prime != triples[ i ].second || !c.sub )
            throw InvariantViolation( where() + "child does not match quantifier instance" );
        StateId l = 0, r = 0;
        switch ( c.tag )
        {
        case ChildTag::left_pair: l = d.left, r = c.q_prime; break;
        case ChildTag::right_pair_forward: l = d.witness_target, r = c.q_double_prime; break;
        case ChildTag::right_pair_backward: l = c.q_double_prime, r = d.witness_target; break;
        }
        if ( c.sub->left != l || c.sub->right != r )
            throw InvariantViolation( where() + "child conclusion does not match its tag" );
        if ( c.sub->round >= d.round )
            throw InvariantViolation( where() + "round stamps do not decrease" );
        validate_node( closed, tc, *c.sub, seen );
    }
}

} // namespace

std::shared_ptr<const Derivation> extract_derivation( const Lts& lts, const DirectedPairRelation& rel, StateId p,
                                                      StateId q )
{
    if ( p >= lts.num_states() || q >= lts.num_states() || rel.num_states() != lts.num_states() )
        throw std::invalid_argument( "state out of range" );
    if ( !rel.holds( p, q ) )
        throw NotApartError( "pair (" + lts.state_name( p ) + ", " + lts.state_name( q ) + ") is not in the relation" );
    Extractor ex( lts, rel );
    return ex.build( p, q );
}

void validate_derivation( const Lts& lts, const Derivation& d )
{
    const auto closed = reflexive_closure( lts );
    const TauClosure tc( closed );
    std::unordered_set<const Derivation*> seen;
    validate_node( closed, tc, d, seen );
}

std::size_t derivation_size( const Derivation& d )
{
    std::size_t n = 1;
    for ( const auto& c : d.children )
        n += derivation_size( *c.sub );
    return n;
}

} // namespace bbapart

#include "bbapart/distinguish.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

namespace bbapart
{

std::string_view to_string( Direction d )
{
    switch ( d )
    {
    case Direction::left_holds: return "leftHolds";
    case Direction::right_holds: return "rightHolds";
    case Direction::none: return "none";
    }
    return "?";
}

std::string_view to_string( ChainOutcome o )
{
    switch ( o )
    {
    case ChainOutcome::delta_minus: return "deltaMinus";
    case ChainOutcome::delta_plus: return "deltaPlus";
    case ChainOutcome::chain: return "chain";
    }
    return "?";
}

namespace
{

const Lts& closed_view( const Lts& lts, std::optional<Lts>& storage )
{
    if ( lts.has_reflexive_silent_steps() )
        return lts;
    storage.emplace( reflexive_closure( lts ) );
    return *storage;
}

void check_state( const Lts& lts, StateId s )
{
    if ( s >= lts.num_states() )
        throw std::invalid_argument( "state " + std::to_string( s ) + " out of range" );
}

// Right-hand side lists for a negated disjunction: ~(a | b) becomes ~a & ~b.
std::vector<PFormula> negated_members( const PFormula& disjunction )
{
    if ( disjunction.kind() == PFormula::Kind::bot )
        return {};
    return disjunction.disjuncts();
}

class DerivationSynth
{
public:
    explicit DerivationSynth( const Lts& lts ) : _lts{ lts } {}

    PFormula build( const Derivation& d )
    {
        if ( auto it = _memo.find( &d ); it != _memo.end() )
            return it->second;
        std::vector<PFormula> delta, pos, neg;
        for ( const auto& c : d.children )
        {
            auto sub = build( *c.sub );
            switch ( c.tag )
            {
            case ChildTag::left_pair: delta.push_back( std::move( sub ) ); break;
            case ChildTag::right_pair_forward: pos.push_back( std::move( sub ) ); break;
            case ChildTag::right_pair_backward: neg.push_back( std::move( sub ) ); break;
            }
        }
        auto f = PFormula::diamond( PFormula::conjunction( std::move( delta ) ), _lts.action( d.action ),
                                    std::move( pos ), std::move( neg ) );
        _memo.emplace( &d, f );
        return f;
    }

private:
    const Lts& _lts;
    std::unordered_map<const Derivation*, PFormula> _memo;
};

class HmluConverter
{
public:
    explicit HmluConverter( const Lts& lts ) : _lts{ lts }, _mc{ lts } {}

    PFormula convert( const Formula& f, StateId p, StateId q, std::size_t depth, std::optional<DiamondTrace>* trace )
    {
        const bool hp = _mc.holds( p, f ), hq = _mc.holds( q, f );
        if ( hp == hq )
            throw NotDistinguishingError( "formula " + to_string( f ) + " does not distinguish " +
                                          _lts.state_name( p ) + " and " + _lts.state_name( q ) );
        if ( depth > _height_bound )
            throw InvariantViolation( "conversion recursion deeper than the formula" );

        auto key = std::tuple{ f.id(), p, q };
        if ( auto it = _memo.find( key ); it != _memo.end() && !trace )
            return it->second;

        PFormula out = PFormula::top();
        switch ( f.kind() )
        {
        case Formula::Kind::top: throw InvariantViolation( "T cannot distinguish two states" );
        case Formula::Kind::neg: out = convert( f.child(), q, p, depth + 1, trace ); break;
        case Formula::Kind::conj:
            if ( _mc.holds( p, f.left() ) != _mc.holds( q, f.left() ) )
                out = convert( f.left(), p, q, depth + 1, trace );
            else
                out = convert( f.right(), p, q, depth + 1, trace );
            break;
        case Formula::Kind::diamond:
            out = hp ? diamond( f, p, q, depth, trace ) : diamond( f, q, p, depth, trace );
            break;
        }
        _memo.insert_or_assign( key, out );
        return out;
    }

    void set_height_bound( std::size_t h ) { _height_bound = h; }

private:
    // One converted formula for every ordered pair (r, s) with r |= g and s not.
    const std::vector<PFormula>& realize( const Formula& g, std::size_t depth )
    {
        if ( auto it = _realized.find( g.id() ); it != _realized.end() )
            return it->second.second;
        const auto& sat = _mc.sat( g );
        std::vector<PFormula> out;
        for ( auto r : sat.elements() )
            for ( auto s : sat.complement().elements() )
                out.push_back( convert( g, r, s, depth, nullptr ) );
        std::sort( out.begin(), out.end() );
        out.erase( std::unique( out.begin(), out.end() ), out.end() );
        return _realized.emplace( g.id(), std::pair{ g, std::move( out ) } ).first->second.second;
    }

    // p |= f = delta <alpha> psi, q does not.
    PFormula diamond( const Formula& f, StateId p, StateId q, std::size_t depth, std::optional<DiamondTrace>* trace )
    {
        auto w = _mc.diamond_witness( p, f.left(), f.label(), f.right() );
        if ( !w )
            throw InvariantViolation( "satisfied diamond without a witness path" );

        const auto& p_delta = realize( f.left(), depth + 1 );
        const auto& p_psi = realize( f.right(), depth + 1 );

        std::vector<ChainStage> stages;
        for ( std::size_t i = 0; i < w->path.size(); ++i )
        {
            std::vector<PFormula> plus, minus;
            for ( const auto& g : p_delta )
                ( _mc.holds( w->path[ i ], g ) ? plus : minus ).push_back( g );
            stages.push_back( { i + 1, w->path[ i ], PFormula::conjunction( std::move( plus ) ),
                                PFormula::disjunction( std::move( minus ) ) } );
        }
        RightSide right;
        for ( const auto& g : p_psi )
            ( _mc.holds( w->target, g ) ? right.pos : right.neg ).push_back( g );

        auto phi = PFormula::diamond( stages.back().delta_plus, f.label(), right.pos, right.neg );
        for ( std::size_t i = stages.size() - 1; i-- > 0; )
            phi = PFormula::diamond( stages[ i ].delta_plus, ActionLabel::silent(), { phi },
                                     negated_members( stages[ i + 1 ].delta_minus ) );

        ChainOutcome outcome = ChainOutcome::chain;
        PFormula out = phi;
        if ( _mc.holds( q, stages.front().delta_minus ) )
            outcome = ChainOutcome::delta_minus, out = stages.front().delta_minus;
        else if ( !_mc.holds( q, stages.front().delta_plus ) )
            outcome = ChainOutcome::delta_plus, out = stages.front().delta_plus;

        if ( trace && !*trace )
            *trace = DiamondTrace{ p, q, std::move( stages ), w->target, std::move( right ), outcome };
        return out;
    }

    const Lts& _lts;
    ModelChecker _mc;
    std::size_t _height_bound = 0;
    std::map<std::tuple<const void*, StateId, StateId>, PFormula> _memo;
    std::unordered_map<const void*, std::pair<Formula, std::vector<PFormula>>> _realized;
};

// ---------------------------------------------------------------------------------------------

class Simplifier
{
public:
    explicit Simplifier( const Lts* lts ) : _lts{ lts }
    {
        if ( _lts )
            _mc.emplace( *_lts );
    }

    PFormula run( const PFormula& f )
    {
        switch ( f.kind() )
        {
        case PFormula::Kind::top:
        case PFormula::Kind::bot: return f;
        case PFormula::Kind::conj:
        {
            std::vector<PFormula> members;
            for ( const auto& c : f.conjuncts() )
            {
                auto s = run( c );
                if ( s.kind() == PFormula::Kind::bot )
                    return s;
                members.push_back( std::move( s ) );
            }
            return PFormula::conjunction( absorb( std::move( members ), PFormula::Kind::disj ) );
        }
        case PFormula::Kind::disj:
        {
            std::vector<PFormula> members;
            for ( const auto& c : f.disjuncts() )
            {
                auto s = run( c );
                if ( s.kind() == PFormula::Kind::top )
                    return s;
                members.push_back( std::move( s ) );
            }
            return PFormula::disjunction( absorb( std::move( members ), PFormula::Kind::conj ) );
        }
        case PFormula::Kind::diamond: return diamond( f );
        }
        return f;
    }

private:
    // a & (a | b) = a and a | (a & b) = a: drop members of kind `inner` that contain a sibling.
    static std::vector<PFormula> absorb( std::vector<PFormula> members, PFormula::Kind inner )
    {
        std::vector<PFormula> out;
        for ( const auto& m : members )
        {
            bool absorbed = false;
            if ( m.kind() == inner )
            {
                auto parts = inner == PFormula::Kind::conj ? m.conjuncts() : m.disjuncts();
                for ( const auto& other : members )
                    absorbed = absorbed || ( other != m && std::find( parts.begin(), parts.end(), other ) != parts.end() );
            }
            if ( !absorbed )
                out.push_back( m );
        }
        return out;
    }

    PFormula diamond( const PFormula& f )
    {
        auto left = run( f.left() );
        if ( left.kind() == PFormula::Kind::bot )
            return PFormula::bot();
        std::vector<PFormula> pos, neg;
        for ( const auto& g : f.pos() )
        {
            auto s = run( g );
            if ( s.kind() == PFormula::Kind::bot )
                return PFormula::bot();
            if ( s.kind() == PFormula::Kind::conj )
                for ( auto& c : s.conjuncts() )
                    pos.push_back( std::move( c ) );
            else if ( s.kind() != PFormula::Kind::top )
                pos.push_back( std::move( s ) );
        }
        for ( const auto& g : f.neg() )
        {
            auto s = run( g );
            if ( s.kind() == PFormula::Kind::top )
                return PFormula::bot();
            if ( s.kind() != PFormula::Kind::bot )
                neg.push_back( std::move( s ) );
        }
        auto out = PFormula::diamond( left, f.label(), pos, neg );

        // Delta <tau> (Delta <beta> Psi & ~N)  ~>  Delta <beta> Psi
        if ( f.label().is_silent() && out.pos().size() == 1 && out.pos().front().kind() == PFormula::Kind::diamond &&
             out.pos().front().left() == out.left() )
        {
            const auto inner = out.pos().front();
            if ( out.neg().empty() )
                return inner;
            if ( _mc && _mc->sat( inner ) == _mc->sat( out ) )
                return inner;
        }
        return out;
    }

    const Lts* _lts;
    std::optional<ModelChecker> _mc;
};

} // namespace

Verdict verify_distinguishes( const Lts& lts, const Formula& f, StateId p, StateId q )
{
    check_state( lts, p );
    check_state( lts, q );
    std::optional<Lts> storage;
    ModelChecker mc( closed_view( lts, storage ) );
    const bool hp = mc.holds( p, f ), hq = mc.holds( q, f );
    if ( hp == hq )
        return { false, Direction::none };
    return { true, hp ? Direction::left_holds : Direction::right_holds };
}

PFormula formula_from_derivation( const Lts& lts, const Derivation& d )
{
    validate_derivation( lts, d );
    DerivationSynth synth( lts );
    return synth.build( d );
}

Conversion convert_hmlu( const Lts& lts, const Formula& f, StateId p, StateId q )
{
    check_state( lts, p );
    check_state( lts, q );
    std::optional<Lts> storage;
    HmluConverter conv( closed_view( lts, storage ) );
    conv.set_height_bound( f.height() );
    std::optional<DiamondTrace> trace;
    auto out = conv.convert( f, p, q, 0, &trace );
    return { std::move( out ), std::move( trace ) };
}

PFormula pformula_from_hmlu( const Lts& lts, const Formula& f, StateId p, StateId q )
{
    return convert_hmlu( lts, f, p, q ).formula;
}

PFormula simplify( const PFormula& f )
{
    Simplifier s( nullptr );
    return s.run( f );
}

PFormula simplify( const PFormula& f, const Lts& lts )
{
    std::optional<Lts> storage;
    const auto& closed = closed_view( lts, storage );
    Simplifier s( &closed );
    auto out = s.run( f );
    ModelChecker mc( closed );
    if ( mc.sat( out ) != mc.sat( f ) )
        throw InvariantViolation( "simplification changed the satisfaction set" );
    return out;
}

} // namespace bbapart

#include "bbapart/logic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bbapart
{

namespace
{

std::vector<ActionLabel> alphabet( const std::vector<ActionLabel>& actions )
{
    std::vector<ActionLabel> out{ ActionLabel::silent() };
    out.insert( out.end(), actions.begin(), actions.end() );
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
}

void check_size( std::size_t n, std::size_t max_size )
{
    if ( n > max_size )
        throw std::invalid_argument( "formula enumeration exceeds " + std::to_string( max_size ) + " formulas" );
}

} // namespace

std::vector<PFormula> enumerate_pformulas( const std::vector<ActionLabel>& actions, std::size_t depth,
                                           std::size_t max_size )
{
    if ( depth > 3 )
        throw std::invalid_argument( "enumeration depth is limited to 3" );
    const auto labels = alphabet( actions );

    std::set<PFormula> all{ PFormula::top(), PFormula::bot() };
    std::vector<PFormula> diamonds;  // D(d-1)
    std::vector<PFormula> nontrivial;  // N(d-1)
    for ( std::size_t d = 1; d <= depth; ++d )
    {
        std::vector<PFormula> lefts{ PFormula::top() };
        lefts.insert( lefts.end(), nontrivial.begin(), nontrivial.end() );
        std::vector<std::vector<PFormula>> lists{ {} };
        for ( const auto& g : diamonds )
            lists.push_back( { g } );

        const auto estimate = lefts.size() * labels.size() * lists.size() * lists.size();
        check_size( all.size() + estimate, max_size );

        std::vector<PFormula> fresh;
        for ( const auto& l : lefts )
            for ( const auto& a : labels )
                for ( const auto& pos : lists )
                    for ( const auto& neg : lists )
                        fresh.push_back( PFormula::diamond( l, a, pos, neg ) );
        for ( std::size_t i = 0; i < diamonds.size(); ++i )
            for ( std::size_t j = i + 1; j < diamonds.size(); ++j )
            {
                fresh.push_back( PFormula::conjunction( { diamonds[ i ], diamonds[ j ] } ) );
                fresh.push_back( PFormula::disjunction( { diamonds[ i ], diamonds[ j ] } ) );
            }
        for ( auto& f : fresh )
            all.insert( std::move( f ) );

        diamonds.clear();
        nontrivial.clear();
        for ( const auto& f : all )
        {
            if ( f.kind() == PFormula::Kind::diamond )
                diamonds.push_back( f );
            if ( f.kind() != PFormula::Kind::top && f.kind() != PFormula::Kind::bot )
                nontrivial.push_back( f );
        }
    }
    return { all.begin(), all.end() };
}

std::vector<Formula> enumerate_formulas( const std::vector<ActionLabel>& actions, std::size_t depth,
                                         std::size_t max_size )
{
    if ( depth > 3 )
        throw std::invalid_argument( "enumeration depth is limited to 3" );
    const auto labels = alphabet( actions );

    std::set<Formula> all{ Formula::top(), Formula::bot() };
    std::vector<Formula> literals;  // S(d-1)
    for ( std::size_t d = 1; d <= depth; ++d )
    {
        std::vector<Formula> combos;  // C(d-1)
        for ( std::size_t i = 0; i < literals.size(); ++i )
            for ( std::size_t j = i + 1; j < literals.size(); ++j )
            {
                combos.push_back( Formula::conj( literals[ i ], literals[ j ] ) );
                combos.push_back( Formula::disj( literals[ i ], literals[ j ] ) );
            }
        std::vector<Formula> operands{ Formula::top() };
        operands.insert( operands.end(), literals.begin(), literals.end() );
        operands.insert( operands.end(), combos.begin(), combos.end() );

        check_size( all.size() + 2 * operands.size() * labels.size() * operands.size() + combos.size(), max_size );

        for ( const auto& l : operands )
            for ( const auto& a : labels )
                for ( const auto& r : operands )
                {
                    auto f = Formula::diamond( l, a, r );
                    all.insert( Formula::neg( f ) );
                    all.insert( std::move( f ) );
                }
        for ( auto& c : combos )
            all.insert( std::move( c ) );

        literals.clear();
        for ( const auto& f : all )
            if ( f.kind() == Formula::Kind::diamond ||
                 ( f.kind() == Formula::Kind::neg && f.child().kind() == Formula::Kind::diamond ) )
                literals.push_back( f );
    }
    return { all.begin(), all.end() };
}

} // namespace bbapart

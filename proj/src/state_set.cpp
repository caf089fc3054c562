#include "bbapart/state_set.hpp"

#include <bit>

namespace bbapart
{

StateSet::StateSet( std::size_t universe, bool filled )
        : _universe{ universe }, _words( ( universe + 63 ) / 64, filled ? ~std::uint64_t{ 0 } : 0 )
{
    trim();
}

void StateSet::trim()
{
    if ( _universe % 64 != 0 && !_words.empty() )
        _words.back() &= ( std::uint64_t{ 1 } << ( _universe % 64 ) ) - 1;
}

std::size_t StateSet::count() const
{
    std::size_t n = 0;
    for ( auto w : _words )
        n += static_cast<std::size_t>( std::popcount( w ) );
    return n;
}

bool StateSet::empty() const
{
    for ( auto w : _words )
        if ( w != 0 )
            return false;
    return true;
}

bool StateSet::is_subset_of( const StateSet& other ) const
{
    for ( std::size_t i = 0; i < _words.size(); ++i )
        if ( ( _words[ i ] & ~other._words[ i ] ) != 0 )
            return false;
    return true;
}

std::vector<StateId> StateSet::elements() const
{
    std::vector<StateId> out;
    for ( std::size_t i = 0; i < _words.size(); ++i )
    {
        auto w = _words[ i ];
        while ( w != 0 )
        {
            out.push_back( i * 64 + static_cast<std::size_t>( std::countr_zero( w ) ) );
            w &= w - 1;
        }
    }
    return out;
}

StateSet& StateSet::operator&=( const StateSet& other )
{
    for ( std::size_t i = 0; i < _words.size(); ++i )
        _words[ i ] &= other._words[ i ];
    return *this;
}

StateSet& StateSet::operator|=( const StateSet& other )
{
    for ( std::size_t i = 0; i < _words.size(); ++i )
        _words[ i ] |= other._words[ i ];
    return *this;
}

StateSet StateSet::complement() const
{
    StateSet out = *this;
    for ( auto& w : out._words )
        w = ~w;
    out.trim();
    return out;
}

} // namespace bbapart

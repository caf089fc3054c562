#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bbapart
{

using StateId = std::size_t;

// Fixed-universe dynamic bitset over states 0..size()-1.
class StateSet
{
public:
    StateSet() = default;
    explicit StateSet( std::size_t universe, bool filled = false );

    static StateSet full( std::size_t universe ) { return StateSet( universe, true ); }

    [[nodiscard]] std::size_t universe() const { return _universe; }
    [[nodiscard]] bool contains( StateId s ) const
    {
        return s < _universe && ( ( _words[ s / 64 ] >> ( s % 64 ) ) & 1u ) != 0;
    }
    void insert( StateId s ) { _words[ s / 64 ] |= std::uint64_t{ 1 } << ( s % 64 ); }
    void erase( StateId s ) { _words[ s / 64 ] &= ~( std::uint64_t{ 1 } << ( s % 64 ) ); }

    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool empty() const;
    [[nodiscard]] bool is_full() const { return count() == _universe; }
    [[nodiscard]] bool is_subset_of( const StateSet& other ) const;
    [[nodiscard]] std::vector<StateId> elements() const;

    StateSet& operator&=( const StateSet& other );
    StateSet& operator|=( const StateSet& other );
    [[nodiscard]] StateSet complement() const;

    friend StateSet operator&( StateSet a, const StateSet& b ) { return a &= b; }
    friend StateSet operator|( StateSet a, const StateSet& b ) { return a |= b; }
    friend bool operator==( const StateSet&, const StateSet& ) = default;

private:
    void trim();

    std::size_t _universe = 0;
    std::vector<std::uint64_t> _words;
};

} // namespace bbapart

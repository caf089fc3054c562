#include "bbapart/logic.hpp"

#include <cctype>

namespace bbapart
{

namespace
{

class FormulaParser
{
public:
    explicit FormulaParser( std::string_view text ) : _text{ text } {}

    Formula parse()
    {
        auto f = formula();
        skip_ws();
        if ( _pos != _text.size() )
            fail( "unexpected trailing input" );
        return f;
    }

private:
    [[noreturn]] void fail( const std::string& what ) const
    {
        throw ParseError( "formula, offset " + std::to_string( _pos ) + ": " + what );
    }

    void skip_ws()
    {
        while ( _pos < _text.size() && std::isspace( static_cast<unsigned char>( _text[ _pos ] ) ) )
            ++_pos;
    }

    char peek()
    {
        skip_ws();
        return _pos < _text.size() ? _text[ _pos ] : '\0';
    }

    void expect( char c )
    {
        if ( peek() != c )
            fail( std::string( "expected '" ) + c + "'" );
        ++_pos;
    }

    ActionLabel label()
    {
        expect( '<' );
        skip_ws();
        auto start = _pos;
        while ( _pos < _text.size() && _text[ _pos ] != '>' && _text[ _pos ] != '"' &&
                !std::isspace( static_cast<unsigned char>( _text[ _pos ] ) ) )
            ++_pos;
        auto name = std::string( _text.substr( start, _pos - start ) );
        if ( name.empty() )
            fail( "empty action label" );
        expect( '>' );
        return name == "tau" ? ActionLabel::silent() : ActionLabel::visible( name );
    }

    Formula formula()
    {
        switch ( peek() )
        {
        case 'T': ++_pos; return Formula::top();
        case 'F': ++_pos; return Formula::bot();
        case '~': ++_pos; return Formula::neg( formula() );
        case '<':
        {
            auto a = label();
            return Formula::diamond( std::move( a ), formula() );
        }
        case '(':
        {
            ++_pos;
            auto first = formula();
            auto result = infix( first );
            expect( ')' );
            return result;
        }
        case '\0': fail( "unexpected end of formula" );
        default: fail( std::string( "unexpected character '" ) + _text[ _pos ] + "'" );
        }
    }

    // Rest of a parenthesised group after its first operand. Chains of one operator nest to the right.
    Formula infix( const Formula& first )
    {
        switch ( peek() )
        {
        case ')': return first;
        case '&':
        case '|':
        {
            const char op = _text[ _pos ];
            std::vector<Formula> operands{ first };
            while ( peek() == op )
            {
                ++_pos;
                operands.push_back( formula() );
            }
            if ( peek() == '&' || peek() == '|' )
                fail( "mixed '&' and '|' need parentheses" );
            auto acc = operands.back();
            for ( auto it = operands.rbegin() + 1; it != operands.rend(); ++it )
                acc = op == '&' ? Formula::conj( *it, acc ) : Formula::disj( *it, acc );
            return acc;
        }
        case '<':
        {
            auto a = label();
            return Formula::diamond( first, std::move( a ), formula() );
        }
        default: fail( "expected '&', '|', '<' or ')'" );
        }
    }

    std::string_view _text;
    std::size_t _pos = 0;
};

} // namespace

Formula parse_formula( std::string_view text ) { return FormulaParser{ text }.parse(); }

} // namespace bbapart

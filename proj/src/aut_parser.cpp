#include "bbapart/lts.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bbapart
{

namespace
{

class LineCursor
{
public:
    LineCursor( std::string_view text, std::size_t line ) : _text{ text }, _line{ line } {}

    void skip_ws()
    {
        while ( _pos < _text.size() && std::isspace( static_cast<unsigned char>( _text[ _pos ] ) ) )
            ++_pos;
    }

    void expect( char c )
    {
        skip_ws();
        if ( _pos >= _text.size() || _text[ _pos ] != c )
            fail( std::string( "expected '" ) + c + "'" );
        ++_pos;
    }

    bool accept_word( std::string_view word )
    {
        skip_ws();
        if ( _text.substr( _pos, word.size() ) != word )
            return false;
        _pos += word.size();
        return true;
    }

    std::size_t number()
    {
        skip_ws();
        std::size_t start = _pos;
        std::size_t value = 0;
        while ( _pos < _text.size() && std::isdigit( static_cast<unsigned char>( _text[ _pos ] ) ) )
        {
            value = value * 10 + static_cast<std::size_t>( _text[ _pos ] - '0' );
            ++_pos;
        }
        if ( start == _pos )
            fail( "expected a decimal number" );
        return value;
    }

    std::string label()
    {
        skip_ws();
        if ( _pos < _text.size() && _text[ _pos ] == '"' )
        {
            auto close = _text.find( '"', _pos + 1 );
            if ( close == std::string_view::npos )
                fail( "unterminated label" );
            std::string out( _text.substr( _pos + 1, close - _pos - 1 ) );
            _pos = close + 1;
            return out;
        }
        // Unquoted labels run up to the last comma of the line.
        auto comma = _text.rfind( ',' );
        if ( comma == std::string_view::npos || comma < _pos )
            fail( "expected a label" );
        std::string out( _text.substr( _pos, comma - _pos ) );
        while ( !out.empty() && std::isspace( static_cast<unsigned char>( out.back() ) ) )
            out.pop_back();
        _pos = comma;
        return out;
    }

    void expect_end()
    {
        skip_ws();
        if ( _pos != _text.size() )
            fail( "trailing characters" );
    }

    [[noreturn]] void fail( const std::string& what ) const { throw ParseError( what, _line ); }

private:
    std::string_view _text;
    std::size_t _line;
    std::size_t _pos = 0;
};

bool blank( std::string_view s )
{
    for ( char c : s )
        if ( !std::isspace( static_cast<unsigned char>( c ) ) )
            return false;
    return true;
}

} // namespace

Lts parse_aut( std::istream& in, const AutOptions& options )
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t initial = 0, declared_transitions = 0, num_states = 0;
    std::vector<LabelledTransition> transitions;

    while ( std::getline( in, line ) )
    {
        ++line_no;
        if ( !line.empty() && line.back() == '\r' )
            line.pop_back();
        if ( blank( line ) )
            continue;
        LineCursor cur( line, line_no );
        if ( !have_header )
        {
            if ( !cur.accept_word( "des" ) )
                cur.fail( "malformed header, expected 'des (<initial>,<#transitions>,<#states>)'" );
            cur.expect( '(' );
            initial = cur.number();
            cur.expect( ',' );
            declared_transitions = cur.number();
            cur.expect( ',' );
            num_states = cur.number();
            cur.expect( ')' );
            cur.expect_end();
            if ( num_states == 0 )
                cur.fail( "malformed header, the state count must be positive" );
            if ( initial >= num_states )
                cur.fail( "initial state " + std::to_string( initial ) + " out of range" );
            have_header = true;
            continue;
        }
        cur.expect( '(' );
        auto src = cur.number();
        cur.expect( ',' );
        auto name = cur.label();
        cur.expect( ',' );
        auto dst = cur.number();
        cur.expect( ')' );
        cur.expect_end();
        if ( src >= num_states )
            cur.fail( "state index " + std::to_string( src ) + " out of range" );
        if ( dst >= num_states )
            cur.fail( "state index " + std::to_string( dst ) + " out of range" );
        if ( name.empty() )
            cur.fail( "empty label" );
        auto label = name == options.silent_label ? ActionLabel::silent() : ActionLabel::visible( name );
        transitions.push_back( { src, std::move( label ), dst } );
    }
    if ( !have_header )
        throw ParseError( "malformed header, file is empty", line_no + 1 );
    if ( transitions.size() != declared_transitions )
        throw ParseError( "header declares " + std::to_string( declared_transitions ) + " transitions but " +
                                  std::to_string( transitions.size() ) + " were listed",
                          1 );
    return Lts( num_states, transitions, initial );
}

Lts parse_aut( std::string_view text, const AutOptions& options )
{
    std::istringstream in{ std::string( text ) };
    return parse_aut( in, options );
}

Lts load_aut( const std::string& path, const AutOptions& options )
{
    std::ifstream in( path );
    if ( !in )
        throw ParseError( "cannot open " + path );
    return parse_aut( in, options );
}

void write_aut( std::ostream& out, const Lts& lts )
{
    out << "des (" << lts.initial() << "," << lts.num_transitions() << "," << lts.num_states() << ")\n";
    for ( const auto& t : lts.transitions() )
        out << "(" << t.src << ",\"" << lts.action( t.action ).name() << "\"," << t.dst << ")\n";
}

std::string to_aut( const Lts& lts )
{
    std::ostringstream out;
    write_aut( out, lts );
    return out.str();
}

} // namespace bbapart

#include "bbapart/logic.hpp"

#include <algorithm>

namespace bbapart
{

struct Formula::Node
{
    Kind kind;
    std::optional<Formula> a;  // neg child / left
    std::optional<Formula> b;  // right
    std::optional<ActionLabel> label;
    std::size_t height;
    std::size_t size;
    bool modal;
};

Formula Formula::top()
{
    static const Formula t{ std::make_shared<const Node>( Node{ Kind::top, {}, {}, {}, 1, 1, false } ) };
    return t;
}

Formula Formula::neg( Formula f )
{
    auto h = f.height() + 1, s = f.size() + 1;
    bool m = f.has_modality();
    return Formula{ std::make_shared<const Node>( Node{ Kind::neg, std::move( f ), {}, {}, h, s, m } ) };
}

Formula Formula::conj( Formula l, Formula r )
{
    auto h = std::max( l.height(), r.height() ) + 1, s = l.size() + r.size() + 1;
    bool m = l.has_modality() || r.has_modality();
    return Formula{ std::make_shared<const Node>( Node{ Kind::conj, std::move( l ), std::move( r ), {}, h, s, m } ) };
}

Formula Formula::diamond( Formula left, ActionLabel label, Formula right )
{
    auto h = std::max( left.height(), right.height() ) + 1, s = left.size() + right.size() + 1;
    return Formula{ std::make_shared<const Node>(
            Node{ Kind::diamond, std::move( left ), std::move( right ), std::move( label ), h, s, true } ) };
}

Formula::Kind Formula::kind() const { return _node->kind; }
const Formula& Formula::child() const { return *_node->a; }
const Formula& Formula::left() const { return *_node->a; }
const Formula& Formula::right() const { return *_node->b; }
const ActionLabel& Formula::label() const { return *_node->label; }
std::size_t Formula::height() const { return _node->height; }
std::size_t Formula::size() const { return _node->size; }
bool Formula::has_modality() const { return _node->modal; }

bool operator==( const Formula& a, const Formula& b ) { return ( a <=> b ) == 0; }

std::strong_ordering operator<=>( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;
    if ( auto c = a.kind() <=> b.kind(); c != 0 )
        return c;
    switch ( a.kind() )
    {
    case Formula::Kind::top: return std::strong_ordering::equal;
    case Formula::Kind::neg: return a.child() <=> b.child();
    case Formula::Kind::conj:
        if ( auto c = a.left() <=> b.left(); c != 0 )
            return c;
        return a.right() <=> b.right();
    case Formula::Kind::diamond:
        if ( auto c = a.label() <=> b.label(); c != 0 )
            return c;
        if ( auto c = a.left() <=> b.left(); c != 0 )
            return c;
        return a.right() <=> b.right();
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------------------------

struct PFormula::Node
{
    Kind kind;
    std::optional<PFormula> a;
    std::optional<PFormula> b;
    std::optional<ActionLabel> label;
    std::vector<PFormula> pos;
    std::vector<PFormula> neg;
    std::size_t size;
    std::size_t depth;
};

PFormula PFormula::top()
{
    static const PFormula t{ std::make_shared<const Node>( Node{ Kind::top, {}, {}, {}, {}, {}, 1, 0 } ) };
    return t;
}

PFormula PFormula::bot()
{
    static const PFormula f{ std::make_shared<const Node>( Node{ Kind::bot, {}, {}, {}, {}, {}, 1, 0 } ) };
    return f;
}

PFormula PFormula::conj( PFormula l, PFormula r )
{
    auto s = l.size() + r.size() + 1, d = std::max( l.depth(), r.depth() );
    return PFormula{ std::make_shared<const Node>( Node{ Kind::conj, std::move( l ), std::move( r ), {}, {}, {}, s, d } ) };
}

PFormula PFormula::disj( PFormula l, PFormula r )
{
    auto s = l.size() + r.size() + 1, d = std::max( l.depth(), r.depth() );
    return PFormula{ std::make_shared<const Node>( Node{ Kind::disj, std::move( l ), std::move( r ), {}, {}, {}, s, d } ) };
}

namespace
{

void sort_unique( std::vector<PFormula>& v )
{
    std::sort( v.begin(), v.end() );
    v.erase( std::unique( v.begin(), v.end() ), v.end() );
}

} // namespace

PFormula PFormula::diamond( PFormula left, ActionLabel label, std::vector<PFormula> pos, std::vector<PFormula> neg )
{
    sort_unique( pos );
    sort_unique( neg );
    auto s = left.size() + 1, d = left.depth();
    for ( const auto& f : pos )
        s += f.size(), d = std::max( d, f.depth() );
    for ( const auto& f : neg )
        s += f.size(), d = std::max( d, f.depth() );
    return PFormula{ std::make_shared<const Node>(
            Node{ Kind::diamond, std::move( left ), {}, std::move( label ), std::move( pos ), std::move( neg ), s, d + 1 } ) };
}

PFormula PFormula::conjunction( std::vector<PFormula> members )
{
    std::vector<PFormula> flat;
    for ( auto& m : members )
        for ( auto& c : m.conjuncts() )
            if ( c.kind() != Kind::top )
                flat.push_back( std::move( c ) );
    sort_unique( flat );
    if ( flat.empty() )
        return top();
    auto acc = flat.back();
    for ( auto it = flat.rbegin() + 1; it != flat.rend(); ++it )
        acc = conj( *it, acc );
    return acc;
}

PFormula PFormula::disjunction( std::vector<PFormula> members )
{
    std::vector<PFormula> flat;
    for ( auto& m : members )
        for ( auto& c : m.disjuncts() )
            if ( c.kind() != Kind::bot )
                flat.push_back( std::move( c ) );
    sort_unique( flat );
    if ( flat.empty() )
        return bot();
    auto acc = flat.back();
    for ( auto it = flat.rbegin() + 1; it != flat.rend(); ++it )
        acc = disj( *it, acc );
    return acc;
}

PFormula::Kind PFormula::kind() const { return _node->kind; }
const PFormula& PFormula::left() const { return *_node->a; }
const PFormula& PFormula::right() const { return *_node->b; }
const ActionLabel& PFormula::label() const { return *_node->label; }
const std::vector<PFormula>& PFormula::pos() const { return _node->pos; }
const std::vector<PFormula>& PFormula::neg() const { return _node->neg; }
std::size_t PFormula::size() const { return _node->size; }
std::size_t PFormula::depth() const { return _node->depth; }

std::vector<PFormula> PFormula::conjuncts() const
{
    std::vector<PFormula> out;
    const PFormula* cur = this;
    while ( cur->kind() == Kind::conj )
    {
        for ( auto& c : cur->left().conjuncts() )
            out.push_back( std::move( c ) );
        cur = &cur->right();
    }
    out.push_back( *cur );
    return out;
}

std::vector<PFormula> PFormula::disjuncts() const
{
    std::vector<PFormula> out;
    const PFormula* cur = this;
    while ( cur->kind() == Kind::disj )
    {
        for ( auto& c : cur->left().disjuncts() )
            out.push_back( std::move( c ) );
        cur = &cur->right();
    }
    out.push_back( *cur );
    return out;
}

bool operator==( const PFormula& a, const PFormula& b ) { return ( a <=> b ) == 0; }

namespace
{

// Canonical subterm order: T < F < diamonds < conjunctions < disjunctions.
int kind_rank( PFormula::Kind k )
{
    switch ( k )
    {
    case PFormula::Kind::top: return 0;
    case PFormula::Kind::bot: return 1;
    case PFormula::Kind::diamond: return 2;
    case PFormula::Kind::conj: return 3;
    case PFormula::Kind::disj: return 4;
    }
    return 5;
}

std::strong_ordering compare_lists( const std::vector<PFormula>& a, const std::vector<PFormula>& b )
{
    return std::lexicographical_compare_three_way( a.begin(), a.end(), b.begin(), b.end() );
}

} // namespace

std::strong_ordering operator<=>( const PFormula& a, const PFormula& b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;
    if ( auto c = kind_rank( a.kind() ) <=> kind_rank( b.kind() ); c != 0 )
        return c;
    switch ( a.kind() )
    {
    case PFormula::Kind::top:
    case PFormula::Kind::bot: return std::strong_ordering::equal;
    case PFormula::Kind::conj:
    case PFormula::Kind::disj:
        if ( auto c = a.left() <=> b.left(); c != 0 )
            return c;
        return a.right() <=> b.right();
    case PFormula::Kind::diamond:
        if ( auto c = a.label() <=> b.label(); c != 0 )
            return c;
        if ( auto c = a.left() <=> b.left(); c != 0 )
            return c;
        if ( auto c = compare_lists( a.pos(), b.pos() ); c != 0 )
            return c;
        return compare_lists( a.neg(), b.neg() );
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------------------------

bool is_positive( const Formula& f )
{
    switch ( f.kind() )
    {
    case Formula::Kind::top: return true;
    case Formula::Kind::neg: return is_negative( f.child() );
    case Formula::Kind::conj: return is_positive( f.left() ) && is_positive( f.right() );
    case Formula::Kind::diamond: return is_positive( f.left() );
    }
    return false;
}

bool is_negative( const Formula& f )
{
    switch ( f.kind() )
    {
    case Formula::Kind::top: return true;
    case Formula::Kind::neg: return is_positive( f.child() );
    case Formula::Kind::conj: return is_negative( f.left() ) && is_negative( f.right() );
    case Formula::Kind::diamond: return false;
    }
    return false;
}

bool is_good( const Formula& f )
{
    switch ( f.kind() )
    {
    case Formula::Kind::top: return true;
    case Formula::Kind::neg: return is_good( f.child() );
    case Formula::Kind::conj: return is_good( f.left() ) && is_good( f.right() );
    case Formula::Kind::diamond: return is_positive( f.left() ) && is_good( f.left() ) && is_good( f.right() );
    }
    return false;
}

Formula p_embed( const PFormula& f )
{
    switch ( f.kind() )
    {
    case PFormula::Kind::top: return Formula::top();
    case PFormula::Kind::bot: return Formula::bot();
    case PFormula::Kind::conj: return Formula::conj( p_embed( f.left() ), p_embed( f.right() ) );
    case PFormula::Kind::disj: return Formula::disj( p_embed( f.left() ), p_embed( f.right() ) );
    case PFormula::Kind::diamond:
    {
        std::vector<Formula> parts;
        for ( const auto& g : f.pos() )
            parts.push_back( p_embed( g ) );
        for ( const auto& g : f.neg() )
            parts.push_back( Formula::neg( p_embed( g ) ) );
        Formula right = Formula::top();
        if ( !parts.empty() )
        {
            right = parts.back();
            for ( auto it = parts.rbegin() + 1; it != parts.rend(); ++it )
                right = Formula::conj( *it, right );
        }
        return Formula::diamond( p_embed( f.left() ), f.label(), right );
    }
    }
    return Formula::top();
}

// ---------------------------------------------------------------------------------------------

namespace
{

void print( const Formula& f, std::string& out )
{
    switch ( f.kind() )
    {
    case Formula::Kind::top: out += 'T'; return;
    case Formula::Kind::neg:
    {
        const auto& c = f.child();
        if ( c.kind() == Formula::Kind::top )
        {
            out += 'F';
            return;
        }
        if ( c.kind() == Formula::Kind::conj && c.left().kind() == Formula::Kind::neg &&
             c.right().kind() == Formula::Kind::neg )
        {
            out += '(';
            print( c.left().child(), out );
            out += " | ";
            print( c.right().child(), out );
            out += ')';
            return;
        }
        out += '~';
        print( c, out );
        return;
    }
    case Formula::Kind::conj:
        out += '(';
        print( f.left(), out );
        out += " & ";
        print( f.right(), out );
        out += ')';
        return;
    case Formula::Kind::diamond:
        if ( f.left().kind() == Formula::Kind::top )
        {
            out += '<';
            out += f.label().name();
            out += "> ";
            print( f.right(), out );
            return;
        }
        out += '(';
        if ( f.left().kind() == Formula::Kind::diamond && f.left().left().kind() == Formula::Kind::top )
        {
            out += '(';
            print( f.left(), out );
            out += ')';
        }
        else
            print( f.left(), out );
        out += " <";
        out += f.label().name();
        out += "> ";
        print( f.right(), out );
        out += ')';
        return;
    }
}

} // namespace

std::string to_string( const Formula& f )
{
    std::string out;
    print( f, out );
    return out;
}

std::string to_string( const PFormula& f ) { return to_string( p_embed( f ) ); }

} // namespace bbapart

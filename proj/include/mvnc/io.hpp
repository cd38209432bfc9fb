/*!
  \file io.hpp
  \brief The mvfn text format

  mvfn text format (UTF-8, LF line endings):
    line 1: `mvfn 1`
    line 2: `k: k_1 k_2 ... k_n`
    line 3: `f: v_0 v_1 ... v_{size-1}` (integers or p/q rationals,
            index order with the last coordinate varying fastest)
  Lines starting with `#` are ignored.
*/

#pragma once

#include "function.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace mvnc
{

struct parse_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

namespace detail
{

inline std::vector<std::string> tokenize( std::string const& s )
{
  std::istringstream is( s );
  std::vector<std::string> tokens;
  std::string t;
  while ( is >> t )
    tokens.push_back( t );
  return tokens;
}

/*! Reads the next non-comment, non-blank line; false at end of stream. */
inline bool next_content_line( std::istream& in, std::string& line )
{
  while ( std::getline( in, line ) )
  {
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    if ( line.empty() || line[0] == '#' )
      continue;
    return true;
  }
  return false;
}

} // namespace detail

inline mv_function parse_mvfn( std::istream& in )
{
  std::string line;
  if ( !detail::next_content_line( in, line ) || line != "mvfn 1" )
    throw parse_error( "mvfn: missing or bad magic line (expected 'mvfn 1')" );

  if ( !detail::next_content_line( in, line ) )
    throw parse_error( "mvfn: missing k line" );
  auto ktokens = detail::tokenize( line );
  if ( ktokens.empty() || ktokens[0] != "k:" )
    throw parse_error( "mvfn: expected 'k:' line" );
  std::vector<int> ks;
  for ( std::size_t i = 1; i < ktokens.size(); ++i )
  {
    int k = 0;
    try
    {
      k = std::stoi( ktokens[i] );
    }
    catch ( std::exception const& )
    {
      throw parse_error( "mvfn: bad cardinality token '" + ktokens[i] + "'" );
    }
    if ( k < 1 )
      throw parse_error( "mvfn: cardinality must be >= 1" );
    ks.push_back( k );
  }
  if ( ks.empty() )
    throw parse_error( "mvfn: empty k line" );
  product_domain dom( ks );

  if ( !detail::next_content_line( in, line ) )
    throw parse_error( "mvfn: missing f line" );
  auto ftokens = detail::tokenize( line );
  if ( ftokens.empty() || ftokens[0] != "f:" )
    throw parse_error( "mvfn: expected 'f:' line" );
  std::vector<rational> vals;
  vals.reserve( ftokens.size() - 1 );
  for ( std::size_t i = 1; i < ftokens.size(); ++i )
  {
    try
    {
      vals.push_back( parse_rational( ftokens[i] ) );
    }
    catch ( std::invalid_argument const& e )
    {
      throw parse_error( std::string( "mvfn: " ) + e.what() );
    }
  }
  if ( vals.size() != dom.size() )
    throw parse_error( "mvfn: expected " + std::to_string( dom.size() ) + " values, got " +
                       std::to_string( vals.size() ) );
  return { std::move( dom ), std::move( vals ) };
}

inline mv_function parse_mvfn( std::string const& text )
{
  std::istringstream is( text );
  return parse_mvfn( is );
}

/*! Canonical serialization; only full-range domains have an mvfn form. */
inline std::string serialize_mvfn( mv_function const& f )
{
  if ( !f.domain().is_full_range() )
    throw std::invalid_argument( "mvfn format requires a full-range domain" );
  std::ostringstream os;
  os << "mvfn 1\nk:";
  for ( int k : f.domain().cardinalities() )
    os << ' ' << k;
  os << "\nf:";
  for ( auto const& v : f.values() )
    os << ' ' << to_string( v );
  os << '\n';
  return os.str();
}

} // namespace mvnc

/*!
  \file rational.hpp
  \brief Exact rational arithmetic and p/q token handling
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace mvnc
{

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

/*! Parses an integer or `p/q` token. Throws std::invalid_argument on
    malformed input or a zero denominator. */
inline rational parse_rational( std::string const& token )
{
  auto is_int = []( std::string const& s ) {
    if ( s.empty() )
      return false;
    std::size_t start = ( s[0] == '-' || s[0] == '+' ) ? 1u : 0u;
    if ( start == s.size() )
      return false;
    for ( std::size_t i = start; i < s.size(); ++i )
      if ( s[i] < '0' || s[i] > '9' )
        return false;
    return true;
  };

  auto const slash = token.find( '/' );
  if ( slash == std::string::npos )
  {
    if ( !is_int( token ) )
      throw std::invalid_argument( "malformed rational token: '" + token + "'" );
    return rational( bigint( token ) );
  }

  auto const num = token.substr( 0, slash );
  auto const den = token.substr( slash + 1 );
  if ( !is_int( num ) || !is_int( den ) )
    throw std::invalid_argument( "malformed rational token: '" + token + "'" );
  bigint const d( den );
  if ( d == 0 )
    throw std::invalid_argument( "zero denominator in rational token: '" + token + "'" );
  return rational( bigint( num ), d );
}

/*! Canonical text form: `p` when the denominator is 1, else `p/q`. */
inline std::string to_string( rational const& r )
{
  std::ostringstream os;
  os << r;
  return os.str();
}

inline double to_double( rational const& r )
{
  return r.convert_to<double>();
}

} // namespace mvnc

/*!
  \file dynamics.hpp
  \brief Asynchronous state transition graphs of multivalued networks

  Unit-step (Thomas) semantics: from state x, each gene g with
  f_g(x) != x_g contributes one edge moving x_g a single level toward
  f_g(x). At most one gene changes per transition.

  mvnet text format (lines starting with `#` ignored):
    line 1: `mvnet 1`
    line 2: `genes: name1:k1 name2:k2 ...`
    then one `f:` value line per gene, in header order, with the same
    value ordering as mvfn over the shared state space.
*/

#pragma once

#include "canalization.hpp"
#include "function.hpp"
#include "io.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace mvnc
{

/*! A multivalued network: per-gene level counts and update rules, all
    rules defined on the shared product of the gene level sets. */
struct network
{
  std::vector<std::string> names;
  std::vector<int> levels;
  std::vector<mv_function> rules;

  product_domain state_space() const { return product_domain( levels ); }
};

/*! Asynchronous state transition graph: states indexed over the shared
    domain, edges as (source index, target index) pairs in
    (source, gene) order. */
struct stg
{
  product_domain states;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

inline void validate_network( network const& net )
{
  if ( net.names.size() != net.levels.size() || net.names.size() != net.rules.size() )
    throw std::invalid_argument( "network field sizes disagree" );
  auto const dom = net.state_space();
  for ( std::size_t g = 0; g < net.rules.size(); ++g )
  {
    if ( net.rules[g].domain() != dom )
      throw std::invalid_argument( "rule domain does not match the shared state space" );
    for ( auto const& v : net.rules[g].values() )
      if ( denominator( v ) != 1 || v < 0 || v > net.levels[g] - 1 )
        throw std::invalid_argument( "rule value outside gene '" + net.names[g] + "' levels" );
  }
}

inline stg build_stg( network const& net )
{
  validate_network( net );
  stg graph{ net.state_space(), {} };
  for ( std::uint64_t idx = 0; idx < graph.states.size(); ++idx )
  {
    auto const x = graph.states.point_at( idx );
    for ( std::size_t g = 0; g < net.rules.size(); ++g )
    {
      auto const target = static_cast<int>( numerator( net.rules[g].evaluate( x ) ) );
      if ( target == x[g] )
        continue;
      auto next = x;
      next[g] += target > x[g] ? 1 : -1;
      graph.edges.emplace_back( idx, graph.states.index_of( next ) );
    }
  }
  return graph;
}

/*! Exact edge-set equality; the state spaces must match. */
inline bool stg_equal( stg const& a, stg const& b )
{
  if ( a.states != b.states )
    throw std::invalid_argument( "stg_equal: mismatched state spaces" );
  return a.edges == b.edges;
}

struct rule_flags
{
  bool weakly_canalizing;
  bool canalizing;
  bool nc;
  bool wnc;
};

inline std::vector<rule_flags> classify_rules( network const& net )
{
  std::vector<rule_flags> flags;
  for ( auto const& f : net.rules )
  {
    rule_flags fl{};
    auto const wch = weakly_canalizing_hyperplanes( f );
    fl.weakly_canalizing = !wch.empty();
    for ( auto const& [h, b] : wch )
      if ( is_canalizing( f, h ) )
      {
        fl.canalizing = true;
        break;
      }
    fl.nc = recognize_nc( f ).has_value();
    fl.wnc = is_wnc( f );
    flags.push_back( fl );
  }
  return flags;
}

/*! Deterministic DOT output: one node per state in index order, then
    edges in (source index, gene) order. */
inline std::string export_dot( stg const& graph )
{
  std::ostringstream os;
  os << "digraph stg {\n";
  auto label = [&]( std::uint64_t idx ) {
    auto const p = graph.states.point_at( idx );
    std::ostringstream l;
    l << '(';
    for ( std::size_t i = 0; i < p.size(); ++i )
      l << ( i ? "," : "" ) << p[i];
    l << ')';
    return l.str();
  };
  for ( std::uint64_t idx = 0; idx < graph.states.size(); ++idx )
    os << "  \"" << label( idx ) << "\";\n";
  for ( auto const& [src, dst] : graph.edges )
    os << "  \"" << label( src ) << "\" -> \"" << label( dst ) << "\";\n";
  os << "}\n";
  return os.str();
}

inline network parse_mvnet( std::istream& in )
{
  std::string line;
  if ( !detail::next_content_line( in, line ) || line != "mvnet 1" )
    throw parse_error( "mvnet: missing or bad magic line (expected 'mvnet 1')" );

  if ( !detail::next_content_line( in, line ) )
    throw parse_error( "mvnet: missing genes line" );
  auto gtokens = detail::tokenize( line );
  if ( gtokens.empty() || gtokens[0] != "genes:" )
    throw parse_error( "mvnet: expected 'genes:' line" );

  network net;
  for ( std::size_t i = 1; i < gtokens.size(); ++i )
  {
    auto const colon = gtokens[i].find( ':' );
    if ( colon == std::string::npos || colon == 0 )
      throw parse_error( "mvnet: bad gene token '" + gtokens[i] + "' (expected name:k)" );
    int k = 0;
    try
    {
      k = std::stoi( gtokens[i].substr( colon + 1 ) );
    }
    catch ( std::exception const& )
    {
      throw parse_error( "mvnet: bad level count in '" + gtokens[i] + "'" );
    }
    if ( k < 1 )
      throw parse_error( "mvnet: level count must be >= 1" );
    net.names.push_back( gtokens[i].substr( 0, colon ) );
    net.levels.push_back( k );
  }
  if ( net.names.empty() )
    throw parse_error( "mvnet: no genes" );

  auto const dom = net.state_space();
  for ( std::size_t g = 0; g < net.names.size(); ++g )
  {
    if ( !detail::next_content_line( in, line ) )
      throw parse_error( "mvnet: missing f line for gene '" + net.names[g] + "'" );
    auto ftokens = detail::tokenize( line );
    if ( ftokens.empty() || ftokens[0] != "f:" )
      throw parse_error( "mvnet: expected 'f:' line" );
    std::vector<rational> vals;
    for ( std::size_t i = 1; i < ftokens.size(); ++i )
    {
      try
      {
        vals.push_back( parse_rational( ftokens[i] ) );
      }
      catch ( std::invalid_argument const& e )
      {
        throw parse_error( std::string( "mvnet: " ) + e.what() );
      }
    }
    if ( vals.size() != dom.size() )
      throw parse_error( "mvnet: expected " + std::to_string( dom.size() ) + " values for gene '" +
                         net.names[g] + "'" );
    net.rules.emplace_back( dom, std::move( vals ) );
  }
  try
  {
    validate_network( net );
  }
  catch ( std::invalid_argument const& e )
  {
    throw parse_error( std::string( "mvnet: " ) + e.what() );
  }
  return net;
}

inline network parse_mvnet( std::string const& text )
{
  std::istringstream is( text );
  return parse_mvnet( is );
}

inline std::string serialize_mvnet( network const& net )
{
  std::ostringstream os;
  os << "mvnet 1\ngenes:";
  for ( std::size_t g = 0; g < net.names.size(); ++g )
    os << ' ' << net.names[g] << ':' << net.levels[g];
  os << '\n';
  for ( auto const& f : net.rules )
  {
    os << "f:";
    for ( auto const& v : f.values() )
      os << ' ' << to_string( v );
    os << '\n';
  }
  return os.str();
}

} // namespace mvnc

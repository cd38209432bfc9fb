/*!
  \file canalization.hpp
  \brief Canalizing / nested canalizing / weakly nested canalizing
         recognizers and verifiable certificates

  A function is weakly canalizing with respect to (i, a, b) when it is
  constant b on the hyperplane x_i = a; canalizing additionally requires
  a witness x with x_i != a and f(x) != b. A function is weakly nested
  canalizing (WNC) when its domain can be peeled to a single point by
  repeatedly removing such constant hyperplanes. Nested canalizing (NC)
  functions fix one coordinate per level on a proper segment of its
  value range. Every recognizer returns a certificate that can be
  re-verified independently.
*/

#pragma once

#include "function.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mvnc
{

/*! A proper, nonempty segment of {0,...,k-1}: {0,...,cut} (lower) or
    {cut,...,k-1} (upper). */
struct segment
{
  enum class family
  {
    lower,
    upper
  };

  int k;
  family kind;
  int cut;

  bool contains( int v ) const
  {
    return kind == family::lower ? ( v >= 0 && v <= cut ) : ( v >= cut && v <= k - 1 );
  }

  bool valid() const
  {
    if ( k < 2 )
      return false;
    return kind == family::lower ? ( cut >= 0 && cut <= k - 2 ) : ( cut >= 1 && cut <= k - 1 );
  }

  std::vector<int> members() const
  {
    std::vector<int> m;
    if ( kind == family::lower )
      for ( int v = 0; v <= cut; ++v )
        m.push_back( v );
    else
      for ( int v = cut; v <= k - 1; ++v )
        m.push_back( v );
    return m;
  }

  std::vector<int> complement() const
  {
    std::vector<int> m;
    for ( int v = 0; v < k; ++v )
      if ( !contains( v ) )
        m.push_back( v );
    return m;
  }

  bool operator==( segment const& other ) const = default;
};

/*! All proper nonempty segments of {0,...,k-1}, deduplicated, in
    deterministic order: lower segments by ascending cut, then upper
    segments by descending cut. Requires k >= 2. */
inline std::vector<segment> segments_of( int k )
{
  if ( k < 2 )
    throw std::invalid_argument( "segments_of requires k >= 2" );
  std::vector<segment> segs;
  std::set<std::vector<int>> seen;
  for ( int cut = 0; cut <= k - 2; ++cut )
  {
    segment s{ k, segment::family::lower, cut };
    if ( seen.insert( s.members() ).second )
      segs.push_back( s );
  }
  for ( int cut = k - 1; cut >= 1; --cut )
  {
    segment s{ k, segment::family::upper, cut };
    if ( seen.insert( s.members() ).second )
      segs.push_back( s );
  }
  return segs;
}

/*! One peel of the WNC induction: at peel time coordinate `coord` has at
    least two active values and f is constant `constant` on x_coord = value. */
struct peel_step
{
  std::size_t coord;
  int value;
  rational constant;

  bool operator==( peel_step const& other ) const = default;
};

/*! A verifiable witness that f is WNC: peels shrinking the domain to a
    single point, plus the value on that point. */
struct wnc_certificate
{
  std::vector<peel_step> steps;
  rational final_value;

  bool operator==( wnc_certificate const& other ) const = default;
};

/*! The (sigma, A_i, c_i) schema of a nested canalizing decomposition.
    segments[level] is a proper segment of coordinate order[level]'s
    value range; outputs holds c_1,...,c_{n+1} with c_n != c_{n+1}. */
struct nc_decomposition
{
  std::vector<std::size_t> order;
  std::vector<segment> segments;
  std::vector<rational> outputs;

  bool operator==( nc_decomposition const& other ) const = default;
};

/*! The K-clause normal form of a WNC function, K = sum of k_i: clause r
    reads "b[r] if x_{v(r)} = a[r] and no earlier clause matched". Every
    (coordinate, value) pair of the domain appears exactly once. */
struct wnc_normal_form
{
  std::vector<std::size_t> v;
  std::vector<int> a;
  std::vector<rational> b;
};

enum class search_mode
{
  greedy,
  exhaustive
};

/*! Returns b when f is constant b on x_{h.coord} = h.value AND some x
    with x_{h.coord} != h.value has f(x) != b. Requires the coordinate
    to have at least two active values. */
inline std::optional<rational> is_canalizing( mv_function const& f, hyperplane const& h )
{
  if ( f.domain().cardinality( h.coord ) < 2 )
    throw std::invalid_argument( "is_canalizing requires >= 2 active values on the coordinate" );
  auto const b = slice_constant( f, h );
  if ( !b )
    return std::nullopt;
  auto const& dom = f.domain();
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    if ( dom.point_at( idx )[h.coord] != h.value && f.value_at( idx ) != *b )
      return b;
  }
  return std::nullopt;
}

/*! All (h, b) with >= 2 active values on h.coord and f constant b on the
    hyperplane; coordinate ascending, value ascending. */
inline std::vector<std::pair<hyperplane, rational>> weakly_canalizing_hyperplanes( mv_function const& f )
{
  std::vector<std::pair<hyperplane, rational>> result;
  auto const& dom = f.domain();
  for ( std::size_t i = 0; i < dom.arity(); ++i )
  {
    if ( dom.cardinality( i ) < 2 )
      continue;
    for ( int a : dom.values( i ) )
    {
      hyperplane const h{ i, a };
      if ( auto b = slice_constant( f, h ) )
        result.emplace_back( h, *b );
    }
  }
  return result;
}

namespace detail
{

inline bool peel_search( mv_function const& f, bool exhaustive, std::vector<peel_step>& steps )
{
  if ( f.domain().size() == 1 )
    return true;
  auto const candidates = weakly_canalizing_hyperplanes( f );
  for ( auto const& [h, b] : candidates )
  {
    steps.push_back( { h.coord, h.value, b } );
    if ( peel_search( restrict_function( f, h ), exhaustive, steps ) )
      return true;
    steps.pop_back();
    if ( !exhaustive )
      return false;
  }
  return false;
}

} // namespace detail

/*! Searches for a peel sequence witnessing that f is WNC. Greedy mode
    always takes the first weakly canalizing hyperplane in scan order;
    exhaustive mode backtracks over all peel choices and returns the
    deterministically first certificate. */
inline std::optional<wnc_certificate> recognize_wnc( mv_function const& f,
                                                     search_mode mode = search_mode::greedy )
{
  std::vector<peel_step> steps;
  if ( !detail::peel_search( f, mode == search_mode::exhaustive, steps ) )
    return std::nullopt;
  mv_function g = f;
  for ( auto const& s : steps )
    g = restrict_function( g, { s.coord, s.value } );
  return wnc_certificate{ std::move( steps ), g.value_at( 0 ) };
}

/*! Greedy recognizer with exhaustive fallback. */
inline bool is_wnc( mv_function const& f )
{
  if ( recognize_wnc( f, search_mode::greedy ) )
    return true;
  return recognize_wnc( f, search_mode::exhaustive ).has_value();
}

/*! True iff every peel satisfies the >= 2-active-values condition and
    constancy, and the final domain is a single point with value
    cert.final_value. Never throws on structurally bad certificates. */
inline bool verify_wnc_certificate( mv_function const& f, wnc_certificate const& cert )
{
  mv_function g = f;
  for ( auto const& s : cert.steps )
  {
    auto const& dom = g.domain();
    if ( s.coord >= dom.arity() || dom.cardinality( s.coord ) < 2 ||
         dom.value_pos( s.coord, s.value ) < 0 )
      return false;
    auto const b = slice_constant( g, { s.coord, s.value } );
    if ( !b || *b != s.constant )
      return false;
    g = restrict_function( g, { s.coord, s.value } );
  }
  return g.domain().size() == 1 && g.value_at( 0 ) == cert.final_value;
}

/*! Evaluates a K-clause normal form at a point. */
inline rational evaluate_normal_form( wnc_normal_form const& nf, point const& p )
{
  for ( std::size_t r = 0; r < nf.v.size(); ++r )
    if ( p[nf.v[r]] == nf.a[r] )
      return nf.b[r];
  throw std::logic_error( "normal form does not cover the point" );
}

/*! Extends a verifying peel certificate to the full K-clause schema:
    the peels supply the leading clauses and the final singleton's
    coordinate values supply the rest (coordinate ascending), each with
    the final value. Validates pointwise against f. */
inline wnc_normal_form wnc_normal_form_of( mv_function const& f, wnc_certificate const& cert )
{
  if ( !verify_wnc_certificate( f, cert ) )
    throw std::invalid_argument( "wnc_normal_form: certificate does not verify" );

  wnc_normal_form nf;
  mv_function g = f;
  for ( auto const& s : cert.steps )
  {
    nf.v.push_back( s.coord );
    nf.a.push_back( s.value );
    nf.b.push_back( s.constant );
    g = restrict_function( g, { s.coord, s.value } );
  }
  for ( std::size_t i = 0; i < g.domain().arity(); ++i )
  {
    nf.v.push_back( i );
    nf.a.push_back( g.domain().values( i ).front() );
    nf.b.push_back( cert.final_value );
  }

  std::size_t K = 0;
  for ( int k : f.domain().cardinalities() )
    K += static_cast<std::size_t>( k );
  if ( nf.v.size() != K )
    throw std::logic_error( "normal form clause count mismatch" );
  for ( std::uint64_t idx = 0; idx < f.domain().size(); ++idx )
  {
    auto const p = f.domain().point_at( idx );
    if ( evaluate_normal_form( nf, p ) != f.value_at( idx ) )
      throw std::logic_error( "normal form does not reproduce the function" );
  }
  return nf;
}

/*! Evaluates the n+1-case NC schema at a point. */
inline rational evaluate_nc_schema( nc_decomposition const& dec, point const& p )
{
  for ( std::size_t level = 0; level < dec.order.size(); ++level )
    if ( dec.segments[level].contains( p[dec.order[level]] ) )
      return dec.outputs[level];
  return dec.outputs.back();
}

/*! Structural and pointwise check of an NC decomposition against f. */
inline bool verify_nc_decomposition( mv_function const& f, nc_decomposition const& dec )
{
  auto const& dom = f.domain();
  std::size_t const n = dom.arity();
  if ( !dom.is_full_range() )
    return false;
  if ( dec.order.size() != n || dec.segments.size() != n || dec.outputs.size() != n + 1 )
    return false;
  std::vector<bool> used( n, false );
  for ( std::size_t level = 0; level < n; ++level )
  {
    std::size_t const c = dec.order[level];
    if ( c >= n || used[c] )
      return false;
    used[c] = true;
    auto const& seg = dec.segments[level];
    if ( seg.k != static_cast<int>( dom.cardinality( c ) ) || !seg.valid() )
      return false;
  }
  if ( n == 0 || dec.outputs[n - 1] == dec.outputs[n] )
    return false;
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
    if ( evaluate_nc_schema( dec, dom.point_at( idx ) ) != f.value_at( idx ) )
      return false;
  return true;
}

namespace detail
{

/*! Backtracking over (next unused coordinate, proper segment) pairs.
    `region` holds the values still allowed per coordinate. */
inline bool nc_search( mv_function const& f, std::vector<std::vector<int>>& region,
                       std::vector<bool>& used, nc_decomposition& dec )
{
  std::size_t const n = f.domain().arity();
  if ( dec.order.size() == n )
  {
    // Residual region must be constant, distinct from the last level.
    auto const sub = product_domain::from_values( region );
    std::optional<rational> c;
    for ( std::uint64_t idx = 0; idx < sub.size(); ++idx )
    {
      auto const& v = f.evaluate( sub.point_at( idx ) );
      if ( !c )
        c = v;
      else if ( *c != v )
        return false;
    }
    if ( n == 0 || *c == dec.outputs.back() )
      return false;
    dec.outputs.push_back( *c );
    return true;
  }

  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( used[i] )
      continue;
    int const k = static_cast<int>( f.domain().cardinality( i ) );
    if ( k < 2 )
      continue;
    for ( auto const& seg : segments_of( k ) )
    {
      // f must be constant on the clause region {x in region | x_i in seg}.
      auto saved = region[i];
      region[i] = seg.members();
      auto const sub = product_domain::from_values( region );
      std::optional<rational> c;
      bool constant = true;
      for ( std::uint64_t idx = 0; idx < sub.size() && constant; ++idx )
      {
        auto const& v = f.evaluate( sub.point_at( idx ) );
        if ( !c )
          c = v;
        else if ( *c != v )
          constant = false;
      }
      if ( constant )
      {
        region[i] = seg.complement();
        used[i] = true;
        dec.order.push_back( i );
        dec.segments.push_back( seg );
        dec.outputs.push_back( *c );
        if ( nc_search( f, region, used, dec ) )
          return true;
        dec.order.pop_back();
        dec.segments.pop_back();
        dec.outputs.pop_back();
        used[i] = false;
      }
      region[i] = saved;
    }
  }
  return false;
}

} // namespace detail

/*! Searches for an NC decomposition of f. Requires a full-range domain.
    With `strict_codomain`, values must additionally be integers within
    the classical codomain {0,...,max_i k_i - 1}. */
inline std::optional<nc_decomposition> recognize_nc( mv_function const& f,
                                                     bool strict_codomain = false )
{
  auto const& dom = f.domain();
  if ( !dom.is_full_range() )
    throw std::invalid_argument( "recognize_nc requires an unrestricted domain" );
  if ( strict_codomain )
  {
    int kmax = 0;
    for ( int k : dom.cardinalities() )
      kmax = std::max( kmax, k );
    for ( auto const& v : f.values() )
      if ( denominator( v ) != 1 || v < 0 || v > kmax - 1 )
        return std::nullopt;
  }
  std::vector<std::vector<int>> region;
  for ( std::size_t i = 0; i < dom.arity(); ++i )
    region.push_back( dom.values( i ) );
  std::vector<bool> used( dom.arity(), false );
  nc_decomposition dec;
  if ( !detail::nc_search( f, region, used, dec ) )
    return std::nullopt;
  return dec;
}

/*! The constructive NC-to-WNC conversion: peels all segment values of
    each A_i in level order (ascending within a segment), then all
    complement values in the same order, with constants c_i inside A_i
    and c_{n+1} outside. Peels whose coordinate has become a singleton
    are skipped (they land in the normal form's trailing clauses). */
inline wnc_certificate nc_to_wnc( mv_function const& f, nc_decomposition const& dec )
{
  if ( !verify_nc_decomposition( f, dec ) )
    throw std::invalid_argument( "nc_to_wnc: decomposition does not verify" );

  std::size_t const n = dec.order.size();
  std::vector<std::pair<hyperplane, rational>> plan;
  for ( std::size_t level = 0; level < n; ++level )
    for ( int a : dec.segments[level].members() )
      plan.emplace_back( hyperplane{ dec.order[level], a }, dec.outputs[level] );
  for ( std::size_t level = 0; level < n; ++level )
    for ( int a : dec.segments[level].complement() )
      plan.emplace_back( hyperplane{ dec.order[level], a }, dec.outputs[n] );

  wnc_certificate cert;
  mv_function g = f;
  for ( auto const& [h, b] : plan )
  {
    if ( g.domain().cardinality( h.coord ) < 2 )
      continue;
    cert.steps.push_back( { h.coord, h.value, b } );
    g = restrict_function( g, h );
  }
  cert.final_value = g.value_at( 0 );
  if ( !verify_wnc_certificate( f, cert ) )
    throw std::logic_error( "nc_to_wnc produced a non-verifying certificate" );
  return cert;
}

/*! Text form: one `peel i a b` line per step (1-based coordinate),
    then a final `value v` line. */
inline std::string serialize_wnc_certificate( wnc_certificate const& cert )
{
  std::ostringstream os;
  for ( auto const& s : cert.steps )
    os << "peel " << ( s.coord + 1 ) << ' ' << s.value << ' ' << to_string( s.constant ) << '\n';
  os << "value " << to_string( cert.final_value ) << '\n';
  return os.str();
}

/*! Text form: `nc sigma=i1,...,in A_1=[lo..hi] ... c=c1,...,c{n+1}`
    (1-based coordinates). */
inline std::string serialize_nc_decomposition( nc_decomposition const& dec )
{
  std::ostringstream os;
  os << "nc sigma=";
  for ( std::size_t level = 0; level < dec.order.size(); ++level )
    os << ( level ? "," : "" ) << ( dec.order[level] + 1 );
  for ( std::size_t level = 0; level < dec.segments.size(); ++level )
  {
    auto const m = dec.segments[level].members();
    os << " A_" << ( level + 1 ) << "=[" << m.front() << ".." << m.back() << ']';
  }
  os << " c=";
  for ( std::size_t j = 0; j < dec.outputs.size(); ++j )
    os << ( j ? "," : "" ) << to_string( dec.outputs[j] );
  os << '\n';
  return os.str();
}

} // namespace mvnc

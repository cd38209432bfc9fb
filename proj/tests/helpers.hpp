#pragma once

#include <mvnc/mvnc.hpp>

#include <vector>

namespace helpers
{

inline mvnc::mv_function make_fn( std::vector<int> const& ks, std::vector<long> const& vals )
{
  std::vector<mvnc::rational> rs( vals.begin(), vals.end() );
  return { mvnc::product_domain( ks ), std::move( rs ) };
}

inline mvnc::mv_function and2()
{
  return make_fn( { 2, 2 }, { 0, 0, 0, 1 } );
}

inline mvnc::mv_function or2()
{
  return make_fn( { 2, 2 }, { 0, 1, 1, 1 } );
}

inline mvnc::mv_function xor2()
{
  return make_fn( { 2, 2 }, { 0, 1, 1, 0 } );
}

inline mvnc::mv_function min_fn( int k )
{
  mvnc::product_domain dom( { k, k } );
  std::vector<mvnc::rational> vals;
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    auto const p = dom.point_at( idx );
    vals.emplace_back( std::min( p[0], p[1] ) );
  }
  return { std::move( dom ), std::move( vals ) };
}

inline mvnc::mv_function max_fn( int k )
{
  mvnc::product_domain dom( { k, k } );
  std::vector<mvnc::rational> vals;
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    auto const p = dom.point_at( idx );
    vals.emplace_back( std::max( p[0], p[1] ) );
  }
  return { std::move( dom ), std::move( vals ) };
}

// Phage lambda rules on Z/2Z x Z/3Z, coordinates (CI, Cro).
inline mvnc::mv_function f_ci()
{
  return make_fn( { 2, 3 }, { 1, 0, 0, 1, 0, 0 } );
}

inline mvnc::mv_function f1_cro()
{
  return make_fn( { 2, 3 }, { 2, 2, 1, 0, 0, 0 } );
}

inline mvnc::mv_function f2_cro()
{
  return make_fn( { 2, 3 }, { 2, 2, 1, 0, 0, 1 } );
}

/*! Independent influence oracle: sums (f(p) - f(q))^2 over all ordered
    point pairs agreeing outside coordinate i, normalized by 2 k |domain|.
    Uses the pairwise form of the variance, a different route from the
    E[g^2] - E[g]^2 computation in the library. */
inline mvnc::rational oracle_influence( mvnc::mv_function const& f, std::size_t i )
{
  auto const& dom = f.domain();
  auto const k = static_cast<int>( dom.cardinality( i ) );
  mvnc::rational sum = 0;
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    auto p = dom.point_at( idx );
    auto const& fp = f.value_at( idx );
    for ( int b : dom.values( i ) )
    {
      auto q = p;
      q[i] = b;
      mvnc::rational const d = fp - f.evaluate( q );
      sum += d * d;
    }
  }
  return sum / ( 2 * k * mvnc::rational( dom.size() ) );
}

inline mvnc::rational oracle_average_sensitivity( mvnc::mv_function const& f )
{
  mvnc::rational as = 0;
  for ( std::size_t i = 0; i < f.domain().arity(); ++i )
    as += oracle_influence( f, i );
  return as;
}

} // namespace helpers

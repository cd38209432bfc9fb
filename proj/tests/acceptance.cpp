/*!
  \file acceptance.cpp
  \brief End-to-end acceptance suite

  Runs the full battery of exact-theorem and worked-example checks and
  prints one pass/fail line per criterion. Exits nonzero if any fails.
*/

#include "helpers.hpp"

#include <mvnc/mvnc.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace mvnc;

namespace
{

int failures = 0;

void criterion( int number, std::string const& name, std::function<bool()> body )
{
  auto const start = std::chrono::steady_clock::now();
  bool ok = false;
  try
  {
    ok = body();
  }
  catch ( std::exception const& e )
  {
    std::cout << "criterion " << number << ": FAIL (" << name << "): exception: " << e.what()
              << '\n';
    ++failures;
    return;
  }
  auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start )
                      .count();
  std::cout << "criterion " << number << ": " << ( ok ? "PASS" : "FAIL" ) << " (" << name << ", "
            << ms << " ms)\n";
  if ( !ok )
    ++failures;
}

std::vector<int> random_cardinalities( splitmix64& rng, std::size_t max_n, int max_k )
{
  std::vector<int> ks;
  auto const n = 1 + rng.below( max_n );
  for ( std::size_t i = 0; i < n; ++i )
    ks.push_back( 1 + static_cast<int>( rng.below( static_cast<std::uint64_t>( max_k ) ) ) );
  return ks;
}

// 1. 10,000 random WNC functions (n <= 5, k_i <= 4, values in [0,3]):
//    AS <= M^2/(4(1-kappa)) under exact rational comparison.
bool criterion1()
{
  splitmix64 rng( 1 );
  for ( int trial = 0; trial < 10000; ++trial )
  {
    gen_spec spec{ random_cardinalities( rng, 5, 4 ), codomain::integer_range( 0, 3 ),
                   gen_kind::wnc, rng.next() };
    auto const [f, cert] = random_wnc( spec );
    if ( !( average_sensitivity( f ) <= wnc_bound( f.max_value(), kappa( f.domain() ) ) ) )
      return false;
  }
  return true;
}

// 2. 10,000 random Boolean NC functions, n <= 8: AS <= 1/2 exactly.
bool criterion2()
{
  splitmix64 rng( 2 );
  for ( int trial = 0; trial < 10000; ++trial )
  {
    std::vector<int> const ks( 1 + rng.below( 8 ), 2 );
    gen_spec spec{ ks, codomain::integer_range( 0, 1 ), gen_kind::nc, rng.next() };
    auto const [f, dec] = random_nc( spec );
    if ( !( average_sensitivity( f ) <= rational( 1, 2 ) ) )
      return false;
  }
  return true;
}

// 3. 1,000 random rational-valued functions (n <= 4, k_i <= 4): exact,
//    Dirichlet-form, and spectral influences agree within 1e-9 under the
//    standard and one random-seeded basis.
bool criterion3()
{
  splitmix64 rng( 3 );
  std::vector<rational> const pool{ 0, 1, rational( 1, 2 ), rational( 3, 2 ), rational( -2, 3 ),
                                    rational( 7, 4 ), 2, rational( 5, 3 ) };
  for ( int trial = 0; trial < 1000; ++trial )
  {
    gen_spec spec{ random_cardinalities( rng, 4, 4 ), codomain::of_values( pool ),
                   gen_kind::uniform, rng.next() };
    auto const f = random_function( spec );
    auto const std_basis = fourier_basis::build( f.domain() );
    auto const rnd_basis = fourier_basis::build( f.domain(), basis_kind::random, rng.next() );
    for ( std::size_t i = 0; i < f.domain().arity(); ++i )
    {
      double const exact = to_double( influence_exact( f, i ) );
      double const dirichlet = to_double( inner_product( f, laplacian( f, i ) ) );
      if ( std::abs( exact - dirichlet ) >= 1e-9 )
        return false;
      if ( std::abs( exact - influence_spectral( f, std_basis, i ) ) >= 1e-9 )
        return false;
      if ( std::abs( exact - influence_spectral( f, rnd_basis, i ) ) >= 1e-9 )
        return false;
    }
  }
  return true;
}

// 4. 1,000 random NC functions: nc_to_wnc certificates all verify.
bool criterion4()
{
  splitmix64 rng( 4 );
  for ( int trial = 0; trial < 1000; ++trial )
  {
    std::vector<int> ks;
    auto const n = 1 + rng.below( 4 );
    for ( std::size_t i = 0; i < n; ++i )
      ks.push_back( 2 + static_cast<int>( rng.below( 3 ) ) );
    gen_spec spec{ ks, codomain::integer_range( 0, 3 ), gen_kind::nc, rng.next() };
    auto const [f, dec] = random_nc( spec );
    if ( !verify_nc_decomposition( f, dec ) )
      return false;
    if ( !verify_wnc_certificate( f, nc_to_wnc( f, dec ) ) )
      return false;
  }
  return true;
}

// 5. Greedy/exhaustive equivalence: all 16 functions {0,1}^2 -> {0,1},
//    all 81 functions {0,1}^2 -> {0,1,2}, all 27 unary Z/3Z functions,
//    plus 10,000 random functions on k=(2,2,2).
bool criterion5()
{
  auto modes_agree = []( mv_function const& f ) {
    return recognize_wnc( f, search_mode::greedy ).has_value() ==
           recognize_wnc( f, search_mode::exhaustive ).has_value();
  };
  auto sweep = [&]( std::vector<int> const& ks, long hi ) {
    product_domain const dom( ks );
    auto const cod = codomain::integer_range( 0, hi );
    std::uint64_t total = 1;
    for ( std::uint64_t i = 0; i < dom.size(); ++i )
      total *= cod.count();
    std::vector<std::size_t> digits( dom.size(), 0 );
    for ( std::uint64_t fn = 0; fn < total; ++fn )
    {
      std::vector<rational> vals( dom.size() );
      for ( std::uint64_t i = 0; i < dom.size(); ++i )
        vals[i] = cod.at( digits[i] );
      if ( !modes_agree( mv_function( dom, std::move( vals ) ) ) )
        return false;
      for ( std::size_t i = dom.size(); i-- > 0; )
      {
        if ( ++digits[i] < cod.count() )
          break;
        digits[i] = 0;
      }
    }
    return true;
  };
  if ( !sweep( { 2, 2 }, 1 ) || !sweep( { 2, 2 }, 2 ) || !sweep( { 3 }, 2 ) )
    return false;
  splitmix64 rng( 5 );
  for ( int trial = 0; trial < 10000; ++trial )
  {
    gen_spec spec{ { 2, 2, 2 }, codomain::integer_range( 0, 1 ), gen_kind::uniform, rng.next() };
    if ( !modes_agree( random_function( spec ) ) )
      return false;
  }
  return true;
}

// 6. Worked examples: min/max on {0,1,2}^2 WNC not NC; unary (0,1,0) WNC
//    not NC; constants WNC but not canalizing; all 27 unary Z/3Z WNC.
bool criterion6()
{
  for ( auto const& f : { helpers::min_fn( 3 ), helpers::max_fn( 3 ) } )
  {
    if ( !is_wnc( f ) || recognize_nc( f ).has_value() )
      return false;
  }
  auto const u = helpers::make_fn( { 3 }, { 0, 1, 0 } );
  if ( !is_wnc( u ) || recognize_nc( u ).has_value() )
    return false;

  for ( auto const& ks : { std::vector<int>{ 2, 2 }, { 3 }, { 2, 3, 2 } } )
  {
    product_domain const dom( ks );
    mv_function const c( dom, std::vector<rational>( dom.size(), rational( 1 ) ) );
    if ( !is_wnc( c ) )
      return false;
    for ( std::size_t i = 0; i < dom.arity(); ++i )
      for ( int a : dom.values( i ) )
        if ( dom.cardinality( i ) >= 2 && is_canalizing( c, { i, a } ).has_value() )
          return false;
  }

  for ( long a = 0; a < 3; ++a )
    for ( long b = 0; b < 3; ++b )
      for ( long c = 0; c < 3; ++c )
        if ( !is_wnc( helpers::make_fn( { 3 }, { a, b, c } ) ) )
          return false;
  return true;
}

// 7. Phage lambda: the eight expected edges, f2 network equality, and
//    f1_Cro recognized NC.
bool criterion7()
{
  network const net1{ { "CI", "Cro" }, { 2, 3 }, { helpers::f_ci(), helpers::f1_cro() } };
  network const net2{ { "CI", "Cro" }, { 2, 3 }, { helpers::f_ci(), helpers::f2_cro() } };
  auto const g1 = build_stg( net1 );

  std::set<std::pair<point, point>> expected{
      { { 0, 2 }, { 0, 1 } }, { { 1, 2 }, { 0, 2 } }, { { 1, 2 }, { 1, 1 } },
      { { 0, 1 }, { 0, 2 } }, { { 1, 1 }, { 0, 1 } }, { { 1, 1 }, { 1, 0 } },
      { { 0, 0 }, { 0, 1 } }, { { 0, 0 }, { 1, 0 } } };
  std::set<std::pair<point, point>> actual;
  for ( auto const& [src, dst] : g1.edges )
    actual.emplace( g1.states.point_at( src ), g1.states.point_at( dst ) );
  if ( actual != expected || g1.edges.size() != 8 )
    return false;

  if ( !stg_equal( g1, build_stg( net2 ) ) )
    return false;

  auto const dec = recognize_nc( helpers::f1_cro() );
  return dec.has_value() && verify_nc_decomposition( helpers::f1_cro(), *dec );
}

// 8. Numeric anchors, each recomputed by the pairwise-variance oracle, and
//    the boundary-edge relation on all 16 Boolean 2-variable functions.
bool criterion8()
{
  auto check_anchor = []( mv_function const& f, rational const& expected ) {
    return average_sensitivity( f ) == expected &&
           helpers::oracle_average_sensitivity( f ) == expected;
  };
  if ( !check_anchor( helpers::and2(), rational( 1, 4 ) ) )
    return false;
  if ( !check_anchor( helpers::xor2(), rational( 1, 2 ) ) )
    return false;
  if ( !check_anchor( helpers::min_fn( 3 ), rational( 16, 27 ) ) )
    return false;
  if ( influence_exact( helpers::f_ci(), 1 ) != rational( 2, 9 ) ||
       helpers::oracle_influence( helpers::f_ci(), 1 ) != rational( 2, 9 ) )
    return false;

  for ( int bits = 0; bits < 16; ++bits )
  {
    auto const f = helpers::make_fn(
        { 2, 2 }, { ( bits >> 0 ) & 1, ( bits >> 1 ) & 1, ( bits >> 2 ) & 1, ( bits >> 3 ) & 1 } );
    for ( std::size_t i = 0; i < 2; ++i )
      if ( 4 * influence_exact( f, i ) != boundary_edge_fraction( f, i ) )
        return false;
  }
  return true;
}

// 9. Census oracles.
bool criterion9()
{
  auto const c22 = census( product_domain( { 2, 2 } ), codomain::integer_range( 0, 1 ) );
  if ( c22.total != 16 || c22.wnc != 14 || c22.nc != 8 )
    return false;
  auto const c3 = census( product_domain( { 3 } ), codomain::integer_range( 0, 2 ) );
  return c3.total == 27 && c3.wnc == 27;
}

// 10. Proof-inequality spot check: AS[f] <= M^2/4 + kappa * AS[f'] for
//     every weakly canalizing (j, a) of 1,000 random WNC functions.
bool criterion10()
{
  splitmix64 rng( 10 );
  for ( int trial = 0; trial < 1000; ++trial )
  {
    gen_spec spec{ random_cardinalities( rng, 4, 4 ), codomain::integer_range( 0, 3 ),
                   gen_kind::wnc, rng.next() };
    auto const [f, cert] = random_wnc( spec );
    auto const M = f.max_value();
    auto const kap = kappa( f.domain() );
    auto const as = average_sensitivity( f );
    for ( auto const& [h, b] : weakly_canalizing_hyperplanes( f ) )
    {
      if ( !( as <= M * M / 4 + kap * average_sensitivity( restrict_function( f, h ) ) ) )
        return false;
    }
  }
  return true;
}

} // namespace

int main()
{
  criterion( 1, "theorem bound, 10k random WNC, exact", criterion1 );
  criterion( 2, "Boolean NC specialization AS <= 1/2, 10k samples", criterion2 );
  criterion( 3, "influence triple agreement, 1k functions, two bases", criterion3 );
  criterion( 4, "NC-to-WNC pipeline, 1k samples", criterion4 );
  criterion( 5, "greedy/exhaustive recognizer equivalence", criterion5 );
  criterion( 6, "worked examples reproduced", criterion6 );
  criterion( 7, "phage lambda dynamics", criterion7 );
  criterion( 8, "numeric anchors and boundary-edge relation", criterion8 );
  criterion( 9, "census oracles", criterion9 );
  criterion( 10, "proof recursion inequality, 1k WNC samples", criterion10 );

  if ( failures )
  {
    std::cout << failures << " criterion(s) FAILED\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}

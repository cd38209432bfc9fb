/*!
  \file mvnc_cli.cpp
  \brief Command-line front end for mvfn/mvnet analysis

  Subcommands: classify, sensitivity, bound, spectrum, gen, census,
  dynamics. Exit codes: 0 success, 1 `dynamics --compare` inequality or
  `bound` falsification, 2 parse errors, 3 precondition violations.
*/

#include <mvnc/mvnc.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace
{

using json = nlohmann::json;

std::string fmt_decimal( double x )
{
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.12g", x );
  return buf;
}

/*! `p/q (~decimal)`, the exact form being authoritative. */
std::string fmt_rational( mvnc::rational const& r )
{
  return mvnc::to_string( r ) + " (~" + fmt_decimal( mvnc::to_double( r ) ) + ")";
}

json rational_json( mvnc::rational const& r )
{
  return json{ { "exact", mvnc::to_string( r ) }, { "approx", mvnc::to_double( r ) } };
}

mvnc::mv_function load_mvfn( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw mvnc::parse_error( "cannot open '" + path + "'" );
  return mvnc::parse_mvfn( in );
}

mvnc::network load_mvnet( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw mvnc::parse_error( "cannot open '" + path + "'" );
  return mvnc::parse_mvnet( in );
}

std::vector<int> parse_k_list( std::string const& s )
{
  std::vector<int> ks;
  std::stringstream ss( s );
  std::string tok;
  while ( std::getline( ss, tok, ',' ) )
    ks.push_back( std::stoi( tok ) );
  if ( ks.empty() )
    throw std::invalid_argument( "empty cardinality list" );
  return ks;
}

/*! `LO..HI` integer range. */
mvnc::codomain parse_codomain( std::string const& s )
{
  auto const dots = s.find( ".." );
  if ( dots == std::string::npos )
    throw std::invalid_argument( "codomain must be LO..HI" );
  return mvnc::codomain::integer_range( std::stol( s.substr( 0, dots ) ),
                                        std::stol( s.substr( dots + 2 ) ) );
}

int cmd_classify( std::string const& path, bool certificate, bool as_json )
{
  auto const f = load_mvfn( path );
  auto const wch = mvnc::weakly_canalizing_hyperplanes( f );
  bool canalizing = false;
  for ( auto const& [h, b] : wch )
    if ( mvnc::is_canalizing( f, h ) )
    {
      canalizing = true;
      break;
    }
  auto const nc = mvnc::recognize_nc( f );
  auto wnc = mvnc::recognize_wnc( f, mvnc::search_mode::greedy );
  if ( !wnc )
    wnc = mvnc::recognize_wnc( f, mvnc::search_mode::exhaustive );

  if ( as_json )
  {
    json out{ { "weakly_canalizing", !wch.empty() },
              { "canalizing", canalizing },
              { "nc", nc.has_value() },
              { "wnc", wnc.has_value() } };
    if ( certificate )
    {
      if ( wnc )
        out["wnc_certificate"] = mvnc::serialize_wnc_certificate( *wnc );
      if ( nc )
        out["nc_decomposition"] = mvnc::serialize_nc_decomposition( *nc );
    }
    std::cout << out.dump( 2 ) << '\n';
    return 0;
  }

  std::cout << "weakly_canalizing: " << ( wch.empty() ? "no" : "yes" ) << '\n'
            << "canalizing: " << ( canalizing ? "yes" : "no" ) << '\n'
            << "nc: " << ( nc ? "yes" : "no" ) << '\n'
            << "wnc: " << ( wnc ? "yes" : "no" ) << '\n';
  if ( certificate )
  {
    if ( wnc )
      std::cout << mvnc::serialize_wnc_certificate( *wnc );
    if ( nc )
      std::cout << mvnc::serialize_nc_decomposition( *nc );
  }
  return 0;
}

int cmd_sensitivity( std::string const& path, bool as_json )
{
  auto const f = load_mvfn( path );
  std::vector<mvnc::rational> infs;
  for ( std::size_t i = 0; i < f.domain().arity(); ++i )
    infs.push_back( mvnc::influence_exact( f, i ) );
  mvnc::rational as = 0;
  for ( auto const& v : infs )
    as += v;

  if ( as_json )
  {
    json out;
    for ( auto const& v : infs )
      out["influences"].push_back( rational_json( v ) );
    out["as"] = rational_json( as );
    std::cout << out.dump( 2 ) << '\n';
    return 0;
  }
  for ( std::size_t i = 0; i < infs.size(); ++i )
    std::cout << "Inf_" << ( i + 1 ) << " = " << fmt_rational( infs[i] ) << '\n';
  std::cout << "AS = " << fmt_rational( as ) << '\n';
  return 0;
}

int cmd_bound( std::string const& path, bool as_json )
{
  auto const f = load_mvfn( path );
  auto const r = mvnc::check_theorem( f );
  bool const falsified = r.is_wnc && r.nonnegative && !r.bound_holds;
  std::string const status =
      !r.bound_applicable ? "not-applicable" : ( r.bound_holds ? "ok" : "VIOLATED" );

  if ( as_json )
  {
    json out;
    for ( auto const& v : r.influences )
      out["influences"].push_back( rational_json( v ) );
    out["as"] = rational_json( r.as );
    out["max_value"] = rational_json( r.max_value );
    out["min_value"] = rational_json( r.min_value );
    out["kappa"] = rational_json( r.kappa );
    out["wnc_bound"] = rational_json( r.wnc_bound );
    out["generic_bound"] = rational_json( r.generic_bound );
    out["is_wnc"] = r.is_wnc;
    out["nonnegative"] = r.nonnegative;
    out["bound_applicable"] = r.bound_applicable;
    out["bound_holds"] = r.bound_holds;
    out["status"] = status;
    if ( r.bound_applicable && r.wnc_bound != 0 )
      out["ratio"] = mvnc::to_double( r.as / r.wnc_bound );
    std::cout << out.dump( 2 ) << '\n';
    return falsified ? 1 : 0;
  }

  std::cout << "M = " << fmt_rational( r.max_value ) << '\n'
            << "m = " << fmt_rational( r.min_value ) << '\n'
            << "kappa = " << fmt_rational( r.kappa ) << '\n'
            << "AS = " << fmt_rational( r.as ) << '\n'
            << "wnc_bound = " << fmt_rational( r.wnc_bound ) << '\n'
            << "generic_bound = " << fmt_rational( r.generic_bound ) << '\n'
            << "is_wnc = " << ( r.is_wnc ? "yes" : "no" ) << '\n';
  if ( r.bound_applicable && r.wnc_bound != 0 )
    std::cout << "ratio = " << fmt_decimal( mvnc::to_double( r.as / r.wnc_bound ) ) << '\n';
  std::cout << "bound: " << status << '\n';
  return falsified ? 1 : 0;
}

int cmd_spectrum( std::string const& path, std::string const& basis_name, std::uint64_t seed )
{
  auto const f = load_mvfn( path );
  auto const kind =
      basis_name == "random" ? mvnc::basis_kind::random : mvnc::basis_kind::standard;
  auto const basis = mvnc::fourier_basis::build( f.domain(), kind, seed );
  auto const spec = mvnc::fourier_transform( f, basis );

  std::cout << "# basis " << basis_name;
  if ( kind == mvnc::basis_kind::random )
    std::cout << " seed " << seed;
  std::cout << '\n';
  auto const& dom = f.domain();
  for ( std::uint64_t a = 0; a < dom.size(); ++a )
  {
    auto const alpha = mvnc::detail::mixed_radix_digits( dom, a );
    std::cout << "alpha=(";
    for ( std::size_t i = 0; i < alpha.size(); ++i )
      std::cout << ( i ? "," : "" ) << alpha[i];
    char buf[64];
    std::snprintf( buf, sizeof buf, "%.17g", spec.coefficients[a] );
    std::cout << ") coeff=" << buf << '\n';
  }
  return 0;
}

int cmd_gen( std::string const& klist, std::string const& kind_name, std::string const& cod,
             std::uint64_t seed, std::string const& out_path, std::string const& cert_path )
{
  mvnc::gen_spec spec{ parse_k_list( klist ), parse_codomain( cod ), mvnc::gen_kind::uniform,
                       seed };
  if ( kind_name == "wnc" )
    spec.kind = mvnc::gen_kind::wnc;
  else if ( kind_name == "nc" )
    spec.kind = mvnc::gen_kind::nc;
  else if ( kind_name != "uniform" )
    throw std::invalid_argument( "unknown kind '" + kind_name + "'" );

  std::string fn_text, cert_text;
  switch ( spec.kind )
  {
  case mvnc::gen_kind::uniform:
    fn_text = mvnc::serialize_mvfn( mvnc::random_function( spec ) );
    break;
  case mvnc::gen_kind::wnc:
  {
    auto const [f, cert] = mvnc::random_wnc( spec );
    fn_text = mvnc::serialize_mvfn( f );
    cert_text = mvnc::serialize_wnc_certificate( cert );
    break;
  }
  case mvnc::gen_kind::nc:
  {
    auto const [f, dec] = mvnc::random_nc( spec );
    fn_text = mvnc::serialize_mvfn( f );
    cert_text = mvnc::serialize_nc_decomposition( dec );
    break;
  }
  }

  std::cout << "# gen kind " << kind_name << " seed " << seed << '\n';
  if ( out_path.empty() )
    std::cout << fn_text;
  else
    std::ofstream( out_path ) << fn_text;
  if ( !cert_text.empty() )
  {
    if ( cert_path.empty() )
      std::cout << cert_text;
    else
      std::ofstream( cert_path ) << cert_text;
  }
  return 0;
}

int cmd_census( std::string const& klist, std::string const& cod, bool as_json )
{
  auto const counts =
      mvnc::census( mvnc::product_domain( parse_k_list( klist ) ), parse_codomain( cod ) );
  if ( as_json )
  {
    json out{ { "total", counts.total },
              { "weakly_canalizing", counts.weakly_canalizing },
              { "canalizing", counts.canalizing },
              { "nc", counts.nc },
              { "wnc", counts.wnc } };
    std::cout << out.dump( 2 ) << '\n';
    return 0;
  }
  std::cout << "total              " << counts.total << '\n'
            << "weakly_canalizing  " << counts.weakly_canalizing << '\n'
            << "canalizing         " << counts.canalizing << '\n'
            << "nc                 " << counts.nc << '\n'
            << "wnc                " << counts.wnc << '\n';
  return 0;
}

int cmd_dynamics( std::string const& path, std::string const& compare_path,
                  std::string const& dot_path, bool as_json )
{
  if ( !compare_path.empty() )
  {
    auto const a = mvnc::build_stg( load_mvnet( path ) );
    auto const b = mvnc::build_stg( load_mvnet( compare_path ) );
    bool const eq = mvnc::stg_equal( a, b );
    if ( as_json )
      std::cout << json{ { "equal", eq } }.dump( 2 ) << '\n';
    else
      std::cout << ( eq ? "equal" : "different" ) << '\n';
    return eq ? 0 : 1;
  }

  auto const net = load_mvnet( path );
  auto const graph = mvnc::build_stg( net );
  auto const flags = mvnc::classify_rules( net );

  if ( !dot_path.empty() )
    std::ofstream( dot_path ) << mvnc::export_dot( graph );

  if ( as_json )
  {
    json out;
    out["states"] = graph.states.size();
    for ( auto const& [src, dst] : graph.edges )
      out["edges"].push_back( { src, dst } );
    for ( std::size_t g = 0; g < net.names.size(); ++g )
      out["rules"][net.names[g]] = { { "weakly_canalizing", flags[g].weakly_canalizing },
                                     { "canalizing", flags[g].canalizing },
                                     { "nc", flags[g].nc },
                                     { "wnc", flags[g].wnc } };
    std::cout << out.dump( 2 ) << '\n';
    return 0;
  }

  std::cout << "states " << graph.states.size() << " edges " << graph.edges.size() << '\n';
  auto label = [&]( std::uint64_t idx ) {
    auto const p = graph.states.point_at( idx );
    std::string s = "(";
    for ( std::size_t i = 0; i < p.size(); ++i )
      s += ( i ? "," : "" ) + std::to_string( p[i] );
    return s + ")";
  };
  for ( auto const& [src, dst] : graph.edges )
    std::cout << label( src ) << " -> " << label( dst ) << '\n';
  for ( std::size_t g = 0; g < net.names.size(); ++g )
    std::cout << net.names[g] << ": weakly_canalizing=" << ( flags[g].weakly_canalizing ? "yes" : "no" )
              << " canalizing=" << ( flags[g].canalizing ? "yes" : "no" )
              << " nc=" << ( flags[g].nc ? "yes" : "no" )
              << " wnc=" << ( flags[g].wnc ? "yes" : "no" ) << '\n';
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Analysis of (weakly) nested canalizing multivalued functions" };
  app.require_subcommand( 1 );

  std::string path, compare_path, dot_path, cert_path, out_path;
  std::string klist, cod = "0..1", basis_name = "standard", kind_name = "uniform";
  std::uint64_t seed = 0;
  bool certificate = false, as_json = false;

  auto* classify = app.add_subcommand( "classify", "Canalization verdicts for an mvfn file" );
  classify->add_option( "file", path )->required();
  classify->add_flag( "--certificate", certificate, "also print certificates" );
  classify->add_flag( "--json", as_json );

  auto* sensitivity = app.add_subcommand( "sensitivity", "Exact influences and AS" );
  sensitivity->add_option( "file", path )->required();
  sensitivity->add_flag( "--json", as_json );

  auto* bound = app.add_subcommand( "bound", "Average-sensitivity bound report" );
  bound->add_option( "file", path )->required();
  bound->add_flag( "--json", as_json );

  auto* spectrum = app.add_subcommand( "spectrum", "Fourier coefficients" );
  spectrum->add_option( "file", path )->required();
  spectrum->add_option( "--basis", basis_name )->check( CLI::IsMember( { "standard", "random" } ) );
  spectrum->add_option( "--seed", seed );

  auto* gen = app.add_subcommand( "gen", "Generate a function (with certificate sidecar)" );
  gen->add_option( "--k", klist, "cardinalities, e.g. 2,3" )->required();
  gen->add_option( "--kind", kind_name )->check( CLI::IsMember( { "uniform", "wnc", "nc" } ) );
  gen->add_option( "--codomain", cod, "integer range LO..HI" );
  gen->add_option( "--seed", seed );
  gen->add_option( "-o,--out", out_path, "mvfn output path (default stdout)" );
  gen->add_option( "--cert", cert_path, "certificate output path (default stdout)" );

  auto* census = app.add_subcommand( "census", "Exhaustive small-domain classification" );
  census->add_option( "--k", klist )->required();
  census->add_option( "--codomain", cod );
  census->add_flag( "--json", as_json );

  auto* dynamics = app.add_subcommand( "dynamics", "Asynchronous state transition graph" );
  dynamics->add_option( "file", path )->required();
  dynamics->add_option( "--compare", compare_path, "second mvnet; exit 0 iff same STG" );
  dynamics->add_option( "--dot", dot_path, "write DOT output here" );
  dynamics->add_flag( "--json", as_json );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return 2;
  }

  try
  {
    if ( *classify )
      return cmd_classify( path, certificate, as_json );
    if ( *sensitivity )
      return cmd_sensitivity( path, as_json );
    if ( *bound )
      return cmd_bound( path, as_json );
    if ( *spectrum )
      return cmd_spectrum( path, basis_name, seed );
    if ( *gen )
      return cmd_gen( klist, kind_name, cod, seed, out_path, cert_path );
    if ( *census )
      return cmd_census( klist, cod, as_json );
    if ( *dynamics )
      return cmd_dynamics( path, compare_path, dot_path, as_json );
  }
  catch ( mvnc::parse_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  catch ( std::invalid_argument const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

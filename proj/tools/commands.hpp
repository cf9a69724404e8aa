// Copyright 2026 The querycx Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*!
  \file commands.hpp
  \brief The querycx command line: measure, verify and report-gap.

  Exit codes: 0 success, 1 verification failure, 2 cap violation,
  3 parse or usage error. Output is assembled in memory and written once.
*/

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <querycx/querycx.hpp>

#include "report.hpp"
#include "verify.hpp"

namespace querycx::cli
{

enum exit_code : int
{
  exit_ok = 0,
  exit_failed = 1,
  exit_cap = 2,
  exit_usage = 3
};

struct FamilyArgs
{
  std::string family;
  int n = 0, m = 0, vertices = 0, k = 0;
  std::string predicate;

  void add_to( CLI::App& app )
  {
    app.add_option( "--family", family, "xor, and, or, maj, ind, symmetric, gt, omb, conn or clique" );
    app.add_option( "--n", n, "number of variables (gt: bits per operand)" );
    app.add_option( "--m", m, "address bits for ind" );
    app.add_option( "--vertices", vertices, "vertex count for conn and clique" );
    app.add_option( "--k", k, "clique size" );
    app.add_option( "--predicate", predicate, "symmetric predicate as n+1 bits, weight 0 first" );
  }

  FamilySpec spec() const
  {
    const Family f = parse_family( family );
    switch ( f )
    {
    case Family::ind:
      return FamilySpec::index( m );
    case Family::conn:
      return FamilySpec::connectivity( vertices );
    case Family::clique:
      return FamilySpec::clique( vertices, k );
    case Family::symmetric:
    {
      std::vector<bool> p;
      for ( char c : predicate )
      {
        if ( c != '0' && c != '1' )
        {
          throw parse_error( "predicate must consist of 0 and 1" );
        }
        p.push_back( c == '1' );
      }
      return FamilySpec::symmetric( p );
    }
    default:
      return FamilySpec::of( f, n );
    }
  }
};

inline json spec_json( const FamilySpec& spec )
{
  json j;
  j["family"] = std::string( family_name( spec.family ) );
  j["name"] = describe( spec );
  switch ( spec.family )
  {
  case Family::ind:
    j["m"] = spec.m;
    break;
  case Family::conn:
    j["vertices"] = spec.vertices;
    break;
  case Family::clique:
    j["vertices"] = spec.vertices;
    j["k"] = spec.k;
    break;
  case Family::symmetric:
  {
    j["predicate"] = predicate_string( spec.predicate );
    j["n"] = static_cast<int>( spec.predicate.size() ) - 1;
    break;
  }
  default:
    j["n"] = spec.n;
  }
  return j;
}

/// Named explicit trees that exist for a family instance.
inline std::vector<TreeResult> family_trees( const FamilySpec& spec, const TruthTable& f, const std::vector<std::uint8_t>& cert )
{
  std::vector<TreeResult> out;
  if ( spec.family == Family::gt )
  {
    out.push_back( { "gt_tree", instc_wrt( f, GtPolicy( spec.n ), cert ) } );
  }
  if ( spec.family == Family::omb && spec.n % 2 == 1 )
  {
    out.push_back( { "omb_tree", instc_wrt( f, OmbPolicy( spec.n ), cert ) } );
  }
  if ( spec.family == Family::ind && spec.m <= 3 )
  {
    out.push_back( { "ind_tree", instc_wrt( f, ind_tree( spec.m ), cert ) } );
  }
  return out;
}

/* measure ***************************************************************/

struct MeasureArgs
{
  FamilyArgs family;
  std::string file;
  std::string measures;
  std::string format = "json";
  bool slow = false;
  bool tree = false;
};

inline const std::vector<std::string>& all_measures()
{
  static const std::vector<std::string> names = { "dt", "cmin", "cmax", "deg", "instc", "trees" };
  return names;
}

inline MeasureReport build_report( const MeasureArgs& a )
{
  const Caps caps = a.slow ? Caps::slow() : Caps{};
  MeasureReport report;
  std::optional<FamilySpec> spec;
  TruthTable f;
  if ( !a.file.empty() )
  {
    if ( !a.family.family.empty() )
    {
      throw family_parameter_error( "--file and --family are mutually exclusive" );
    }
    std::ifstream in( a.file, std::ios::binary );
    if ( !in )
    {
      throw parse_error( "cannot open " + a.file );
    }
    std::ostringstream bytes;
    bytes << in.rdbuf();
    f = parse_truth_table( bytes.str() );
    const auto base = std::filesystem::path( a.file ).filename().string();
    report.function = json{ { "name", "file:" + base }, { "file", base }, { "sha256", sha256_hex( bytes.str() ) } };
  }
  else
  {
    if ( a.family.family.empty() )
    {
      throw family_parameter_error( "one of --family or --file is required" );
    }
    spec = a.family.spec();
    f = make_family( *spec, caps );
    report.function = spec_json( *spec );
  }
  const int n = f.num_vars();
  report.n = n;

  // explicit lists are strict about caps; the default list skips what does not fit
  const bool strict = !a.measures.empty();
  std::set<std::string> wanted;
  if ( strict )
  {
    std::stringstream list( a.measures );
    for ( std::string item; std::getline( list, item, ',' ); )
    {
      if ( item == "degree" )
      {
        item = "deg";
      }
      if ( std::find( all_measures().begin(), all_measures().end(), item ) == all_measures().end() )
      {
        throw family_parameter_error( "unknown measure '" + item + "'" );
      }
      wanted.insert( item );
    }
  }
  else
  {
    wanted.insert( all_measures().begin(), all_measures().end() );
  }
  const auto want = [&]( const std::string& name, int cap ) {
    if ( !wanted.count( name ) )
    {
      return false;
    }
    if ( n > cap )
    {
      if ( strict )
      {
        require_cap( n, cap, name.c_str() );
      }
      return false;
    }
    return true;
  };

  std::optional<SubcubeLattice> lattice;
  std::vector<std::uint8_t> cert;
  if ( n <= caps.lattice )
  {
    report.timing_ms["lattice"] = time_ms( [&] { lattice.emplace( f, caps ); cert = point_certificates( *lattice ); } );
  }
  if ( want( "dt", caps.lattice ) )
  {
    report.timing_ms["dt"] = time_ms( [&] { report.dt = dt( *lattice ); } );
  }
  if ( want( "cmin", std::max( caps.lattice, caps.certificate ) ) )
  {
    report.timing_ms["cmin"] = time_ms( [&] { report.cmin = lattice ? cmin( *lattice ) : cmin( f, caps ); } );
  }
  if ( want( "cmax", std::max( caps.lattice, caps.certificate ) ) )
  {
    report.timing_ms["cmax"] = time_ms( [&] {
      report.cmax = lattice ? *std::max_element( cert.begin(), cert.end() ) : certificate_complexity_max( f, caps );
    } );
  }
  if ( want( "deg", caps.degree ) )
  {
    report.timing_ms["deg"] = time_ms( [&] { report.degree = degree( f, caps ); } );
  }
  if ( want( "instc", caps.lattice ) )
  {
    report.timing_ms["instc"] = time_ms( [&] {
      const auto r = instc_exact( f, caps );
      report.instc = r.value;
      if ( a.tree )
      {
        report.witness = r.witness.to_string();
      }
    } );
  }
  if ( lattice )
  {
    // dt / cmin is always reported when the lattice fits
    report.instc_upper = query_ratio( dt( *lattice ), cmin( *lattice ) );
  }
  if ( want( "trees", caps.lattice ) )
  {
    report.timing_ms["trees"] = time_ms( [&] {
      if ( spec )
      {
        report.trees = family_trees( *spec, f, cert );
      }
      report.trees.push_back( { "naive", instc_wrt( f, naive_full_tree( f, caps ), cert ) } );
    } );
  }
  return report;
}

/* report-gap ************************************************************/

struct GapArgs
{
  std::string generator = "random";
  FamilyArgs family;
  int count = 10;
  std::uint64_t seed = 0;
  bool slow = false;
};

inline std::string gap_csv( const GapArgs& a )
{
  const Caps caps = a.slow ? Caps::slow() : Caps{};
  std::vector<std::pair<std::string, TruthTable>> sample;
  std::mt19937_64 rng( a.seed );
  if ( a.generator == "family" )
  {
    const auto spec = a.family.spec();
    sample.emplace_back( describe( spec ), make_family( spec, caps ) );
  }
  else if ( a.generator == "random" || a.generator == "random-symmetric" )
  {
    const int n = a.family.n;
    if ( n < 1 )
    {
      throw family_parameter_error( "random generators need --n >= 1" );
    }
    require_cap( n, caps.lattice, "report-gap" );
    if ( a.count < 1 )
    {
      throw family_parameter_error( "--count must be positive" );
    }
    for ( int i = 0; i < a.count; ++i )
    {
      if ( a.generator == "random" )
      {
        sample.emplace_back( "random#" + std::to_string( i ), random_table( n, rng ) );
      }
      else
      {
        const std::uint64_t bits = rng();
        std::vector<bool> p( n + 1 );
        for ( int w = 0; w <= n; ++w )
        {
          p[w] = ( bits >> w ) & 1u;
        }
        sample.emplace_back( "random-symmetric#" + std::to_string( i ) + "(predicate=" + predicate_string( p ) + ")",
                             make_family( FamilySpec::symmetric( p ), caps ) );
      }
    }
  }
  else
  {
    throw family_parameter_error( "unknown generator '" + a.generator + "'" );
  }

  for ( const auto& [name, f] : sample )
  {
    require_cap( f.num_vars(), caps.lattice, "report-gap" );
  }
  std::vector<std::string> rows( sample.size() );
  parallel_for( sample.size(), [&]( std::size_t i ) {
    const auto& [name, f] = sample[i];
    const SubcubeLattice lattice( f, caps );
    const auto cert = point_certificates( lattice );
    const int d = dt( lattice ), c = cmin( lattice ), cx = *std::max_element( cert.begin(), cert.end() );
    std::ostringstream row;
    row << csv_field( name ) << ',' << f.num_vars() << ',' << table_hex( f ) << ',' << d << ',' << c << ',' << cx << ','
        << instc_exact( f, caps ).value << ',' << query_ratio( d, c ) << ',' << query_ratio( d, cx );
    rows[i] = row.str();
  } );

  std::string out = "function,n,table,dt,cmin,cmax,instc,dt_over_cmin,dt_over_cmax\n";
  for ( const auto& r : rows )
  {
    out += r + "\n";
  }
  return out;
}

/* entry point ***********************************************************/

inline std::string error_object( const char* kind, const std::string& message )
{
  return dump( json{ { "error", json{ { "kind", kind }, { "message", message } } } } );
}

/// Runs the command line (arguments without the program name).
inline int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app( "querycx: decision-tree, certificate and instance complexity of Boolean functions", "querycx" );
  app.require_subcommand( 1 );

  MeasureArgs measure_args;
  auto* measure = app.add_subcommand( "measure", "compute measures of one function" );
  measure_args.family.add_to( *measure );
  measure->add_option( "--file", measure_args.file, "truth-table file" );
  measure->add_option( "--measures", measure_args.measures, "comma list of dt,cmin,cmax,deg,instc,trees" );
  measure->add_option( "--format", measure_args.format, "json or csv" )->check( CLI::IsMember( { "json", "csv" } ) );
  measure->add_flag( "--slow", measure_args.slow, "raise the lattice cap to 15 variables" );
  measure->add_flag( "--tree", measure_args.tree, "include the instc witness tree" );

  std::string suite;
  VerifyOptions verify_options;
  auto* verify = app.add_subcommand( "verify", "check one result family at chosen sizes" );
  verify->add_option( "suite", suite, "symmetric, graph-conn, graph-clique, gt, omb, gkn, deg-lb or oracle" )->required();
  verify->add_option( "--n", verify_options.n, "largest size (vertices for graph suites)" );
  verify->add_option( "--n-min", verify_options.n_min, "smallest size; defaults to --n" );
  verify->add_option( "--count", verify_options.count, "random sample size (deg-lb, oracle)" );
  verify->add_option( "--seed", verify_options.seed, "random seed" );
  verify->add_flag( "--slow", verify_options.slow, "raise the lattice cap to 15 variables" );

  GapArgs gap_args;
  auto* gap = app.add_subcommand( "report-gap", "CSV of dt, cmin, cmax and instc over sampled functions" );
  gap->add_option( "--generator", gap_args.generator, "random, random-symmetric or family" )
      ->check( CLI::IsMember( { "random", "random-symmetric", "family" } ) );
  gap_args.family.add_to( *gap );
  gap->add_option( "--count", gap_args.count, "number of sampled functions" );
  gap->add_option( "--seed", gap_args.seed, "random seed (default 0)" );
  gap->add_flag( "--slow", gap_args.slow, "raise the lattice cap to 15 variables" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    return app.exit( e, out, err ) == 0 ? exit_ok : exit_usage;
  }

  std::ostringstream buffer;
  try
  {
    int code = exit_ok;
    if ( *measure )
    {
      const auto report = build_report( measure_args );
      if ( measure_args.format == "csv" )
      {
        buffer << MeasureReport::csv_header() << '\n' << report.csv_row() << '\n';
      }
      else
      {
        buffer << dump( report.to_json() );
      }
    }
    else if ( *verify )
    {
      code = run_verify( suite, verify_options, buffer ) ? exit_ok : exit_failed;
    }
    else
    {
      buffer << gap_csv( gap_args );
    }
    out << buffer.str();
    return code;
  }
  catch ( const cap_error& e )
  {
    out << error_object( "cap", e.what() );
    return exit_cap;
  }
  catch ( const parse_error& e )
  {
    out << error_object( "parse", e.what() );
    return exit_usage;
  }
  catch ( const family_parameter_error& e )
  {
    out << error_object( "usage", e.what() );
    return exit_usage;
  }
  catch ( const shape_error& e )
  {
    out << error_object( "usage", e.what() );
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    err << "querycx: " << e.what() << '\n';
    return exit_failed;
  }
}

} // namespace querycx::cli

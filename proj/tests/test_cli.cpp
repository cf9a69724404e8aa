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

#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"

using namespace querycx;
using namespace querycx::cli;

namespace
{

struct Run
{
  int code;
  std::string out, err;
};

Run run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  const int code = run_cli( args, out, err );
  return { code, out.str(), err.str() };
}

std::vector<std::string> lines_of( const std::string& text )
{
  std::vector<std::string> out;
  std::istringstream in( text );
  for ( std::string line; std::getline( in, line ); )
  {
    out.push_back( line );
  }
  return out;
}

const std::string data_dir = QUERYCX_DATA_DIR;

} // namespace

TEST( MeasureCommandTest, OddMaxBit )
{
  const auto r = run( { "measure", "--family", "omb", "--n", "5", "--measures", "dt,cmin,deg" } );
  ASSERT_EQ( r.code, 0 ) << r.out << r.err;
  const auto j = json::parse( r.out );
  EXPECT_EQ( j["measures"]["dt"], 5 );
  EXPECT_EQ( j["measures"]["cmin"], 1 );
  EXPECT_EQ( j["measures"]["degree"], 5 );
  EXPECT_FALSE( j["measures"].contains( "instc" ) );
  EXPECT_EQ( ratio_from_json( j["measures"]["instc_upper"] ), Ratio( 5 ) );
  EXPECT_EQ( j["function"]["name"], "omb(n=5)" );
}

TEST( MeasureCommandTest, Connectivity )
{
  const auto r = run( { "measure", "--family", "conn", "--vertices", "4", "--measures", "dt,cmin,instc" } );
  ASSERT_EQ( r.code, 0 ) << r.out << r.err;
  const auto j = json::parse( r.out );
  EXPECT_EQ( j["measures"]["dt"], 6 );
  EXPECT_EQ( j["measures"]["cmin"], 3 );
  EXPECT_EQ( j["measures"]["instc"], ( json{ { "num", 2 }, { "den", 1 } } ) );
}

TEST( MeasureCommandTest, TruthTableFile )
{
  const auto r = run( { "measure", "--file", data_dir + "/xor3.tt", "--measures", "instc" } );
  ASSERT_EQ( r.code, 0 ) << r.out << r.err;
  const auto j = json::parse( r.out );
  EXPECT_EQ( ratio_from_json( j["measures"]["instc"] ), Ratio( 1 ) );
  EXPECT_EQ( j["function"]["file"], "xor3.tt" );
  EXPECT_EQ( j["function"]["sha256"].get<std::string>().size(), 64u );
}

TEST( MeasureCommandTest, DefaultListHasTreesAndWitness )
{
  const auto r = run( { "measure", "--family", "gt", "--n", "3", "--tree" } );
  ASSERT_EQ( r.code, 0 ) << r.out << r.err;
  const auto report = MeasureReport::from_json( json::parse( r.out ) );
  EXPECT_EQ( report.dt, 6 );
  EXPECT_EQ( report.cmin, 2 );
  EXPECT_EQ( report.cmax, 4 );
  ASSERT_TRUE( report.instc.has_value() );
  EXPECT_LE( *report.instc, *report.instc_upper );
  ASSERT_EQ( report.trees.size(), 2u );
  EXPECT_EQ( report.trees[0].name, "gt_tree" );
  EXPECT_EQ( report.trees[0].instc_wrt, Ratio( 2 ) );
  ASSERT_TRUE( report.witness.has_value() );
  const auto witness = DecisionTree::parse( *report.witness );
  const auto f = make_family( FamilySpec::of( Family::gt, 3 ) );
  EXPECT_EQ( instc_wrt( f, witness ), *report.instc );
}

TEST( MeasureCommandTest, JsonRoundTripIsByteIdentical )
{
  for ( const auto& args : std::vector<std::vector<std::string>>{
            { "measure", "--family", "maj", "--n", "5" },
            { "measure", "--family", "clique", "--vertices", "4", "--k", "3", "--tree" },
            { "measure", "--family", "symmetric", "--predicate", "0110" },
            { "measure", "--file", data_dir + "/and2.tt" } } )
  {
    const auto r = run( args );
    ASSERT_EQ( r.code, 0 ) << r.out << r.err;
    EXPECT_EQ( dump( json::parse( r.out ) ), r.out );
    EXPECT_EQ( dump( MeasureReport::from_json( json::parse( r.out ) ).to_json() ), r.out );
  }
}

TEST( MeasureCommandTest, CsvFormat )
{
  const auto r = run( { "measure", "--family", "clique", "--vertices", "4", "--k", "3", "--format", "csv", "--measures", "dt,cmin" } );
  ASSERT_EQ( r.code, 0 ) << r.out << r.err;
  const auto lines = lines_of( r.out );
  ASSERT_EQ( lines.size(), 2u );
  EXPECT_EQ( lines[0], "function,n,dt,cmin,cmax,degree,instc,instc_upper" );
  EXPECT_EQ( lines[1], "\"clique(v=4,k=3)\",6,6,2,,,,3/1" );
}

TEST( ExitCodeTest, Contract )
{
  EXPECT_EQ( run( { "measure", "--family", "xor", "--n", "14", "--measures", "instc" } ).code, exit_cap );
  const auto cap = run( { "measure", "--family", "xor", "--n", "14", "--measures", "instc" } );
  EXPECT_EQ( json::parse( cap.out )["error"]["kind"], "cap" );
  // without an explicit list, measures beyond the caps are skipped
  EXPECT_EQ( run( { "measure", "--family", "xor", "--n", "14" } ).code, exit_ok );

  EXPECT_EQ( run( { "measure", "--file", data_dir + "/missing.tt" } ).code, exit_usage );
  EXPECT_EQ( run( { "measure", "--family", "nand", "--n", "2" } ).code, exit_usage );
  EXPECT_EQ( run( { "measure", "--family", "xor", "--n", "2", "--measures", "dt,size" } ).code, exit_usage );
  EXPECT_EQ( run( { "measure", "--bogus" } ).code, exit_usage );
  EXPECT_EQ( run( {} ).code, exit_usage );
  EXPECT_EQ( run( { "verify", "theorem9" } ).code, exit_usage );
  EXPECT_EQ( run( { "verify", "omb", "--n", "4" } ).code, exit_usage );
  EXPECT_EQ( run( { "verify", "oracle", "--n", "5" } ).code, exit_cap );
  EXPECT_EQ( run( { "--help" } ).code, exit_ok );
}

TEST( ExitCodeTest, FailingSuiteSummary )
{
  std::ostringstream out;
  cli::detail::Tally tally( out );
  tally.add( "first", true );
  tally.add( "second", false );
  EXPECT_FALSE( tally.finish() );
  EXPECT_EQ( out.str(), "ok   first\nFAIL second\nFAIL 1/2\n" );
}

TEST( VerifyCommandTest, Examples )
{
  const auto sym = run( { "verify", "symmetric", "--n", "6" } );
  EXPECT_EQ( sym.code, exit_ok );
  EXPECT_EQ( lines_of( sym.out ).back(), "PASS 128/128" );

  const auto oracle = run( { "verify", "oracle", "--n", "3" } );
  EXPECT_EQ( oracle.code, exit_ok );
  EXPECT_EQ( lines_of( oracle.out ).back(), "PASS 256/256" );

  const auto gt = run( { "verify", "gt", "--n", "4" } );
  EXPECT_EQ( gt.code, exit_ok );
  EXPECT_EQ( lines_of( gt.out ).front(),
             "ok   gt n=4 dt=8 cmin=2 computes=yes instc_wrt=2/1 query_counts=ok adversary_depth=8" );
}

TEST( VerifyCommandTest, OtherSuitesPass )
{
  for ( const auto& args : std::vector<std::vector<std::string>>{
            { "verify", "graph-conn", "--n-min", "2", "--n", "4" },
            { "verify", "graph-clique", "--n-min", "2", "--n", "4" },
            { "verify", "omb", "--n-min", "1", "--n", "7" },
            { "verify", "gkn", "--n-min", "2", "--n", "5" },
            { "verify", "deg-lb", "--n-min", "3", "--n", "6", "--count", "20" } } )
  {
    const auto r = run( args );
    EXPECT_EQ( r.code, exit_ok ) << r.out;
    EXPECT_EQ( lines_of( r.out ).back().rfind( "PASS ", 0 ), 0u ) << r.out;
  }
}

TEST( ReportGapTest, FamilyRows )
{
  const auto row = []( std::vector<std::string> args ) {
    args.insert( args.begin(), { "report-gap", "--generator", "family" } );
    const auto r = run( args );
    EXPECT_EQ( r.code, 0 ) << r.out;
    const auto lines = lines_of( r.out );
    EXPECT_EQ( lines.size(), 2u );
    return lines.back();
  };
  // function,n,table,dt,cmin,cmax,instc,dt_over_cmin,dt_over_cmax
  const auto gt3 = row( { "--family", "gt", "--n", "3" } );
  EXPECT_NE( gt3.find( ",6,2,4,2/1,3/1,3/2" ), std::string::npos ) << gt3;
  EXPECT_EQ( row( { "--family", "and", "--n", "3" } ), "and(n=3),3,08,3,1,3,3/1,3/1,1/1" );
  EXPECT_EQ( row( { "--family", "xor", "--n", "4" } ), "xor(n=4),4,6996,4,4,4,1/1,1/1,1/1" );
}

TEST( ReportGapTest, Deterministic )
{
  const std::vector<std::string> args = { "report-gap", "--generator", "random", "--n", "5", "--count", "6", "--seed", "11" };
  const auto a = run( args ), b = run( args );
  EXPECT_EQ( a.code, 0 );
  EXPECT_EQ( a.out, b.out );
  EXPECT_EQ( lines_of( a.out ).size(), 7u );
  auto other = args;
  other.back() = "12";
  EXPECT_NE( run( other ).out, a.out );

  const std::vector<std::string> sym = { "report-gap", "--generator", "random-symmetric", "--n", "6", "--count", "4" };
  EXPECT_EQ( run( sym ).out, run( sym ).out );
}

TEST( HelpersTest, DigestAndCsvQuoting )
{
  EXPECT_EQ( sha256_hex( "abc" ), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad" );
  EXPECT_EQ( csv_field( "xor(n=3)" ), "xor(n=3)" );
  EXPECT_EQ( csv_field( "a,b" ), "\"a,b\"" );
  EXPECT_EQ( csv_field( "say \"hi\", ok" ), "\"say \"\"hi\"\", ok\"" );
  EXPECT_EQ( table_hex( make_family( FamilySpec::of( Family::xor_, 3 ) ) ), "69" );
}

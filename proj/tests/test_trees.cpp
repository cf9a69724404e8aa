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

#include <bit>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include <querycx/families.hpp>
#include <querycx/measures.hpp>
#include <querycx/trees.hpp>

#include "brute_force.hpp"

using namespace querycx;

namespace
{

TruthTable family( Family f, int n ) { return make_family( FamilySpec::of( f, n ) ); }

// Every tree over `vars` variables with depth <= max_depth, including wrong ones.
void for_each_tree( int vars, int max_depth, std::uint32_t used, const std::function<void( const DecisionTree& )>& fn )
{
  fn( DecisionTree::leaf( false ) );
  fn( DecisionTree::leaf( true ) );
  if ( max_depth == 0 )
  {
    return;
  }
  for ( int v = 0; v < vars; ++v )
  {
    if ( used & ( 1u << v ) )
    {
      continue;
    }
    std::vector<DecisionTree> subs;
    for_each_tree( vars, max_depth - 1, used | ( 1u << v ), [&]( const DecisionTree& t ) { subs.push_back( t ); } );
    for ( const auto& a : subs )
    {
      for ( const auto& b : subs )
      {
        fn( DecisionTree::query( v, a, b ) );
      }
    }
  }
}

DecisionTree random_tree( int vars, std::uint32_t used, int max_depth, std::mt19937_64& rng )
{
  if ( max_depth == 0 || rng() % 4 == 0 )
  {
    return DecisionTree::leaf( rng() & 1u );
  }
  int v;
  do
  {
    v = static_cast<int>( rng() % vars );
  } while ( used & ( 1u << v ) );
  return DecisionTree::query( v, random_tree( vars, used | ( 1u << v ), max_depth - 1, rng ),
                              random_tree( vars, used | ( 1u << v ), max_depth - 1, rng ) );
}

} // namespace

/* Greater-Than **********************************************************/

TEST( GtTreeTest, ComputesGreaterThan )
{
  for ( int n = 1; n <= 6; ++n )
  {
    EXPECT_TRUE( computes( gt_tree( n ), family( Family::gt, n ) ) ) << n;
  }
}

TEST( GtTreeTest, OneBitShape )
{
  // x_1 first, y_1 only when x_1 = 1
  EXPECT_EQ( gt_tree( 1 ).to_string(), "(q 1 (leaf 0) (q 2 (leaf 1) (leaf 0)))" );
}

TEST( GtTreeTest, QueryCounts )
{
  for ( int n = 1; n <= 6; ++n )
  {
    const auto t = gt_tree( n );
    const Input low = ( 1u << n ) - 1u;
    for ( Input z = 0; z < ( 1u << ( 2 * n ) ); ++z )
    {
      const int q = tree_queries( t, 2 * n, z );
      const Input diff = ( z & low ) ^ ( z >> n );
      if ( diff == 0u )
      {
        ASSERT_TRUE( q == 2 * n - 1 || q == 2 * n ) << "n=" << n << " z=" << z;
      }
      else
      {
        const int j = n - std::bit_width( diff );
        ASSERT_TRUE( q == 2 * j + 1 || q == 2 * j + 2 ) << "n=" << n << " z=" << z;
      }
    }
  }
}

TEST( GtTreeTest, InstanceComplexityAtMostTwoAndAttained )
{
  for ( int n = 1; n <= 5; ++n )
  {
    const auto f = family( Family::gt, n );
    const auto profile = instc_profile( f, gt_tree( n ), all_certificate_complexities( f ) );
    EXPECT_EQ( *std::max_element( profile.begin(), profile.end() ), Ratio( 2 ) ) << n;
  }
}

TEST( GtTreeTest, PolicyMatchesMaterializedTree )
{
  for ( int n = 1; n <= 6; ++n )
  {
    EXPECT_EQ( materialize( GtPolicy( n ), 2 * n ), gt_tree( n ) );
  }
  // the policy has no size cap
  const auto big = family( Family::gt, 10 );
  EXPECT_TRUE( computes( GtPolicy( 10 ), big ) );
}

/* Odd-Max-Bit ***********************************************************/

TEST( OmbTreeTest, Examples )
{
  EXPECT_EQ( omb_tree( 1 ).to_string(), "(q 1 (leaf 0) (leaf 1))" );
  const auto t3 = omb_tree( 3 );
  EXPECT_EQ( t3.run( parse_input( "000", 3 ) ), std::make_pair( 3, false ) );
  EXPECT_EQ( t3.run( parse_input( "001", 3 ) ), std::make_pair( 1, true ) );
  EXPECT_THROW( omb_tree( 4 ), family_parameter_error );
  EXPECT_THROW( omb_tree( 0 ), family_parameter_error );
}

TEST( OmbTreeTest, ComputesOddMaxBit )
{
  for ( int n = 1; n <= 13; n += 2 )
  {
    EXPECT_TRUE( computes( omb_tree( n ), family( Family::omb, n ) ) ) << n;
    EXPECT_EQ( materialize( OmbPolicy( n ), n ), omb_tree( n ) );
  }
  for ( int n = 2; n <= 12; n += 2 )
  {
    EXPECT_TRUE( computes( OmbPolicy( n ), family( Family::omb, n ) ) ) << n;
  }
}

TEST( OmbTreeTest, PerInputRatiosFollowTheInputClasses )
{
  for ( int n = 1; n <= 11; n += 2 )
  {
    const auto f = family( Family::omb, n );
    const auto profile = instc_profile( f, omb_tree( n ), all_certificate_complexities( f ) );
    EXPECT_EQ( profile[0], Ratio( 2 * n, n + 1 ) );
    for ( Input x = 1; x < f.num_bits(); ++x )
    {
      const int i = n - std::bit_width( x );
      const Ratio expected = f.get( x ) ? Ratio( 2 * ( i + 1 ), i + 2 ) : Ratio( 2 * ( i + 1 ), i + 3 );
      ASSERT_EQ( profile[x], expected ) << "n=" << n << " x=" << x;
      ASSERT_LT( profile[x], Ratio( 2 ) );
    }
    EXPECT_EQ( *std::max_element( profile.begin(), profile.end() ), Ratio( 2 * n, n + 1 ) );
  }
}

/* query-everything and Indexing *****************************************/

TEST( NaiveTreeTest, PolicyMatchesMaterializedTree )
{
  std::mt19937_64 rng( 61 );
  for ( int n = 1; n <= 8; ++n )
  {
    const auto f = brute::random_function( n, rng );
    const NaivePolicy lazy( f );
    const auto explicit_tree = materialize( lazy, n );
    EXPECT_EQ( explicit_tree.depth(), n );
    for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
    {
      const auto a = play_input( lazy, n, static_cast<Input>( x ) );
      const auto b = explicit_tree.run( static_cast<Input>( x ) );
      ASSERT_EQ( a.queries, b.first );
      ASSERT_EQ( a.output, b.second );
    }
  }
}

TEST( NaiveTreeTest, Examples )
{
  EXPECT_EQ( instc_wrt( family( Family::xor_, 3 ), naive_full_tree( family( Family::xor_, 3 ) ) ), Ratio( 1 ) );
  const std::vector<bool> p = { true, false, false, true, true, false };
  const auto f = make_family( FamilySpec::symmetric( p ) );
  EXPECT_EQ( instc_wrt( f, naive_full_tree( f ) ), Ratio( 5, cmin_symmetric( p ) ) );
  EXPECT_THROW( naive_full_tree( TruthTable( 14 ) ), cap_error );
}

TEST( IndTreeTest, Examples )
{
  const auto f = make_family( FamilySpec::index( 2 ) );
  const auto t = ind_tree( 2 );
  EXPECT_TRUE( computes( t, f ) );
  for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
  {
    ASSERT_EQ( tree_queries( t, 6, static_cast<Input>( x ) ), 3 );
  }
  EXPECT_EQ( instc_wrt( f, t ), Ratio( 1 ) );
  for ( int m = 1; m <= 3; ++m )
  {
    EXPECT_TRUE( computes( ind_tree( m ), make_family( FamilySpec::index( m ) ) ) );
  }
  EXPECT_THROW( ind_tree( 4 ), family_parameter_error );
}

/* Greater-Than adversary ************************************************/

TEST( GtAdversaryTest, AnswerRules )
{
  const auto adv = gt_adversary( 3 );
  EXPECT_TRUE( adv.answer( gt_x( 2 ), Subcube{} ) );
  EXPECT_FALSE( adv.answer( gt_y( 2, 3 ), Subcube{} ) );
  // second query to a pair copies the partner
  EXPECT_FALSE( adv.answer( gt_x( 2 ), Subcube().with( gt_y( 2, 3 ), false ) ) );
  EXPECT_TRUE( adv.answer( gt_y( 2, 3 ), Subcube().with( gt_x( 2 ), true ) ) );
}

TEST( GtAdversaryTest, ForcesFullDepthOnCorrectTrees )
{
  for ( int n = 1; n <= 5; ++n )
  {
    const auto run = run_adversary( gt_tree( n ), gt_adversary( n ) );
    EXPECT_EQ( run.depth, 2 * n );
    EXPECT_FALSE( run.completions.has_value() );
    EXPECT_EQ( run.transcript.size(), static_cast<std::size_t>( 2 * n ) );
    EXPECT_EQ( run_adversary( GtPolicy( n ), gt_adversary( n ) ).depth, 2 * n );
    EXPECT_EQ( dt( family( Family::gt, n ) ), 2 * n );
  }
  EXPECT_EQ( run_adversary( NaivePolicy( family( Family::gt, 2 ) ), gt_adversary( 2 ) ).depth, 4 );
}

TEST( GtAdversaryTest, ShallowTreesOnOneBitGetRefuted )
{
  const auto f = family( Family::gt, 1 );
  int trees = 0;
  for_each_tree( 2, 1, 0u, [&]( const DecisionTree& t ) {
    ++trees;
    const auto run = run_adversary( t, gt_adversary( 1 ) );
    ASSERT_TRUE( run.completions.has_value() ) << t.to_string();
    const auto [zero, one] = *run.completions;
    EXPECT_FALSE( f.get( zero ) );
    EXPECT_TRUE( f.get( one ) );
    // both completions follow the transcript, so t answers them identically
    for ( const auto& [var, bit] : run.transcript )
    {
      EXPECT_EQ( ( ( zero >> var ) & 1u ) != 0u, bit );
      EXPECT_EQ( ( ( one >> var ) & 1u ) != 0u, bit );
    }
    EXPECT_EQ( t.run( zero ), t.run( one ) );
  } );
  EXPECT_EQ( trees, 2 + 2 * 4 );
}

TEST( GtAdversaryTest, RandomShallowTreesGetRefuted )
{
  std::mt19937_64 rng( 67 );
  for ( int n = 2; n <= 4; ++n )
  {
    const auto f = family( Family::gt, n );
    for ( int trial = 0; trial < 300; ++trial )
    {
      const auto t = random_tree( 2 * n, 0u, 2 * n - 1, rng );
      const auto run = run_adversary( t, gt_adversary( n ) );
      ASSERT_LT( run.depth, 2 * n );
      ASSERT_TRUE( run.completions.has_value() );
      const auto [zero, one] = *run.completions;
      ASSERT_FALSE( f.get( zero ) );
      ASSERT_TRUE( f.get( one ) );
      ASSERT_EQ( t.run( zero ), t.run( one ) );
      ASSERT_FALSE( computes( t, f ) );
    }
  }
}

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
  \file trees.hpp
  \brief Explicit query algorithms for Greater-Than, Odd-Max-Bit, Indexing
         and the query-everything tree, plus the Greater-Than adversary.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "common.hpp"
#include "decision_tree.hpp"
#include "families.hpp"
#include "truth_table.hpp"

namespace querycx
{

/* Greater-Than **********************************************************/

/// Variable index of x_i and y_i (1-based i) in a GT_n instance.
inline int gt_x( int i ) { return i - 1; }
inline int gt_y( int i, int n ) { return n + i - 1; }

/*! \brief The comparison tree T_n for GT_n.

  T_n queries x_n then y_n. If they differ the answer is x_n; if they agree
  it continues with T_{n-1}. T_1 stops with 0 as soon as x_1 = 0, otherwise
  it queries y_1 and outputs NOT y_1.
*/
inline DecisionTree gt_tree( int n )
{
  if ( n < 1 )
  {
    throw family_parameter_error( "gt_tree requires n >= 1" );
  }
  require_cap( n, 12, "gt_tree (materialized)" );
  const auto build = [n]( auto&& self, int i ) -> DecisionTree {
    if ( i == 1 )
    {
      return DecisionTree::query( gt_x( 1 ), DecisionTree::leaf( false ),
                                  DecisionTree::query( gt_y( 1, n ), DecisionTree::leaf( true ), DecisionTree::leaf( false ) ) );
    }
    const auto rest = self( self, i - 1 );
    return DecisionTree::query( gt_x( i ),
                                DecisionTree::query( gt_y( i, n ), rest, DecisionTree::leaf( false ) ),
                                DecisionTree::query( gt_y( i, n ), DecisionTree::leaf( true ), rest ) );
  };
  return build( build, n );
}

/// T_n as a procedure; same queries and outputs as gt_tree(n), any n.
class GtPolicy
{
public:
  explicit GtPolicy( int n ) : n_( n )
  {
    if ( n < 1 )
    {
      throw family_parameter_error( "gt policy requires n >= 1" );
    }
  }

  Step next( const Subcube& seen ) const
  {
    for ( int i = n_; i >= 1; --i )
    {
      const int xi = gt_x( i ), yi = gt_y( i, n_ );
      if ( !seen.is_fixed( xi ) )
      {
        return Step::query( xi );
      }
      if ( i == 1 && !seen.value( xi ) )
      {
        return Step::leaf( false );
      }
      if ( !seen.is_fixed( yi ) )
      {
        return Step::query( yi );
      }
      if ( seen.value( xi ) != seen.value( yi ) )
      {
        return Step::leaf( seen.value( xi ) );
      }
    }
    return Step::leaf( false );
  }

private:
  int n_;
};

/* Odd-Max-Bit ***********************************************************/

/*! \brief The right-to-left scan T_n for OMB_n, n odd.

  T_n queries x_n (1 -> output 1), then x_{n-1} (1 -> output 0), then
  continues with T_{n-2}; T_1 outputs x_1.
*/
inline DecisionTree omb_tree( int n )
{
  if ( n < 1 || n % 2 == 0 )
  {
    throw family_parameter_error( "omb_tree requires odd n >= 1" );
  }
  DecisionTree t = DecisionTree::query( 0, DecisionTree::leaf( false ), DecisionTree::leaf( true ) );
  for ( int top = 3; top <= n; top += 2 )
  {
    // variables top-1 and top-2 (0-based) hold x_top and x_{top-1}
    t = DecisionTree::query( top - 1,
                             DecisionTree::query( top - 2, t, DecisionTree::leaf( false ) ),
                             DecisionTree::leaf( true ) );
  }
  return t;
}

/// Right-to-left scan as a procedure; valid for any n (odd or even).
class OmbPolicy
{
public:
  explicit OmbPolicy( int n ) : n_( n ) {}

  Step next( const Subcube& seen ) const
  {
    for ( int i = n_; i >= 1; --i )
    {
      if ( !seen.is_fixed( i - 1 ) )
      {
        return Step::query( i - 1 );
      }
      if ( seen.value( i - 1 ) )
      {
        return Step::leaf( i % 2 == 1 );
      }
    }
    return Step::leaf( false );
  }

private:
  int n_;
};

/* query everything ******************************************************/

/// Queries x_1, ..., x_n in order, then outputs f(x).
class NaivePolicy
{
public:
  explicit NaivePolicy( TruthTable f ) : f_( std::move( f ) ) {}

  Step next( const Subcube& seen ) const
  {
    for ( int i = 0; i < f_.num_vars(); ++i )
    {
      if ( !seen.is_fixed( i ) )
      {
        return Step::query( i );
      }
    }
    return Step::leaf( f_.get( seen.values() ) );
  }

private:
  TruthTable f_;
};

inline NaivePolicy naive_full_tree( const TruthTable& f, const Caps& caps = {} )
{
  require_cap( f.num_vars(), caps.lattice, "naive tree" );
  return NaivePolicy( f );
}

/* Indexing **************************************************************/

/// Reads the m address bits, then the addressed target y_{bin(x)}.
inline DecisionTree ind_tree( int m )
{
  if ( m < 1 || m > 3 )
  {
    throw family_parameter_error( "ind_tree requires 1 <= m <= 3" );
  }
  const auto build = [m]( auto&& self, int bit, int address ) -> DecisionTree {
    if ( bit == m )
    {
      return DecisionTree::query( m + address, DecisionTree::leaf( false ), DecisionTree::leaf( true ) );
    }
    return DecisionTree::query( bit, self( self, bit + 1, address ), self( self, bit + 1, address | ( 1 << bit ) ) );
  };
  return build( build, 0, 0 );
}

/* Greater-Than adversary ************************************************/

/*! \brief Answer rules that force 2n queries on any tree computing GT_n.

  The first query to a pair {x_i, y_i} is answered 1 for x_i and 0 for
  y_i; the second query to a pair makes x_i = y_i.
*/
class GtAdversary
{
public:
  explicit GtAdversary( int n ) : n_( n ) {}

  int num_pairs() const { return n_; }

  /// The other member of var's pair.
  int partner( int var ) const { return var < n_ ? var + n_ : var - n_; }

  bool answer( int var, const Subcube& answered ) const
  {
    const int other = partner( var );
    if ( answered.is_fixed( other ) )
    {
      return answered.value( other );
    }
    return var < n_;
  }

private:
  int n_;
};

inline GtAdversary gt_adversary( int n ) { return GtAdversary( n ); }

struct AdversaryRun
{
  int depth = 0;                                ///< queries forced
  std::vector<std::pair<int, bool>> transcript; ///< (variable, answer) in query order
  bool output = false;                          ///< leaf value reached
  /// When the tree stops before all 2n variables: a 0-input and a
  /// 1-input of GT_n, both consistent with the transcript.
  std::optional<std::pair<Input, Input>> completions;
};

template<QueryPolicy P>
AdversaryRun run_adversary( const P& policy, const GtAdversary& adv )
{
  const int n = adv.num_pairs();
  const int vars = 2 * n;
  if constexpr ( std::same_as<P, DecisionTree> )
  {
    policy.validate( vars );
  }

  AdversaryRun run;
  const auto result = play( policy, vars, [&]( int var, const Subcube& seen ) {
    const bool bit = adv.answer( var, seen );
    run.transcript.emplace_back( var, bit );
    return bit;
  } );
  run.depth = result.queries;
  run.output = result.output;
  if ( run.depth == vars )
  {
    return run;
  }

  const Subcube& seen = result.seen;
  Input zero = seen.values();
  int top_open = -1;
  for ( int i = 1; i <= n; ++i )
  {
    const int xi = gt_x( i ), yi = gt_y( i, n );
    if ( seen.is_fixed( xi ) && seen.is_fixed( yi ) )
    {
      continue;
    }
    top_open = i;
    // copy the answered member of the pair (x_i = 1 or y_i = 0) into the other
    if ( seen.is_fixed( xi ) && seen.value( xi ) )
    {
      zero |= Input{ 1 } << yi;
    }
  }
  Input one = zero | ( Input{ 1 } << gt_x( top_open ) );
  one &= ~( Input{ 1 } << gt_y( top_open, n ) );
  run.completions = std::make_pair( zero, one );
  return run;
}

} // namespace querycx

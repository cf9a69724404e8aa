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

// Slow reference computations used only by tests. Nothing here touches the
// lattice tables, the budget solver or the library's certificate search.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include <querycx/truth_table.hpp>

namespace querycx::brute
{

inline bool agrees_on( const TruthTable& f, Input x, std::uint32_t mask )
{
  const bool v = f.get( x );
  for ( std::uint64_t y = 0; y < f.num_bits(); ++y )
  {
    if ( ( ( y ^ x ) & mask ) == 0u && f.get( static_cast<Input>( y ) ) != v )
    {
      return false;
    }
  }
  return true;
}

/// C(f, x) by trying every mask and scanning the whole cube.
inline int certificate( const TruthTable& f, Input x )
{
  int best = f.num_vars();
  for ( std::uint32_t mask = 0; mask < ( 1u << f.num_vars() ); ++mask )
  {
    if ( std::popcount( mask ) < best && agrees_on( f, x, mask ) )
    {
      best = std::popcount( mask );
    }
  }
  return best;
}

/// Smallest codimension of a constant subcube, searched by increasing codimension.
inline int cmin( const TruthTable& f )
{
  const int n = f.num_vars();
  const std::uint32_t all = ( 1u << n ) - 1u;
  for ( int c = 0; c <= n; ++c )
  {
    for ( std::uint32_t mask = 0; mask <= all; ++mask )
    {
      if ( std::popcount( mask ) != c )
      {
        continue;
      }
      // every assignment to the fixed variables
      std::uint32_t vals = 0;
      do
      {
        const bool v = f.get( vals );
        bool constant = true;
        const std::uint32_t free = all & ~mask;
        std::uint32_t sub = free;
        while ( constant )
        {
          constant = f.get( vals | sub ) == v;
          if ( sub == 0u )
          {
            break;
          }
          sub = ( sub - 1u ) & free;
        }
        if ( constant )
        {
          return c;
        }
        vals = ( vals - mask ) & mask;
      } while ( vals != 0u );
    }
  }
  return n;
}

/// DT by plain recursion over restrictions (no memo); n <= 5.
inline int dt( const TruthTable& f, std::uint32_t fixed = 0, std::uint32_t vals = 0 )
{
  const int n = f.num_vars();
  bool seen0 = false, seen1 = false;
  for ( std::uint64_t y = 0; y < f.num_bits(); ++y )
  {
    if ( ( y & fixed ) == vals )
    {
      ( f.get( static_cast<Input>( y ) ) ? seen1 : seen0 ) = true;
    }
  }
  if ( !( seen0 && seen1 ) )
  {
    return 0;
  }
  int best = n + 1;
  for ( int i = 0; i < n; ++i )
  {
    const std::uint32_t bit = 1u << i;
    if ( fixed & bit )
    {
      continue;
    }
    best = std::min( best, 1 + std::max( dt( f, fixed | bit, vals ), dt( f, fixed | bit, vals | bit ) ) );
  }
  return best;
}

/// Symmetry via every permutation of the variables.
inline bool symmetric_by_permutations( const TruthTable& f )
{
  const int n = f.num_vars();
  std::vector<int> perm( n );
  std::iota( perm.begin(), perm.end(), 0 );
  do
  {
    for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
    {
      Input y = 0;
      for ( int i = 0; i < n; ++i )
      {
        if ( ( x >> i ) & 1u )
        {
          y |= Input{ 1 } << perm[i];
        }
      }
      if ( f.get( static_cast<Input>( x ) ) != f.get( y ) )
      {
        return false;
      }
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return true;
}

/// BFS connectivity of a graph given by its lexicographic edge bits.
inline bool connected( Input graph, int vertices )
{
  std::vector<std::vector<bool>> adj( vertices, std::vector<bool>( vertices, false ) );
  int var = 0;
  for ( int u = 0; u < vertices; ++u )
  {
    for ( int w = u + 1; w < vertices; ++w, ++var )
    {
      adj[u][w] = adj[w][u] = ( graph >> var ) & 1u;
    }
  }
  std::vector<bool> seen( vertices, false );
  std::queue<int> q;
  q.push( 0 );
  seen[0] = true;
  int count = 1;
  while ( !q.empty() )
  {
    const int u = q.front();
    q.pop();
    for ( int w = 0; w < vertices; ++w )
    {
      if ( adj[u][w] && !seen[w] )
      {
        seen[w] = true;
        ++count;
        q.push( w );
      }
    }
  }
  return count == vertices;
}

/// Sum of Mobius coefficients over the subsets of supp(x).
template<typename Coeff>
std::int64_t reconstruct( const Coeff& coefficient, Input x )
{
  std::int64_t sum = coefficient( 0u );
  for ( Input s = x; s != 0u; s = ( s - 1u ) & x )
  {
    sum += coefficient( s );
  }
  return sum;
}

inline TruthTable random_function( int n, std::mt19937_64& rng )
{
  std::bernoulli_distribution coin( 0.5 );
  return TruthTable::from_function( n, [&]( Input ) { return coin( rng ); } );
}

} // namespace querycx::brute

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
  \file families.hpp
  \brief Constructors for the function families studied by the library.

  Variable conventions:
  - gt(n): inputs (x_1..x_n, y_1..y_n); x_i is variable i-1, y_i is
    variable n+i-1; x_n and y_n are the most significant bits.
  - ind(m): addressing bits x_1..x_m first, then targets y_1..y_{2^m};
    the addressed target is y_{1 + sum 2^{i-1} x_i}.
  - conn(v), clique(v, k): one variable per edge (u, w), u < w, vertices
    1..v, in lexicographic order (1,2), (1,3), ..., (v-1,v).
  - omb(n): OMB(0^n) = 0.
  - maj(n): 1 iff the weight is at least n/2 (ties output 1).
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "common.hpp"
#include "truth_table.hpp"

namespace querycx
{

enum class Family
{
  xor_,
  and_,
  or_,
  maj,
  ind,
  symmetric,
  gt,
  omb,
  conn,
  clique
};

inline std::string_view family_name( Family f )
{
  switch ( f )
  {
  case Family::xor_: return "xor";
  case Family::and_: return "and";
  case Family::or_: return "or";
  case Family::maj: return "maj";
  case Family::ind: return "ind";
  case Family::symmetric: return "symmetric";
  case Family::gt: return "gt";
  case Family::omb: return "omb";
  case Family::conn: return "conn";
  case Family::clique: return "clique";
  }
  return "?";
}

inline Family parse_family( std::string_view name )
{
  for ( auto f : { Family::xor_, Family::and_, Family::or_, Family::maj, Family::ind, Family::symmetric,
                   Family::gt, Family::omb, Family::conn, Family::clique } )
  {
    if ( family_name( f ) == name )
    {
      return f;
    }
  }
  throw family_parameter_error( "unknown family '" + std::string( name ) + "'" );
}

/*! \brief A family plus its parameters.

  `n` is the arity parameter for xor/and/or/maj/gt/omb, `m` the address
  width for ind, `predicate` the weight predicate for symmetric, and
  `vertices`/`k` the graph parameters.
*/
struct FamilySpec
{
  Family family = Family::xor_;
  int n = 0;
  int m = 0;
  std::vector<bool> predicate;
  int vertices = 0;
  int k = 0;

  static FamilySpec of( Family f, int n ) { return { f, n, 0, {}, 0, 0 }; }
  static FamilySpec index( int m ) { return { Family::ind, 0, m, {}, 0, 0 }; }
  static FamilySpec symmetric( std::vector<bool> predicate )
  {
    const int n = static_cast<int>( predicate.size() ) - 1;
    return { Family::symmetric, n, 0, std::move( predicate ), 0, 0 };
  }
  static FamilySpec connectivity( int vertices ) { return { Family::conn, 0, 0, {}, vertices, 0 }; }
  static FamilySpec clique( int vertices, int k ) { return { Family::clique, 0, 0, {}, vertices, k }; }
};

inline int edge_count( int vertices ) { return vertices * ( vertices - 1 ) / 2; }

/// Variable index of edge (u, w), 1 <= u < w <= vertices.
inline int edge_var( int u, int w, int vertices )
{
  // edges (u', *) for u' < u come first
  return ( u - 1 ) * vertices - ( u - 1 ) * u / 2 + ( w - u - 1 );
}

/// All edges in variable order.
inline std::vector<std::pair<int, int>> edge_list( int vertices )
{
  std::vector<std::pair<int, int>> edges;
  for ( int u = 1; u <= vertices; ++u )
  {
    for ( int w = u + 1; w <= vertices; ++w )
    {
      edges.emplace_back( u, w );
    }
  }
  return edges;
}

namespace detail
{

inline bool graph_connected( Input graph, int vertices )
{
  std::vector<int> parent( vertices );
  std::iota( parent.begin(), parent.end(), 0 );
  const auto find = [&]( int v ) {
    while ( parent[v] != v )
    {
      v = parent[v] = parent[parent[v]];
    }
    return v;
  };
  int components = vertices;
  int var = 0;
  for ( int u = 0; u < vertices; ++u )
  {
    for ( int w = u + 1; w < vertices; ++w, ++var )
    {
      if ( ( graph >> var ) & 1u )
      {
        const int a = find( u ), b = find( w );
        if ( a != b )
        {
          parent[a] = b;
          --components;
        }
      }
    }
  }
  return components <= 1;
}

inline bool graph_has_clique( Input graph, int vertices, int k )
{
  // adjacency as bitsets
  std::vector<std::uint32_t> adj( vertices, 0u );
  int var = 0;
  for ( int u = 0; u < vertices; ++u )
  {
    for ( int w = u + 1; w < vertices; ++w, ++var )
    {
      if ( ( graph >> var ) & 1u )
      {
        adj[u] |= 1u << w;
        adj[w] |= 1u << u;
      }
    }
  }
  // extend cliques in increasing vertex order
  const auto extend = [&]( auto&& self, std::uint32_t candidates, int size ) -> bool {
    if ( size == k )
    {
      return true;
    }
    while ( candidates != 0u )
    {
      if ( size + std::popcount( candidates ) < k )
      {
        return false;
      }
      const int v = std::countr_zero( candidates );
      candidates &= candidates - 1u;
      if ( self( self, candidates & adj[v], size + 1 ) )
      {
        return true;
      }
    }
    return false;
  };
  return extend( extend, ( std::uint32_t{ 1 } << vertices ) - 1u, 0 );
}

} // namespace detail

inline void validate( const FamilySpec& spec, const Caps& caps = {} )
{
  const auto need = [&]( bool ok, const std::string& what ) {
    if ( !ok )
    {
      throw family_parameter_error( std::string( family_name( spec.family ) ) + ": " + what );
    }
  };
  switch ( spec.family )
  {
  case Family::xor_:
  case Family::and_:
  case Family::or_:
  case Family::maj:
  case Family::omb:
    need( spec.n >= 1, "requires n >= 1" );
    require_cap( spec.n, caps.core, family_name( spec.family ).data() );
    break;
  case Family::gt:
    need( spec.n >= 1, "requires n >= 1" );
    require_cap( 2 * spec.n, caps.core, "gt" );
    break;
  case Family::ind:
    need( spec.m >= 1, "requires m >= 1" );
    need( spec.m <= 4, "requires m <= 4" );
    require_cap( spec.m + ( 1 << spec.m ), caps.core, "ind" );
    break;
  case Family::symmetric:
    need( spec.predicate.size() >= 2, "predicate needs n+1 >= 2 entries" );
    require_cap( static_cast<int>( spec.predicate.size() ) - 1, caps.core, "symmetric" );
    break;
  case Family::conn:
    need( spec.vertices >= 2, "requires at least 2 vertices" );
    need( spec.vertices <= 7, "requires at most 7 vertices" );
    require_cap( edge_count( spec.vertices ), caps.core, "conn" );
    break;
  case Family::clique:
    need( spec.vertices >= 2, "requires at least 2 vertices" );
    need( spec.vertices <= 7, "requires at most 7 vertices" );
    need( spec.k >= 2 && spec.k <= spec.vertices, "requires 2 <= k <= vertices" );
    require_cap( edge_count( spec.vertices ), caps.core, "clique" );
    break;
  }
}

inline TruthTable make_family( const FamilySpec& spec, const Caps& caps = {} )
{
  validate( spec, caps );
  switch ( spec.family )
  {
  case Family::xor_:
    return TruthTable::from_function( spec.n, []( Input x ) { return std::popcount( x ) % 2 == 1; } );
  case Family::and_:
    return TruthTable::from_function( spec.n, [n = spec.n]( Input x ) { return std::popcount( x ) == n; } );
  case Family::or_:
    return TruthTable::from_function( spec.n, []( Input x ) { return x != 0u; } );
  case Family::maj:
    return TruthTable::from_function( spec.n, [n = spec.n]( Input x ) { return 2 * std::popcount( x ) >= n; } );
  case Family::symmetric:
    return TruthTable::from_function( spec.n, [&]( Input x ) { return spec.predicate[std::popcount( x )]; } );
  case Family::ind:
  {
    const int m = spec.m;
    return TruthTable::from_function( m + ( 1 << m ), [m]( Input x ) {
      const Input address = x & ( ( Input{ 1 } << m ) - 1u );
      return ( ( x >> ( m + address ) ) & 1u ) != 0u;
    } );
  }
  case Family::gt:
  {
    const int n = spec.n;
    const Input low = ( Input{ 1 } << n ) - 1u;
    return TruthTable::from_function( 2 * n, [n, low]( Input x ) { return ( x & low ) > ( x >> n ); } );
  }
  case Family::omb:
    return TruthTable::from_function( spec.n, []( Input x ) {
      // highest set variable index (1-based) is bit_width(x)
      return x != 0u && std::bit_width( x ) % 2 == 1;
    } );
  case Family::conn:
    return TruthTable::from_function( edge_count( spec.vertices ), [v = spec.vertices]( Input g ) {
      return detail::graph_connected( g, v );
    } );
  case Family::clique:
    return TruthTable::from_function( edge_count( spec.vertices ), [v = spec.vertices, k = spec.k]( Input g ) {
      return detail::graph_has_clique( g, v, k );
    } );
  }
  throw family_parameter_error( "unhandled family" );
}

/// Short human-readable descriptor, e.g. "gt(n=3)" or "clique(v=6,k=3)".
inline std::string describe( const FamilySpec& spec )
{
  const std::string name( family_name( spec.family ) );
  switch ( spec.family )
  {
  case Family::ind: return name + "(m=" + std::to_string( spec.m ) + ")";
  case Family::conn: return name + "(v=" + std::to_string( spec.vertices ) + ")";
  case Family::clique: return name + "(v=" + std::to_string( spec.vertices ) + ",k=" + std::to_string( spec.k ) + ")";
  case Family::symmetric:
  {
    std::string bits;
    for ( bool b : spec.predicate )
    {
      bits += b ? '1' : '0';
    }
    return name + "(D=" + bits + ")";
  }
  default: return name + "(n=" + std::to_string( spec.n ) + ")";
  }
}

} // namespace querycx

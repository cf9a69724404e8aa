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
  \file lattice.hpp
  \brief Dense tables over all 3^n subcubes of {0,1}^n.

  A subcube is addressed by its base-3 key (see Subcube::ternary_key):
  digit i is 0/1 when variable i is fixed and 2 when it is free. Fixing a
  free variable lowers its digit, so every child key is smaller than its
  parent and an ascending sweep visits children first.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "common.hpp"
#include "truth_table.hpp"

namespace querycx
{

using SubcubeKey = std::uint64_t;

/// Constancy of f on a subcube: 0, 1, or mixed.
enum class Constancy : std::uint8_t
{
  zero = 0,
  one = 1,
  mixed = 2
};

class SubcubeLattice
{
public:
  /*! \brief Builds the constancy table of f.

    A point is constant with its own value; any other subcube is constant
    iff both halves along its lowest free variable are constant with the
    same value.
  */
  SubcubeLattice( const TruthTable& f, const Caps& caps = {} )
      : n_( f.num_vars() )
  {
    require_cap( n_, caps.lattice, "subcube lattice" );
    pow3_.resize( n_ + 1 );
    pow3_[0] = 1u;
    for ( int i = 1; i <= n_; ++i )
    {
      pow3_[i] = 3u * pow3_[i - 1];
    }

    constancy_.resize( size() );
    for_each_ascending( [&]( SubcubeKey key, std::uint32_t free, std::uint32_t ones ) {
      if ( free == 0u )
      {
        constancy_[key] = f.get( ones ) ? Constancy::one : Constancy::zero;
        return;
      }
      const SubcubeKey w = pow3_[std::countr_zero( free )];
      const Constancy c0 = constancy_[key - 2u * w];
      const Constancy c1 = constancy_[key - w];
      constancy_[key] = ( c0 == c1 ) ? c0 : Constancy::mixed;
    } );
  }

  int num_vars() const { return n_; }
  SubcubeKey size() const { return pow3_[n_]; }
  SubcubeKey full_key() const { return pow3_[n_] - 1u; }
  SubcubeKey weight( int var ) const { return pow3_[var]; }

  /// Key of the child of `key` with free variable `var` set to `value`.
  SubcubeKey child( SubcubeKey key, int var, bool value ) const
  {
    return key - ( value ? 1u : 2u ) * pow3_[var];
  }

  SubcubeKey point_key( Input x ) const
  {
    SubcubeKey key = 0;
    for ( Input m = x; m != 0u; m &= m - 1u )
    {
      key += pow3_[std::countr_zero( m )];
    }
    return key;
  }

  SubcubeKey key_of( const Subcube& rho ) const { return rho.ternary_key( n_ ); }

  Constancy constancy( SubcubeKey key ) const { return constancy_[key]; }

  std::optional<bool> constant_value( SubcubeKey key ) const
  {
    const auto c = constancy_[key];
    if ( c == Constancy::mixed )
    {
      return std::nullopt;
    }
    return c == Constancy::one;
  }

  /*! \brief Visits every key in increasing order as fn(key, free, ones).

    `free` is the mask of free variables, `ones` the mask of variables
    fixed to 1.
  */
  template<typename Fn>
  void for_each_ascending( Fn&& fn ) const
  {
    std::vector<std::uint8_t> digit( n_, 0u );
    std::uint32_t free = 0, ones = 0;
    const SubcubeKey end = size();
    for ( SubcubeKey key = 0; key < end; ++key )
    {
      fn( key, free, ones );
      // ternary increment
      for ( int i = 0; i < n_; ++i )
      {
        const std::uint32_t bit = std::uint32_t{ 1 } << i;
        if ( digit[i] == 0u )
        {
          digit[i] = 1u;
          ones |= bit;
          break;
        }
        if ( digit[i] == 1u )
        {
          digit[i] = 2u;
          ones &= ~bit;
          free |= bit;
          break;
        }
        digit[i] = 0u;
        free &= ~bit;
      }
    }
  }

  /// Same as for_each_ascending but from the full cube down to key 0.
  template<typename Fn>
  void for_each_descending( Fn&& fn ) const
  {
    std::vector<std::uint8_t> digit( n_, 2u );
    std::uint32_t free = all_vars_mask( n_ ), ones = 0;
    for ( SubcubeKey key = size(); key-- > 0u; )
    {
      fn( key, free, ones );
      // ternary decrement
      for ( int i = 0; i < n_; ++i )
      {
        const std::uint32_t bit = std::uint32_t{ 1 } << i;
        if ( digit[i] == 2u )
        {
          digit[i] = 1u;
          free &= ~bit;
          ones |= bit;
          break;
        }
        if ( digit[i] == 1u )
        {
          digit[i] = 0u;
          ones &= ~bit;
          break;
        }
        digit[i] = 2u;
        free |= bit;
      }
    }
  }

private:
  int n_;
  std::vector<SubcubeKey> pow3_;
  std::vector<Constancy> constancy_;
};

/*! \brief C(f, x) for every input x, read off the lattice.

  best[key] is the largest free-variable count of a constant subcube that
  contains the subcube `key`; a descending sweep computes it from the
  supersets obtained by freeing one fixed variable. Then
  C(f, x) = n - best[point(x)].
*/
inline std::vector<std::uint8_t> point_certificates( const SubcubeLattice& lattice )
{
  const int n = lattice.num_vars();
  std::vector<std::int8_t> best( lattice.size() );
  lattice.for_each_descending( [&]( SubcubeKey key, std::uint32_t free, std::uint32_t ones ) {
    int b = lattice.constancy( key ) != Constancy::mixed ? std::popcount( free ) : -1;
    for ( std::uint32_t fixed = all_vars_mask( n ) & ~free; fixed != 0u; fixed &= fixed - 1u )
    {
      const int var = std::countr_zero( fixed );
      const SubcubeKey parent = key + ( ( ones >> var ) & 1u ? 1u : 2u ) * lattice.weight( var );
      b = std::max<int>( b, best[parent] );
    }
    best[key] = static_cast<std::int8_t>( b );
  } );

  std::vector<std::uint8_t> cert( std::uint64_t{ 1 } << n );
  for ( std::uint64_t x = 0; x < cert.size(); ++x )
  {
    cert[x] = static_cast<std::uint8_t>( n - best[lattice.point_key( static_cast<Input>( x ) )] );
  }
  return cert;
}

/// min over x in the subcube of C(f, x), for every subcube.
inline std::vector<std::uint8_t> min_certificate_table( const SubcubeLattice& lattice,
                                                        const std::vector<std::uint8_t>& point_cert )
{
  std::vector<std::uint8_t> table( lattice.size() );
  lattice.for_each_ascending( [&]( SubcubeKey key, std::uint32_t free, std::uint32_t ones ) {
    if ( free == 0u )
    {
      table[key] = point_cert[ones];
      return;
    }
    const int var = std::countr_zero( free );
    table[key] = std::min( table[lattice.child( key, var, false )], table[lattice.child( key, var, true )] );
  } );
  return table;
}

/// Minimum depth of a tree computing f restricted to each subcube.
inline std::vector<std::uint8_t> depth_table( const SubcubeLattice& lattice )
{
  std::vector<std::uint8_t> depth( lattice.size() );
  lattice.for_each_ascending( [&]( SubcubeKey key, std::uint32_t free, std::uint32_t ) {
    if ( lattice.constancy( key ) != Constancy::mixed )
    {
      depth[key] = 0u;
      return;
    }
    std::uint8_t best = 0xffu;
    for ( std::uint32_t m = free; m != 0u; m &= m - 1u )
    {
      const int var = std::countr_zero( m );
      best = std::min( best, std::max( depth[lattice.child( key, var, false )], depth[lattice.child( key, var, true )] ) );
    }
    depth[key] = static_cast<std::uint8_t>( best + 1u );
  } );
  return depth;
}

} // namespace querycx

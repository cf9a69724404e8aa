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
  \file measures.hpp
  \brief Certificate complexity, decision-tree depth, degree and the closed
         forms for symmetric functions and graph properties.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "common.hpp"
#include "lattice.hpp"
#include "truth_table.hpp"

namespace querycx
{

/* certificates **********************************************************/

/*! \brief A smallest certificate for x, as a variable mask.

  Candidate sets are tried by size, and within one size in lexicographic
  order of their sorted index lists; the first set whose subcube around x
  is constant is returned. The empty set is returned iff f is constant.
*/
inline std::uint32_t certificate( const TruthTable& f, Input x, const Caps& caps = {} )
{
  const int n = f.num_vars();
  require_cap( n, caps.certificate, "certificate complexity" );
  if ( ( x & ~all_vars_mask( n ) ) != 0u )
  {
    throw shape_error( "input index out of range" );
  }

  std::vector<int> comb;
  for ( int size = 0; size <= n; ++size )
  {
    comb.resize( size );
    std::iota( comb.begin(), comb.end(), 0 );
    while ( true )
    {
      std::uint32_t mask = 0;
      for ( int v : comb )
      {
        mask |= std::uint32_t{ 1 } << v;
      }
      if ( is_constant_on( f, Subcube::around( x, mask ) ) )
      {
        return mask;
      }
      // next combination in lexicographic order
      int i = size - 1;
      while ( i >= 0 && comb[i] == n - size + i )
      {
        --i;
      }
      if ( i < 0 )
      {
        break;
      }
      ++comb[i];
      for ( int j = i + 1; j < size; ++j )
      {
        comb[j] = comb[j - 1] + 1;
      }
    }
  }
  return all_vars_mask( n ); // unreachable: the full set is always a certificate
}

/// C(f, x) by subset search.
inline int certificate_complexity( const TruthTable& f, Input x, const Caps& caps = {} )
{
  return std::popcount( certificate( f, x, caps ) );
}

/// C(f, x) for all inputs: lattice route when within the lattice cap,
/// otherwise one subset search per input.
inline std::vector<std::uint8_t> all_certificate_complexities( const TruthTable& f, const Caps& caps = {} )
{
  if ( f.num_vars() <= caps.lattice )
  {
    return point_certificates( SubcubeLattice( f, caps ) );
  }
  require_cap( f.num_vars(), caps.certificate, "certificate complexity" );
  std::vector<std::uint8_t> cert( f.num_bits() );
  parallel_for( f.num_bits(), [&]( std::uint64_t x ) {
    cert[x] = static_cast<std::uint8_t>( certificate_complexity( f, static_cast<Input>( x ), caps ) );
  } );
  return cert;
}

/// C(f) = max_x C(f, x).
inline int certificate_complexity_max( const TruthTable& f, const Caps& caps = {} )
{
  const auto cert = all_certificate_complexities( f, caps );
  return *std::max_element( cert.begin(), cert.end() );
}

/// C_min(f) = n minus the largest free count of a constant subcube.
inline int cmin( const SubcubeLattice& lattice )
{
  int best = 0;
  lattice.for_each_ascending( [&]( SubcubeKey key, std::uint32_t free, std::uint32_t ) {
    if ( lattice.constancy( key ) != Constancy::mixed )
    {
      best = std::max( best, std::popcount( free ) );
    }
  } );
  return lattice.num_vars() - best;
}

inline int cmin( const TruthTable& f, const Caps& caps = {} )
{
  if ( f.num_vars() <= caps.lattice )
  {
    return cmin( SubcubeLattice( f, caps ) );
  }
  const auto cert = all_certificate_complexities( f, caps );
  return *std::min_element( cert.begin(), cert.end() );
}

/* decision-tree depth ***************************************************/

inline int dt( const SubcubeLattice& lattice )
{
  return depth_table( lattice )[lattice.full_key()];
}

/// DT(f), the minimum depth of a tree computing f.
inline int dt( const TruthTable& f, const Caps& caps = {} )
{
  return dt( SubcubeLattice( f, caps ) );
}

/* Mobius expansion ******************************************************/

/*! \brief The multilinear expansion f(x) = sum_S coeff(S) prod_{i in S} x_i.

  Coefficients are stored densely, indexed by the variable mask of S.
*/
class MobiusExpansion
{
public:
  MobiusExpansion( int num_vars, std::vector<std::int64_t> coefficients )
      : n_( num_vars ), coeff_( std::move( coefficients ) )
  {
  }

  int num_vars() const { return n_; }
  std::int64_t coefficient( std::uint32_t subset ) const { return coeff_[subset]; }
  const std::vector<std::int64_t>& coefficients() const { return coeff_; }

  /// Largest |S| with a nonzero coefficient; 0 for constants.
  int degree() const
  {
    int d = 0;
    for ( std::uint64_t s = 0; s < coeff_.size(); ++s )
    {
      if ( coeff_[s] != 0 )
      {
        d = std::max( d, std::popcount( s ) );
      }
    }
    return d;
  }

  /// Nonzero terms as (subset mask, coefficient), by increasing mask.
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms() const
  {
    std::vector<std::pair<std::uint32_t, std::int64_t>> out;
    for ( std::uint64_t s = 0; s < coeff_.size(); ++s )
    {
      if ( coeff_[s] != 0 )
      {
        out.emplace_back( static_cast<std::uint32_t>( s ), coeff_[s] );
      }
    }
    return out;
  }

private:
  int n_;
  std::vector<std::int64_t> coeff_;
};

/// Inclusion-exclusion over the subset lattice: coeff(S) = sum_{T subset S} (-1)^{|S-T|} f(T).
inline MobiusExpansion mobius( const TruthTable& f, const Caps& caps = {} )
{
  const int n = f.num_vars();
  require_cap( n, caps.degree, "mobius expansion" );
  std::vector<std::int64_t> a( f.num_bits() );
  for ( std::uint64_t x = 0; x < a.size(); ++x )
  {
    a[x] = f.get( static_cast<Input>( x ) );
  }
  for ( int i = 0; i < n; ++i )
  {
    const std::uint64_t bit = std::uint64_t{ 1 } << i;
    for ( std::uint64_t s = 0; s < a.size(); ++s )
    {
      if ( s & bit )
      {
        a[s] -= a[s ^ bit];
      }
    }
  }
  return MobiusExpansion( n, std::move( a ) );
}

inline int degree( const TruthTable& f, const Caps& caps = {} )
{
  return mobius( f, caps ).degree();
}

/* symmetric functions ***************************************************/

/// The longest interval [ell0, ell1] of weights on which a predicate is
/// constant; the smallest ell0 wins ties.
struct SymmetricInterval
{
  int ell0 = 0;
  int ell1 = 0;
};

inline SymmetricInterval symmetric_interval( const std::vector<bool>& predicate )
{
  if ( predicate.empty() )
  {
    throw shape_error( "predicate must have n+1 >= 1 entries" );
  }
  SymmetricInterval best{ 0, 0 };
  int start = 0;
  const int last = static_cast<int>( predicate.size() ) - 1;
  for ( int w = 1; w <= last + 1; ++w )
  {
    if ( w == last + 1 || predicate[w] != predicate[start] )
    {
      if ( w - 1 - start > best.ell1 - best.ell0 )
      {
        best = { start, w - 1 };
      }
      start = w;
    }
  }
  return best;
}

/// ell0 + n - ell1.
inline int cmin_symmetric( const std::vector<bool>& predicate )
{
  const int n = static_cast<int>( predicate.size() ) - 1;
  const auto iv = symmetric_interval( predicate );
  return iv.ell0 + n - iv.ell1;
}

/* graph properties ******************************************************/

inline std::int64_t binomial2( std::int64_t n ) { return n * ( n - 1 ) / 2; }

/// floor(n^2 (k-2) / (2(k-1))), the largest edge count of a K_k-free graph on n vertices.
inline std::int64_t turan_bound( int n, int k )
{
  if ( k < 2 || n < 1 )
  {
    throw shape_error( "turan_bound requires n >= 1 and k >= 2" );
  }
  return ( std::int64_t{ n } * n * ( k - 2 ) ) / ( 2 * ( k - 1 ) );
}

inline std::int64_t cmin_clique_formula( int n, int k )
{
  if ( k < 2 || k > n )
  {
    throw shape_error( "cmin_clique_formula requires 2 <= k <= n" );
  }
  return std::min( binomial2( k ), binomial2( n ) - turan_bound( n, k ) );
}

inline std::int64_t cmin_conn_formula( int n )
{
  if ( n < 2 )
  {
    throw shape_error( "cmin_conn_formula requires n >= 2" );
  }
  return n - 1;
}

} // namespace querycx

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
  \file oracle.hpp
  \brief Instance complexity by enumerating every decision tree (n <= 4).

  Independent of the budget solver: it shares no lattice tables, takes
  C(f, x) from the per-input subset search, and never prunes a tree except
  for correctness. For every partial assignment rho it lists the value
  max_{leaves} depth / C(f, x) of every subtree that is correct on rho
  (a leaf is correct iff f is constant on rho; any variable still free may
  be queried, including on subcubes where f is already constant). A
  subtree at rho is identified with its list entry, so the root list has
  exactly one entry per tree computing f.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "common.hpp"
#include "decision_tree.hpp"
#include "measures.hpp"
#include "ratio.hpp"
#include "truth_table.hpp"

namespace querycx
{

struct OracleResult
{
  Ratio value;
  std::uint64_t trees = 0; ///< number of trees computing f that were enumerated
};

namespace detail
{

class TreeEnumerator
{
public:
  explicit TreeEnumerator( const TruthTable& f )
      : f_( f ), cert_( f.num_bits() )
  {
    for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
    {
      cert_[x] = certificate_complexity( f, static_cast<Input>( x ) );
    }
  }

  /// Values of all correct trees rooted at rho.
  const std::vector<Ratio>& trees_at( const Subcube& rho )
  {
    const auto key = std::make_pair( rho.fixed_mask(), rho.values() );
    if ( auto it = memo_.find( key ); it != memo_.end() )
    {
      return it->second;
    }

    std::vector<Ratio> out;
    const int depth = rho.codimension();
    if ( is_constant_on( f_, rho ) )
    {
      Ratio worst( 0 );
      for_each_point( rho, [&]( Input x ) { worst = std::max( worst, query_ratio( depth, cert_[x] ) ); } );
      out.push_back( worst );
    }
    const std::uint32_t free = all_vars_mask( f_.num_vars() ) & ~rho.fixed_mask();
    for ( std::uint32_t m = free; m != 0u; m &= m - 1u )
    {
      const int var = std::countr_zero( m );
      const std::vector<Ratio>& zero = trees_at( rho.with( var, false ) );
      const std::vector<Ratio>& one = trees_at( rho.with( var, true ) );
      for ( const Ratio& a : zero )
      {
        for ( const Ratio& b : one )
        {
          out.push_back( std::max( a, b ) );
        }
      }
    }
    return memo_.emplace( key, std::move( out ) ).first->second;
  }

private:
  template<typename Fn>
  void for_each_point( const Subcube& rho, Fn&& fn ) const
  {
    const std::uint32_t free = all_vars_mask( f_.num_vars() ) & ~rho.fixed_mask();
    std::uint32_t sub = 0;
    do
    {
      fn( rho.values() | sub );
      sub = ( sub - free ) & free;
    } while ( sub != 0u );
  }

  const TruthTable& f_;
  std::vector<int> cert_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Ratio>> memo_;
};

} // namespace detail

/// min over all trees T computing f of InstC(f, T).
inline OracleResult instc_oracle( const TruthTable& f, const Caps& caps = {} )
{
  require_cap( f.num_vars(), caps.oracle, "instc oracle" );
  detail::TreeEnumerator enumerator( f );
  const auto& all = enumerator.trees_at( Subcube{} );
  OracleResult result;
  result.trees = all.size();
  result.value = *std::min_element( all.begin(), all.end() );
  return result;
}

} // namespace querycx

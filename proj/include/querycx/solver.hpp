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
  \file solver.hpp
  \brief Exact instance complexity by ratio-feasibility search.

  For a ratio r, a tree T computing f satisfies T(x) <= r * C(f, x) for all
  x iff a budget recursion over subcubes succeeds:

    B(rho) = floor(r * min_{x in rho} C(f, x))        if f is constant on rho
    B(rho) = max_i min(B(rho|x_i=0), B(rho|x_i=1)) - 1  otherwise

  B(rho) is the largest number of queries that may already have been spent
  on arrival at rho so that some completing subtree stays within budget.
  Since arriving at rho costs exactly codim(rho) queries, any value below
  codim(rho) is replaced by the infeasible sentinel. r is feasible iff
  B(full cube) >= 0.

  InstC(f, T) is always d/c with d a depth and c an attained certificate
  size, so InstC(f) is the least feasible member of that finite set.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "common.hpp"
#include "decision_tree.hpp"
#include "lattice.hpp"
#include "measures.hpp"
#include "ratio.hpp"
#include "truth_table.hpp"

namespace querycx
{

struct InstcResult
{
  Ratio value;
  DecisionTree witness;
  int feasibility_checks = 0;
};

class InstcSolver
{
public:
  using Budget = std::int16_t;
  static constexpr Budget infeasible = std::numeric_limits<Budget>::min();

  explicit InstcSolver( const TruthTable& f, const Caps& caps = {} )
      : f_( f ), lattice_( f, caps ), cert_( point_certificates( lattice_ ) ),
        min_cert_( min_certificate_table( lattice_, cert_ ) )
  {
  }

  const TruthTable& function() const { return f_; }
  const SubcubeLattice& lattice() const { return lattice_; }
  const std::vector<std::uint8_t>& certificates() const { return cert_; }

  /// Sorted distinct d/c for d in [0, n] and c an attained C(f, x) > 0.
  std::vector<Ratio> candidate_ratios() const
  {
    std::vector<bool> attained( f_.num_vars() + 1, false );
    for ( auto c : cert_ )
    {
      attained[c] = true;
    }
    std::vector<Ratio> out;
    for ( int c = 1; c <= f_.num_vars(); ++c )
    {
      if ( !attained[c] )
      {
        continue;
      }
      for ( int d = 0; d <= f_.num_vars(); ++d )
      {
        out.emplace_back( d, c );
      }
    }
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
  }

  bool feasible( const Ratio& r ) const
  {
    return budgets( r )[lattice_.full_key()] != infeasible;
  }

  /*! \brief Least feasible candidate ratio and a witness tree.

    The witness is rebuilt from the budget table at the optimum: at each
    non-constant subcube it queries the variable maximizing the smaller
    child budget, lowest index on ties. Constant functions give 0/1 and
    the single-leaf tree.
  */
  InstcResult solve() const
  {
    InstcResult result;
    if ( auto c = lattice_.constant_value( lattice_.full_key() ) )
    {
      result.value = Ratio( 0 );
      result.witness = DecisionTree::leaf( *c );
      return result;
    }

    const auto candidates = candidate_ratios();
    // the top candidate n / C_min is always feasible (query until constant)
    std::size_t lo = 0, hi = candidates.size() - 1;
    while ( lo < hi )
    {
      const std::size_t mid = lo + ( hi - lo ) / 2;
      ++result.feasibility_checks;
      if ( feasible( candidates[mid] ) )
      {
        hi = mid;
      }
      else
      {
        lo = mid + 1;
      }
    }
    result.value = candidates[lo];
    const auto table = budgets( result.value );
    if ( table[lattice_.full_key()] == infeasible )
    {
      throw error( "instc solver: top candidate infeasible" );
    }
    result.witness = rebuild( table, lattice_.full_key(), all_vars_mask( f_.num_vars() ) );
    return result;
  }

  /// The full budget table for ratio r (infeasible entries hold the sentinel).
  std::vector<Budget> budgets( const Ratio& r ) const
  {
    std::vector<Budget> b( lattice_.size() );
    lattice_.for_each_ascending( [&]( SubcubeKey key, std::uint32_t free, std::uint32_t ) {
      const int spent = f_.num_vars() - std::popcount( free );
      std::int64_t value;
      if ( lattice_.constancy( key ) != Constancy::mixed )
      {
        value = r.is_infinite() ? std::numeric_limits<Budget>::max() : r.floor_times( min_cert_[key] );
      }
      else
      {
        value = infeasible;
        for ( std::uint32_t m = free; m != 0u; m &= m - 1u )
        {
          const int var = std::countr_zero( m );
          const Budget worse = std::min( b[lattice_.child( key, var, false )], b[lattice_.child( key, var, true )] );
          if ( worse != infeasible )
          {
            value = std::max<std::int64_t>( value, worse - 1 );
          }
        }
      }
      b[key] = ( value == infeasible || value < spent ) ? infeasible
                                                         : static_cast<Budget>( std::min<std::int64_t>( value, std::numeric_limits<Budget>::max() ) );
    } );
    return b;
  }

private:
  DecisionTree rebuild( const std::vector<Budget>& b, SubcubeKey key, std::uint32_t free ) const
  {
    if ( auto c = lattice_.constant_value( key ) )
    {
      return DecisionTree::leaf( *c );
    }
    int best_var = -1;
    Budget best = infeasible;
    for ( std::uint32_t m = free; m != 0u; m &= m - 1u )
    {
      const int var = std::countr_zero( m );
      const Budget worse = std::min( b[lattice_.child( key, var, false )], b[lattice_.child( key, var, true )] );
      if ( worse != infeasible && ( best_var < 0 || worse > best ) )
      {
        best_var = var;
        best = worse;
      }
    }
    if ( best_var < 0 )
    {
      throw error( "instc solver: witness reconstruction reached an infeasible subcube" );
    }
    const std::uint32_t rest = free & ~( std::uint32_t{ 1 } << best_var );
    return DecisionTree::query( best_var,
                                rebuild( b, lattice_.child( key, best_var, false ), rest ),
                                rebuild( b, lattice_.child( key, best_var, true ), rest ) );
  }

  TruthTable f_;
  SubcubeLattice lattice_;
  std::vector<std::uint8_t> cert_;
  std::vector<std::uint8_t> min_cert_;
};

inline std::vector<Ratio> candidate_ratios( const TruthTable& f, const Caps& caps = {} )
{
  return InstcSolver( f, caps ).candidate_ratios();
}

inline bool feasible( const TruthTable& f, const Ratio& r, const Caps& caps = {} )
{
  return InstcSolver( f, caps ).feasible( r );
}

/// n / (ell0 + n - ell1) for a symmetric predicate; 0/1 when it is constant.
inline Ratio symmetric_instc_formula( const std::vector<bool>& predicate )
{
  const int n = static_cast<int>( predicate.size() ) - 1;
  if ( n < 0 )
  {
    throw shape_error( "empty predicate" );
  }
  if ( std::all_of( predicate.begin(), predicate.end(), [&]( bool b ) { return b == predicate[0]; } ) )
  {
    return Ratio( 0 );
  }
  return Ratio( n, cmin_symmetric( predicate ) );
}

/// InstC(f) with a witness tree attaining it.
inline InstcResult instc_exact( const TruthTable& f, const Caps& caps = {} )
{
  return InstcSolver( f, caps ).solve();
}

} // namespace querycx

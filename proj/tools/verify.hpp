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
  \file verify.hpp
  \brief The `querycx verify` suites. Each prints one line per instance
         followed by `PASS k/k` or `FAIL j/k`. Output never contains
         timings, so reruns are byte-identical.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <querycx/querycx.hpp>

#include "report.hpp"

namespace querycx::cli
{

struct VerifyOptions
{
  int n_min = 0; ///< 0: same as n
  int n = 0;     ///< 0: suite default
  bool slow = false;
  int count = 0; ///< 0: suite default
  std::uint64_t seed = 0;

  Caps caps() const { return slow ? Caps::slow() : Caps{}; }
};

/// Random table on n variables drawn from raw 64-bit generator words.
inline TruthTable random_table( int n, std::mt19937_64& rng )
{
  std::vector<std::uint64_t> words( std::max<std::uint64_t>( 1u, ( std::uint64_t{ 1 } << n ) / 64u ) );
  for ( auto& w : words )
  {
    w = rng();
  }
  return TruthTable::from_function( n, [&]( Input x ) { return ( words[x >> 6] >> ( x & 63u ) ) & 1u; } );
}

inline std::string predicate_string( const std::vector<bool>& p )
{
  std::string s;
  for ( bool b : p )
  {
    s.push_back( b ? '1' : '0' );
  }
  return s;
}

namespace detail
{

struct Instance
{
  std::string line;
  bool ok = false;
};

class Tally
{
public:
  explicit Tally( std::ostream& out ) : out_( out ) {}

  void add( const Instance& inst )
  {
    out_ << ( inst.ok ? "ok   " : "FAIL " ) << inst.line << '\n';
    ++total_;
    passed_ += inst.ok;
  }

  void add( std::string line, bool ok ) { add( Instance{ std::move( line ), ok } ); }

  /// Runs count independent instances (possibly in parallel) and prints them in order.
  void add_all( std::size_t count, const std::function<Instance( std::size_t )>& make )
  {
    std::vector<Instance> results( count );
    parallel_for( count, [&]( std::size_t i ) { results[i] = make( i ); } );
    for ( const auto& r : results )
    {
      add( r );
    }
  }

  bool finish()
  {
    const bool ok = passed_ == total_ && total_ > 0;
    out_ << ( ok ? "PASS " : "FAIL " ) << passed_ << '/' << total_ << '\n';
    return ok;
  }

private:
  std::ostream& out_;
  int passed_ = 0, total_ = 0;
};

inline std::vector<int> size_range( const VerifyOptions& o, int default_n, int lowest )
{
  const int hi = o.n > 0 ? o.n : default_n;
  const int lo = o.n_min > 0 ? o.n_min : hi;
  if ( lo < lowest || lo > hi )
  {
    throw family_parameter_error( "size range must satisfy " + std::to_string( lowest ) + " <= n-min <= n" );
  }
  std::vector<int> out;
  for ( int n = lo; n <= hi; ++n )
  {
    out.push_back( n );
  }
  return out;
}

template<typename T>
std::string kv( const char* key, const T& value )
{
  std::ostringstream s;
  s << ' ' << key << '=' << value;
  return s.str();
}

/* suites ****************************************************************/

inline void verify_symmetric( const VerifyOptions& o, Tally& tally )
{
  for ( int n : size_range( o, 6, 1 ) )
  {
    require_cap( n, o.caps().lattice, "symmetric suite" );
    tally.add_all( std::size_t{ 1 } << ( n + 1 ), [&]( std::size_t bits ) {
      std::vector<bool> p( n + 1 );
      for ( int w = 0; w <= n; ++w )
      {
        p[w] = ( bits >> w ) & 1u;
      }
      const auto exact = instc_exact( make_family( FamilySpec::symmetric( p ) ), o.caps() ).value;
      const auto formula = symmetric_instc_formula( p );
      return Instance{ "symmetric" + kv( "n", n ) + kv( "predicate", predicate_string( p ) ) + kv( "instc", exact ) +
                           kv( "formula", formula ),
                       exact == formula };
    } );
  }
}

inline void verify_graph_conn( const VerifyOptions& o, Tally& tally )
{
  for ( int v : size_range( o, 4, 2 ) )
  {
    const auto f = make_family( FamilySpec::connectivity( v ), o.caps() );
    const SubcubeLattice lattice( f, o.caps() );
    const int d = dt( lattice ), c = cmin( lattice );
    const auto exact = instc_exact( f, o.caps() ).value;
    const auto edges = binomial2( v );
    const bool ok = d == edges && c == cmin_conn_formula( v ) && exact == Ratio( edges, cmin_conn_formula( v ) ) &&
                    exact <= Ratio( d, c );
    tally.add( "graph-conn" + kv( "vertices", v ) + kv( "dt", d ) + kv( "cmin", c ) + kv( "instc", exact ) +
                   kv( "expected", Ratio( edges, cmin_conn_formula( v ) ) ),
               ok );
  }
}

/*! CL_k on v vertices: cmin matches the formula and dt = C(v,2). Where the
  clique side C(k,2) is the smaller term of cmin, instc must equal
  C(v,2)/C(k,2); where the Turan side is smaller, instc is only bounded by
  dt/cmin and the line is tagged regime=turan.
*/
inline void verify_graph_clique( const VerifyOptions& o, Tally& tally )
{
  for ( int v : size_range( o, 4, 2 ) )
  {
    for ( int k = 2; k <= v; ++k )
    {
      const auto f = make_family( FamilySpec::clique( v, k ), o.caps() );
      const SubcubeLattice lattice( f, o.caps() );
      const int d = dt( lattice ), c = cmin( lattice );
      const auto formula = cmin_clique_formula( v, k );
      const auto exact = instc_exact( f, o.caps() ).value;
      const auto edges = binomial2( v );
      const bool clique_regime = binomial2( k ) <= edges - turan_bound( v, k );
      bool ok = d == edges && c == formula && exact <= query_ratio( d, c );
      std::string line = "graph-clique" + kv( "vertices", v ) + kv( "k", k ) + kv( "dt", d ) + kv( "cmin", c ) +
                         kv( "cmin_formula", formula ) + kv( "instc", exact );
      if ( clique_regime )
      {
        ok = ok && exact == Ratio( edges, binomial2( k ) );
        line += kv( "regime", "clique" ) + kv( "expected", Ratio( edges, binomial2( k ) ) );
      }
      else
      {
        line += kv( "regime", "turan" ) + kv( "dt_over_cmin", query_ratio( d, c ) );
      }
      tally.add( line, ok );
    }
  }
}

inline void verify_gt( const VerifyOptions& o, Tally& tally )
{
  for ( int n : size_range( o, 4, 1 ) )
  {
    const auto f = make_family( FamilySpec::of( Family::gt, n ), o.caps() );
    const SubcubeLattice lattice( f, o.caps() );
    const int d = dt( lattice ), c = cmin( lattice );
    const auto tree = gt_tree( n );
    const bool correct = computes( tree, f );

    Ratio wrt( 0 );
    bool counts_ok = correct;
    if ( correct )
    {
      wrt = instc_wrt( f, tree, point_certificates( lattice ) );
      const Input low = ( Input{ 1 } << n ) - 1u;
      for ( Input z = 0; z < f.num_bits(); ++z )
      {
        const int q = tree.run( z ).first;
        const Input diff = ( z & low ) ^ ( z >> n );
        const int j = n - std::bit_width( diff );
        counts_ok = counts_ok && ( diff == 0u ? ( q == 2 * n - 1 || q == 2 * n ) : ( q == 2 * j + 1 || q == 2 * j + 2 ) );
      }
    }
    const int forced = run_adversary( tree, gt_adversary( n ) ).depth;
    const bool ok = d == 2 * n && c == 2 && correct && wrt <= Ratio( 2 ) && counts_ok && forced == 2 * n;
    tally.add( "gt" + kv( "n", n ) + kv( "dt", d ) + kv( "cmin", c ) + kv( "computes", correct ? "yes" : "no" ) +
                   kv( "instc_wrt", wrt ) + kv( "query_counts", counts_ok ? "ok" : "bad" ) + kv( "adversary_depth", forced ),
               ok );
  }
}

inline void verify_omb( const VerifyOptions& o, Tally& tally )
{
  for ( int n : size_range( o, 5, 1 ) )
  {
    if ( n % 2 == 0 )
    {
      if ( o.n_min == 0 )
      {
        throw family_parameter_error( "omb suite requires odd n" );
      }
      continue;
    }
    const auto f = make_family( FamilySpec::of( Family::omb, n ), o.caps() );
    const SubcubeLattice lattice( f, o.caps() );
    const int d = dt( lattice ), c = cmin( lattice );
    const auto expansion = mobius( f, o.caps() );
    const auto top = expansion.coefficient( all_vars_mask( n ) );
    const auto tree = omb_tree( n );
    const bool correct = computes( tree, f );
    const auto cert = point_certificates( lattice );
    Ratio wrt( 0 );
    bool classes_ok = cert[0] == ( n + 1 ) / 2;
    for ( Input x = 1; x < f.num_bits(); ++x )
    {
      const int i = n - std::bit_width( x );
      classes_ok = classes_ok && cert[x] == ( f.get( x ) ? ( i + 2 ) / 2 : ( i + 3 ) / 2 );
    }
    if ( correct )
    {
      wrt = instc_wrt( f, tree, cert );
    }
    const bool ok = d == n && c == 1 && expansion.degree() == n && top == ( n % 2 ? 1 : -1 ) && correct &&
                    wrt == Ratio( 2 * n, n + 1 ) && wrt < Ratio( 2 ) && classes_ok;
    tally.add( "omb" + kv( "n", n ) + kv( "dt", d ) + kv( "cmin", c ) + kv( "deg", expansion.degree() ) +
                   kv( "top_coefficient", top ) + kv( "computes", correct ? "yes" : "no" ) + kv( "instc_wrt", wrt ) +
                   kv( "certificate_classes", classes_ok ? "ok" : "bad" ),
               ok );
  }
}

inline void verify_gkn( const VerifyOptions& o, Tally& tally )
{
  const auto check = [&]( const std::string& name, const TruthTable& f, const Ratio& expected ) {
    const auto exact = instc_exact( f, o.caps() ).value;
    tally.add( "gkn" + kv( "function", name ) + kv( "instc", exact ) + kv( "expected", expected ), exact == expected );
  };
  for ( int n : size_range( o, 6, 1 ) )
  {
    const auto fam = [&]( Family f ) { return make_family( FamilySpec::of( f, n ), o.caps() ); };
    check( "xor(n=" + std::to_string( n ) + ")", fam( Family::xor_ ), Ratio( 1 ) );
    check( "and(n=" + std::to_string( n ) + ")", fam( Family::and_ ), Ratio( n ) );
    check( "or(n=" + std::to_string( n ) + ")", fam( Family::or_ ), Ratio( n ) );
    check( "maj(n=" + std::to_string( n ) + ")", fam( Family::maj ), n % 2 ? Ratio( 2 * n, n + 1 ) : Ratio( 2 ) );
  }
  for ( int m = 1; m <= 2; ++m )
  {
    check( "ind(m=" + std::to_string( m ) + ")", make_family( FamilySpec::index( m ), o.caps() ), Ratio( 1 ) );
  }
}

inline void verify_deg_lb( const VerifyOptions& o, Tally& tally )
{
  std::mt19937_64 rng( o.seed );
  const int count = o.count > 0 ? o.count : 100;
  for ( int n : size_range( o, 4, 1 ) )
  {
    require_cap( n, o.caps().lattice, "deg-lb suite" );
    if ( n <= 4 )
    {
      const std::uint64_t tables = std::uint64_t{ 1 } << ( 1u << n );
      std::uint64_t violations = 0;
      for ( std::uint64_t bits = 0; bits < tables; ++bits )
      {
        const auto f = TruthTable::from_function( n, [bits]( Input x ) { return ( bits >> x ) & 1u; } );
        violations += dt( f, o.caps() ) < degree( f, o.caps() );
      }
      tally.add( "deg-lb" + kv( "n", n ) + kv( "functions", tables ) + kv( "violations", violations ), violations == 0 );
      continue;
    }
    std::vector<TruthTable> sample;
    for ( int i = 0; i < count; ++i )
    {
      sample.push_back( random_table( n, rng ) );
    }
    tally.add_all( sample.size(), [&]( std::size_t i ) {
      const int d = dt( sample[i], o.caps() ), g = degree( sample[i], o.caps() );
      return Instance{ "deg-lb" + kv( "n", n ) + kv( "sample", i ) + kv( "dt", d ) + kv( "deg", g ), d >= g };
    } );
  }
}

inline void verify_oracle( const VerifyOptions& o, Tally& tally )
{
  std::mt19937_64 rng( o.seed );
  const int count = o.count > 0 ? o.count : 200;
  for ( int n : size_range( o, 3, 1 ) )
  {
    require_cap( n, o.caps().oracle, "oracle suite" );
    std::vector<TruthTable> functions;
    if ( n <= 3 )
    {
      for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++bits )
      {
        functions.push_back( TruthTable::from_function( n, [bits]( Input x ) { return ( bits >> x ) & 1u; } ) );
      }
    }
    else
    {
      for ( int i = 0; i < count; ++i )
      {
        functions.push_back( random_table( n, rng ) );
      }
    }
    tally.add_all( functions.size(), [&]( std::size_t i ) {
      const auto exact = instc_exact( functions[i], o.caps() ).value;
      const auto oracle = instc_oracle( functions[i], o.caps() ).value;
      return Instance{ "oracle" + kv( "n", n ) + kv( "table", table_hex( functions[i] ) ) + kv( "instc", exact ) +
                           kv( "oracle", oracle ),
                       exact == oracle };
    } );
  }
}

} // namespace detail

inline const std::map<std::string, void ( * )( const VerifyOptions&, detail::Tally& )>& verify_suites()
{
  static const std::map<std::string, void ( * )( const VerifyOptions&, detail::Tally& )> suites = {
      { "symmetric", detail::verify_symmetric }, { "graph-conn", detail::verify_graph_conn },
      { "graph-clique", detail::verify_graph_clique }, { "gt", detail::verify_gt },
      { "omb", detail::verify_omb }, { "gkn", detail::verify_gkn },
      { "deg-lb", detail::verify_deg_lb }, { "oracle", detail::verify_oracle } };
  return suites;
}

/// Runs one suite; returns true when every instance passed.
inline bool run_verify( const std::string& id, const VerifyOptions& options, std::ostream& out )
{
  const auto& suites = verify_suites();
  const auto it = suites.find( id );
  if ( it == suites.end() )
  {
    throw family_parameter_error( "unknown verify suite '" + id + "'" );
  }
  detail::Tally tally( out );
  it->second( options, tally );
  return tally.finish();
}

} // namespace querycx::cli

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
  \file decision_tree.hpp
  \brief Decision trees, query policies and instance complexity of a tree.

  A query policy maps the answers seen so far (a Subcube) to the next step:
  either a variable to query or an output bit. A materialized DecisionTree
  is one policy; large trees are kept as procedures instead. Everything
  below (evaluation, the computes-check, InstC w.r.t. a tree) is written
  against the policy interface.
*/

#pragma once

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "measures.hpp"
#include "ratio.hpp"
#include "truth_table.hpp"

namespace querycx
{

/// Either "query variable var" or "stop and output value".
struct Step
{
  bool is_leaf = true;
  int var = -1;
  bool value = false;

  static Step query( int var ) { return { false, var, false }; }
  static Step leaf( bool value ) { return { true, -1, value }; }
};

template<typename P>
concept QueryPolicy = requires( const P& p, const Subcube& seen ) {
  { p.next( seen ) } -> std::same_as<Step>;
};

/* materialized trees ****************************************************/

class DecisionTree
{
public:
  struct Node
  {
    int var = -1; ///< -1 for leaves
    bool value = false;
    int child0 = -1;
    int child1 = -1;
    bool is_leaf() const { return var < 0; }
  };

  DecisionTree() { nodes_.push_back( Node{} ); }

  static DecisionTree leaf( bool value )
  {
    DecisionTree t;
    t.nodes_[0].value = value;
    return t;
  }

  /// Query var; continue in t0 on answer 0 and in t1 on answer 1.
  static DecisionTree query( int var, const DecisionTree& t0, const DecisionTree& t1 )
  {
    DecisionTree t;
    t.nodes_[0] = Node{ var, false, 1, static_cast<int>( 1 + t0.nodes_.size() ) };
    t.append( t0 );
    t.append( t1 );
    return t;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  std::size_t size() const { return nodes_.size(); }

  int depth() const { return depth_from( 0 ); }

  /*! \brief Throws structure_error unless children are in range, the graph is
    a tree, all variables are below num_vars, and no variable repeats on a
    root-to-leaf path.
  */
  void validate( int num_vars ) const
  {
    std::vector<char> visited( nodes_.size(), 0 );
    validate_from( 0, num_vars, 0u, visited );
  }

  /// Walks the tree along the answers in `seen`.
  Step next( const Subcube& seen ) const
  {
    int node = 0;
    while ( true )
    {
      const Node& nd = nodes_[node];
      if ( nd.is_leaf() )
      {
        return Step::leaf( nd.value );
      }
      if ( !seen.is_fixed( nd.var ) )
      {
        return Step::query( nd.var );
      }
      node = seen.value( nd.var ) ? nd.child1 : nd.child0;
    }
  }

  /// Direct walk on an input: (queries made, output).
  std::pair<int, bool> run( Input x ) const
  {
    int node = 0, queries = 0;
    while ( !nodes_[node].is_leaf() )
    {
      node = ( ( x >> nodes_[node].var ) & 1u ) ? nodes_[node].child1 : nodes_[node].child0;
      ++queries;
    }
    return { queries, nodes_[node].value };
  }

  /// Nested text form: `(q <var> <t0> <t1>)` / `(leaf <bit>)`, variables 1-based.
  std::string to_string() const
  {
    std::string out;
    write( 0, out );
    return out;
  }

  static DecisionTree parse( std::string_view text );

  friend bool operator==( const DecisionTree& a, const DecisionTree& b ) { return a.to_string() == b.to_string(); }

private:
  void append( const DecisionTree& sub )
  {
    const int offset = static_cast<int>( nodes_.size() );
    for ( Node nd : sub.nodes_ )
    {
      if ( !nd.is_leaf() )
      {
        nd.child0 += offset;
        nd.child1 += offset;
      }
      nodes_.push_back( nd );
    }
  }

  int depth_from( int node ) const
  {
    const Node& nd = nodes_[node];
    return nd.is_leaf() ? 0 : 1 + std::max( depth_from( nd.child0 ), depth_from( nd.child1 ) );
  }

  void validate_from( int node, int num_vars, std::uint32_t on_path, std::vector<char>& visited ) const
  {
    if ( node < 0 || node >= static_cast<int>( nodes_.size() ) )
    {
      throw structure_error( "decision tree: child index out of range" );
    }
    if ( visited[node] )
    {
      throw structure_error( "decision tree: node reachable twice" );
    }
    visited[node] = 1;
    const Node& nd = nodes_[node];
    if ( nd.is_leaf() )
    {
      return;
    }
    if ( nd.var >= num_vars )
    {
      throw structure_error( "decision tree: variable " + std::to_string( nd.var + 1 ) + " out of range" );
    }
    const std::uint32_t bit = std::uint32_t{ 1 } << nd.var;
    if ( on_path & bit )
    {
      throw structure_error( "decision tree: variable " + std::to_string( nd.var + 1 ) + " queried twice on a path" );
    }
    validate_from( nd.child0, num_vars, on_path | bit, visited );
    validate_from( nd.child1, num_vars, on_path | bit, visited );
  }

  void write( int node, std::string& out ) const
  {
    const Node& nd = nodes_[node];
    if ( nd.is_leaf() )
    {
      out += nd.value ? "(leaf 1)" : "(leaf 0)";
      return;
    }
    out += "(q " + std::to_string( nd.var + 1 ) + " ";
    write( nd.child0, out );
    out += " ";
    write( nd.child1, out );
    out += ")";
  }

  std::vector<Node> nodes_;
};

namespace detail
{

class TreeParser
{
public:
  explicit TreeParser( std::string_view text ) : text_( text ) {}

  DecisionTree parse_all()
  {
    auto t = parse_tree();
    skip_ws();
    if ( pos_ != text_.size() )
    {
      fail( "trailing characters" );
    }
    return t;
  }

private:
  [[noreturn]] void fail( const std::string& what ) const
  {
    throw parse_error( "decision tree: " + what + " at offset " + std::to_string( pos_ ) );
  }

  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  void expect( char c )
  {
    skip_ws();
    if ( pos_ >= text_.size() || text_[pos_] != c )
    {
      fail( std::string( "expected '" ) + c + "'" );
    }
    ++pos_;
  }

  std::string_view word()
  {
    skip_ws();
    const auto start = pos_;
    while ( pos_ < text_.size() && std::isalnum( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
    if ( start == pos_ )
    {
      fail( "expected a token" );
    }
    return text_.substr( start, pos_ - start );
  }

  int number()
  {
    const auto w = word();
    int v = 0;
    for ( char c : w )
    {
      if ( !std::isdigit( static_cast<unsigned char>( c ) ) || v > 1000 )
      {
        fail( "expected a number" );
      }
      v = v * 10 + ( c - '0' );
    }
    return v;
  }

  DecisionTree parse_tree()
  {
    expect( '(' );
    const auto kind = word();
    DecisionTree t;
    if ( kind == "leaf" )
    {
      const int bit = number();
      if ( bit > 1 )
      {
        fail( "leaf value must be 0 or 1" );
      }
      t = DecisionTree::leaf( bit == 1 );
    }
    else if ( kind == "q" )
    {
      const int var = number();
      if ( var < 1 )
      {
        fail( "variables are numbered from 1" );
      }
      auto t0 = parse_tree();
      auto t1 = parse_tree();
      t = DecisionTree::query( var - 1, t0, t1 );
    }
    else
    {
      fail( "expected 'q' or 'leaf'" );
    }
    expect( ')' );
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline DecisionTree DecisionTree::parse( std::string_view text )
{
  return detail::TreeParser( text ).parse_all();
}

/* running policies ******************************************************/

struct PlayResult
{
  int queries = 0;
  bool output = false;
  Subcube seen;
};

/*! \brief Runs a policy against an answer source `answer(var, seen) -> bool`.

  Throws structure_error if the policy queries a variable twice or one
  outside [0, num_vars).
*/
template<QueryPolicy P, typename Answer>
PlayResult play( const P& policy, int num_vars, Answer&& answer )
{
  PlayResult r;
  while ( true )
  {
    const Step step = policy.next( r.seen );
    if ( step.is_leaf )
    {
      r.output = step.value;
      return r;
    }
    if ( step.var < 0 || step.var >= num_vars )
    {
      throw structure_error( "policy queried variable " + std::to_string( step.var + 1 ) + " out of range" );
    }
    if ( r.seen.is_fixed( step.var ) )
    {
      throw structure_error( "policy queried variable " + std::to_string( step.var + 1 ) + " twice" );
    }
    r.seen = r.seen.with( step.var, answer( step.var, r.seen ) );
    ++r.queries;
  }
}

template<QueryPolicy P>
PlayResult play_input( const P& policy, int num_vars, Input x )
{
  return play( policy, num_vars, [x]( int var, const Subcube& ) { return ( ( x >> var ) & 1u ) != 0u; } );
}

/// T(x): number of queries made on input x.
template<QueryPolicy P>
int tree_queries( const P& policy, int num_vars, Input x )
{
  return play_input( policy, num_vars, x ).queries;
}

inline int tree_queries( const DecisionTree& t, int num_vars, Input x )
{
  t.validate( num_vars );
  return t.run( x ).first;
}

/// True iff the policy outputs f(x) on every input.
template<QueryPolicy P>
bool computes( const P& policy, const TruthTable& f )
{
  for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
  {
    if ( play_input( policy, f.num_vars(), static_cast<Input>( x ) ).output != f.get( static_cast<Input>( x ) ) )
    {
      return false;
    }
  }
  return true;
}

/// Expands a policy into an explicit tree by exploring both answers.
template<QueryPolicy P>
DecisionTree materialize( const P& policy, int num_vars, const Subcube& seen = {} )
{
  const Step step = policy.next( seen );
  if ( step.is_leaf )
  {
    return DecisionTree::leaf( step.value );
  }
  if ( step.var < 0 || step.var >= num_vars || seen.is_fixed( step.var ) )
  {
    throw structure_error( "policy made an invalid query while materializing" );
  }
  return DecisionTree::query( step.var, materialize( policy, num_vars, seen.with( step.var, false ) ),
                              materialize( policy, num_vars, seen.with( step.var, true ) ) );
}

/* instance complexity w.r.t. a tree *************************************/

/// queries / certificate, with the constant-function convention
/// 0/0 = 0 and q/0 = infinity for q > 0.
inline Ratio query_ratio( int queries, int cert )
{
  if ( cert == 0 )
  {
    return queries == 0 ? Ratio( 0 ) : Ratio::infinity();
  }
  return Ratio( queries, cert );
}

/// InstC(f, x, T) = T(x) / C(f, x).
template<QueryPolicy P>
Ratio instc_at( const TruthTable& f, Input x, const P& policy, const Caps& caps = {} )
{
  const auto r = play_input( policy, f.num_vars(), x );
  if ( r.output != f.get( x ) )
  {
    throw computes_error( "tree output differs from f on input " + format_input( x, f.num_vars() ) );
  }
  return query_ratio( r.queries, certificate_complexity( f, x, caps ) );
}

/// Per-input ratios T(x)/C(f,x), given precomputed certificates.
template<QueryPolicy P>
std::vector<Ratio> instc_profile( const TruthTable& f, const P& policy, const std::vector<std::uint8_t>& cert )
{
  std::vector<Ratio> out( f.num_bits() );
  for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
  {
    const auto r = play_input( policy, f.num_vars(), static_cast<Input>( x ) );
    if ( r.output != f.get( static_cast<Input>( x ) ) )
    {
      throw computes_error( "tree output differs from f on input " + format_input( static_cast<Input>( x ), f.num_vars() ) );
    }
    out[x] = query_ratio( r.queries, cert[x] );
  }
  return out;
}

/// InstC(f, T) = max_x T(x) / C(f, x); throws computes_error if T does not compute f.
template<QueryPolicy P>
Ratio instc_wrt( const TruthTable& f, const P& policy, const std::vector<std::uint8_t>& cert )
{
  const auto profile = instc_profile( f, policy, cert );
  return *std::max_element( profile.begin(), profile.end() );
}

template<QueryPolicy P>
Ratio instc_wrt( const TruthTable& f, const P& policy, const Caps& caps = {} )
{
  if constexpr ( std::same_as<P, DecisionTree> )
  {
    policy.validate( f.num_vars() );
  }
  return instc_wrt( f, policy, all_certificate_complexities( f, caps ) );
}

} // namespace querycx

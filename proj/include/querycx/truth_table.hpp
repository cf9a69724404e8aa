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
  \file truth_table.hpp
  \brief Explicit Boolean functions, subcubes and the truth-table text format.

  Variables are 0-based in the API: variable i is x_{i+1}. An input is an
  unsigned index whose bit i holds x_{i+1}, so x_1 is the least significant
  bit of the table index.
*/

#pragma once

#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace querycx
{

/// An input x in {0,1}^n, packed so that bit i is x_{i+1}.
using Input = std::uint32_t;

/// Largest arity any table may have.
inline constexpr int max_table_vars = 24;

class TruthTable
{
public:
  TruthTable() = default;

  /// All-zero function on n variables.
  explicit TruthTable( int num_vars )
      : n_( num_vars )
  {
    if ( num_vars < 0 || num_vars > max_table_vars )
    {
      throw cap_error( "truth table: n=" + std::to_string( num_vars ) + " out of range" );
    }
    words_.assign( std::max<std::uint64_t>( 1u, num_bits() >> 6 ), 0u );
  }

  /// Builds the table of fn(x) for every input x.
  template<typename Fn>
  static TruthTable from_function( int num_vars, Fn&& fn )
  {
    TruthTable tt( num_vars );
    for ( std::uint64_t x = 0; x < tt.num_bits(); ++x )
    {
      if ( fn( static_cast<Input>( x ) ) )
      {
        tt.set( static_cast<Input>( x ), true );
      }
    }
    return tt;
  }

  int num_vars() const { return n_; }
  std::uint64_t num_bits() const { return std::uint64_t{ 1 } << n_; }

  bool get( Input x ) const
  {
    return ( words_[x >> 6] >> ( x & 63u ) ) & 1u;
  }

  void set( Input x, bool value )
  {
    const auto mask = std::uint64_t{ 1 } << ( x & 63u );
    if ( value )
    {
      words_[x >> 6] |= mask;
    }
    else
    {
      words_[x >> 6] &= ~mask;
    }
  }

  /// Value of f if it is constant, otherwise nullopt.
  std::optional<bool> constant_value() const
  {
    const bool first = get( 0 );
    for ( std::uint64_t x = 1; x < num_bits(); ++x )
    {
      if ( get( static_cast<Input>( x ) ) != first )
      {
        return std::nullopt;
      }
    }
    return first;
  }

  std::uint64_t count_ones() const
  {
    std::uint64_t c = 0;
    for ( std::uint64_t x = 0; x < num_bits(); ++x )
    {
      c += get( static_cast<Input>( x ) );
    }
    return c;
  }

  /// The 2^n table characters, index 0 first.
  std::string to_bit_string() const
  {
    std::string s( num_bits(), '0' );
    for ( std::uint64_t x = 0; x < num_bits(); ++x )
    {
      if ( get( static_cast<Input>( x ) ) )
      {
        s[x] = '1';
      }
    }
    return s;
  }

  friend bool operator==( const TruthTable&, const TruthTable& ) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_{ 0u };
};

/*! \brief A partial assignment: the variables in `fixed` take the values in
  `values`; all other variables are free.
*/
class Subcube
{
public:
  Subcube() = default;

  Subcube( std::uint32_t fixed, std::uint32_t values )
      : fixed_( fixed ), values_( values & fixed )
  {
  }

  /// The subcube fixing the variables in `mask` to their values in x.
  static Subcube around( Input x, std::uint32_t mask ) { return Subcube( mask, x ); }

  std::uint32_t fixed_mask() const { return fixed_; }
  std::uint32_t values() const { return values_; }
  int codimension() const { return std::popcount( fixed_ ); }

  bool is_fixed( int var ) const { return ( fixed_ >> var ) & 1u; }
  bool value( int var ) const { return ( values_ >> var ) & 1u; }

  Subcube with( int var, bool value ) const
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << var;
    return Subcube( fixed_ | bit, value ? ( values_ | bit ) : ( values_ & ~bit ) );
  }

  bool contains( Input x ) const { return ( x & fixed_ ) == values_; }

  /// Base-3 key: digit i is 0 or 1 for a fixed variable and 2 for a free one.
  std::uint64_t ternary_key( int num_vars ) const
  {
    std::uint64_t key = 0;
    for ( int i = num_vars - 1; i >= 0; --i )
    {
      key = key * 3u + ( is_fixed( i ) ? static_cast<std::uint64_t>( value( i ) ) : 2u );
    }
    return key;
  }

  static Subcube from_ternary_key( std::uint64_t key, int num_vars )
  {
    std::uint32_t fixed = 0, values = 0;
    for ( int i = 0; i < num_vars; ++i, key /= 3u )
    {
      const auto digit = key % 3u;
      if ( digit != 2u )
      {
        fixed |= std::uint32_t{ 1 } << i;
        values |= static_cast<std::uint32_t>( digit ) << i;
      }
    }
    return Subcube( fixed, values );
  }

  friend bool operator==( const Subcube&, const Subcube& ) = default;

private:
  std::uint32_t fixed_ = 0;
  std::uint32_t values_ = 0;
};

inline std::uint32_t all_vars_mask( int num_vars )
{
  return num_vars >= 32 ? ~std::uint32_t{ 0 } : ( std::uint32_t{ 1 } << num_vars ) - 1u;
}

inline void check_subcube( const TruthTable& f, const Subcube& rho )
{
  if ( ( rho.fixed_mask() & ~all_vars_mask( f.num_vars() ) ) != 0u )
  {
    throw shape_error( "subcube fixes a variable outside [1, " + std::to_string( f.num_vars() ) + "]" );
  }
}

/* evaluation ************************************************************/

inline bool eval( const TruthTable& f, Input x )
{
  if ( ( x & ~all_vars_mask( f.num_vars() ) ) != 0u )
  {
    throw shape_error( "input index out of range" );
  }
  return f.get( x );
}

/// Parses "x_1 x_2 ... x_n" as a string of '0'/'1' characters.
inline Input parse_input( std::string_view bits, int num_vars )
{
  if ( static_cast<int>( bits.size() ) != num_vars )
  {
    throw shape_error( "input has " + std::to_string( bits.size() ) + " bits, function has " + std::to_string( num_vars ) );
  }
  Input x = 0;
  for ( int i = 0; i < num_vars; ++i )
  {
    if ( bits[i] == '1' )
    {
      x |= Input{ 1 } << i;
    }
    else if ( bits[i] != '0' )
    {
      throw shape_error( "input bits must be 0 or 1" );
    }
  }
  return x;
}

inline std::string format_input( Input x, int num_vars )
{
  std::string s( num_vars, '0' );
  for ( int i = 0; i < num_vars; ++i )
  {
    if ( ( x >> i ) & 1u )
    {
      s[i] = '1';
    }
  }
  return s;
}

inline bool eval( const TruthTable& f, std::string_view bits )
{
  return f.get( parse_input( bits, f.num_vars() ) );
}

/* restriction ***********************************************************/

/// Deposits the low bits of `compact` into the positions of `mask`.
inline Input deposit_bits( std::uint32_t compact, std::uint32_t mask )
{
  Input out = 0;
  for ( std::uint32_t m = mask; m != 0u; m &= m - 1u, compact >>= 1 )
  {
    if ( compact & 1u )
    {
      out |= m & ( ~m + 1u );
    }
  }
  return out;
}

/// The subfunction on the free variables of rho, in ascending order.
inline TruthTable restrict( const TruthTable& f, const Subcube& rho )
{
  check_subcube( f, rho );
  const std::uint32_t free = all_vars_mask( f.num_vars() ) & ~rho.fixed_mask();
  return TruthTable::from_function( std::popcount( free ), [&]( Input y ) {
    return f.get( rho.values() | deposit_bits( y, free ) );
  } );
}

/// Constancy of f on rho by scanning its 2^(n - codim) points.
inline std::optional<bool> is_constant_on( const TruthTable& f, const Subcube& rho )
{
  check_subcube( f, rho );
  const std::uint32_t free = all_vars_mask( f.num_vars() ) & ~rho.fixed_mask();
  const bool first = f.get( rho.values() );
  // enumerate submasks of free
  for ( std::uint32_t sub = free; sub != 0u; sub = ( sub - 1u ) & free )
  {
    if ( f.get( rho.values() | sub ) != first )
    {
      return std::nullopt;
    }
  }
  return first;
}

/* symmetry **************************************************************/

/// The predicate D_f (entry w is f on weight-w inputs) if f is symmetric.
inline std::optional<std::vector<bool>> is_symmetric( const TruthTable& f )
{
  const int n = f.num_vars();
  std::vector<int> seen( n + 1, -1 );
  for ( std::uint64_t x = 0; x < f.num_bits(); ++x )
  {
    const int w = std::popcount( x );
    const int v = f.get( static_cast<Input>( x ) );
    if ( seen[w] == -1 )
    {
      seen[w] = v;
    }
    else if ( seen[w] != v )
    {
      return std::nullopt;
    }
  }
  return std::vector<bool>( seen.begin(), seen.end() );
}

/* text format ***********************************************************/

/*! \brief Reads `n=<k>` followed by 2^k characters from {0,1}.

  Whitespace is ignored everywhere except inside the number k.
*/
inline TruthTable read_truth_table( std::istream& in )
{
  std::string text( std::istreambuf_iterator<char>( in ), {} );
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
    {
      ++pos;
    }
  };

  skip_ws();
  if ( pos >= text.size() || text[pos] != 'n' )
  {
    throw parse_error( "truth table: expected header 'n=<k>'" );
  }
  ++pos;
  skip_ws();
  if ( pos >= text.size() || text[pos] != '=' )
  {
    throw parse_error( "truth table: expected '=' after 'n'" );
  }
  ++pos;
  skip_ws();
  int n = 0;
  std::size_t digits = 0;
  while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) && digits < 3 )
  {
    n = n * 10 + ( text[pos++] - '0' );
    ++digits;
  }
  if ( digits == 0 || ( pos < text.size() && !std::isspace( static_cast<unsigned char>( text[pos] ) ) ) )
  {
    throw parse_error( "truth table: malformed variable count" );
  }
  if ( n > max_table_vars )
  {
    throw cap_error( "truth table: n=" + std::to_string( n ) + " exceeds the table cap" );
  }

  TruthTable tt( n );
  std::uint64_t count = 0;
  for ( ; pos < text.size(); ++pos )
  {
    const char c = text[pos];
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      continue;
    }
    if ( c != '0' && c != '1' )
    {
      throw parse_error( std::string( "truth table: unexpected character '" ) + c + "'" );
    }
    if ( count >= tt.num_bits() )
    {
      throw parse_error( "truth table: more than 2^n entries" );
    }
    tt.set( static_cast<Input>( count++ ), c == '1' );
  }
  if ( count != tt.num_bits() )
  {
    throw parse_error( "truth table: expected " + std::to_string( tt.num_bits() ) + " entries, got " + std::to_string( count ) );
  }
  return tt;
}

inline TruthTable parse_truth_table( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  return read_truth_table( in );
}

inline void write_truth_table( std::ostream& out, const TruthTable& f )
{
  out << "n=" << f.num_vars() << '\n'
      << f.to_bit_string() << '\n';
}

} // namespace querycx

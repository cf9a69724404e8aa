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
  \file ratio.hpp
  \brief Exact non-negative rationals with a distinguished +infinity.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace querycx
{

/*! \brief Reduced fraction num/den with num >= 0 and den > 0.

  `Ratio::infinity()` is stored as 1/0 and compares above every finite value.
  It stands for the cost of a tree that queries a constant function.
*/
class Ratio
{
public:
  constexpr Ratio() = default;

  constexpr Ratio( std::int64_t num, std::int64_t den = 1 )
  {
    if ( den <= 0 || num < 0 )
    {
      throw std::invalid_argument( "Ratio requires num >= 0 and den > 0" );
    }
    const auto g = std::gcd( num, den );
    num_ = num / g;
    den_ = den / g;
  }

  static constexpr Ratio infinity()
  {
    Ratio r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_infinite() const { return den_ == 0; }

  /// floor(*this * k), exact integer arithmetic.
  constexpr std::int64_t floor_times( std::int64_t k ) const
  {
    return ( num_ * k ) / den_;
  }

  friend constexpr bool operator==( const Ratio&, const Ratio& ) = default;

  friend constexpr std::strong_ordering operator<=>( const Ratio& a, const Ratio& b )
  {
    if ( a.is_infinite() || b.is_infinite() )
    {
      return a.is_infinite() <=> b.is_infinite();
    }
    return static_cast<__int128>( a.num_ ) * b.den_ <=> static_cast<__int128>( b.num_ ) * a.den_;
  }

  std::string to_string() const
  {
    if ( is_infinite() )
    {
      return "inf";
    }
    return std::to_string( num_ ) + "/" + std::to_string( den_ );
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<( std::ostream& os, const Ratio& r )
{
  return os << r.to_string();
}

} // namespace querycx

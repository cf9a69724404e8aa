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
  \file common.hpp
  \brief Error types, size caps and a small parallel loop helper.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace querycx
{

/* errors ****************************************************************/

class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Input length does not match the function arity.
class shape_error : public error
{
public:
  using error::error;
};

class family_parameter_error : public error
{
public:
  using error::error;
};

/// A requested computation exceeds the configured variable cap.
class cap_error : public error
{
public:
  using error::error;
};

/// Malformed decision tree (dangling child, repeated variable on a path, ...).
class structure_error : public error
{
public:
  using error::error;
};

/// A tree was supplied for a function it does not compute.
class computes_error : public error
{
public:
  using error::error;
};

class parse_error : public error
{
public:
  using error::error;
};

/* caps ******************************************************************/

/*! \brief Upper bounds on the number of variables per kind of computation.

  The lattice cap covers every routine that materializes all 3^n subcubes:
  the constancy table, decision-tree depth, minimum certificates and the
  instance-complexity solver.
*/
struct Caps
{
  int core = 20;
  int certificate = 16;
  int lattice = 13;
  int degree = 20;
  int oracle = 4;

  /// Caps for long-running jobs (15-variable solves).
  static Caps slow()
  {
    Caps c;
    c.lattice = 15;
    return c;
  }
};

inline void require_cap( int n, int cap, const char* what )
{
  if ( n > cap )
  {
    throw cap_error( std::string( what ) + ": n=" + std::to_string( n ) + " exceeds cap " + std::to_string( cap ) );
  }
}

/* parallelism ***********************************************************/

/// Worker count from QUERYCX_WORKERS, else the hardware concurrency.
inline unsigned worker_count()
{
  if ( const char* env = std::getenv( "QUERYCX_WORKERS" ) )
  {
    char* end = nullptr;
    const long v = std::strtol( env, &end, 10 );
    if ( end != env && v > 0 )
    {
      return static_cast<unsigned>( v );
    }
  }
  return std::max( 1u, std::thread::hardware_concurrency() );
}

/*! \brief Calls fn(i) for every i in [0, count), split into contiguous chunks.

  fn must only write to state owned by index i; results are therefore
  independent of the worker count.
*/
template<typename Fn>
void parallel_for( std::uint64_t count, Fn&& fn )
{
  const std::uint64_t workers = std::min<std::uint64_t>( worker_count(), count );
  if ( workers <= 1 )
  {
    for ( std::uint64_t i = 0; i < count; ++i )
    {
      fn( i );
    }
    return;
  }

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> failures( workers );
  threads.reserve( workers );
  const std::uint64_t chunk = ( count + workers - 1 ) / workers;
  for ( std::uint64_t w = 0; w < workers; ++w )
  {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min( count, lo + chunk );
    threads.emplace_back( [lo, hi, &fn, &failure = failures[w]] {
      try
      {
        for ( std::uint64_t i = lo; i < hi; ++i )
        {
          fn( i );
        }
      }
      catch ( ... )
      {
        failure = std::current_exception();
      }
    } );
  }
  for ( auto& t : threads )
  {
    t.join();
  }
  for ( const auto& failure : failures )
  {
    if ( failure )
    {
      std::rethrow_exception( failure );
    }
  }
}

} // namespace querycx

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
  \file report.hpp
  \brief MeasureReport: what `querycx measure` prints, as JSON or CSV.
*/

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <querycx/querycx.hpp>

namespace querycx::cli
{

using json = nlohmann::json;

inline json ratio_json( const Ratio& r ) { return json{ { "num", r.num() }, { "den", r.den() } }; }

inline Ratio ratio_from_json( const json& j )
{
  const auto num = j.at( "num" ).get<std::int64_t>(), den = j.at( "den" ).get<std::int64_t>();
  return den == 0 ? Ratio::infinity() : Ratio( num, den );
}

/// Lowercase hex SHA-256 of a byte string.
inline std::string sha256_hex( const std::string& bytes )
{
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if ( EVP_Digest( bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr ) != 1 )
  {
    throw error( "sha256 failed" );
  }
  std::ostringstream out;
  for ( unsigned int i = 0; i < length; ++i )
  {
    out << std::hex << std::setw( 2 ) << std::setfill( '0' ) << static_cast<int>( digest[i] );
  }
  return out.str();
}

/// Table as hex, four inputs per digit: digit k is f(4k) + 2 f(4k+1) + 4 f(4k+2) + 8 f(4k+3).
inline std::string table_hex( const TruthTable& f )
{
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for ( std::uint64_t base = 0; base < f.num_bits(); base += 4 )
  {
    int d = 0;
    for ( int b = 0; b < 4 && base + b < f.num_bits(); ++b )
    {
      d |= f.get( static_cast<Input>( base + b ) ) << b;
    }
    out.push_back( digits[d] );
  }
  return out;
}

/// Quotes a CSV field when it contains a comma or a quote.
inline std::string csv_field( const std::string& s )
{
  if ( s.find_first_of( ",\"" ) == std::string::npos )
  {
    return s;
  }
  std::string out = "\"";
  for ( char c : s )
  {
    out += c == '"' ? std::string( "\"\"" ) : std::string( 1, c );
  }
  return out + "\"";
}

struct TreeResult
{
  std::string name;
  Ratio instc_wrt;
};

struct MeasureReport
{
  json function; ///< descriptor: family and parameters, or file name and digest
  int n = 0;
  std::optional<int> dt, cmin, cmax, degree;
  std::optional<Ratio> instc, instc_upper;
  std::optional<std::string> witness;
  std::vector<TreeResult> trees;
  std::map<std::string, double> timing_ms;

  json to_json( bool with_timing = true ) const
  {
    json j;
    j["function"] = function;
    j["n"] = n;
    json m = json::object();
    if ( dt ) m["dt"] = *dt;
    if ( cmin ) m["cmin"] = *cmin;
    if ( cmax ) m["cmax"] = *cmax;
    if ( degree ) m["degree"] = *degree;
    if ( instc ) m["instc"] = ratio_json( *instc );
    if ( instc_upper ) m["instc_upper"] = ratio_json( *instc_upper );
    j["measures"] = m;
    json t = json::array();
    for ( const auto& tr : trees )
    {
      t.push_back( json{ { "name", tr.name }, { "instc_wrt", ratio_json( tr.instc_wrt ) } } );
    }
    j["trees"] = t;
    if ( witness )
    {
      j["witness"] = *witness;
    }
    if ( with_timing )
    {
      j["timing_ms"] = timing_ms;
    }
    return j;
  }

  static MeasureReport from_json( const json& j )
  {
    MeasureReport r;
    r.function = j.at( "function" );
    r.n = j.at( "n" ).get<int>();
    const auto& m = j.at( "measures" );
    const auto get_int = [&]( const char* key, std::optional<int>& dst ) {
      if ( m.contains( key ) ) dst = m[key].get<int>();
    };
    get_int( "dt", r.dt );
    get_int( "cmin", r.cmin );
    get_int( "cmax", r.cmax );
    get_int( "degree", r.degree );
    if ( m.contains( "instc" ) ) r.instc = ratio_from_json( m["instc"] );
    if ( m.contains( "instc_upper" ) ) r.instc_upper = ratio_from_json( m["instc_upper"] );
    for ( const auto& t : j.at( "trees" ) )
    {
      r.trees.push_back( { t.at( "name" ).get<std::string>(), ratio_from_json( t.at( "instc_wrt" ) ) } );
    }
    if ( j.contains( "witness" ) ) r.witness = j["witness"].get<std::string>();
    if ( j.contains( "timing_ms" ) ) r.timing_ms = j["timing_ms"].get<std::map<std::string, double>>();
    return r;
  }

  static std::string csv_header() { return "function,n,dt,cmin,cmax,degree,instc,instc_upper"; }

  std::string csv_row() const
  {
    std::ostringstream out;
    const auto opt = [&]( const auto& v ) {
      out << ',';
      if ( v ) out << *v;
    };
    out << csv_field( function.at( "name" ).get<std::string>() ) << ',' << n;
    opt( dt );
    opt( cmin );
    opt( cmax );
    opt( degree );
    opt( instc );
    opt( instc_upper );
    return out.str();
  }
};

/// Canonical text of a report: sorted keys, two-space indent, trailing newline.
inline std::string dump( const json& j ) { return j.dump( 2 ) + "\n"; }

/// Wall time of fn() in milliseconds, rounded to microseconds.
template<typename Fn>
double time_ms( Fn&& fn )
{
  const auto start = std::chrono::steady_clock::now();
  fn();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return std::round( elapsed.count() * 1000.0 ) / 1000.0;
}

} // namespace querycx::cli

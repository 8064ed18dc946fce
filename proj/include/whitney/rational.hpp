// Copyright 2026 The Whitney Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace whitney {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// A point of R^n with exact coordinates.
using Point = std::vector<Rational>;

// Parses "p/q" with q > 0. Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

// Canonical reduced "p/q" form, q > 0 ("0/1" for zero, "3/1" for 3).
std::string format_rational(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

Rational dot(const Point& a, const Point& b);

// Rank of a list of vectors of equal length, by exact elimination.
std::size_t rank(std::vector<Point> rows);

// Rank of the differences points[k] - points[0].
std::size_t affine_rank(const std::vector<Point>& points);

}  // namespace whitney

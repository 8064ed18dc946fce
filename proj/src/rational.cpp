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

#include "whitney/rational.hpp"

#include <algorithm>
#include <cctype>

#include "whitney/error.hpp"

namespace whitney {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Simplicial: return "simplicial";
    case ErrorKind::Homology: return "homology";
    case ErrorKind::Calculus: return "calculus";
    case ErrorKind::Classes: return "classes";
    case ErrorKind::Polar: return "polar";
    case ErrorKind::Verify: return "verify";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw Error(ErrorKind::Parse, "invalid rational \"" + std::string(text) + "\": " + why);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return fail("expected p/q");
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = (!num.empty() && num.front() == '-') ? num.substr(1) : num;
  if (!all_digits(num_digits)) return fail("numerator is not an integer");
  if (!all_digits(den)) return fail("denominator is not a positive integer");
  const Integer q{std::string(den)};
  if (q == 0) return fail("zero denominator");
  return Rational(Integer{std::string(num)}, q);
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational dot(const Point& a, const Point& b) {
  Rational sum = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) sum += a[k] * b[k];
  return sum;
}

std::size_t rank(std::vector<Point> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      const Rational factor = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t affine_rank(const std::vector<Point>& points) {
  if (points.size() < 2) return 0;
  std::vector<Point> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t k = 1; k < points.size(); ++k) {
    Point d(points[k].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[k][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

}  // namespace whitney

// Copyright 2026 The lpdm Authors.
//
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

#include <charconv>
#include <string>

#include "lpdm/error.hpp"
#include "lpdm/numeric.hpp"

namespace lpdm {

std::string FormatRational(const Rational& value) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigCount ParseInteger(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ArgumentError("not a rational number: '" + std::string(whole) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigCount(s);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text, text));
  const BigCount num = ParseInteger(text.substr(0, slash), text);
  const BigCount den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigCount Factorial(int n) {
  BigCount out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigCount Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigCount out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace lpdm

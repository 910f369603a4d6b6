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

#ifndef LPDM_NUMERIC_HPP_
#define LPDM_NUMERIC_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lpdm {

using BigCount = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Exact point in Q^n.
using RationalPoint = std::vector<Rational>;

// "p/q" for non-integers, "p" for integers.
std::string FormatRational(const Rational& value);

// Accepts "p", "-p", "p/q"; throws ArgumentError otherwise or on q == 0.
Rational ParseRational(std::string_view text);

BigCount Factorial(int n);
BigCount Binomial(int n, int k);

}  // namespace lpdm

#endif  // LPDM_NUMERIC_HPP_

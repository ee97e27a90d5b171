// Copyright 2026 The indeg Authors.
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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace indeg {

using BigInt = mpz_class;
using Rational = mpq_class;

// Exact conversion of "p/q", "-12", "0.125" or "3e-2" into a rational.
Rational parse_rational(std::string_view text);

// Always "num/den", with den >= 1.
std::string to_string(const Rational& value);

BigInt pow(const BigInt& base, unsigned long exponent);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace indeg

// Copyright 2026 The pathip Authors
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

#ifndef PATHIP_LP_FORMAT_HPP_
#define PATHIP_LP_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pathip/ip_model.hpp"

namespace pathip {

// LP-file identifiers for every variable, indexed by id. Brackets become
// parentheses, other characters outside the LP name alphabet become '_',
// and names that would start with a digit or a period or clash with a
// section keyword gain a '_' prefix. Collisions get a "~id" suffix, so the
// mapping is injective.
std::vector<std::string> lp_names(const IpModel& model);

// Plain-text LP export. Every variable is listed in the Bounds section in id
// order, so parse_lp(export_lp(m)) keeps variable ids. Grammar in
// docs/formats.md.
std::string export_lp(const IpModel& model);

// Reads the subset of the LP format written by export_lp. Throws ParseError.
IpModel parse_lp(std::string_view text);

// Shortest decimal that reads back to the same double.
std::string format_number(double value);

}  // namespace pathip

#endif  // PATHIP_LP_FORMAT_HPP_

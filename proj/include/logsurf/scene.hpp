// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "logsurf/chains.hpp"
#include "logsurf/coeffsets.hpp"
#include "logsurf/surfaces.hpp"

namespace logsurf {

/// Scene JSON:
///   {"base": {"kind": "P2" | "P1xP1" | "F", "n": 1},
///    "curves": [{"name": "L1", "class": {"L": 1}, "stage": 0}],
///    "blowups": [{"at": {"node": ["B1", "B2"]} | {"on": "B2"} | "general", "name": "E1"}],
///    "boundary": {"B1": "1", "B2": "2/3"}}
/// "stage" (default 0) is the number of blow-ups preceding the curve; its
/// class may then mention earlier exceptional classes. Errors name the
/// offending field.
LogPair parse_scene(std::string_view json_text);

/// Inverse of parse_scene; rationals are written as "p/q" strings.
std::string emit_scene(const LogPair& pair);

/// "K+B", or comma separated name:coef terms where name is K, a curve or a
/// base generator.
ClassVector parse_divisor_class(const LogPair& pair, std::string_view text);

/// "2,3,6"; the empty string is the empty chain.
Chain parse_chain(std::string_view text);

/// "i:mult:b,..."; the empty string means no hits.
ChainBoundary parse_hits(std::string_view text);

/// A preset name ("C0", "C1", "C2") or
/// {"finite": ["1/2"], "standard_family": true, "one": true}.
CoeffSet parse_coeffset(std::string_view text);
std::string emit_coeffset(const CoeffSet& set);

}  // namespace logsurf

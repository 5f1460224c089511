// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace logsurf {

/// Malformed data: bad scene fields, out-of-range parameters, unknown names.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical outcome the caller asked about but which blocks the
/// requested computation (not lc, not big, no configuration-supported
/// Zariski decomposition, corollary not applicable).
class MathSignal : public std::runtime_error {
public:
    enum class Kind { NotLogCanonical, NotBig, NoConfigZariski, NotApplicable };

    MathSignal(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

const char* to_string(MathSignal::Kind kind);

}  // namespace logsurf

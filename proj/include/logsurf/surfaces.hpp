// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "logsurf/linalg.hpp"
#include "logsurf/rational.hpp"

namespace logsurf {

enum class BaseKind { ProjectivePlane, QuadricP1xP1, Hirzebruch };

struct BaseSurface {
    BaseKind kind = BaseKind::ProjectivePlane;
    int n = 0;  // only for Hirzebruch

    friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

/// Integral class over the basis (generators, then one total-transform
/// exceptional class per blow-up). Missing trailing entries are zero.
using IntClass = std::vector<std::int64_t>;
/// Rational class over the same basis.
using ClassVector = std::vector<Rational>;
/// Q-divisor supported on named configuration curves. Ordered by name so
/// every traversal is deterministic.
using Divisor = std::map<std::string, Rational>;

struct Node {
    std::string first;
    std::string second;
};
struct OnCurve {
    std::string curve;
};
struct GeneralPoint {};
using PointSpec = std::variant<Node, OnCurve, GeneralPoint>;

struct Curve {
    std::string name;
    IntClass cls;
    std::size_t stage = 0;  // number of blow-ups preceding its creation
    bool exceptional = false;
};

struct BlowupRecord {
    PointSpec at;
    std::string name;
    std::vector<std::string> through;  // curves passing through the centre
};

/// A catalog base surface with a blow-up script and its tracked curves.
///
/// The configuration is simple normal crossing by construction: blow-up
/// centres are nodes of exactly two tracked curves, points on exactly one,
/// or points on none. All pairings are computed from classes.
class SurfaceConfig {
public:
    /// Throws InvalidInput for Hirzebruch with n < 0.
    static SurfaceConfig make_base(BaseKind kind, int n = 0);
    /// "P2", "P1xP1", "F<n>" or "F" with explicit n.
    static SurfaceConfig make_base(std::string_view kind, int n = 0);

    const BaseSurface& base() const { return base_; }
    const std::vector<std::string>& basis() const { return basis_; }
    std::size_t generator_count() const { return generators_; }
    std::size_t stage() const { return blowups_.size(); }
    const std::vector<Curve>& curves() const { return curves_; }
    const std::vector<BlowupRecord>& blowups() const { return blowups_; }
    const IntClass& canonical() const { return canonical_; }

    std::optional<std::size_t> find_curve(std::string_view name) const;
    const Curve& curve(std::string_view name) const;
    std::optional<std::size_t> find_basis(std::string_view name) const;

    /// Adds a named curve. Rejects duplicate names, names of basis classes,
    /// negative pairings with existing curves and classes whose arithmetic
    /// genus would be negative.
    const Curve& add_curve(std::string name, IntClass cls);
    const Curve& add_curve(std::string name, const std::map<std::string, std::int64_t>& by_basis_name);

    /// Blows up the given point and returns the new exceptional curve.
    const Curve& blow_up(const PointSpec& at, std::string name);

    /// Full Gram matrix on the basis.
    Matrix gram() const;

    std::int64_t intersect(const IntClass& a, const IntClass& b) const;
    Rational intersect(const ClassVector& a, const ClassVector& b) const;
    Rational intersect(const ClassVector& a, const IntClass& b) const;

    ClassVector to_rational(const IntClass& c) const;
    ClassVector class_of(const Divisor& d) const;
    ClassVector canonical_class() const { return to_rational(canonical_); }

private:
    BaseSurface base_;
    std::size_t generators_ = 0;
    std::vector<std::string> basis_;
    std::int64_t gen_gram_[2][2] = {{0, 0}, {0, 0}};
    IntClass canonical_;
    std::vector<Curve> curves_;
    std::unordered_map<std::string, std::size_t> curve_index_;
    std::vector<BlowupRecord> blowups_;
};

Rational intersect(const SurfaceConfig& config, const Divisor& a, const Divisor& b);

/// Total transform of a divisor living on the first `stage` blow-ups:
/// each later exceptional curve gets the sum of the coefficients of the
/// curves through its centre. Throws InvalidInput on stage mismatch.
Divisor pullback(const SurfaceConfig& after, const Divisor& d, std::size_t stage);

/// Boundary B_Y with K_Y + B_Y = f^*(K + B): like pullback but each new
/// exceptional coefficient is shifted by -1 (node: b1 + b2 - 1).
Divisor log_pullback(const SurfaceConfig& after, const Divisor& boundary, std::size_t stage);

/// A surface configuration with a boundary on its named curves. Sub-boundaries
/// (coefficients ≤ 0) are allowed so log pull-backs stay representable.
struct LogPair {
    SurfaceConfig surface;
    Divisor boundary;

    /// Throws InvalidInput when the boundary names an unknown curve.
    LogPair(SurfaceConfig s, Divisor b);

    /// All coefficients in (0,1].
    bool is_boundary() const;
    ClassVector log_canonical_class() const;
};

enum class LcVerdict { Klt, Lc, NotLc };
const char* to_string(LcVerdict v);

struct NodeCodiscrepancy {
    std::string first;
    std::string second;
    Rational value;  // b1 + b2 - 1
};

struct LcReport {
    LcVerdict verdict = LcVerdict::Klt;
    std::optional<std::string> witness;
    Rational max_coefficient;
    std::vector<NodeCodiscrepancy> nodes;
    bool nodes_within_bound = true;
};

LcReport lc_check(const LogPair& pair);

struct AccessibleWitness {
    std::string curve;                 // coefficient 1
    std::vector<std::string> meets;    // positive-coefficient boundary curves it meets
};

std::vector<AccessibleWitness> find_accessible_nklt(const LogPair& pair);

struct ZariskiResult {
    ClassVector positive;
    Divisor negative;
    bool config_nef = false;
    bool support_negative_definite = false;
};

/// Zariski decomposition relative to the tracked configuration curves.
/// Throws MathSignal(NoConfigZariski) when the support stops being negative
/// definite or the negative part acquires a negative coefficient.
ZariskiResult zariski(const SurfaceConfig& config, const ClassVector& d);

struct VolumeCertificate {
    bool config_nef = false;
    std::vector<std::string> contracted;  // support of the negative part
    std::vector<std::string> null_curves; // P·C = 0 outside the support
    bool configuration_complete_assumed = true;
    bool ampleness_verified = false;
};

struct VolumeResult {
    Rational value;
    bool big = false;
    VolumeCertificate certificate;
};

/// P² of the configuration Zariski decomposition of K + B. Throws
/// MathSignal(NotLogCanonical) for non-lc pairs; returns big = false when
/// P² ≤ 0.
VolumeResult volume(const LogPair& pair);

}  // namespace logsurf

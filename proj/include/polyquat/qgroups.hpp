#pragma once

// Finite quaternion sets (binary tetrahedral T, its partner set T', the
// binary octahedral O = T u T', the icosians I) and the finite O(4) groups
// assembled from them as pair sets. Groups are stored as explicit sets of
// canonical OrthoMaps, so every claim about them reduces to finite exact
// checks.

#include "polyquat/quat.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace polyquat::qgroups {

using quat::OrthoMap;
using quat::Quaternion;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(std::size_t cap)
        : std::runtime_error("group closure exceeded cap " + std::to_string(cap)) {}
};

/// A finite set of unit quaternions, deduplicated and kept in lexicographic
/// order.
class QuatSet {
public:
    QuatSet() = default;
    QuatSet(std::vector<Quaternion> elements, std::string name);

    const std::vector<Quaternion>& elements() const& { return elements_; }
    /// Rvalue overload returns by value so iterating the elements of a
    /// temporary set is safe (the reference overload would dangle).
    std::vector<Quaternion> elements() && { return std::move(elements_); }
    const std::string& name() const { return name_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Quaternion& q) const { return index_.count(q) > 0; }
    bool is_subset_of(const QuatSet& other) const;
    bool operator==(const QuatSet& other) const { return elements_ == other.elements_; }
    bool operator!=(const QuatSet& other) const { return !(*this == other); }

    /// Elementwise scaling (used for sets like T'/sqrt2).
    QuatSet scaled(const quat::FieldElement& s, std::string name) const;

private:
    std::vector<Quaternion> elements_;
    std::string name_;
    std::unordered_set<Quaternion, quat::QuaternionHash> index_;
};

QuatSet build_T();
QuatSet build_Tprime();
QuatSet build_O();
/// Icosians: multiplicative closure of p = (tau + e1 + sigma e2)/2 and
/// q = (1 + e1 + e2 + e3)/2; 120 elements, containing T.
QuatSet build_I();

struct VSubsets {
    QuatSet v0, vplus, vminus, v1, v2, v3;
};
/// The six 8-element subsets with V0 u V+ u V- = T and V1 u V2 u V3 = T'.
VSubsets v_subsets();

/// {a*b : a in A, b in B}, deduplicated.
QuatSet setprod(const QuatSet& a, const QuatSet& b);

class FiniteGroup {
public:
    FiniteGroup() = default;
    /// Takes an explicit element set; verifies identity membership and
    /// inverse closure. Catalog construction additionally checks that the
    /// BFS closure of the generators reproduces the set exactly.
    FiniteGroup(std::vector<OrthoMap> elements, std::vector<OrthoMap> generators,
                std::string name);

    const std::vector<OrthoMap>& elements() const& { return elements_; }
    std::vector<OrthoMap> elements() && { return std::move(elements_); }
    const std::vector<OrthoMap>& generators() const& { return generators_; }
    std::vector<OrthoMap> generators() && { return std::move(generators_); }
    const std::string& name() const { return name_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const OrthoMap& m) const { return index_.count(m) > 0; }
    bool operator==(const FiniteGroup& o) const { return elements_ == o.elements_; }
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
    std::vector<OrthoMap> elements_;
    std::vector<OrthoMap> generators_;
    std::string name_;
    std::unordered_set<OrthoMap, quat::OrthoMapHash> index_;
};

/// Smallest composition-closed set containing the generators and identity.
/// Deterministic (final ordering is lexicographic on canonical coefficients).
/// Throws CapExceeded if the closure grows past cap.
FiniteGroup closure(const std::vector<OrthoMap>& generators, std::size_t cap,
                    std::string name = "closure");

enum class GroupName {
    WD3,
    AutD3,
    WB3,
    ChiralOct,
    Td,
    Th,
    WD4,
    WD4_mod_C2,
    TT_288,
    Pyr4D_576,
    WF4,
    AutF4,
    WH3,
    WH4,
};

GroupName parse_group_name(std::string_view name);
std::string group_name_str(GroupName name);
const std::vector<GroupName>& all_group_names();

/// Named group built set-theoretically from the quaternion sets and verified
/// against its generators on first use; cached thereafter.
const FiniteGroup& catalog(GroupName name);

/// (H <= G, index |G|/|H|); the index is 0 when H is not a subgroup.
std::pair<bool, std::size_t> is_subgroup(const FiniteGroup& h, const FiniteGroup& g);

/// {m g m^-1 : g in G}.
FiniteGroup conjugate(const FiniteGroup& g, const OrthoMap& m, std::string name);

}  // namespace polyquat::qgroups

#include "polyquat/qgroups.hpp"

#include "polyquat/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace polyquat::qgroups {

using field::FieldElement;
using field::Rational;

namespace {

void sort_unique(std::vector<Quaternion>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<OrthoMap>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

QuatSet::QuatSet(std::vector<Quaternion> elements, std::string name)
    : elements_(std::move(elements)), name_(std::move(name)) {
    sort_unique(elements_);
    index_.insert(elements_.begin(), elements_.end());
}

bool QuatSet::is_subset_of(const QuatSet& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Quaternion& q) { return other.contains(q); });
}

QuatSet QuatSet::scaled(const FieldElement& s, std::string name) const {
    std::vector<Quaternion> out;
    out.reserve(elements_.size());
    for (const auto& q : elements_) out.push_back(q * s);
    return {std::move(out), std::move(name)};
}

QuatSet build_T() {
    std::vector<Quaternion> out;
    for (int s : {1, -1}) {
        out.push_back(Quaternion::one() * FieldElement(s));
        out.push_back(Quaternion::e1() * FieldElement(s));
        out.push_back(Quaternion::e2() * FieldElement(s));
        out.push_back(Quaternion::e3() * FieldElement(s));
    }
    const Rational half(1, 2);
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    out.emplace_back(Rational(s0) * half, Rational(s1) * half,
                                     Rational(s2) * half, Rational(s3) * half);
    return {std::move(out), "T"};
}

QuatSet build_Tprime() {
    const FieldElement h = FieldElement(Rational(1, 2)) * FieldElement::sqrt2();
    std::vector<Quaternion> out;
    // All (u_i +- u_j)/sqrt2 with {i, j} = {0,1}, {2,3}, {0,2}, {3,1}, {0,3}, {1,2}.
    const Quaternion units[4] = {Quaternion::one(), Quaternion::e1(), Quaternion::e2(),
                                 Quaternion::e3()};
    const int pairs[6][2] = {{0, 1}, {2, 3}, {0, 2}, {3, 1}, {0, 3}, {1, 2}};
    for (const auto& pr : pairs)
        for (int si : {1, -1})
            for (int sj : {1, -1})
                out.push_back((units[pr[0]] * FieldElement(si) +
                               units[pr[1]] * FieldElement(sj)) *
                              h);
    return {std::move(out), "T'"};
}

QuatSet build_O() {
    auto t = build_T().elements();
    auto tp = build_Tprime().elements();
    t.insert(t.end(), tp.begin(), tp.end());
    return {std::move(t), "O"};
}

namespace {

// p = (tau + e1 + sigma e2)/2 and q = (1 + e1 + e2 + e3)/2 generate the
// binary icosahedral group.
Quaternion icosian_p() {
    const Rational half(1, 2);
    return {FieldElement(half) * FieldElement::tau(), FieldElement(half),
            FieldElement(half) * FieldElement::sigma(), FieldElement(0)};
}

Quaternion icosian_q() {
    const Rational half(1, 2);
    return {FieldElement(half), FieldElement(half), FieldElement(half),
            FieldElement(half)};
}

}  // namespace

QuatSet build_I() {
    Quaternion p = icosian_p();
    Quaternion q = icosian_q();
    // Multiplicative closure of {p, q}.
    std::vector<Quaternion> elements = {Quaternion::one()};
    std::unordered_set<Quaternion, quat::QuaternionHash> seen(elements.begin(),
                                                              elements.end());
    std::vector<Quaternion> frontier = elements;
    const std::vector<Quaternion> gens = {p, q};
    while (!frontier.empty()) {
        std::vector<Quaternion> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                Quaternion prod = f * g;
                if (seen.insert(prod).second) {
                    elements.push_back(prod);
                    next.push_back(prod);
                }
            }
        if (elements.size() > 240) throw CapExceeded(240);
        frontier = std::move(next);
    }
    return {std::move(elements), "I"};
}

VSubsets v_subsets() {
    auto has_even_minus_half = [](const Quaternion& q) {
        int minus = 0;
        for (const FieldElement* c : {&q.q0, &q.q1, &q.q2, &q.q3})
            if (c->sign() < 0) ++minus;
        return minus % 2 == 0;
    };
    const QuatSet t = build_T();
    const QuatSet tp = build_Tprime();
    std::vector<Quaternion> v0, vp, vm;
    for (const auto& q : t.elements()) {
        if (q.q0 == FieldElement(Rational(1, 2)) || q.q0 == FieldElement(Rational(-1, 2)))
            (has_even_minus_half(q) ? vp : vm).push_back(q);
        else
            v0.push_back(q);
    }
    auto axis_pair = [](const Quaternion& q, int i) {
        // True when q = (u_i +- u_j)/sqrt2 involves unit i.
        const FieldElement* c[4] = {&q.q0, &q.q1, &q.q2, &q.q3};
        return !c[i]->is_zero();
    };
    std::vector<Quaternion> v1, v2, v3;
    for (const auto& q : tp.elements()) {
        // V1: (1,e1) and (e2,e3) pairs; V2: (1,e2) and (e3,e1); V3: (1,e3) and (e1,e2).
        bool s = !q.q0.is_zero();
        if ((s && axis_pair(q, 1)) || (!s && axis_pair(q, 2) && axis_pair(q, 3)))
            v1.push_back(q);
        else if ((s && axis_pair(q, 2)) || (!s && axis_pair(q, 3) && axis_pair(q, 1)))
            v2.push_back(q);
        else
            v3.push_back(q);
    }
    return {QuatSet(std::move(v0), "V0"),    QuatSet(std::move(vp), "V+"),
            QuatSet(std::move(vm), "V-"),    QuatSet(std::move(v1), "V1"),
            QuatSet(std::move(v2), "V2"),    QuatSet(std::move(v3), "V3")};
}

QuatSet setprod(const QuatSet& a, const QuatSet& b) {
    auto products = kernels::pairwise_products_omp(a.elements(), b.elements());
    return {std::move(products), a.name() + "*" + b.name()};
}

FiniteGroup::FiniteGroup(std::vector<OrthoMap> elements, std::vector<OrthoMap> generators,
                         std::string name)
    : elements_(std::move(elements)),
      generators_(std::move(generators)),
      name_(std::move(name)) {
    sort_unique(elements_);
    index_.insert(elements_.begin(), elements_.end());
    if (!contains(OrthoMap::identity()))
        throw std::logic_error("group " + name_ + " lacks the identity");
    for (const auto& m : elements_)
        if (!contains(m.inverse()))
            throw std::logic_error("group " + name_ + " not closed under inverse");
}

FiniteGroup closure(const std::vector<OrthoMap>& generators, std::size_t cap,
                    std::string name) {
    std::vector<OrthoMap> elements = {OrthoMap::identity()};
    std::unordered_set<OrthoMap, quat::OrthoMapHash> seen(elements.begin(), elements.end());
    std::vector<OrthoMap> frontier = elements;
    while (!frontier.empty()) {
        auto products = kernels::compose_frontier_omp(frontier, generators);
        std::vector<OrthoMap> next;
        for (auto& m : products) {
            if (seen.insert(m).second) {
                elements.push_back(m);
                next.push_back(std::move(m));
            }
        }
        if (elements.size() > cap) throw CapExceeded(cap);
        frontier = std::move(next);
    }
    return {std::move(elements), generators, std::move(name)};
}

namespace {

// Pair families used throughout the catalog.

std::vector<OrthoMap> pairs_conj(const QuatSet& set, bool negate) {
    std::vector<OrthoMap> out;
    out.reserve(set.size());
    for (const auto& t : set.elements())
        out.emplace_back(t, negate ? -t.conj() : t.conj(), false);
    return out;
}

void append_pairs(std::vector<OrthoMap>& out, const QuatSet& a, const QuatSet& b,
                  bool star) {
    for (const auto& p : a.elements())
        for (const auto& q : b.elements()) out.emplace_back(p, q, star);
}

struct DiagramGenerators {
    std::vector<OrthoMap> d3;  // vector forms of Eq. 14
    std::vector<OrthoMap> b3;  // vector forms of Eq. 24
    std::vector<OrthoMap> d4;  // star maps of Eq. 49
};

const DiagramGenerators& diagram_generators() {
    static const DiagramGenerators gens = [] {
        DiagramGenerators g;
        const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(),
                         e3 = Quaternion::e3(), one = Quaternion::one();
        for (const Quaternion& root : {e1 - e2, e2 - e3, e2 + e3})
            g.d3.push_back(quat::reflection_map(root).vector_form());
        for (const Quaternion& root : {e1 - e2, e2 - e3, e3})
            g.b3.push_back(quat::reflection_map(root).vector_form());
        for (const Quaternion& root : {one - e1, e1 - e2, e2 - e3, e2 + e3})
            g.d4.push_back(quat::reflection_map(root));
        return g;
    }();
    return gens;
}

// Extra generators for the D4-derived chain (Eqs. 52-53).
OrthoMap s3_rotation_generator() {
    const Rational h(1, 2);
    Quaternion p{FieldElement(h), FieldElement(h), FieldElement(-h), FieldElement(-h)};
    Quaternion q{FieldElement(h), FieldElement(-h), FieldElement(h), FieldElement(-h)};
    return {p, q, false};
}

OrthoMap s3_star_generator() { return {Quaternion::e3(), -Quaternion::e3(), true}; }

FiniteGroup make_group(std::vector<OrthoMap> elements, std::vector<OrthoMap> generators,
                       std::string name, bool verify) {
    FiniteGroup group(std::move(elements), generators, name);
    if (verify && !generators.empty()) {
        FiniteGroup generated = closure(generators, 2 * group.order() + 8, name);
        if (generated != group)
            throw std::logic_error("catalog group " + name +
                                   " does not match the closure of its generators");
    }
    return group;
}

FiniteGroup build_catalog_group(GroupName name) {
    const auto& gens = diagram_generators();
    const QuatSet t = build_T();
    const QuatSet tp = build_Tprime();
    std::vector<OrthoMap> elements;
    std::vector<OrthoMap> generators;
    switch (name) {
        case GroupName::WD3:
        case GroupName::Td: {
            elements = pairs_conj(t, false);
            auto refl = pairs_conj(tp, true);
            elements.insert(elements.end(), refl.begin(), refl.end());
            generators = gens.d3;
            break;
        }
        case GroupName::AutD3:
        case GroupName::WB3: {
            for (bool neg : {false, true}) {
                auto part = pairs_conj(t, neg);
                elements.insert(elements.end(), part.begin(), part.end());
                part = pairs_conj(tp, neg);
                elements.insert(elements.end(), part.begin(), part.end());
            }
            generators = gens.b3;
            break;
        }
        case GroupName::ChiralOct: {
            elements = pairs_conj(t, false);
            auto rot = pairs_conj(tp, false);
            elements.insert(elements.end(), rot.begin(), rot.end());
            generators = {gens.b3[0] * gens.b3[1], gens.b3[0] * gens.b3[2]};
            break;
        }
        case GroupName::Th: {
            elements = pairs_conj(t, false);
            auto inv = pairs_conj(t, true);
            elements.insert(elements.end(), inv.begin(), inv.end());
            generators = {gens.d3[0] * gens.d3[1], gens.d3[0] * gens.d3[2],
                          gens.b3[2]};
            break;
        }
        case GroupName::WD4: {
            auto v = v_subsets();
            append_pairs(elements, v.v0, v.v0, false);
            append_pairs(elements, v.vplus, v.vminus, false);
            append_pairs(elements, v.vminus, v.vplus, false);
            append_pairs(elements, v.v1, v.v1, true);
            append_pairs(elements, v.v2, v.v2, true);
            append_pairs(elements, v.v3, v.v3, true);
            generators = gens.d4;
            break;
        }
        case GroupName::WD4_mod_C2: {
            auto v = v_subsets();
            append_pairs(elements, v.v0, v.v0, false);
            append_pairs(elements, v.vplus, v.vminus, false);
            append_pairs(elements, v.vminus, v.vplus, false);
            generators = {gens.d4[1] * gens.d4[0], gens.d4[1] * gens.d4[2],
                          gens.d4[1] * gens.d4[3]};
            break;
        }
        case GroupName::TT_288: {
            append_pairs(elements, t, t, false);
            generators = {gens.d4[1] * gens.d4[0], gens.d4[1] * gens.d4[2],
                          gens.d4[1] * gens.d4[3], s3_rotation_generator()};
            break;
        }
        case GroupName::Pyr4D_576: {
            append_pairs(elements, t, t, false);
            append_pairs(elements, t, t, true);
            generators = {gens.d4[1] * gens.d4[0], gens.d4[1] * gens.d4[2],
                          gens.d4[1] * gens.d4[3], s3_rotation_generator(),
                          s3_star_generator()};
            break;
        }
        case GroupName::WF4: {
            append_pairs(elements, t, t, false);
            append_pairs(elements, t, t, true);
            append_pairs(elements, tp, tp, false);
            append_pairs(elements, tp, tp, true);
            const Quaternion root =
                (Quaternion::one() + Quaternion::e1()) *
                (FieldElement(Rational(1, 2)) * FieldElement::sqrt2());
            generators = {gens.d4[1] * gens.d4[0], gens.d4[1] * gens.d4[2],
                          gens.d4[1] * gens.d4[3], s3_rotation_generator(),
                          s3_star_generator(), OrthoMap(root, root, false)};
            break;
        }
        case GroupName::AutF4: {
            const QuatSet o = build_O();
            append_pairs(elements, o, o, false);
            append_pairs(elements, o, o, true);
            const Quaternion root =
                (Quaternion::one() + Quaternion::e1()) *
                (FieldElement(Rational(1, 2)) * FieldElement::sqrt2());
            generators = {gens.d4[1] * gens.d4[0], gens.d4[1] * gens.d4[2],
                          gens.d4[1] * gens.d4[3], s3_rotation_generator(),
                          s3_star_generator(), OrthoMap(root, root, false),
                          OrthoMap(Quaternion::one(), root, false)};
            break;
        }
        case GroupName::WH3: {
            const QuatSet i = build_I();
            elements = pairs_conj(i, false);
            auto inv = pairs_conj(i, true);
            elements.insert(elements.end(), inv.begin(), inv.end());
            Quaternion p = icosian_p();
            Quaternion q = icosian_q();
            generators = {OrthoMap(p, p.conj(), false), OrthoMap(q, q.conj(), false),
                          OrthoMap(Quaternion::one(), -Quaternion::one(), false)};
            break;
        }
        case GroupName::WH4: {
            const QuatSet i = build_I();
            append_pairs(elements, i, i, false);
            append_pairs(elements, i, i, true);
            Quaternion p = icosian_p();
            Quaternion q = icosian_q();
            generators = {OrthoMap(p, Quaternion::one(), false),
                          OrthoMap(Quaternion::one(), p, false),
                          OrthoMap(q, Quaternion::one(), false),
                          OrthoMap(Quaternion::one(), q, false),
                          OrthoMap(Quaternion::one(), Quaternion::one(), true)};
            break;
        }
    }
    return make_group(std::move(elements), std::move(generators), group_name_str(name),
                      /*verify=*/true);
}

}  // namespace

GroupName parse_group_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    static const std::map<std::string, GroupName, std::less<>> names = {
        {"wd3", GroupName::WD3},
        {"autd3", GroupName::AutD3},
        {"wb3", GroupName::WB3},
        {"chiraloct", GroupName::ChiralOct},
        {"td", GroupName::Td},
        {"th", GroupName::Th},
        {"wd4", GroupName::WD4},
        {"wd4_mod_c2", GroupName::WD4_mod_C2},
        {"tt288", GroupName::TT_288},
        {"pyr4d576", GroupName::Pyr4D_576},
        {"wf4", GroupName::WF4},
        {"autf4", GroupName::AutF4},
        {"wh3", GroupName::WH3},
        {"wh4", GroupName::WH4},
    };
    auto it = names.find(lower);
    if (it == names.end())
        throw std::invalid_argument("unknown group name: " + std::string(name));
    return it->second;
}

std::string group_name_str(GroupName name) {
    switch (name) {
        case GroupName::WD3: return "wd3";
        case GroupName::AutD3: return "autd3";
        case GroupName::WB3: return "wb3";
        case GroupName::ChiralOct: return "chiraloct";
        case GroupName::Td: return "td";
        case GroupName::Th: return "th";
        case GroupName::WD4: return "wd4";
        case GroupName::WD4_mod_C2: return "wd4_mod_c2";
        case GroupName::TT_288: return "tt288";
        case GroupName::Pyr4D_576: return "pyr4d576";
        case GroupName::WF4: return "wf4";
        case GroupName::AutF4: return "autf4";
        case GroupName::WH3: return "wh3";
        case GroupName::WH4: return "wh4";
    }
    throw std::logic_error("unreachable");
}

const std::vector<GroupName>& all_group_names() {
    static const std::vector<GroupName> names = {
        GroupName::WD3,       GroupName::AutD3,   GroupName::WB3,
        GroupName::ChiralOct, GroupName::Td,      GroupName::Th,
        GroupName::WD4,       GroupName::WD4_mod_C2, GroupName::TT_288,
        GroupName::Pyr4D_576, GroupName::WF4,     GroupName::AutF4,
        GroupName::WH3,       GroupName::WH4,
    };
    return names;
}

const FiniteGroup& catalog(GroupName name) {
    static std::map<GroupName, FiniteGroup> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_catalog_group(name)).first;
    return it->second;
}

std::pair<bool, std::size_t> is_subgroup(const FiniteGroup& h, const FiniteGroup& g) {
    for (const auto& m : h.elements())
        if (!g.contains(m)) return {false, 0};
    return {true, g.order() / h.order()};
}

FiniteGroup conjugate(const FiniteGroup& g, const OrthoMap& m, std::string name) {
    std::vector<OrthoMap> out;
    out.reserve(g.order());
    OrthoMap minv = m.inverse();
    for (const auto& el : g.elements()) out.push_back(m * el * minv);
    return {std::move(out), {}, std::move(name)};
}

}  // namespace polyquat::qgroups

#pragma once

// Constructors and metadata for every graph family of the characterization:
// the Plesnik families K_{1,n}, K_{2,n}, C_5(m,n); the bicliques K_{3,3} and
// K_{3,4} with their subdivided variants K_{3,3}(t), K_{3,4}(t); the seven
// fixed exceptional graphs; and the auxiliary graphs F_0..F_3.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppg2/graph.hpp"

namespace ppg2 {

enum class FamilyKind {
    star,       // K_{1,n}, n >= 2
    biclique2,  // K_{2,n}, n >= 2
    c5_attach,  // C_5(m,n), m,n >= 0
    k33,
    k34,
    k33_sub,  // K_{3,3}(t), t >= 1
    k34_sub,  // K_{3,4}(t), t >= 1
    special,
    aux,
};

enum class SpecialGraph { p10, w8, w8_plus, m11, m11_minus, m11_eq, k34_star };
enum class AuxGraph { f0, f1, f2, f3 };

struct FamilySpec {
    FamilyKind kind{};
    int m = 0;  // first C_5 parameter
    int n = 0;  // star/biclique2/subdivision parameter; second C_5 parameter
    SpecialGraph special{};
    AuxGraph aux{};

    static FamilySpec star(int n) { return {FamilyKind::star, 0, n, {}, {}}; }
    static FamilySpec biclique2(int n) { return {FamilyKind::biclique2, 0, n, {}, {}}; }
    static FamilySpec c5_attach(int m, int n) { return {FamilyKind::c5_attach, m, n, {}, {}}; }
    static FamilySpec k33() { return {FamilyKind::k33, 0, 0, {}, {}}; }
    static FamilySpec k34() { return {FamilyKind::k34, 0, 0, {}, {}}; }
    static FamilySpec k33_sub(int t) { return {FamilyKind::k33_sub, 0, t, {}, {}}; }
    static FamilySpec k34_sub(int t) { return {FamilyKind::k34_sub, 0, t, {}, {}}; }
    static FamilySpec fixed(SpecialGraph s) { return {FamilyKind::special, 0, 0, s, {}}; }
    static FamilySpec fixed(AuxGraph a) { return {FamilyKind::aux, 0, 0, {}, a}; }

    bool operator==(const FamilySpec&) const = default;
};

// Builds the family member; throws ParamError outside the documented ranges
// or when the construction would exceed the order cap.
Graph construct(const FamilySpec& spec);

// (order, size) of construct(spec), from the closed-form counts.
std::pair<int, int> order_and_size(const FamilySpec& spec);

// Every non-aux spec whose construction has exactly k vertices, with
// C_5(m,n) normalized to m <= n.  Order: fixed specials, star, biclique2,
// K_{3,3}, K_{3,4}, K_{3,3}(t), K_{3,4}(t), then the C_5 sweep; this is the
// match precedence used by the classifier.
std::vector<FamilySpec> all_members_with_order(int k);

// CLI-facing names: "k1n:<n>", "k2n:<n>", "c5:<m>,<n>", "k33", "k34",
// "k33s:<t>", "k34s:<t>", "p10", "w8", "w8p", "m11", "m11m", "m11e",
// "k34star", "f0".."f3".
std::string to_string(const FamilySpec& spec);
std::optional<FamilySpec> parse_family(std::string_view name);

}  // namespace ppg2

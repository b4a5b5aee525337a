#pragma once

// Recognizer for triangle-free projective-planar graphs of diameter 2:
// either the input is out of scope, or it is isomorphic to a catalog family
// (with witness), or it carries a forbidden-minor certificate.  Also the
// exact domination number.

#include <optional>
#include <variant>
#include <vector>

#include "ppg2/catalog.hpp"
#include "ppg2/graph.hpp"
#include "ppg2/minor.hpp"

namespace ppg2 {

enum class RejectReason { disconnected, has_triangle, wrong_diameter };

struct OutOfScope {
    RejectReason reason;
};

struct Member {
    FamilySpec family;
    std::vector<int> iso_witness;  // input vertex -> construct(family) vertex
};

struct NonMember {
    Obstruction obstruction;
    MinorModel certificate;
};

using Classification = std::variant<OutOfScope, Member, NonMember>;

// Scope gate order: disconnected, has_triangle, wrong_diameter.  Family
// matching runs up to the order cap; the certificate path obeys
// limits.max_host_order and throws SizeBoundError past it.  Throws
// CharacterizationError if an in-scope graph neither matches a family nor
// contains an obstruction (never observed; the verifier reports it).
Classification classify(const Graph& g, const MinorLimits& limits = {});

bool is_pp2_member(const Graph& g, const MinorLimits& limits = {});

struct DominationResult {
    int gamma = 0;
    std::vector<int> witness;  // lexicographically least at the minimum size
};

// Exact domination number by iterative deepening over subset sizes.
// Requires a connected graph of order <= 32.
DominationResult domination_number(const Graph& g);

std::string_view reject_reason_name(RejectReason r);

}  // namespace ppg2

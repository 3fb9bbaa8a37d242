#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucdmerge/matcher.hpp"
#include "ucdmerge/ontology.hpp"

namespace ucdmerge {

enum class RuleId { Cycle, RedundantSubsumption, MultipleCorrespondence };
enum class Severity { Reject, Warn };

std::string to_string(RuleId id);
std::string to_string(Severity severity);

struct ValidationRule {
    RuleId id = RuleId::Cycle;
    Severity severity = Severity::Reject;

    bool operator==(const ValidationRule&) const = default;
};

// Cycle and MultipleCorrespondence reject (and repair) by default;
// RedundantSubsumption only warns unless reconfigured.
std::vector<ValidationRule> default_rules();

struct Violation {
    RuleId rule = RuleId::Cycle;
    std::vector<Mapping> involved;  // never empty
    std::string explanation;
    // Set when the violation was repaired by removing one mapping; empty for
    // warn-level findings, which are reported without touching the set.
    std::optional<Mapping> dropped;

    bool operator==(const Violation&) const = default;
};

struct ValidatedMappings {
    MappingSet accepted;
    std::vector<Violation> violations;
};

// True iff a directed path of Inheritance edges leads from x to y, i.e. x is
// a (possibly indirect) subclass of y. Not reflexive. Throws
// std::invalid_argument when either label is not a concept of o.
bool subsumes(const Ontology& o, const std::string& x, const std::string& y);

// One violation per mapping pair {(A,M),(B,O)} where A is below B on the left
// while O is below M on the right: unifying both pairs would close an
// inheritance cycle.
std::vector<Violation> detect_cycles(const MappingSet& m, const Ontology& o1, const Ontology& o2);

// One violation per mapping pair {(A,M),(B,N)} where B is a direct subclass
// of A on the left while N sits below M only indirectly (path of length >= 2,
// no direct edge) on the right: unification makes the direct edge redundant.
std::vector<Violation> detect_redundant_subsumption(const MappingSet& m, const Ontology& o1, const Ontology& o2);

// One violation per concept that takes part in more than one mapping.
std::vector<Violation> detect_multiple_correspondence(const MappingSet& m);

// Cycle detection over the merged inheritance digraph (mapped pairs unified,
// edges from both sides kept). Catches cycles that run through three or more
// mappings, which the pairwise pattern of detect_cycles cannot see. One
// violation per strongly connected component that contains at least one
// mapping; components made only of unmapped concepts reflect a cycle already
// present in one input and are not reported.
std::vector<Violation> detect_merged_cycles(const MappingSet& m, const Ontology& o1, const Ontology& o2);

// Applies the active rules to m. Reject rules run to a fixpoint: the first
// violation (rules in id order, then involved-mapping order) is repaired by
// dropping its lowest-scored mapping (tie: the one whose left label sorts
// later, then right label later) and detection restarts. Warn rules are
// reported once against the surviving set. Throws std::invalid_argument when
// a rule id appears twice.
ValidatedMappings validate(const MappingSet& m, const Ontology& o1, const Ontology& o2,
                           const std::vector<ValidationRule>& rules = default_rules());

}  // namespace ucdmerge

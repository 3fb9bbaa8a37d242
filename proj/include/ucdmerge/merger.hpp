#pragma once

#include <map>
#include <string>
#include <vector>

#include "ucdmerge/diagram.hpp"
#include "ucdmerge/validator.hpp"

namespace ucdmerge {

enum class HomonymPolicy { QualifyWithDiagramName };
enum class SynonymPolicy { KeepLeftLabel, KeepRightLabel };
enum class AttributeMergePolicy { UnionByName };

struct ConflictCatalog {
    HomonymPolicy homonym = HomonymPolicy::QualifyWithDiagramName;
    SynonymPolicy synonym = SynonymPolicy::KeepLeftLabel;
    AttributeMergePolicy attributes = AttributeMergePolicy::UnionByName;

    bool operator==(const ConflictCatalog&) const = default;
};

enum class ActionKind {
    UnifiedSynonyms,      // mapped pair collapsed into one class
    RenamedHomonym,       // unmapped class qualified to dodge a label clash
    CopiedUnmapped,       // unmapped class carried over unchanged
    AttributeTypeClash,   // same attribute name, different types; left type kept
    RelationKindConflict  // same unified endpoints related differently per side
};

std::string to_string(ActionKind kind);
std::string to_string(SynonymPolicy policy);

struct ResolutionAction {
    ActionKind kind = ActionKind::CopiedUnmapped;
    std::vector<std::string> subjects;  // the labels (and kinds) involved
    std::string result;                 // a class label present in the output

    bool operator==(const ResolutionAction&) const = default;
};

enum class OriginSet { Left, Right, Both };

std::string to_string(OriginSet origin);

struct IntegratedModel {
    ClassDiagram diagram;
    std::map<std::string, OriginSet> provenance;  // keyed by final class label
    std::vector<ResolutionAction> actions;
};

// Combines two diagrams under a validated mapping set: each accepted mapping
// yields one unified class (label per synonym policy, attributes united by
// name), unmapped classes are copied (qualified as
// "<diagram name>.<label>" when their label would clash), and relationships
// are united with endpoints rewritten through the unification. Throws
// std::invalid_argument when a mapping references a class absent from either
// diagram or when the accepted set is not injective.
IntegratedModel integrate(const ClassDiagram& left, const ClassDiagram& right, const ValidatedMappings& cov,
                          const ConflictCatalog& catalog = {});

// Left fold of integrate: covs[k] relates the running result to
// diagrams[k + 1], so covs must hold exactly diagrams.size() - 1 entries.
// A single diagram folds to itself with no actions.
IntegratedModel integrate_n(const std::vector<ClassDiagram>& diagrams, const std::vector<ValidatedMappings>& covs,
                            const ConflictCatalog& catalog = {});

}  // namespace ucdmerge

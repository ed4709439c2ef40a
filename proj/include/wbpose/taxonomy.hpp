#pragma once

// The whole-body support-pose taxonomy: 46 classes in three categories
// (standing, kneeling, resting) plus the flight pseudo-class "0.0".
//
// A class is identified by the multiset of its limb supports, side-symmetry
// collapsed. Standing and kneeling classes are connected by an edge whenever
// their support multisets differ by exactly one contact added, removed, or
// retyped on the same limb; resting classes declare no transitions.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wbpose/errors.hpp"

namespace wbpose {

enum class ContactType { Hold, Palm, ArmLine, Foot, Knee };
enum class ContactModel { PointWithFriction, LineWithFriction, Plane, Bilateral };
enum class LimbClass { Arm, Leg };
enum class Category { Standing, Kneeling, Resting, Pseudo };
enum class RestingTier { Balance, Friction, Rest };

/// The mechanical idealization each contact type carries.
inline ContactModel contact_model_for(ContactType t) {
    switch (t) {
        case ContactType::Hold: return ContactModel::Bilateral;
        case ContactType::Palm: return ContactModel::Plane;
        case ContactType::ArmLine: return ContactModel::LineWithFriction;
        case ContactType::Foot: return ContactModel::Plane;
        case ContactType::Knee: return ContactModel::PointWithFriction;
    }
    throw Error("unreachable contact type");
}

inline LimbClass limb_of(ContactType t) {
    switch (t) {
        case ContactType::Hold:
        case ContactType::Palm:
        case ContactType::ArmLine: return LimbClass::Arm;
        case ContactType::Foot:
        case ContactType::Knee: return LimbClass::Leg;
    }
    throw Error("unreachable contact type");
}

inline bool admissible(LimbClass limb, ContactType contact) {
    return limb_of(contact) == limb;
}

inline std::string to_string(ContactType t) {
    switch (t) {
        case ContactType::Hold: return "Hold";
        case ContactType::Palm: return "Palm";
        case ContactType::ArmLine: return "ArmLine";
        case ContactType::Foot: return "Foot";
        case ContactType::Knee: return "Knee";
    }
    throw Error("unreachable contact type");
}

inline std::string to_string(LimbClass l) {
    return l == LimbClass::Arm ? "Arm" : "Leg";
}

inline std::string to_string(ContactModel m) {
    switch (m) {
        case ContactModel::PointWithFriction: return "PointWithFriction";
        case ContactModel::LineWithFriction: return "LineWithFriction";
        case ContactModel::Plane: return "Plane";
        case ContactModel::Bilateral: return "Bilateral";
    }
    throw Error("unreachable contact model");
}

inline std::string to_string(Category c) {
    switch (c) {
        case Category::Standing: return "standing";
        case Category::Kneeling: return "kneeling";
        case Category::Resting: return "resting";
        case Category::Pseudo: return "pseudo";
    }
    throw Error("unreachable category");
}

inline std::string to_string(RestingTier t) {
    switch (t) {
        case RestingTier::Balance: return "balance";
        case RestingTier::Friction: return "friction";
        case RestingTier::Rest: return "rest";
    }
    throw Error("unreachable tier");
}

inline ContactType contact_type_from(std::string_view s) {
    if (s == "Hold") return ContactType::Hold;
    if (s == "Palm") return ContactType::Palm;
    if (s == "ArmLine") return ContactType::ArmLine;
    if (s == "Foot") return ContactType::Foot;
    if (s == "Knee") return ContactType::Knee;
    throw SchemaError("unknown contact type: " + std::string(s));
}

inline LimbClass limb_class_from(std::string_view s) {
    if (s == "Arm") return LimbClass::Arm;
    if (s == "Leg") return LimbClass::Leg;
    throw SchemaError("unknown limb class: " + std::string(s));
}

inline Category category_from(std::string_view s) {
    if (s == "standing") return Category::Standing;
    if (s == "kneeling") return Category::Kneeling;
    if (s == "resting") return Category::Resting;
    if (s == "pseudo") return Category::Pseudo;
    throw SchemaError("unknown category: " + std::string(s));
}

inline RestingTier tier_from(std::string_view s) {
    if (s == "balance") return RestingTier::Balance;
    if (s == "friction") return RestingTier::Friction;
    if (s == "rest") return RestingTier::Rest;
    throw SchemaError("unknown tier: " + std::string(s));
}

/// One limb contact in a support multiset.
struct LimbSupport {
    LimbClass limb;
    ContactType contact;

    auto operator<=>(const LimbSupport&) const = default;
};

/// The side-collapsed support multiset of a pose class. Canonical form keeps
/// the entries sorted, which makes the side collapse idempotent.
struct SupportSpec {
    std::vector<LimbSupport> supports;
    bool torso_contact = false;

    void canonicalize() { std::sort(supports.begin(), supports.end()); }

    SupportSpec canonical() const {
        SupportSpec c = *this;
        c.canonicalize();
        return c;
    }

    bool operator==(const SupportSpec& o) const {
        return torso_contact == o.torso_contact && canonical().supports == o.canonical().supports;
    }

    size_t count(LimbClass limb) const {
        size_t n = 0;
        for (const auto& s : supports) n += (s.limb == limb);
        return n;
    }

    size_t count(ContactType t) const {
        size_t n = 0;
        for (const auto& s : supports) n += (s.contact == t);
        return n;
    }

    bool admissible_spec() const {
        for (const auto& s : supports)
            if (!admissible(s.limb, s.contact)) return false;
        return count(LimbClass::Arm) <= 2 && count(LimbClass::Leg) <= 2;
    }

    std::string describe() const {
        std::string out = "{";
        for (size_t i = 0; i < supports.size(); ++i) {
            if (i) out += ",";
            out += to_string(supports[i].limb) + ":" + to_string(supports[i].contact);
        }
        out += torso_contact ? "}+torso" : "}";
        return out;
    }
};

inline SupportSpec make_spec(std::initializer_list<ContactType> contacts, bool torso = false) {
    SupportSpec spec;
    for (ContactType t : contacts) spec.supports.push_back({limb_of(t), t});
    spec.torso_contact = torso;
    spec.canonicalize();
    return spec;
}

struct SupportClass {
    std::string id;
    Category category = Category::Standing;
    SupportSpec spec;
    std::vector<std::string> neighbors;       // sorted by id
    std::set<std::string> cross_category;     // neighbors in a different category
    std::optional<RestingTier> tier;
};

struct TaxonomyGraph {
    std::map<std::string, SupportClass> classes;

    const SupportClass* find(const std::string& id) const {
        auto it = classes.find(id);
        return it == classes.end() ? nullptr : &it->second;
    }

    const SupportClass& require(const std::string& id) const {
        const SupportClass* c = find(id);
        if (!c) throw UnknownId("unknown class id: " + id);
        return *c;
    }

    size_t count(Category cat) const {
        size_t n = 0;
        for (const auto& [_, c] : classes) n += (c.category == cat);
        return n;
    }
};

struct ValidationReport {
    size_t standing = 0;
    size_t kneeling = 0;
    size_t resting = 0;
    size_t class_count = 0;  // pseudo-class excluded
    size_t edge_count = 0;   // undirected
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// -- One-change rule -----------------------------------------------------

namespace detail {

// Multiset difference a \ b of canonical support lists.
inline std::vector<LimbSupport> multiset_minus(const std::vector<LimbSupport>& a,
                                               const std::vector<LimbSupport>& b) {
    std::vector<LimbSupport> out;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    return out;
}

}  // namespace detail

/// True when `a` and `b` differ by exactly one contact added, removed, or
/// retyped on the same limb (the taxonomy's transition rule).
inline bool one_change_apart(const SupportSpec& a, const SupportSpec& b) {
    if (a.torso_contact != b.torso_contact) return false;
    const auto ca = a.canonical().supports;
    const auto cb = b.canonical().supports;
    const auto removed = detail::multiset_minus(ca, cb);
    const auto added = detail::multiset_minus(cb, ca);
    if (removed.size() == 1 && added.empty()) return true;
    if (added.size() == 1 && removed.empty()) return true;
    if (removed.size() == 1 && added.size() == 1) return removed[0].limb == added[0].limb;
    return false;
}

// -- Default taxonomy ----------------------------------------------------

namespace detail {

struct ClassRow {
    const char* id;
    Category category;
    const char* code;  // one letter per support: F,K,H,P,A
    int tier;          // 0 none, 1 balance, 2 friction, 3 rest
};

// Standing and kneeling membership follows a generation rule: leg multisets
// {F},{FF} (standing) and {KK},{KF} (kneeling) crossed with every arm
// multiset of size <= 2 over {Hold, Palm, ArmLine}, minus the uncommon
// combinations {F,Hold,ArmLine}, {F,ArmLine,ArmLine}, {K,F,Hold,ArmLine}
// and {K,F,ArmLine,ArmLine}. Row number equals the support count; column
// assignment pins the classes that carry fixed meanings (1.1 single foot,
// 2.3 double feet, 3.4 feet plus table palm, 4.1 feet plus double palm,
// 4.10/3.13 the crawl pair) and is otherwise a repo convention.
inline constexpr ClassRow kDefaultTable[] = {
    {"0.0", Category::Pseudo, "", 0},

    {"1.1", Category::Standing, "F", 0},
    {"2.1", Category::Standing, "FH", 0},
    {"2.2", Category::Standing, "FP", 0},
    {"2.3", Category::Standing, "FF", 0},
    {"2.4", Category::Standing, "FA", 0},
    {"3.1", Category::Standing, "FPP", 0},
    {"3.2", Category::Standing, "FHH", 0},
    {"3.3", Category::Standing, "FHP", 0},
    {"3.4", Category::Standing, "FFP", 0},
    {"3.5", Category::Standing, "FFH", 0},
    {"3.6", Category::Standing, "FPA", 0},
    {"3.7", Category::Standing, "FFA", 0},
    {"4.1", Category::Standing, "FFPP", 0},
    {"4.2", Category::Standing, "FFHH", 0},
    {"4.3", Category::Standing, "FFHP", 0},
    {"4.4", Category::Standing, "FFHA", 0},
    {"4.5", Category::Standing, "FFPA", 0},
    {"4.6", Category::Standing, "FFAA", 0},

    {"2.5", Category::Kneeling, "KK", 0},
    {"2.6", Category::Kneeling, "KF", 0},
    {"3.8", Category::Kneeling, "KFH", 0},
    {"3.9", Category::Kneeling, "KFP", 0},
    {"3.10", Category::Kneeling, "KFA", 0},
    {"3.11", Category::Kneeling, "KKH", 0},
    {"3.12", Category::Kneeling, "KKA", 0},
    {"3.13", Category::Kneeling, "KKP", 0},
    {"4.7", Category::Kneeling, "KKHH", 0},
    {"4.8", Category::Kneeling, "KKHP", 0},
    {"4.9", Category::Kneeling, "KKHA", 0},
    {"4.10", Category::Kneeling, "KKPP", 0},
    {"4.11", Category::Kneeling, "KKPA", 0},
    {"4.12", Category::Kneeling, "KKAA", 0},
    {"4.13", Category::Kneeling, "KFHH", 0},
    {"4.14", Category::Kneeling, "KFHP", 0},
    {"4.15", Category::Kneeling, "KFPP", 0},
    {"4.16", Category::Kneeling, "KFPA", 0},

    // Resting specs are conventions; tiers grade how much active balance
    // each pose still needs.
    {"r.1", Category::Resting, "", 1},      // perched sit, feet free
    {"r.2", Category::Resting, "F", 1},     // sit, one foot planted
    {"r.3", Category::Resting, "FF", 1},    // sit, both feet planted
    {"r.4", Category::Resting, "FFH", 1},   // sit, feet planted, hand hold
    {"r.5", Category::Resting, "PP", 2},    // reclined lean on both palms
    {"r.6", Category::Resting, "AA", 2},    // reclined lean on both forearms
    {"r.7", Category::Resting, "KK", 3},    // kneel-sit on the heels
    {"r.8", Category::Resting, "KKPP", 3},  // crouched rest over knees and palms
    {"r.9", Category::Resting, "A", 3},     // side lying on one forearm
    {"r.10", Category::Resting, "FFAA", 3}, // supine sprawl, heels and forearms down
};

inline ContactType contact_from_code(char c) {
    switch (c) {
        case 'F': return ContactType::Foot;
        case 'K': return ContactType::Knee;
        case 'H': return ContactType::Hold;
        case 'P': return ContactType::Palm;
        case 'A': return ContactType::ArmLine;
    }
    throw Error("bad support code");
}

}  // namespace detail

/// Builds the shipped 46-class taxonomy plus the flight pseudo-class.
/// Edges are generated exhaustively from the one-change rule over all
/// non-resting classes, so the graph is symmetric by construction.
inline TaxonomyGraph default_taxonomy() {
    TaxonomyGraph graph;
    for (const auto& row : detail::kDefaultTable) {
        SupportClass c;
        c.id = row.id;
        c.category = row.category;
        for (const char* p = row.code; *p; ++p) {
            const ContactType t = detail::contact_from_code(*p);
            c.spec.supports.push_back({limb_of(t), t});
        }
        c.spec.torso_contact = (row.category == Category::Resting);
        c.spec.canonicalize();
        if (row.tier == 1) c.tier = RestingTier::Balance;
        if (row.tier == 2) c.tier = RestingTier::Friction;
        if (row.tier == 3) c.tier = RestingTier::Rest;
        graph.classes.emplace(c.id, std::move(c));
    }

    std::vector<std::string> linkable;
    for (const auto& [id, c] : graph.classes)
        if (c.category != Category::Resting) linkable.push_back(id);

    for (size_t i = 0; i < linkable.size(); ++i) {
        for (size_t j = i + 1; j < linkable.size(); ++j) {
            SupportClass& a = graph.classes.at(linkable[i]);
            SupportClass& b = graph.classes.at(linkable[j]);
            if (one_change_apart(a.spec, b.spec)) {
                a.neighbors.push_back(b.id);
                b.neighbors.push_back(a.id);
            }
        }
    }

    for (auto& [_, c] : graph.classes) {
        std::sort(c.neighbors.begin(), c.neighbors.end());
        for (const auto& n : c.neighbors)
            if (graph.classes.at(n).category != c.category) c.cross_category.insert(n);
    }
    return graph;
}

// -- Validation ----------------------------------------------------------

namespace detail {

inline bool parse_id(const std::string& id, bool& resting, int& row) {
    if (id.size() >= 3 && id[0] == 'r' && id[1] == '.') {
        resting = true;
        row = 0;
        return id.find_first_not_of("0123456789", 2) == std::string::npos;
    }
    const auto dot = id.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= id.size()) return false;
    if (id.find_first_not_of("0123456789") != dot) return false;
    if (id.find_first_not_of("0123456789", dot + 1) != std::string::npos) return false;
    resting = false;
    row = std::stoi(id.substr(0, dot));
    return true;
}

}  // namespace detail

inline ValidationReport validate(const TaxonomyGraph& graph) {
    ValidationReport report;
    auto flag = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    report.standing = graph.count(Category::Standing);
    report.kneeling = graph.count(Category::Kneeling);
    report.resting = graph.count(Category::Resting);
    report.class_count = report.standing + report.kneeling + report.resting;

    if (report.standing != 18) flag("expected 18 standing classes, found " + std::to_string(report.standing));
    if (report.kneeling != 18) flag("expected 18 kneeling classes, found " + std::to_string(report.kneeling));
    if (report.resting != 10) flag("expected 10 resting classes, found " + std::to_string(report.resting));

    std::set<std::pair<std::string, std::string>> undirected;
    std::map<std::string, std::vector<std::string>> spec_owners;

    for (const auto& [id, c] : graph.classes) {
        bool resting_id = false;
        int row = 0;
        if (!detail::parse_id(id, resting_id, row)) {
            flag("class " + id + ": malformed id");
            continue;
        }
        if (resting_id != (c.category == Category::Resting))
            flag("class " + id + ": id style does not match category " + to_string(c.category));

        if (!c.spec.admissible_spec())
            flag("class " + id + ": inadmissible support spec " + c.spec.describe());

        switch (c.category) {
            case Category::Standing:
                if (c.spec.count(ContactType::Foot) < 1 || c.spec.count(ContactType::Knee) > 0)
                    flag("class " + id + ": standing requires >=1 Foot and 0 Knee, got " + c.spec.describe());
                if (c.spec.torso_contact) flag("class " + id + ": standing class with torso contact");
                break;
            case Category::Kneeling:
                if (c.spec.count(ContactType::Knee) < 1)
                    flag("class " + id + ": kneeling requires >=1 Knee, got " + c.spec.describe());
                if (c.spec.torso_contact) flag("class " + id + ": kneeling class with torso contact");
                break;
            case Category::Resting:
                if (!c.spec.torso_contact) flag("class " + id + ": resting class without torso contact");
                break;
            case Category::Pseudo:
                if (id != "0.0") flag("class " + id + ": only \"0.0\" may be pseudo");
                if (!c.spec.supports.empty() || c.spec.torso_contact)
                    flag("class " + id + ": pseudo-class must have an empty support set");
                break;
        }

        if ((c.category == Category::Standing || c.category == Category::Kneeling) &&
            static_cast<size_t>(row) != c.spec.supports.size())
            flag("class " + id + ": row number " + std::to_string(row) + " != support count " +
                 std::to_string(c.spec.supports.size()));

        if (c.tier && c.category != Category::Resting)
            flag("class " + id + ": tier tag on a non-resting class");

        spec_owners[c.spec.describe()].push_back(id);

        for (const auto& n : c.neighbors) {
            const SupportClass* other = graph.find(n);
            if (!other) {
                flag("class " + id + ": neighbor " + n + " does not exist");
                continue;
            }
            if (c.category == Category::Resting || other->category == Category::Resting)
                flag("edge " + id + " -- " + n + ": resting classes declare no transitions");
            if (std::find(other->neighbors.begin(), other->neighbors.end(), id) ==
                other->neighbors.end())
                flag("edge " + id + " -> " + n + ": missing symmetric back-edge");
            if (c.category != Category::Resting && other->category != Category::Resting &&
                !one_change_apart(c.spec, other->spec))
                flag("edge " + id + " -- " + n + ": violates the one-change rule (" +
                     c.spec.describe() + " vs " + other->spec.describe() + ")");
            undirected.insert({std::min(id, n), std::max(id, n)});
        }
    }

    for (const auto& [spec, owners] : spec_owners)
        if (owners.size() > 1) {
            std::string msg = "duplicate support spec " + spec + " shared by";
            for (const auto& o : owners) msg += " " + o;
            flag(std::move(msg));
        }

    const SupportClass* pseudo = graph.find("0.0");
    if (!pseudo) {
        flag("pseudo-class 0.0 missing");
    } else {
        std::vector<std::string> single_support;
        for (const auto& [id, c] : graph.classes)
            if (c.category != Category::Pseudo && !c.spec.torso_contact &&
                c.spec.supports.size() == 1)
                single_support.push_back(id);
        std::sort(single_support.begin(), single_support.end());
        if (pseudo->neighbors != single_support)
            flag("pseudo-class 0.0 must be adjacent to exactly the 1-support classes");
    }

    report.edge_count = undirected.size();
    return report;
}

// -- File format ---------------------------------------------------------

inline std::string to_json(const TaxonomyGraph& graph) {
    nlohmann::json doc;
    auto& classes = doc["classes"] = nlohmann::json::array();
    for (const auto& [id, c] : graph.classes) {
        nlohmann::json entry;
        entry["id"] = id;
        entry["category"] = to_string(c.category);
        auto& supports = entry["supports"] = nlohmann::json::array();
        for (const auto& s : c.spec.supports)
            supports.push_back({{"limb", to_string(s.limb)}, {"contact", to_string(s.contact)}});
        entry["torso_contact"] = c.spec.torso_contact;
        entry["neighbors"] = c.neighbors;
        if (c.tier) entry["tier"] = to_string(*c.tier);
        classes.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

inline std::string default_taxonomy_json() { return to_json(default_taxonomy()); }

/// A parsed taxonomy document plus any parse-level violations (duplicate
/// ids). Validation violations come from validate() on top of these.
struct ParsedTaxonomy {
    TaxonomyGraph graph;
    std::vector<std::string> violations;
};

/// Parses a taxonomy document without validating its invariants. Throws
/// ParseError on malformed JSON (with the parser's line locus) and
/// SchemaError on structural problems.
inline ParsedTaxonomy parse_taxonomy(std::string_view source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("taxonomy: ") + e.what());
    }

    if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_array())
        throw SchemaError("taxonomy: expected a top-level object with a \"classes\" array");

    TaxonomyGraph graph;
    std::vector<std::string> violations;
    for (const auto& entry : doc["classes"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string())
            throw SchemaError("taxonomy: every class needs a string \"id\"");
        SupportClass c;
        c.id = entry["id"].get<std::string>();
        try {
            c.category = category_from(entry.at("category").get<std::string>());
            for (const auto& s : entry.at("supports")) {
                const LimbClass limb = limb_class_from(s.at("limb").get<std::string>());
                const ContactType contact = contact_type_from(s.at("contact").get<std::string>());
                c.spec.supports.push_back({limb, contact});
            }
            c.spec.torso_contact = entry.at("torso_contact").get<bool>();
            for (const auto& n : entry.at("neighbors")) c.neighbors.push_back(n.get<std::string>());
            if (entry.contains("tier")) c.tier = tier_from(entry["tier"].get<std::string>());
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError("taxonomy class " + c.id + ": " + e.what());
        }
        c.spec.canonicalize();
        std::sort(c.neighbors.begin(), c.neighbors.end());
        if (graph.classes.count(c.id)) {
            violations.push_back("duplicate class id: " + c.id);
            continue;
        }
        graph.classes.emplace(c.id, std::move(c));
    }

    for (auto& [_, c] : graph.classes) {
        for (const auto& n : c.neighbors) {
            const SupportClass* other = graph.find(n);
            if (other && other->category != c.category) c.cross_category.insert(n);
        }
    }
    return {std::move(graph), std::move(violations)};
}

/// Parses and validates a taxonomy document. Throws ValidationError listing
/// every violated invariant, on top of parse_taxonomy's errors.
inline TaxonomyGraph load_taxonomy(std::string_view source) {
    ParsedTaxonomy parsed = parse_taxonomy(source);
    ValidationReport report = validate(parsed.graph);
    parsed.violations.insert(parsed.violations.end(), report.violations.begin(),
                             report.violations.end());
    if (!parsed.violations.empty()) throw ValidationError(std::move(parsed.violations));
    return std::move(parsed.graph);
}

// -- Queries -------------------------------------------------------------

/// Maps a side-collapsed support multiset to its class id. The empty spec is
/// the flight pseudo-class "0.0".
inline std::string classify(const SupportSpec& spec, const TaxonomyGraph& graph) {
    const SupportSpec wanted = spec.canonical();
    if (!wanted.admissible_spec())
        throw UnknownPose("inadmissible support spec: " + wanted.describe());
    for (const auto& [id, c] : graph.classes)
        if (c.spec == wanted) return id;
    throw UnknownPose("no taxonomy class matches " + wanted.describe());
}

/// Declared neighbor ids, sorted. Resting classes return an empty list.
inline std::vector<std::string> neighbors(const std::string& id, const TaxonomyGraph& graph) {
    return graph.require(id).neighbors;
}

/// Shortest transition road map between two classes, breadth-first by edge
/// count. Ties are broken by lexicographic id order of the next hop.
inline std::vector<std::string> transition_path(const std::string& from, const std::string& to,
                                                const TaxonomyGraph& graph) {
    const SupportClass& a = graph.require(from);
    const SupportClass& b = graph.require(to);
    if (a.neighbors.empty() || b.neighbors.empty())
        throw NoPath("no transition path between " + from + " and " + to);
    if (from == to) return {from};

    // Distance-to-target map, then a greedy lexicographic descent.
    std::map<std::string, size_t> dist;
    dist[to] = 0;
    std::vector<std::string> frontier{to};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& id : frontier) {
            for (const auto& n : graph.require(id).neighbors) {
                if (!dist.count(n)) {
                    dist[n] = dist[id] + 1;
                    next.push_back(n);
                }
            }
        }
        frontier = std::move(next);
    }

    auto it = dist.find(from);
    if (it == dist.end()) throw NoPath("no transition path between " + from + " and " + to);

    std::vector<std::string> path{from};
    std::string current = from;
    size_t remaining = it->second;
    while (remaining > 0) {
        for (const auto& n : graph.require(current).neighbors) {  // sorted, so first hit is smallest
            auto d = dist.find(n);
            if (d != dist.end() && d->second == remaining - 1) {
                current = n;
                break;
            }
        }
        path.push_back(current);
        --remaining;
    }
    return path;
}

}  // namespace wbpose

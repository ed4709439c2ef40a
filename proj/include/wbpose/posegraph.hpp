#pragma once

// Pose-transition multigraph built from a labeled segment report: one node
// per visited class, one order-labeled edge per adjacent segment pair, plus
// DOT export and visit/step statistics.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wbpose/errors.hpp"
#include "wbpose/segmentation.hpp"
#include "wbpose/taxonomy.hpp"

namespace wbpose {

enum class ChangeKind { Added, Removed, Retyped, Multi };

inline std::string to_string(ChangeKind k) {
    switch (k) {
        case ChangeKind::Added: return "added";
        case ChangeKind::Removed: return "removed";
        case ChangeKind::Retyped: return "retyped";
        case ChangeKind::Multi: return "multi";
    }
    throw Error("unreachable change kind");
}

struct TransitionEdge {
    std::string from;
    std::string to;
    size_t order = 0;     // 1-based position in the motion
    std::string changed;  // end-effector that changed; comma-joined for multi
    ChangeKind kind = ChangeKind::Added;
};

struct TransitionGraph {
    std::set<std::string> nodes;            // visited classes only
    std::vector<TransitionEdge> edges;      // ordered; edge k ends where k+1 starts
    std::vector<std::string> visit_sequence;  // class of every segment, in order
};

/// One edge per adjacent segment pair, with the changed end-effector taken
/// from the support-set diff.
inline TransitionGraph build_graph(const SegmentReport& report) {
    if (report.segments.empty()) throw EmptyReport("cannot build a graph from an empty report");

    TransitionGraph graph;
    for (const Segment& seg : report.segments) {
        graph.nodes.insert(seg.class_id);
        graph.visit_sequence.push_back(seg.class_id);
    }

    for (size_t i = 0; i + 1 < report.segments.size(); ++i) {
        const auto& prev = report.segments[i].supports;
        const auto& next = report.segments[i + 1].supports;

        std::vector<std::string> changed;
        ChangeKind kind = ChangeKind::Added;
        for (const auto& [ee, entry] : prev) {
            auto it = next.find(ee);
            if (it == next.end()) {
                changed.push_back(ee);
                kind = ChangeKind::Removed;
            } else if (!(it->second == entry)) {
                changed.push_back(ee);
                kind = ChangeKind::Retyped;
            }
        }
        for (const auto& [ee, _] : next)
            if (!prev.count(ee)) {
                changed.push_back(ee);
                kind = ChangeKind::Added;
            }
        std::string joined;
        for (const auto& ee : changed) joined += (joined.empty() ? "" : ",") + ee;
        if (changed.size() > 1) kind = ChangeKind::Multi;

        graph.edges.push_back({report.segments[i].class_id, report.segments[i + 1].class_id,
                               i + 1, joined, kind});
    }
    return graph;
}

struct DotOptions {
    std::string graph_name = "pose_transitions";
};

/// DOT rendering with order labels; transitions moving the left foot are
/// blue and the right foot red, everything else black. Output is byte-stable
/// for a given graph.
inline std::string to_dot(const TransitionGraph& graph, const DotOptions& options = {}) {
    std::string out = "digraph " + options.graph_name + " {\n";
    for (const auto& node : graph.nodes) out += "  \"" + node + "\";\n";
    for (const TransitionEdge& e : graph.edges) {
        const char* color = e.changed == "LeftFoot"    ? "blue"
                            : e.changed == "RightFoot" ? "red"
                                                       : "black";
        out += "  \"" + e.from + "\" -> \"" + e.to + "\" [label=\"" + std::to_string(e.order) +
               "\", color=\"" + color + "\"];\n";
    }
    out += "}\n";
    return out;
}

struct GraphStats {
    std::map<std::string, size_t> visits;  // per class; sums to the segment count
    size_t steps = 0;                      // entries into single-foot classes
    double compliance = 1.0;               // fraction of edges declared in the taxonomy
    std::vector<size_t> noncompliant_edges;  // order indices of undeclared transitions
};

inline GraphStats stats(const TransitionGraph& graph, const TaxonomyGraph& taxonomy) {
    GraphStats out;
    for (const auto& id : graph.visit_sequence) ++out.visits[id];

    auto single_foot = [&](const std::string& id) {
        const SupportClass* c = taxonomy.find(id);
        return c && !c->spec.torso_contact && c->spec.supports.size() == 1 &&
               c->spec.supports[0].contact == ContactType::Foot;
    };

    size_t compliant = 0;
    for (const TransitionEdge& e : graph.edges) {
        if (single_foot(e.to)) ++out.steps;
        const SupportClass* from = taxonomy.find(e.from);
        const bool declared = from && std::find(from->neighbors.begin(), from->neighbors.end(),
                                                e.to) != from->neighbors.end();
        if (declared)
            ++compliant;
        else
            out.noncompliant_edges.push_back(e.order);
    }
    if (!graph.edges.empty())
        out.compliance = static_cast<double>(compliant) / static_cast<double>(graph.edges.size());
    return out;
}

}  // namespace wbpose

#include <doctest.h>

#include "synthetic_motions.hpp"
#include "wbpose/posegraph.hpp"

using namespace wbpose;

namespace {

SegmentReport stair_report() {
    const auto fix = wbfix::stair_walk();
    return run_pipeline(fix.motion, fix.scene, {}, default_taxonomy());
}

Segment labeled_segment(size_t start, size_t end, const std::string& id,
                        std::initializer_list<std::pair<const char*, SupportEntry>> supports) {
    Segment seg{start, end, {}, id};
    for (const auto& [ee, entry] : supports) seg.supports.emplace(ee, entry);
    return seg;
}

}  // namespace

TEST_CASE("a single segment gives one node and no edges") {
    SegmentReport report;
    report.segments.push_back(labeled_segment(0, 10, "2.3", {}));
    const TransitionGraph graph = build_graph(report);
    CHECK(graph.nodes == std::set<std::string>{"2.3"});
    CHECK(graph.edges.empty());

    const GraphStats s = stats(graph, default_taxonomy());
    CHECK(s.visits.at("2.3") == 1);
    CHECK(s.steps == 0);
    CHECK(s.compliance == 1.0);
}

TEST_CASE("edges carry order labels and the changed end-effector") {
    SegmentReport report;
    const SupportEntry rf{"floor", ContactType::Foot};
    const SupportEntry lf{"floor", ContactType::Foot};
    report.segments.push_back(labeled_segment(0, 5, "2.3", {{"RightFoot", rf}, {"LeftFoot", lf}}));
    report.segments.push_back(labeled_segment(5, 9, "1.1", {{"RightFoot", rf}}));
    report.segments.push_back(labeled_segment(9, 14, "2.3", {{"RightFoot", rf}, {"LeftFoot", lf}}));

    const TransitionGraph graph = build_graph(report);
    REQUIRE(graph.edges.size() == 2);
    CHECK(graph.edges[0].from == "2.3");
    CHECK(graph.edges[0].to == "1.1");
    CHECK(graph.edges[0].order == 1);
    CHECK(graph.edges[0].changed == "LeftFoot");
    CHECK(graph.edges[0].kind == ChangeKind::Removed);
    CHECK(graph.edges[1].order == 2);
    CHECK(graph.edges[1].kind == ChangeKind::Added);

    const std::string dot = to_dot(graph);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    CHECK(dot.find("color=\"blue\"") != std::string::npos);  // left foot edges are blue
}

TEST_CASE("empty reports are rejected") {
    CHECK_THROWS_AS((void)build_graph(SegmentReport{}), EmptyReport);
}

TEST_CASE("edge count and chain invariants hold on the stair fixture") {
    const SegmentReport report = stair_report();
    const TransitionGraph graph = build_graph(report);
    REQUIRE(graph.edges.size() == report.segments.size() - 1);
    for (size_t i = 0; i < graph.edges.size(); ++i) {
        CHECK(graph.edges[i].order == i + 1);
        if (i + 1 < graph.edges.size()) CHECK(graph.edges[i].to == graph.edges[i + 1].from);
    }
    size_t visit_total = 0;
    const GraphStats s = stats(graph, default_taxonomy());
    for (const auto& [_, count] : s.visits) visit_total += count;
    CHECK(visit_total == report.segments.size());
}

TEST_CASE("the stair fixture walks four steps, all transitions declared") {
    const TransitionGraph graph = build_graph(stair_report());
    const GraphStats s = stats(graph, default_taxonomy());
    CHECK(s.steps == 4);
    CHECK(s.visits.at("1.1") == 4);
    CHECK(s.compliance == 1.0);
    CHECK(s.noncompliant_edges.empty());
    CHECK(graph.visit_sequence.front() == "2.3");
    CHECK(graph.visit_sequence.back() == "2.3");
}

TEST_CASE("blue edge count equals a brute-force left-foot diff scan") {
    const SegmentReport report = stair_report();
    const std::string dot = to_dot(build_graph(report));

    size_t blue = 0;
    for (size_t at = dot.find("color=\"blue\""); at != std::string::npos;
         at = dot.find("color=\"blue\"", at + 1))
        ++blue;

    size_t expected = 0;
    for (size_t i = 0; i + 1 < report.segments.size(); ++i) {
        const auto& a = report.segments[i].supports;
        const auto& b = report.segments[i + 1].supports;
        std::vector<std::string> changed;
        for (const auto& [ee, entry] : a) {
            auto it = b.find(ee);
            if (it == b.end() || !(it->second == entry)) changed.push_back(ee);
        }
        for (const auto& [ee, _] : b)
            if (!a.count(ee)) changed.push_back(ee);
        if (changed.size() == 1 && changed[0] == "LeftFoot") ++expected;
    }
    CHECK(blue == expected);
    CHECK(blue > 0);
}

TEST_CASE("DOT output is byte-stable and structurally sound") {
    const TransitionGraph graph = build_graph(stair_report());
    const std::string once = to_dot(graph);
    const std::string twice = to_dot(graph);
    CHECK(once == twice);
    CHECK(once.rfind("digraph pose_transitions {\n", 0) == 0);
    CHECK(once.back() == '\n');
    CHECK(once.find("}\n") != std::string::npos);
    // One statement per node and per edge.
    size_t arrows = 0;
    for (size_t at = once.find("->"); at != std::string::npos; at = once.find("->", at + 1))
        ++arrows;
    CHECK(arrows == graph.edges.size());
}

TEST_CASE("an undeclared jump lowers the compliance ratio and is flagged") {
    SegmentReport report;
    const SupportEntry rf{"floor", ContactType::Foot};
    const SupportEntry lf{"floor", ContactType::Foot};
    const SupportEntry rh{"rail", ContactType::Hold};
    const SupportEntry lh{"rail", ContactType::Hold};
    // 2.3 -> 4.2 adds two holds at once: never a taxonomy edge.
    report.segments.push_back(labeled_segment(0, 5, "2.3", {{"RightFoot", rf}, {"LeftFoot", lf}}));
    report.segments.push_back(labeled_segment(
        5, 9, "4.2", {{"RightFoot", rf}, {"LeftFoot", lf}, {"RightHand", rh}, {"LeftHand", lh}}));
    report.segments.push_back(labeled_segment(9, 12, "2.3", {{"RightFoot", rf}, {"LeftFoot", lf}}));

    const TransitionGraph graph = build_graph(report);
    CHECK(graph.edges[0].kind == ChangeKind::Multi);
    CHECK(graph.edges[0].changed.find("RightHand") != std::string::npos);
    CHECK(graph.edges[0].changed.find("LeftHand") != std::string::npos);

    const GraphStats s = stats(graph, default_taxonomy());
    CHECK(s.compliance < 1.0);
    CHECK(s.noncompliant_edges == std::vector<size_t>{1, 2});
}

TEST_CASE("a regrasp on the same limb is a retyped edge") {
    SegmentReport report;
    const SupportEntry rf{"floor", ContactType::Foot};
    report.segments.push_back(
        labeled_segment(0, 5, "2.2", {{"RightFoot", rf}, {"RightHand", {"table", ContactType::Palm}}}));
    report.segments.push_back(
        labeled_segment(5, 9, "2.1", {{"RightFoot", rf}, {"RightHand", {"rail", ContactType::Hold}}}));
    const TransitionGraph graph = build_graph(report);
    REQUIRE(graph.edges.size() == 1);
    CHECK(graph.edges[0].kind == ChangeKind::Retyped);
    CHECK(graph.edges[0].changed == "RightHand");
    // Palm -> Hold retypes one arm contact: a declared taxonomy edge.
    CHECK(stats(graph, default_taxonomy()).compliance == 1.0);
}

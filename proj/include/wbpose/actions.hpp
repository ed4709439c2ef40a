#pragma once

// Loco-manipulation action classification. Segments are grouped into spans
// of three action types: environment-changing manipulation inside a single
// support class (I), pure locomotion across support transitions (II), and
// combined actions whose manipulation contacts double as supports or
// persist across transitions (III).

#include <string>
#include <vector>

#include <json.hpp>

#include "wbpose/contact.hpp"
#include "wbpose/motion.hpp"
#include "wbpose/segmentation.hpp"
#include "wbpose/signal.hpp"

namespace wbpose {

/// A stretch of frames in which a tracked body segment stays within the
/// contact epsilon of a manipulable object. `dual_use` marks contacts that
/// also passed the support test on that same object for at least one frame.
struct ManipulationContact {
    size_t start = 0;  // inclusive
    size_t end = 0;    // exclusive
    std::string segment;
    std::string object;
    bool dual_use = false;
};

enum class ActionType { I, II, III };

inline std::string to_string(ActionType t) {
    switch (t) {
        case ActionType::I: return "I";
        case ActionType::II: return "II";
        case ActionType::III: return "III";
    }
    throw Error("unreachable action type");
}

struct ActionSpan {
    size_t first_segment = 0;  // inclusive
    size_t last_segment = 0;   // inclusive
    ActionType type = ActionType::II;
    size_t transition_count = 0;  // support transitions inside the span
    std::vector<ManipulationContact> evidence;
};

/// Scans every tracked body segment (the CoM is virtual and skipped) against
/// every manipulable object at the raw positions, so fast transient touches
/// such as kicks are not smoothed away. Returns contiguous proximity runs,
/// ordered by start frame, then segment, then object.
inline std::vector<ManipulationContact> detect_manipulation_contacts(
    const MotionSequence& motion, const Scene& scene, const PipelineConfig& config) {
    validate_config(config);

    std::vector<const SceneObject*> manipulables;
    for (const SceneObject& obj : scene)
        if (obj.role == ObjectRole::Manipulable) manipulables.push_back(&obj);
    if (manipulables.empty()) return {};

    const std::vector<FrameSupport> supports = detect_supports(motion, scene, config);

    std::vector<ManipulationContact> contacts;
    for (const auto& [name, track] : motion.trajectories) {
        if (name == "CoM") continue;
        for (const SceneObject* obj : manipulables) {
            size_t run_start = 0;
            bool in_run = false;
            bool run_dual = false;
            auto close_run = [&](size_t end) {
                contacts.push_back({run_start, end, name, obj->name, run_dual});
                in_run = false;
                run_dual = false;
            };
            for (size_t f = 0; f < motion.frame_count; ++f) {
                const bool near = distance_to(track[f], obj->shape).distance <=
                                  config.contact_epsilon;
                if (near && !in_run) {
                    in_run = true;
                    run_start = f;
                }
                if (!near && in_run) close_run(f);
                if (near) {
                    auto it = supports[f].supports.find(name);
                    if (it != supports[f].supports.end() && it->second.object == obj->name)
                        run_dual = true;
                }
            }
            if (in_run) close_run(motion.frame_count);
        }
    }
    std::sort(contacts.begin(), contacts.end(), [](const auto& a, const auto& b) {
        return std::tie(a.start, a.segment, a.object) < std::tie(b.start, b.segment, b.object);
    });
    return contacts;
}

namespace detail {

inline bool overlaps(const ManipulationContact& c, const Segment& s) {
    return c.start < s.end && c.end > s.start;
}

}  // namespace detail

/// Partitions the labeled report's segments into action spans. A segment
/// belongs to a type III span when a dual-use contact touches it or a
/// manipulation contact persists across one of its boundaries; otherwise it
/// is type I when any manipulation contact touches it and type II when none
/// does.
inline std::vector<ActionSpan> classify_actions(const SegmentReport& report,
                                                const std::vector<ManipulationContact>& contacts) {
    const size_t n = report.segments.size();
    if (n == 0) throw EmptyReport("cannot classify actions of an empty report");

    std::vector<ActionType> type(n, ActionType::II);
    for (size_t i = 0; i < n; ++i)
        for (const ManipulationContact& c : contacts)
            if (detail::overlaps(c, report.segments[i])) type[i] = ActionType::I;

    for (const ManipulationContact& c : contacts) {
        std::vector<size_t> touched;
        for (size_t i = 0; i < n; ++i)
            if (detail::overlaps(c, report.segments[i])) touched.push_back(i);
        if (c.dual_use || touched.size() > 1)
            for (size_t i : touched) type[i] = ActionType::III;
    }

    std::vector<ActionSpan> spans;
    for (size_t i = 0; i < n; ++i) {
        if (spans.empty() || spans.back().type != type[i]) {
            spans.push_back({i, i, type[i], 0, {}});
        } else {
            spans.back().last_segment = i;
            ++spans.back().transition_count;
        }
    }
    for (ActionSpan& span : spans) {
        const Segment& first = report.segments[span.first_segment];
        const Segment& last = report.segments[span.last_segment];
        for (const ManipulationContact& c : contacts)
            if (c.start < last.end && c.end > first.start) span.evidence.push_back(c);
    }
    return spans;
}

inline std::string to_json(const std::vector<ActionSpan>& spans) {
    nlohmann::json doc;
    auto& out = doc["spans"] = nlohmann::json::array();
    for (const ActionSpan& span : spans) {
        nlohmann::json s;
        s["type"] = to_string(span.type);
        s["first_segment"] = span.first_segment;
        s["last_segment"] = span.last_segment;
        s["transition_count"] = span.transition_count;
        auto& evidence = s["evidence"] = nlohmann::json::array();
        for (const ManipulationContact& c : span.evidence)
            evidence.push_back({{"start", c.start},
                                {"end", c.end},
                                {"segment", c.segment},
                                {"object", c.object},
                                {"dual_use", c.dual_use}});
        out.push_back(std::move(s));
    }
    return doc.dump(2) + "\n";
}

}  // namespace wbpose

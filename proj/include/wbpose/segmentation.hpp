#pragma once

// The motion-analysis pipeline: per-frame support detection from filtered
// end-effector speeds validated by scene proximity, segmentation at support
// set changes, and taxonomy labeling of the resulting segments.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wbpose/contact.hpp"
#include "wbpose/errors.hpp"
#include "wbpose/motion.hpp"
#include "wbpose/signal.hpp"
#include "wbpose/taxonomy.hpp"

namespace wbpose {

struct PipelineConfig {
    double cutoff_hz = 1.5;         // low-pass cutoff for position data
    double speed_threshold = 0.15;  // m/s, below which a support is hypothesized
    double contact_epsilon = 0.02;  // m, proximity needed to confirm a support
    int min_segment_frames = 1;     // shorter segments merge into their predecessor
};

inline void validate_config(const PipelineConfig& c) {
    if (!(c.cutoff_hz > 0.0)) throw InvalidCutoff("cutoff_hz must be > 0");
    if (!(c.speed_threshold > 0.0)) throw SchemaError("speed_threshold must be > 0");
    if (!(c.contact_epsilon > 0.0)) throw SchemaError("contact_epsilon must be > 0");
    if (c.min_segment_frames < 1) throw SchemaError("min_segment_frames must be >= 1");
}

/// Confirmed supports of one frame: end-effector name -> contact hit.
struct FrameSupport {
    size_t frame = 0;
    std::map<std::string, ContactHit> supports;
};

/// Per-frame speed of each end-effector after low-pass filtering.
using SpeedTrace = std::map<std::string, std::vector<double>>;

inline SpeedTrace end_effector_speeds(const MotionSequence& motion, double cutoff_hz) {
    SpeedTrace trace;
    for (std::string_view ee : kEndEffectors) {
        const auto filtered =
            lowpass(motion.track(std::string(ee)), motion.frame_rate, FilterSpec{cutoff_hz});
        trace.emplace(std::string(ee), speed(differentiate(filtered, motion.frame_rate)));
    }
    return trace;
}

/// What a segment knows about one supporting end-effector.
struct SupportEntry {
    std::string object;
    ContactType contact = ContactType::Foot;

    bool operator==(const SupportEntry&) const = default;
};

struct Segment {
    size_t start = 0;  // inclusive
    size_t end = 0;    // exclusive
    std::map<std::string, SupportEntry> supports;
    std::string class_id;  // empty until labeled

    size_t length() const { return end - start; }
    size_t middle() const { return (start + end - 1) / 2; }
};

struct SegmentReport {
    PipelineConfig config;
    double frame_rate = 0.0;
    size_t frame_count = 0;
    std::vector<Segment> segments;
    std::vector<std::string> warnings;
};

// -- Support detection -----------------------------------------------------

/// Per-frame support sets for the four end-effectors. A support needs both a
/// filtered speed below the threshold and a confirming contact probe at the
/// raw position; the first and last frame adopt the decision of their
/// nearest interior frame, where the derivative is two-sided.
inline std::vector<FrameSupport> detect_supports(const MotionSequence& motion, const Scene& scene,
                                                 const PipelineConfig& config) {
    validate_config(config);
    const size_t n = motion.frame_count;
    std::vector<FrameSupport> frames(n);
    for (size_t f = 0; f < n; ++f) frames[f].frame = f;

    const SpeedTrace trace = end_effector_speeds(motion, config.cutoff_hz);
    for (std::string_view ee_view : kEndEffectors) {
        const std::string ee(ee_view);
        const std::vector<Vec3>& raw = motion.track(ee);
        const std::vector<double>& speeds = trace.at(ee);

        for (size_t f = 1; f + 1 < n; ++f) {
            if (speeds[f] >= config.speed_threshold) continue;
            std::optional<ContactHit> hit = probe(raw[f], scene, config.contact_epsilon);
            if (!hit) continue;  // hypothesis discarded: not touching anything
            hit->inferred_type = infer_contact_type(ee, *hit, scene);
            frames[f].supports.emplace(ee, std::move(*hit));
        }

        if (auto it = frames[1].supports.find(ee); it != frames[1].supports.end())
            frames[0].supports.emplace(ee, it->second);
        if (auto it = frames[n - 2].supports.find(ee); it != frames[n - 2].supports.end())
            frames[n - 1].supports.emplace(ee, it->second);
    }
    return frames;
}

// -- Segmentation ----------------------------------------------------------

namespace detail {

inline std::map<std::string, SupportEntry> support_key(const FrameSupport& frame) {
    std::map<std::string, SupportEntry> key;
    for (const auto& [ee, hit] : frame.supports)
        key.emplace(ee, SupportEntry{hit.object, hit.inferred_type.value_or(ContactType::Foot)});
    return key;
}

inline size_t change_count(const std::map<std::string, SupportEntry>& a,
                           const std::map<std::string, SupportEntry>& b) {
    size_t changes = 0;
    for (const auto& [ee, entry] : a) {
        auto it = b.find(ee);
        if (it == b.end() || !(it->second == entry)) ++changes;
    }
    for (const auto& [ee, _] : b)
        if (!a.count(ee)) ++changes;
    return changes;
}

}  // namespace detail

/// Splits the frame sequence wherever the support set changes composition.
/// Segments shorter than `min_segment_frames` merge into their predecessor
/// (the very first one merges forward) with a warning; equal neighbors are
/// then coalesced so adjacent segments always differ.
inline SegmentReport segment(const std::vector<FrameSupport>& frames,
                             const PipelineConfig& config) {
    validate_config(config);
    if (frames.empty()) throw SchemaError("segment: no frames");

    SegmentReport report;
    report.config = config;
    report.frame_count = frames.size();

    // Raw segments at every composition change.
    std::vector<Segment> raw;
    std::map<std::string, SupportEntry> current = detail::support_key(frames[0]);
    size_t start = 0;
    for (size_t f = 1; f < frames.size(); ++f) {
        const auto key = detail::support_key(frames[f]);
        if (key == current) continue;
        const size_t changes = detail::change_count(current, key);
        if (changes > 1)
            report.warnings.push_back("multi-change boundary at frame " + std::to_string(f) +
                                      " (" + std::to_string(changes) + " support changes)");
        raw.push_back({start, f, current, ""});
        current = key;
        start = f;
    }
    raw.push_back({start, frames.size(), current, ""});

    // Merge short segments.
    const size_t min_len = static_cast<size_t>(config.min_segment_frames);
    std::vector<Segment> merged;
    size_t carry = 0;  // frames of a short leading segment, absorbed by the next one
    for (const Segment& seg : raw) {
        if (seg.length() < min_len && raw.size() > 1) {
            report.warnings.push_back("segment [" + std::to_string(seg.start) + "," +
                                      std::to_string(seg.end) + ") of " +
                                      std::to_string(seg.length()) +
                                      " frames below min_segment_frames, merged");
            if (!merged.empty())
                merged.back().end = seg.end;
            else
                carry += seg.length();
            continue;
        }
        Segment grown = seg;
        grown.start -= carry;
        carry = 0;
        merged.push_back(std::move(grown));
    }
    if (merged.empty()) {
        // Everything was short; keep one segment covering the whole motion.
        merged.push_back({0, frames.size(), raw.front().supports, ""});
    } else if (carry > 0) {
        merged.front().start = 0;
    }

    // Coalesce neighbors whose support sets became equal after merging.
    for (const Segment& seg : merged) {
        if (!report.segments.empty() && report.segments.back().supports == seg.supports)
            report.segments.back().end = seg.end;
        else
            report.segments.push_back(seg);
    }
    return report;
}

/// Labels every segment with its taxonomy class. Support combinations
/// outside the taxonomy are labeled "unclassified" with a warning.
inline SegmentReport label(SegmentReport report, const TaxonomyGraph& graph) {
    for (Segment& seg : report.segments) {
        SupportSpec spec;
        for (const auto& [ee, entry] : seg.supports)
            spec.supports.push_back({limb_of(entry.contact), entry.contact});
        spec.canonicalize();
        try {
            seg.class_id = classify(spec, graph);
        } catch (const UnknownPose&) {
            seg.class_id = "unclassified";
            report.warnings.push_back("segment [" + std::to_string(seg.start) + "," +
                                      std::to_string(seg.end) + ") support combination " +
                                      spec.describe() + " is outside the taxonomy");
        }
    }
    return report;
}

/// The full pipeline: filter, differentiate, threshold, probe, segment,
/// label. Deterministic for fixed inputs.
inline SegmentReport run_pipeline(const MotionSequence& motion, const Scene& scene,
                                  const PipelineConfig& config, const TaxonomyGraph& graph) {
    SegmentReport report = label(segment(detect_supports(motion, scene, config), config), graph);
    report.frame_rate = motion.frame_rate;
    return report;
}

// -- Report file format -----------------------------------------------------

inline std::string to_json(const SegmentReport& report) {
    nlohmann::json doc;
    doc["config"] = {{"cutoff_hz", report.config.cutoff_hz},
                     {"speed_threshold", report.config.speed_threshold},
                     {"contact_epsilon", report.config.contact_epsilon},
                     {"min_segment_frames", report.config.min_segment_frames}};
    doc["frame_rate"] = report.frame_rate;
    doc["frame_count"] = report.frame_count;
    auto& segments = doc["segments"] = nlohmann::json::array();
    for (const Segment& seg : report.segments) {
        nlohmann::json s;
        s["start"] = seg.start;
        s["end"] = seg.end;
        s["middle"] = seg.middle();
        s["length"] = seg.length();
        auto& supports = s["supports"] = nlohmann::json::object();
        for (const auto& [ee, entry] : seg.supports)
            supports[ee] = {{"object", entry.object}, {"contact_type", to_string(entry.contact)}};
        s["class_id"] = seg.class_id;
        segments.push_back(std::move(s));
    }
    doc["warnings"] = report.warnings;
    return doc.dump(2) + "\n";
}

inline SegmentReport report_from_json(std::string_view source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    SegmentReport report;
    try {
        const auto& config = doc.at("config");
        report.config.cutoff_hz = config.at("cutoff_hz").get<double>();
        report.config.speed_threshold = config.at("speed_threshold").get<double>();
        report.config.contact_epsilon = config.at("contact_epsilon").get<double>();
        report.config.min_segment_frames = config.at("min_segment_frames").get<int>();
        report.frame_rate = doc.at("frame_rate").get<double>();
        report.frame_count = doc.at("frame_count").get<size_t>();
        for (const auto& s : doc.at("segments")) {
            Segment seg;
            seg.start = s.at("start").get<size_t>();
            seg.end = s.at("end").get<size_t>();
            seg.class_id = s.at("class_id").get<std::string>();
            for (const auto& [ee, entry] : s.at("supports").items())
                seg.supports.emplace(
                    ee, SupportEntry{entry.at("object").get<std::string>(),
                                     contact_type_from(entry.at("contact_type").get<std::string>())});
            report.segments.push_back(std::move(seg));
        }
        for (const auto& w : doc.at("warnings")) report.warnings.push_back(w.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("report: ") + e.what());
    }
    return report;
}

}  // namespace wbpose

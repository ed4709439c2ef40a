#pragma once

// Motion and scene ingestion. A motion is a set of named 3D trajectories at
// a fixed frame rate (meters, Hz); a scene is a list of named geometric
// primitives with an environment-vs-manipulable role. Both parse from the
// documented JSON formats and are immutable once built.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wbpose/errors.hpp"
#include "wbpose/geom.hpp"
#include "wbpose/taxonomy.hpp"

namespace wbpose {

inline constexpr std::array<std::string_view, 4> kEndEffectors = {"RightFoot", "LeftFoot",
                                                                  "RightHand", "LeftHand"};

inline bool is_foot(std::string_view name) { return name == "RightFoot" || name == "LeftFoot"; }
inline bool is_hand(std::string_view name) { return name == "RightHand" || name == "LeftHand"; }
inline bool is_knee(std::string_view name) { return name == "RightKnee" || name == "LeftKnee"; }

struct MotionSequence {
    double frame_rate = 0.0;
    size_t frame_count = 0;
    std::map<std::string, std::vector<Vec3>> trajectories;

    double duration_s() const { return static_cast<double>(frame_count) / frame_rate; }

    bool has(const std::string& name) const { return trajectories.count(name) > 0; }

    const std::vector<Vec3>& track(const std::string& name) const {
        auto it = trajectories.find(name);
        if (it == trajectories.end()) throw SchemaError("motion has no trajectory " + name);
        return it->second;
    }

    /// Center-of-mass track if present, else the torso track as a stand-in,
    /// else nothing (the pose instance then carries an unknown CoM).
    const std::vector<Vec3>* com_track() const {
        if (auto it = trajectories.find("CoM"); it != trajectories.end()) return &it->second;
        if (auto it = trajectories.find("Torso"); it != trajectories.end()) return &it->second;
        return nullptr;
    }
};

namespace detail {

inline Vec3 parse_vec3(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
        !j[2].is_number())
        throw SchemaError(what + ": expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline nlohmann::json vec3_to_json(const Vec3& v) {
    return nlohmann::json::array({v.x, v.y, v.z});
}

}  // namespace detail

/// Checks a sequence against its invariants: positive frame rate, the four
/// required end-effector trajectories, a shared length of at least 2, and
/// finite coordinates everywhere.
inline void validate_motion(const MotionSequence& motion) {
    if (!(motion.frame_rate > 0.0)) throw SchemaError("motion: frame_rate must be > 0");
    for (std::string_view required : kEndEffectors)
        if (!motion.has(std::string(required)))
            throw SchemaError(
                "motion: missing required trajectory; RightFoot, LeftFoot, RightHand and "
                "LeftHand must all be present");
    if (motion.frame_count < 2) throw SchemaError("motion: needs at least 2 frames");
    for (const auto& [name, track] : motion.trajectories) {
        if (track.size() != motion.frame_count)
            throw SchemaError("motion: trajectory " + name + " has " +
                              std::to_string(track.size()) + " frames, expected " +
                              std::to_string(motion.frame_count));
        for (size_t i = 0; i < track.size(); ++i)
            if (!track[i].finite())
                throw SchemaError("motion: trajectory " + name +
                                  " has a non-finite value at frame " + std::to_string(i));
    }
}

/// Parses a motion document:
///   {"frame_rate": <Hz>, "trajectories": {"<name>": [[x,y,z], ...], ...}}
/// RightFoot, LeftFoot, RightHand and LeftHand are required; every
/// trajectory must share the same length (>= 2) and be free of non-finite
/// coordinates.
inline MotionSequence parse_motion(std::string_view source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("motion: ") + e.what());
    } catch (const nlohmann::json::out_of_range& e) {
        // Number overflow: the value would not be a finite double.
        throw SchemaError(std::string("motion: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("frame_rate") || !doc.contains("trajectories"))
        throw SchemaError("motion: expected {\"frame_rate\", \"trajectories\"}");
    if (!doc["frame_rate"].is_number())
        throw SchemaError("motion: frame_rate must be a number");

    MotionSequence motion;
    motion.frame_rate = doc["frame_rate"].get<double>();

    const auto& trajectories = doc["trajectories"];
    if (!trajectories.is_object()) throw SchemaError("motion: trajectories must be an object");

    for (const auto& [name, samples] : trajectories.items()) {
        if (!samples.is_array())
            throw SchemaError("motion: trajectory " + name + " must be an array of [x,y,z]");
        std::vector<Vec3> track;
        track.reserve(samples.size());
        for (size_t i = 0; i < samples.size(); ++i)
            track.push_back(detail::parse_vec3(samples[i], "motion: trajectory " + name));
        motion.trajectories.emplace(name, std::move(track));
    }
    if (motion.trajectories.empty()) throw SchemaError("motion: no trajectories");
    motion.frame_count = motion.trajectories.begin()->second.size();

    validate_motion(motion);
    return motion;
}

// Motion files are bulk data, so they serialize compactly.
inline std::string to_json(const MotionSequence& motion) {
    nlohmann::json doc;
    doc["frame_rate"] = motion.frame_rate;
    auto& trajectories = doc["trajectories"] = nlohmann::json::object();
    for (const auto& [name, track] : motion.trajectories) {
        auto& samples = trajectories[name] = nlohmann::json::array();
        for (const Vec3& p : track) samples.push_back(detail::vec3_to_json(p));
    }
    return doc.dump() + "\n";
}

// -- Scenes --------------------------------------------------------------

enum class ObjectRole { Environment, Manipulable };

inline std::string to_string(ObjectRole r) {
    return r == ObjectRole::Environment ? "environment" : "manipulable";
}

inline ObjectRole role_from(std::string_view s) {
    if (s == "environment") return ObjectRole::Environment;
    if (s == "manipulable") return ObjectRole::Manipulable;
    throw SchemaError("unknown object role: " + std::string(s));
}

struct SceneObject {
    std::string name;
    ObjectRole role = ObjectRole::Environment;
    Primitive shape;
};

using Scene = std::vector<SceneObject>;

namespace detail {

inline Primitive parse_shape(const nlohmann::json& j, const std::string& object_name) {
    const std::string where = "scene object " + object_name;
    if (!j.is_object() || !j.contains("type")) throw SchemaError(where + ": shape needs a type");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "plane") {
            Plane p;
            p.point = parse_vec3(j.at("point"), where);
            const Vec3 n = parse_vec3(j.at("normal"), where);
            if (!n.finite() || n.norm() <= 0.0)
                throw SchemaError(where + ": plane normal must be nonzero");
            p.normal = n.normalized();
            return p;
        }
        if (type == "box") {
            Box b;
            b.center = parse_vec3(j.at("center"), where);
            b.half_extents = parse_vec3(j.at("half_extents"), where);
            if (!(b.half_extents.x > 0.0 && b.half_extents.y > 0.0 && b.half_extents.z > 0.0))
                throw SchemaError(where + ": box half_extents must be > 0");
            if (j.contains("rpy")) {
                const Vec3 rpy = parse_vec3(j["rpy"], where);
                b.orientation = rotation_rpy(rpy.x, rpy.y, rpy.z);
            }
            return b;
        }
        if (type == "sphere") {
            Sphere s;
            s.center = parse_vec3(j.at("center"), where);
            s.radius = j.at("radius").get<double>();
            if (!(s.radius > 0.0)) throw SchemaError(where + ": sphere radius must be > 0");
            return s;
        }
        if (type == "capsule") {
            Capsule c;
            c.p0 = parse_vec3(j.at("p0"), where);
            c.p1 = parse_vec3(j.at("p1"), where);
            c.radius = j.at("radius").get<double>();
            if (!(c.radius > 0.0)) throw SchemaError(where + ": capsule radius must be > 0");
            return c;
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(where + ": " + e.what());
    }
    throw SchemaError(where + ": unknown shape type " + type);
}

inline nlohmann::json shape_to_json(const Primitive& shape) {
    nlohmann::json j;
    if (const Plane* p = std::get_if<Plane>(&shape)) {
        j["type"] = "plane";
        j["point"] = vec3_to_json(p->point);
        j["normal"] = vec3_to_json(p->normal);
    } else if (const Box* b = std::get_if<Box>(&shape)) {
        j["type"] = "box";
        j["center"] = vec3_to_json(b->center);
        j["half_extents"] = vec3_to_json(b->half_extents);
        // rpy round-trips only the identity; fixtures use axis-aligned boxes.
        if (!(b->orientation == Mat3::identity()))
            throw SchemaError("scene: cannot serialize a rotated box without its rpy");
    } else if (const Sphere* s = std::get_if<Sphere>(&shape)) {
        j["type"] = "sphere";
        j["center"] = vec3_to_json(s->center);
        j["radius"] = s->radius;
    } else if (const Capsule* c = std::get_if<Capsule>(&shape)) {
        j["type"] = "capsule";
        j["p0"] = vec3_to_json(c->p0);
        j["p1"] = vec3_to_json(c->p1);
        j["radius"] = c->radius;
    }
    return j;
}

}  // namespace detail

/// Parses a scene document:
///   {"objects": [{"name", "role", "shape": {"type", ...}}, ...]}
/// Object names must be unique; shape parameters must satisfy their
/// positivity and unit-length constraints.
inline Scene parse_scene(std::string_view source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scene: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("objects") || !doc["objects"].is_array())
        throw SchemaError("scene: expected a top-level object with an \"objects\" array");

    Scene scene;
    std::set<std::string> names;
    for (const auto& entry : doc["objects"]) {
        SceneObject obj;
        try {
            obj.name = entry.at("name").get<std::string>();
            obj.role = role_from(entry.at("role").get<std::string>());
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("scene object: ") + e.what());
        }
        obj.shape = detail::parse_shape(entry.at("shape"), obj.name);
        if (!names.insert(obj.name).second)
            throw SchemaError("scene: duplicate object name " + obj.name);
        scene.push_back(std::move(obj));
    }
    return scene;
}

inline std::string to_json(const Scene& scene) {
    nlohmann::json doc;
    auto& objects = doc["objects"] = nlohmann::json::array();
    for (const SceneObject& obj : scene) {
        nlohmann::json entry;
        entry["name"] = obj.name;
        entry["role"] = to_string(obj.role);
        entry["shape"] = detail::shape_to_json(obj.shape);
        objects.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

// -- Contacts and pose instances ------------------------------------------

/// A realized contact: the link in contact, its mechanical model, and the
/// location and outward surface normal of the touch.
struct Contact {
    std::string link;
    ContactModel model = ContactModel::Plane;
    Vec3 position;
    Vec3 normal;
};

inline Contact make_contact(std::string link, ContactType type, const Vec3& position,
                            const Vec3& normal) {
    if (std::abs(normal.norm() - 1.0) > 1e-6)
        throw SchemaError("contact normal must be unit length");
    return {std::move(link), contact_model_for(type), position, normal};
}

/// An instantiated taxonomy class: id, center of mass (if known), the
/// realized contact set and the class's neighbor ids.
struct SupportPoseInstance {
    std::string class_id;
    std::optional<Vec3> com;  // empty = unknown CoM
    std::vector<Contact> contacts;
    std::vector<std::string> neighbor_ids;
};

/// Builds a pose instance for `class_id`, checking that the number of
/// contacts matches the class's support count ("0.0" takes zero) and copying
/// the neighbor set from the taxonomy.
inline SupportPoseInstance instantiate_pose(const std::string& class_id, std::optional<Vec3> com,
                                            std::vector<Contact> contacts,
                                            const TaxonomyGraph& graph) {
    const SupportClass& cls = graph.require(class_id);
    if (contacts.size() != cls.spec.supports.size())
        throw CountMismatch("class " + class_id + " takes " +
                            std::to_string(cls.spec.supports.size()) + " contacts, got " +
                            std::to_string(contacts.size()));
    SupportPoseInstance instance;
    instance.class_id = class_id;
    instance.com = com;
    instance.contacts = std::move(contacts);
    instance.neighbor_ids = cls.neighbors;
    return instance;
}

}  // namespace wbpose

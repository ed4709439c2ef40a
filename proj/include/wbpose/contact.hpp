#pragma once

// Proximity queries against a scene. A probe confirms or refutes a support
// hypothesis: it returns the nearest object within epsilon of a query point,
// along with the closest surface point and outward normal.

#include <optional>
#include <string>
#include <string_view>

#include "wbpose/errors.hpp"
#include "wbpose/geom.hpp"
#include "wbpose/motion.hpp"
#include "wbpose/taxonomy.hpp"

namespace wbpose {

struct ContactQuery {
    Vec3 point;
    double epsilon = 0.02;  // meters, > 0
};

struct ContactHit {
    std::string object;
    double distance = 0.0;
    Vec3 closest;
    Vec3 normal;
    std::optional<ContactType> inferred_type;  // filled once the end-effector is known
};

/// Nearest object within `epsilon` of `point`, or nothing. Ties are broken
/// by scene declaration order.
inline std::optional<ContactHit> probe(const Vec3& point, const Scene& scene, double epsilon) {
    std::optional<ContactHit> best;
    for (const SceneObject& obj : scene) {
        const SurfacePoint sp = distance_to(point, obj.shape);
        if (sp.distance > epsilon) continue;
        if (!best || sp.distance < best->distance)
            best = ContactHit{obj.name, sp.distance, sp.closest, sp.normal, std::nullopt};
    }
    return best;
}

/// Contact type a hit provides through a given body segment. Feet give Foot,
/// knees give Knee; a hand gives Hold on a capsule (a graspable handle) and
/// Palm on anything else.
inline ContactType infer_contact_type(std::string_view segment, const ContactHit& hit,
                                      const Scene& scene) {
    if (is_foot(segment)) return ContactType::Foot;
    if (is_knee(segment)) return ContactType::Knee;
    if (is_hand(segment)) {
        for (const SceneObject& obj : scene)
            if (obj.name == hit.object)
                return std::holds_alternative<Capsule>(obj.shape) ? ContactType::Hold
                                                                  : ContactType::Palm;
        throw UnknownSegment("hit object " + hit.object + " is not in the scene");
    }
    throw UnknownSegment("segment " + std::string(segment) + " cannot provide support");
}

}  // namespace wbpose

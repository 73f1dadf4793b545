#pragma once

// Line-oriented scene files: field, named points and lines, singularity
// declarations, optional symmetry, degree, surface configuration and tasks.

#include "godeaux/linear_system.hpp"
#include "godeaux/surface.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

struct SceneIssue {
    int line = 0;
    std::string message;
};

/// All problems found in a scene, each with its line number.
class SceneError : public std::runtime_error {
public:
    explicit SceneError(std::vector<SceneIssue> issues);
    const std::vector<SceneIssue>& issues() const { return issues_; }

private:
    std::vector<SceneIssue> issues_;
};

struct ScenePoint {
    std::string name;
    Point3 coords;
    int param_coord = -1;  // coordinate holding the family parameter `s`, if any
    int line = 0;
};

struct SceneLine {
    std::string name;
    PlaneCurve form;
    int line = 0;
};

struct SceneSing {
    std::string point;
    std::vector<int> multiplicities;
    std::string tangent;  // line name, "free", or empty for [m]
    int line = 0;
};

struct SceneSymmetry {
    Matrix matrix;
    bool plus = true;
};

struct SceneComponent {
    std::string name;
    std::string line_name;  // a declared line, or empty
    int degree = 0;         // for the curve component (declared singularities of the scene)
};

struct SceneDuVal {
    std::array<std::string, 7> q;
    std::array<std::string, 3> r;
};

struct SceneCampedelli {
    std::string p0;
    std::array<std::string, 5> p;
    std::array<std::string, 5> tangents;
};

struct SceneFile {
    std::vector<Rational> minimal_polynomial;  // empty: rational field
    FieldPtr field;
    std::vector<ScenePoint> points;
    std::vector<SceneLine> lines;
    std::vector<SceneSing> sings;
    std::optional<SceneSymmetry> symmetry;
    std::optional<int> degree;
    std::optional<SceneDuVal> duval;
    std::optional<SceneCampedelli> campedelli;
    std::vector<SceneComponent> components;
    std::optional<std::string> fixed;  // line name
    std::optional<std::string> curve;  // path relative to the scene, or golden:<name>
    std::vector<std::string> tasks;

    const ScenePoint* point(const std::string& name) const;
    const SceneLine* line(const std::string& name) const;
    /// Name of the point carrying the family parameter, or empty.
    std::string parametric_point() const;

    /// Declared singularities (the moving point excluded).
    Scheme scheme() const;
    /// Declared singularities plus their images under the symmetry (needs the
    /// degree); images take the name of a declared point at the same position.
    Scheme full_scheme(const std::string& eigenspace = "") const;
    /// Symmetry with an optional eigenspace override ("plus" / "minus").
    std::optional<Symmetry> symmetry_for(const std::string& eigenspace = "") const;
    /// The family of the `locus` task.
    ParamScheme param_scheme() const;
    /// Du Val configuration; `curve` is the solved or loaded curve of the
    /// curve component, if known.
    DuValConfig duval_config(const std::optional<PlaneCurve>& curve) const;
    CampedelliConfig campedelli_config(const std::optional<PlaneCurve>& curve) const;

    /// The scene over Q[t]/(m) with the family parameter s set to t.
    SceneFile specialize(const std::vector<Rational>& minimal_polynomial) const;

    friend bool operator==(const SceneFile& a, const SceneFile& b);
};

/// Throws SceneError with every problem found.
SceneFile parse_scene(const std::string& text);

/// Canonical text; parse_scene(write_scene(s)) == s.
std::string write_scene(const SceneFile& s);

}  // namespace godeaux

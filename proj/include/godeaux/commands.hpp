#pragma once

// The pipelines behind the command-line tool. Every command returns a report
// that renders as canonical text or as JSON {task, status, data, witnesses}.

#include "godeaux/scene.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace godeaux {

struct CommandOptions {
    std::string curve_path;     // --curve
    std::uint64_t modp = 0;     // --modp: prime for the mod-p prefilters
    std::string eigenspace;     // --eigenspace plus|minus
    int threads = 1;
    std::string scene_dir = ".";// base for relative curve paths
    std::string out_dir;        // reproduce: where curve files are written (empty: nowhere)
    bool quick = false;         // verify/torsion: skip the singular scan and the factor count
};

enum class Status { Ok, Negative, Error };
const char* status_name(Status s);

struct Report {
    std::string task;
    Status status = Status::Ok;
    std::vector<std::string> lines;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();

    /// 0 ok, 1 mathematical negative, 2 usage or validation error.
    int exit_code() const;
    void say(const std::string& line) { lines.push_back(line); }
    void negative(const std::string& line) {
        status = Status::Negative;
        lines.push_back(line);
    }
    std::string text() const;
    std::string json() const;
};

/// Curve for a scene: --curve, then the scene's `curve`, then the unique
/// solution of its system.
PlaneCurve scene_curve(const SceneFile& s, const CommandOptions& opt);

Report cmd_dim(const SceneFile& s, const CommandOptions& opt);
Report cmd_solve(const SceneFile& s, const CommandOptions& opt);
Report cmd_verify(const SceneFile& s, const CommandOptions& opt);
Report cmd_invariants(const SceneFile& s, const CommandOptions& opt);
Report cmd_torsion(const SceneFile& s, const CommandOptions& opt);
Report cmd_locus(const SceneFile& s, const CommandOptions& opt);

/// target: ex-z4, ex-deg11 or ex-deg11-full.
Report cmd_reproduce(const std::string& target, const CommandOptions& opt);

/// Full command-line entry point (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace godeaux

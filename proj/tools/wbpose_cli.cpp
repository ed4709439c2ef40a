// Command-line front end for the whole-body pose toolkit.
//
// Exit codes: 0 success, 1 validation or domain failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wbpose/actions.hpp"
#include "wbpose/posegraph.hpp"
#include "wbpose/segmentation.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wbpose::Error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wbpose::Error("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

wbpose::TaxonomyGraph active_taxonomy(const std::string& override_path) {
    if (override_path.empty()) return wbpose::default_taxonomy();
    return wbpose::load_taxonomy(read_file(override_path));
}

wbpose::SupportSpec parse_support_tokens(const std::string& tokens, bool torso) {
    wbpose::SupportSpec spec;
    spec.torso_contact = torso;
    std::stringstream stream(tokens);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw wbpose::SchemaError("support token \"" + token + "\" is not Limb:ContactType");
        spec.supports.push_back({wbpose::limb_class_from(token.substr(0, colon)),
                                 wbpose::contact_type_from(token.substr(colon + 1))});
    }
    spec.canonicalize();
    return spec;
}

int run_taxonomy_validate(const std::string& taxonomy_path) {
    wbpose::ParsedTaxonomy parsed =
        taxonomy_path.empty() ? wbpose::ParsedTaxonomy{wbpose::default_taxonomy(), {}}
                              : wbpose::parse_taxonomy(read_file(taxonomy_path));
    wbpose::ValidationReport report = wbpose::validate(parsed.graph);
    report.violations.insert(report.violations.begin(), parsed.violations.begin(),
                             parsed.violations.end());
    std::printf("%zu classes, %zu violations\n", report.class_count, report.violations.size());
    std::printf("standing %zu, kneeling %zu, resting %zu, edges %zu\n", report.standing,
                report.kneeling, report.resting, report.edge_count);
    for (const auto& v : report.violations) std::printf("violation: %s\n", v.c_str());
    return report.ok() ? 0 : 1;
}

std::string speeds_csv(const wbpose::MotionSequence& motion, double cutoff_hz) {
    const wbpose::SpeedTrace speeds = wbpose::end_effector_speeds(motion, cutoff_hz);
    std::string csv = "frame,RightFoot,LeftFoot,RightHand,LeftHand\n";
    char line[160];
    for (size_t f = 0; f < motion.frame_count; ++f) {
        std::snprintf(line, sizeof line, "%zu,%.6f,%.6f,%.6f,%.6f\n", f,
                      speeds.at("RightFoot")[f], speeds.at("LeftFoot")[f],
                      speeds.at("RightHand")[f], speeds.at("LeftHand")[f]);
        csv += line;
    }
    return csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"whole-body support-pose taxonomy and motion analysis"};
    app.require_subcommand(1);
    std::string taxonomy_path;
    app.add_option("--taxonomy-file", taxonomy_path, "taxonomy JSON overriding the built-in table")
        ->check(CLI::ExistingFile);

    // taxonomy {validate | neighbors <id> | classify --supports <spec> | export}
    CLI::App* taxonomy = app.add_subcommand("taxonomy", "inspect and query the pose taxonomy");
    taxonomy->require_subcommand(1);
    taxonomy->add_subcommand("validate", "check every structural invariant of the table");

    std::string neighbor_id;
    CLI::App* cmd_neighbors = taxonomy->add_subcommand("neighbors", "list a class's neighbors");
    cmd_neighbors->add_option("id", neighbor_id, "class id, e.g. 2.3")->required();

    std::string support_tokens;
    bool torso_flag = false;
    CLI::App* cmd_classify =
        taxonomy->add_subcommand("classify", "map a support multiset to its class id");
    cmd_classify
        ->add_option("--supports", support_tokens,
                     "comma-separated Limb:ContactType tokens, e.g. \"Leg:Foot,Leg:Foot\"")
        ->required();
    cmd_classify->add_flag("--torso", torso_flag, "the torso is also in contact");

    std::string export_out;
    CLI::App* cmd_export = taxonomy->add_subcommand("export", "write the active taxonomy as JSON");
    cmd_export->add_option("--out", export_out, "output path (stdout when omitted)");

    // speeds
    std::string motion_path, speeds_out;
    double cutoff_hz = 1.5;
    CLI::App* cmd_speeds =
        app.add_subcommand("speeds", "per-frame end-effector speeds after filtering, as CSV");
    cmd_speeds->add_option("--motion", motion_path, "motion JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_speeds->add_option("--cutoff-hz", cutoff_hz, "low-pass cutoff frequency");
    cmd_speeds->add_option("--out", speeds_out, "output path (stdout when omitted)");

    // segment
    std::string seg_motion, seg_scene, seg_out;
    wbpose::PipelineConfig config;
    CLI::App* cmd_segment =
        app.add_subcommand("segment", "segment a motion by support-pose class");
    cmd_segment->add_option("--motion", seg_motion, "motion JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_segment->add_option("--scene", seg_scene, "scene JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_segment->add_option("--cutoff-hz", config.cutoff_hz, "low-pass cutoff frequency");
    cmd_segment->add_option("--threshold", config.speed_threshold, "support speed threshold, m/s");
    cmd_segment->add_option("--contact-eps", config.contact_epsilon, "contact probe epsilon, m");
    cmd_segment->add_option("--min-frames", config.min_segment_frames,
                            "merge segments shorter than this");
    cmd_segment->add_option("--out", seg_out, "report output path")->required();

    // graph
    std::string graph_report, graph_out;
    CLI::App* cmd_graph =
        app.add_subcommand("graph", "export a report's pose-transition graph as DOT");
    cmd_graph->add_option("--report", graph_report, "segment report JSON")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_graph->add_option("--out", graph_out, "DOT output path")->required();

    // actions
    std::string act_report, act_motion, act_scene, act_out;
    CLI::App* cmd_actions =
        app.add_subcommand("actions", "classify a motion into action type I/II/III spans");
    cmd_actions->add_option("--report", act_report, "segment report JSON")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_actions->add_option("--motion", act_motion, "motion JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_actions->add_option("--scene", act_scene, "scene JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_actions->add_option("--out", act_out, "action spans output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (taxonomy->parsed()) {
            if (taxonomy->get_subcommand("validate")->parsed())
                return run_taxonomy_validate(taxonomy_path);

            const wbpose::TaxonomyGraph graph = active_taxonomy(taxonomy_path);
            if (cmd_neighbors->parsed()) {
                for (const auto& n : wbpose::neighbors(neighbor_id, graph))
                    std::printf("%s\n", n.c_str());
            } else if (cmd_classify->parsed()) {
                std::printf("%s\n",
                            wbpose::classify(parse_support_tokens(support_tokens, torso_flag),
                                             graph)
                                .c_str());
            } else if (cmd_export->parsed()) {
                emit(export_out, wbpose::to_json(graph));
            }
            return 0;
        }

        if (cmd_speeds->parsed()) {
            const auto motion = wbpose::parse_motion(read_file(motion_path));
            emit(speeds_out, speeds_csv(motion, cutoff_hz));
            return 0;
        }

        if (cmd_segment->parsed()) {
            const auto motion = wbpose::parse_motion(read_file(seg_motion));
            const auto scene = wbpose::parse_scene(read_file(seg_scene));
            const auto graph = active_taxonomy(taxonomy_path);
            const auto report = wbpose::run_pipeline(motion, scene, config, graph);
            write_file(seg_out, wbpose::to_json(report));
            std::printf("%zu segments, %zu warnings\n", report.segments.size(),
                        report.warnings.size());
            return 0;
        }

        if (cmd_graph->parsed()) {
            const auto report = wbpose::report_from_json(read_file(graph_report));
            const auto graph = wbpose::build_graph(report);
            write_file(graph_out, wbpose::to_dot(graph));
            const auto s = wbpose::stats(graph, active_taxonomy(taxonomy_path));
            std::printf("%zu nodes, %zu edges, %zu steps, compliance %.3f\n", graph.nodes.size(),
                        graph.edges.size(), s.steps, s.compliance);
            return 0;
        }

        if (cmd_actions->parsed()) {
            const auto report = wbpose::report_from_json(read_file(act_report));
            const auto motion = wbpose::parse_motion(read_file(act_motion));
            const auto scene = wbpose::parse_scene(read_file(act_scene));
            const auto contacts = wbpose::detect_manipulation_contacts(motion, scene, report.config);
            const auto spans = wbpose::classify_actions(report, contacts);
            write_file(act_out, wbpose::to_json(spans));
            std::printf("%zu spans\n", spans.size());
            return 0;
        }
    } catch (const wbpose::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

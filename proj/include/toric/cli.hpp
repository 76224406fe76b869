#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "toric/gallery.hpp"

namespace toric::cli {

enum ExitCode : int { Ok = 0, PropertyFailed = 1, Malformed = 2, Invariant = 3 };

namespace detail {

inline Fan load(const std::string& path) { return read_fan_file(path); }

inline json validation_json(const ValidationReport& rep)
{
    json failures = json::array();
    for (const auto& f : rep.failures)
        failures.push_back(f);
    return json{{"smooth", rep.smooth}, {"complete", rep.complete}, {"proper", rep.proper},
                {"failures", std::move(failures)}};
}

/** Fails with PropertyFailed when the fan is not smooth and complete. */
struct Checked
{
    Fan fan;
    ValidationReport rep;
};

inline Checked load_checked(const std::string& path)
{
    Fan f = load(path);
    ValidationReport rep = validate(f);
    return {std::move(f), std::move(rep)};
}

inline Wall wall_from_indices(const Fan& f, const std::vector<std::size_t>& rays)
{
    for (auto r : rays)
        if (r >= f.num_rays())
            throw MalformedInput("ray index " + std::to_string(r) + " out of range");
    return find_wall(f, make_cone(rays));
}

struct Result
{
    int code = Ok;
    json report;
    std::string summary;
};

inline Result invalid_fan(const ValidationReport& rep)
{
    std::string msg = "fan is not smooth and complete";
    if (!rep.failures.empty())
        msg += ": " + rep.failures.front();
    return {PropertyFailed, validation_json(rep), msg};
}

inline Result check(const std::string& path)
{
    auto [fan, rep] = load_checked(path);
    if (!rep.ok())
        return invalid_fan(rep);
    const MoriCone mc(fan);
    const ProjectivityVerdict v = is_projective(mc);
    json j = validation_json(rep);
    j.update(verdict_to_json(v));
    j["rho"] = picard_number(fan);
    j["fano"] = is_fano(fan);
    std::ostringstream s;
    s << "dim " << fan.dim() << ", " << fan.num_rays() << " rays, " << fan.cones().size()
      << " cones, rho " << picard_number(fan) << ", " << (v.projective ? "projective" : "not projective")
      << (is_fano(fan) ? ", Fano" : "");
    return {Ok, std::move(j), s.str()};
}

inline Result mori(const std::string& path)
{
    auto [fan, rep] = load_checked(path);
    if (!rep.ok())
        return invalid_fan(rep);
    const MoriCone mc(fan);
    json ws = json::array();
    std::size_t extremal = 0;
    for (std::size_t i = 0; i < mc.walls.size(); ++i) {
        json w = relation_to_json(mc.relations[i]);
        const bool ext = is_extremal_generator(mc, mc.generator_of[i]);
        w["anticanonical_degree"] = integer_to_json(anticanonical_degree(mc.relations[i]));
        w["class_index"] = mc.generator_of[i];
        w["extremal"] = ext;
        w["mori_extremal"] = ext && anticanonical_degree(mc.relations[i]) > 0;
        if (ext) {
            w["contraction"] = contraction_to_json(classify_contraction(mc, fan.dim(), mc.walls[i]));
            ++extremal;
        }
        ws.push_back(std::move(w));
    }
    json j{{"walls", std::move(ws)},
           {"classes", mc.generators.size()},
           {"extremal_classes", extremal_generators(mc).size()},
           {"mori_extremal_rays", count_mori_extremal_rays(mc)},
           {"projectivity", verdict_to_json(is_projective(mc))}};
    std::ostringstream s;
    s << mc.walls.size() << " walls, " << mc.generators.size() << " distinct classes, "
      << j["extremal_classes"].get<std::size_t>() << " extremal, " << count_mori_extremal_rays(mc)
      << " Mori-extremal";
    return {Ok, std::move(j), s.str()};
}

inline Result blowup(const std::string& path, const std::vector<std::size_t>& center)
{
    const Fan fan = load(path);
    const BlowupRecord rec = star_subdivision(fan, center);
    return {Ok, fan_to_json(rec.result),
            "new ray " + std::to_string(rec.new_ray) + ", " + std::to_string(rec.result.cones().size()) + " cones"};
}

inline Result blowdown(const std::string& path, std::size_t ray, const std::vector<std::size_t>& sum)
{
    const Fan out = blow_down(load(path), ray, sum);
    return {Ok, fan_to_json(out),
            std::to_string(out.num_rays()) + " rays, " + std::to_string(out.cones().size()) + " cones"};
}

inline Result analyze(const std::string& path, const std::vector<std::size_t>& curve)
{
    auto [fan, rep] = load_checked(path);
    if (!rep.ok())
        return invalid_fan(rep);
    const AnalysisReport r = analyze_pair(fan, wall_from_indices(fan, curve));
    std::ostringstream s;
    s << "X " << (r.x_projective ? "projective" : "not projective") << ", blow-up "
      << (r.xt_projective ? "projective" : "not projective") << ", " << r.findings.size() << " finding(s)";
    for (const auto& f : r.findings)
        s << " " << to_string(f.kind);
    return {Ok, report_to_json(r), s.str()};
}

inline Result ewald_suspend(const std::string& path, const std::vector<std::int64_t>& v)
{
    auto [fan, rep] = load_checked(path);
    if (!rep.ok())
        return invalid_fan(rep);
    const LatticePoint lv(v.begin(), v.end());
    const SuspensionRecord rec = suspend(fan, lv);
    return {Ok, fan_to_json(rec.suspended),
            "ray_up " + std::to_string(rec.ray_up) + ", ray_down " + std::to_string(rec.ray_down)};
}

inline Result ewald_blowdown(const std::string& path, std::size_t ray)
{
    auto [fan, rep] = load_checked(path);
    if (!rep.ok())
        return invalid_fan(rep);
    if (ray >= fan.num_rays())
        throw MalformedInput("ray index out of range");
    const Fan out = ewald_blow_down(suspend(fan, fan.ray(ray)), ray);
    return {Ok, fan_to_json(out),
            "dim " + std::to_string(out.dim()) + ", rho " + std::to_string(picard_number(out))};
}

inline Result ewald_tower_cmd(const std::string& path, const std::vector<std::size_t>& curve, std::size_t steps)
{
    auto [fan, rep] = load_checked(path);
    if (!rep.ok())
        return invalid_fan(rep);
    const auto tower = ewald_tower(fan, wall_from_indices(fan, curve), steps);
    json out = json::array();
    for (const auto& st : tower) {
        json j{{"fan", fan_to_json(st.fan)}, {"curve", wall_to_json(st.curve)}};
        j["divisor_ray"] = st.divisor_ray ? json(*st.divisor_ray) : json(nullptr);
        out.push_back(std::move(j));
    }
    return {Ok, json{{"steps", std::move(out)}},
            std::to_string(steps) + " step(s), final dim " + std::to_string(tower.back().fan.dim())};
}

inline Result gallery(const std::string& name, const std::vector<std::int64_t>& params, const std::string& out_path)
{
    const GalleryEntry e = get_fan(name, params);
    json walls = json::array();
    for (const auto& w : e.notes.distinguished)
        walls.push_back(wall_to_json(w));
    json j{{"name", e.name},
           {"params", e.params},
           {"projective", e.notes.projective},
           {"rho", e.notes.rho},
           {"dim", e.notes.dim},
           {"distinguished", std::move(walls)},
           {"fan", fan_to_json(e.fan)}};
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f)
            throw MalformedInput("cannot write " + out_path);
        f << fan_to_json(e.fan).dump(2) << '\n';
    }
    return {Ok, std::move(j), e.name + ": rho " + std::to_string(e.notes.rho) + ", " +
                                  (e.notes.projective ? "projective" : "not projective")};
}

inline int error_code(const ToricError& e)
{
    if (dynamic_cast<const InvariantViolation*>(&e))
        return Invariant;
    if (dynamic_cast<const NotComplete*>(&e))
        return PropertyFailed;
    return Malformed;
}

} // namespace detail

/**
 * Runs one command. args excludes the program name. JSON goes to out,
 * a one-line summary or error message to err.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Projectivity, Mori cones and birational surgery of smooth complete toric varieties", "toric"};
    app.require_subcommand(1);

    std::string path, name, out_path;
    std::vector<std::size_t> indices, sum;
    std::vector<std::int64_t> numbers;
    std::size_t ray = 0, steps = 0;

    auto* check = app.add_subcommand("check", "validate, decide projectivity, Fano test and Picard number");
    check->add_option("fan", path, "fan JSON file")->required();

    auto* mori = app.add_subcommand("mori", "walls, relations, classes, extremality and contraction types");
    mori->add_option("fan", path, "fan JSON file")->required();

    auto* blowup = app.add_subcommand("blowup", "star subdivision along a cone");
    blowup->add_option("fan", path, "fan JSON file")->required();
    blowup->add_option("--center", indices, "ray indices of the center")->required()->delimiter(',');

    auto* blowdown = app.add_subcommand("blowdown", "inverse star subdivision");
    blowdown->add_option("fan", path, "fan JSON file")->required();
    blowdown->add_option("--ray", ray, "ray to remove")->required();
    blowdown->add_option("--sum", sum, "rays whose generators sum to the removed one")->required()->delimiter(',');

    auto* analyze = app.add_subcommand("analyze", "classify a non-projective X made projective by a curve blow-up");
    analyze->add_option("fan", path, "fan JSON file")->required();
    analyze->add_option("--curve", indices, "wall rays of the curve")->required()->delimiter(',');

    auto* ewald = app.add_subcommand("ewald", "suspension construction");
    ewald->require_subcommand(1);
    auto* suspend_cmd = ewald->add_subcommand("suspend", "suspension of a fan along v");
    suspend_cmd->add_option("fan", path, "fan JSON file")->required();
    suspend_cmd->add_option("--v", numbers, "lattice point v")->required()->delimiter(',')->allow_extra_args(false);
    auto* ewald_down = ewald->add_subcommand("blowdown", "suspend along a ray generator and contract its divisor");
    ewald_down->add_option("fan", path, "fan JSON file")->required();
    ewald_down->add_option("--ray", ray, "divisor ray")->required();
    auto* tower = ewald->add_subcommand("tower", "iterate the construction from a curve");
    tower->add_option("fan", path, "fan JSON file")->required();
    tower->add_option("--curve", indices, "wall rays of the curve")->required()->delimiter(',');
    tower->add_option("--steps", steps, "number of steps")->required();

    auto* gallery = app.add_subcommand("gallery", "named fans");
    gallery->add_option("name", name, "pn, hirzebruch, p1xp1, oda3, xab, ewald-tower")->required();
    gallery->add_option("params", numbers, "integer parameters");
    gallery->add_option("--out", out_path, "write the fan to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return Malformed;
    }

    detail::Result r;
    try {
        if (app.got_subcommand(check))
            r = detail::check(path);
        else if (app.got_subcommand(mori))
            r = detail::mori(path);
        else if (app.got_subcommand(blowup))
            r = detail::blowup(path, indices);
        else if (app.got_subcommand(blowdown))
            r = detail::blowdown(path, ray, sum);
        else if (app.got_subcommand(analyze))
            r = detail::analyze(path, indices);
        else if (suspend_cmd->parsed())
            r = detail::ewald_suspend(path, numbers);
        else if (ewald_down->parsed())
            r = detail::ewald_blowdown(path, ray);
        else if (tower->parsed())
            r = detail::ewald_tower_cmd(path, indices, steps);
        else if (app.got_subcommand(gallery))
            r = detail::gallery(name, numbers, out_path);
    } catch (const ToricError& e) {
        r.code = detail::error_code(e);
        r.report = json{{"error", e.kind()}, {"message", e.what()}};
        r.summary = std::string(e.kind()) + ": " + e.what();
    }
    out << r.report.dump() << '\n';
    err << r.summary << '\n';
    return r.code;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace toric::cli

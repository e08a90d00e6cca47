// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/cli.hpp"

#include "powerfractal/analysis.hpp"
#include "powerfractal/field.hpp"
#include "powerfractal/imaging.hpp"
#include "powerfractal/presets.hpp"
#include "powerfractal/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace powerfractal::cli {

namespace fs = std::filesystem;

namespace {

// Window flags; unset members fall back to the mode's default window.
struct WindowFlags {
    std::optional<double> center_re;
    std::optional<double> center_im;
    std::optional<double> width;
    std::uint32_t cols = 512;
    std::uint32_t rows = 512;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--center-re", center_re, "Window center, real part");
        cmd.add_option("--center-im", center_im, "Window center, imaginary part");
        cmd.add_option("--width", width, "Window width in complex-plane units")
            ->check(CLI::PositiveNumber);
        cmd.add_option("--cols", cols, "Image width in pixels")->check(CLI::Range(1u, 1u << 16));
        cmd.add_option("--rows", rows, "Image height in pixels")->check(CLI::Range(1u, 1u << 16));
    }

    GridSpec resolve(GridSpec base) const
    {
        if (center_re) base.center.re = *center_re;
        if (center_im) base.center.im = *center_im;
        if (width) base.width = *width;
        base.cols = cols;
        base.rows = rows;
        base.validate();
        return base;
    }
};

struct ScalingFlags {
    std::string mode = "direct";
    ScalingConfig config;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--scaling", mode, "Power to parameter mapping")
            ->check(CLI::IsMember({"direct", "normalized"}));
        cmd.add_option("--cx", config.c_x, "Parameter extent of M on the positive real axis")
            ->check(CLI::PositiveNumber);
        cmd.add_option("--cy", config.c_y, "Parameter extent of M on the positive imaginary axis")
            ->check(CLI::PositiveNumber);
        cmd.add_option("--p-base", config.p_base, "Real power mapped onto --cx")
            ->check(CLI::PositiveNumber);
        cmd.add_option("--q-base", config.q_base, "Reactive power mapped onto --cy")
            ->check(CLI::PositiveNumber);
    }

    ScalingConfig resolve() const
    {
        ScalingConfig sc = config;
        sc.mode = mode == "normalized" ? ScalingMode::Normalized : ScalingMode::Direct;
        sc.validate();
        return sc;
    }
};

struct Budgets {
    std::uint32_t render = kRenderBudget;
    std::uint32_t classify = kClassifyBudget;
    double bailout = 2.0;

    void attach(CLI::App& cmd, bool with_classify)
    {
        cmd.add_option("--max-iter", render, "Iteration budget for rendering")
            ->check(CLI::Range(1u, kMaxIterationBudget));
        if (with_classify) {
            cmd.add_option("--classify-iter", classify, "Iteration budget for classification")
                ->check(CLI::Range(1u, kMaxIterationBudget));
        }
        cmd.add_option("--bailout", bailout, "Escape radius (>= 2)")->check(CLI::Range(2.0, 1e150));
    }

    IterationConfig render_cfg() const { return {bailout, render}; }
    IterationConfig classify_cfg() const { return {bailout, classify}; }
};

std::string complex_label(ComplexValue c)
{
    const std::string im = format_fixed(c.im);
    return format_fixed(c.re) + (im.front() == '-' ? "" : "+") + im + "i";
}

ImageBuffer render(const GridSpec& spec, const RenderMode& mode, const IterationConfig& cfg,
                   unsigned threads)
{
    return colorize(compute_escape_field(spec, mode, cfg, threads));
}

void ensure_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string() +
                                 (ec ? ": " + ec.message() : ""));
    }
}

void write_report(const fs::path& path, const std::vector<ClassificationRecord>& records)
{
    std::ofstream csv(path, std::ios::binary | std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot open " + path.string() + " for writing");
    csv << kCsvHeader << '\n';
    for (const auto& rec : records) csv << csv_row(rec) << '\n';
    csv.flush();
    if (!csv) throw std::runtime_error("failed writing " + path.string());
}

std::string verdict_cell(const ConnectivityVerdict& v)
{
    return to_string(v.decision) + " (" + evidence_label(v) + ")";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Complex power operating points on the quadratic parameter plane", "powerfractal"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker cap for rendering (0 = all cores)");

    // mandelbrot
    auto* mandel = app.add_subcommand("mandelbrot", "Render the Mandelbrot set");
    WindowFlags mandel_window;
    Budgets mandel_budget;
    ScalingFlags mandel_scaling;
    std::vector<double> mandel_mark;
    std::string mandel_out;
    mandel_window.attach(*mandel);
    mandel_budget.attach(*mandel, false);
    mandel_scaling.attach(*mandel);
    mandel->add_option("--mark", mandel_mark, "Mark the operating point P,Q")
        ->delimiter(',')
        ->expected(2)
        ->allow_extra_args(false);
    mandel->add_option("--out", mandel_out, "Output PPM file")->required();

    // julia
    auto* julia = app.add_subcommand("julia", "Render the filled Julia set of one operating point");
    WindowFlags julia_window;
    Budgets julia_budget;
    ScalingFlags julia_scaling;
    double julia_p = 0.0;
    double julia_q = 0.0;
    std::string julia_out;
    julia_window.attach(*julia);
    julia_budget.attach(*julia, true);
    julia_scaling.attach(*julia);
    julia->add_option("--p", julia_p, "Real power P");
    julia->add_option("--q", julia_q, "Reactive power Q");
    julia->add_option("--out", julia_out, "Output PPM file")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "Classify one operating point");
    Budgets classify_budget;
    ScalingFlags classify_scaling;
    double classify_p = 0.0;
    double classify_q = 0.0;
    std::string classify_format = "line";
    classify_scaling.attach(*classify);
    classify->add_option("--classify-iter", classify_budget.classify,
                         "Iteration budget for classification")
        ->check(CLI::Range(1u, kMaxIterationBudget));
    classify->add_option("--bailout", classify_budget.bailout, "Escape radius (>= 2)")
        ->check(CLI::Range(2.0, 1e150));
    classify->add_option("--p", classify_p, "Real power P");
    classify->add_option("--q", classify_q, "Reactive power Q");
    classify->add_option("--format", classify_format, "Output format")
        ->check(CLI::IsMember({"line", "json"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Sweep real or reactive power along one axis");
    WindowFlags sweep_window;
    Budgets sweep_budget;
    ScalingFlags sweep_scaling;
    std::string sweep_preset;
    std::string sweep_axis;
    std::vector<double> sweep_values;
    std::optional<double> sweep_p;
    std::optional<double> sweep_q;
    std::string sweep_dir;
    sweep_window.attach(*sweep);
    sweep_budget.attach(*sweep, true);
    sweep_scaling.attach(*sweep);
    auto* preset_opt = sweep->add_option("--preset", sweep_preset, "Named sweep")
                           ->check(CLI::IsMember({"fig3", "fig4"}));
    auto* axis_opt = sweep->add_option("--axis", sweep_axis, "Swept component")
                         ->check(CLI::IsMember({"real", "reactive"}));
    sweep->add_option("--values", sweep_values, "Swept values (comma separated)")->delimiter(',');
    sweep->add_option("--p", sweep_p, "Fixed real power for a reactive sweep");
    sweep->add_option("--q", sweep_q, "Fixed reactive power for a real sweep");
    sweep->add_option("--out-dir", sweep_dir, "Output directory")->required();
    preset_opt->excludes(axis_opt);

    // quadrants
    auto* quadrants = app.add_subcommand("quadrants", "Four-quadrant study at (+-M, +-M)");
    Budgets quad_budget;
    ScalingFlags quad_scaling;
    double quad_magnitude = 0.22;
    std::uint32_t quad_cols = 512;
    std::uint32_t quad_rows = 512;
    std::string quad_dir;
    quad_budget.attach(*quadrants, true);
    quad_scaling.attach(*quadrants);
    quadrants->add_option("--magnitude", quad_magnitude, "Magnitude M of P and Q")
        ->check(CLI::NonNegativeNumber);
    quadrants->add_option("--cols", quad_cols, "Image width in pixels")
        ->check(CLI::Range(1u, 1u << 16));
    quadrants->add_option("--rows", quad_rows, "Image height in pixels")
        ->check(CLI::Range(1u, 1u << 16));
    quadrants->add_option("--out-dir", quad_dir, "Output directory")->required();

    // symmetry
    auto* symmetry = app.add_subcommand("symmetry", "Check the negation and conjugation identities");
    WindowFlags sym_window;
    Budgets sym_budget;
    ScalingFlags sym_scaling;
    double sym_p = 0.0;
    double sym_q = 0.0;
    std::uint64_t sym_samples = 1000;
    std::uint64_t sym_seed = 1;
    sym_window.attach(*symmetry);
    sym_budget.attach(*symmetry, false);
    sym_scaling.attach(*symmetry);
    symmetry->add_option("--p", sym_p, "Real power P");
    symmetry->add_option("--q", sym_q, "Reactive power Q");
    symmetry->add_option("--samples", sym_samples, "Number of sampled starting points")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32));
    symmetry->add_option("--seed", sym_seed, "Sampler seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*sweep && sweep_preset.empty() && (sweep_axis.empty() || sweep_values.empty())) {
            throw CLI::ValidationError("sweep", "needs --preset or both --axis and --values");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << active->help();
        return kExitUsage;
    }

    try {
        if (*mandel) {
            const GridSpec spec = mandel_window.resolve(GridSpec::mandelbrot_default());
            const ScalingConfig sc = mandel_scaling.resolve();
            std::optional<ComplexValue> marker;
            if (!mandel_mark.empty()) {
                const PowerPhasor s = PowerPhasor::checked(mandel_mark[0], mandel_mark[1]);
                marker = to_parameter(s, sc);
                // Fail before the render if the marker cannot be placed.
                complex_to_pixel(spec, *marker);
            }
            ImageBuffer img = render(spec, RenderMode::mandelbrot(), mandel_budget.render_cfg(), threads);
            if (marker) img = overlay_marker(std::move(img), spec, *marker);
            write_ppm(img, fs::path(mandel_out));
            out << "wrote " << mandel_out << " (" << spec.cols << "x" << spec.rows << ")\n";
            return kExitOk;
        }

        if (*julia) {
            const GridSpec spec = julia_window.resolve(GridSpec::julia_default());
            const ScalingConfig sc = julia_scaling.resolve();
            const PowerPhasor s = PowerPhasor::checked(julia_p, julia_q);
            const ComplexValue c = to_parameter(s, sc);
            const ImageBuffer img = render(spec, RenderMode::julia(c), julia_budget.render_cfg(), threads);
            write_ppm(img, fs::path(julia_out));
            const ConnectivityVerdict v = julia_connectivity(c, julia_budget.classify_cfg());
            out << "c=" << complex_label(c) << " verdict " << verdict_cell(v) << " budget "
                << julia_budget.classify << '\n';
            return kExitOk;
        }

        if (*classify) {
            const PowerPhasor s = PowerPhasor::checked(classify_p, classify_q);
            const ClassificationRecord rec = classify_operating_point(
                s, classify_scaling.resolve(), classify_budget.classify_cfg());
            out << (classify_format == "json" ? json_record(rec) : line_record(rec)) << '\n';
            return kExitOk;
        }

        if (*sweep) {
            SweepPreset preset;
            if (!sweep_preset.empty()) {
                preset = *find_preset(sweep_preset);
            } else {
                preset.axis = sweep_axis == "real" ? SweepAxis::Real : SweepAxis::Reactive;
                preset.name = sweep_axis == "real" ? "sweep_real" : "sweep_reactive";
                preset.values = sweep_values;
                preset.fixed_other = preset.axis == SweepAxis::Real ? sweep_q.value_or(0.0)
                                                                    : sweep_p.value_or(0.0);
            }
            const ScalingConfig sc = sweep_scaling.resolve();
            const GridSpec spec = sweep_window.resolve(GridSpec::julia_default());
            const fs::path dir(sweep_dir);
            ensure_dir(dir);

            std::vector<ClassificationRecord> records;
            out << std::left << std::setw(4) << "#" << std::setw(12) << "P" << std::setw(12) << "Q"
                << std::setw(26) << "c" << "verdict\n";
            bool flagged = false;
            for (std::size_t k = 0; k < preset.values.size(); ++k) {
                const PowerPhasor s = PowerPhasor::checked(preset.phasor(preset.values[k]).p,
                                                           preset.phasor(preset.values[k]).q);
                const ClassificationRecord rec =
                    classify_operating_point(s, sc, sweep_budget.classify_cfg());
                const fs::path image = dir / (preset.name + "_" + std::to_string(k + 1) + "_julia.ppm");
                write_ppm(render(spec, RenderMode::julia(rec.parameter), sweep_budget.render_cfg(), threads),
                          image);
                records.push_back(rec);

                const double swept = preset.axis == SweepAxis::Real ? rec.parameter.re : rec.parameter.im;
                const double limit = preset.axis == SweepAxis::Real ? sc.c_x : sc.c_y;
                const bool beyond = std::abs(swept) > limit;
                flagged = flagged || beyond;
                out << std::setw(4) << (std::to_string(k + 1) + (beyond ? "*" : ""))
                    << std::setw(12) << format_fixed(s.p) << std::setw(12) << format_fixed(s.q)
                    << std::setw(26) << complex_label(rec.parameter) << verdict_cell(rec.verdict)
                    << '\n';
            }
            if (flagged) {
                out << "* beyond the axis extent of M (" << format_fixed(sc.c_x) << " real, "
                    << format_fixed(sc.c_y) << " imaginary); value picked just past the limit\n";
            }
            write_report(dir / "report.csv", records);
            out << "wrote " << records.size() << " images and " << (dir / "report.csv").string() << '\n';
            return kExitOk;
        }

        if (*quadrants) {
            const ScalingConfig sc = quad_scaling.resolve();
            const fs::path dir(quad_dir);
            ensure_dir(dir);
            GridSpec mandel_spec = GridSpec::mandelbrot_default();
            GridSpec julia_spec = GridSpec::julia_default();
            mandel_spec.cols = julia_spec.cols = quad_cols;
            mandel_spec.rows = julia_spec.rows = quad_rows;

            std::vector<PowerPhasor> points = quadrant_study_points(quad_magnitude);
            if (quad_magnitude == 0.0) {
                err << "warning: magnitude 0 puts all four studies at the origin; emitting one record\n";
                points.resize(1);
            }
            std::vector<ClassificationRecord> records;
            for (const PowerPhasor& s : points) {
                const ClassificationRecord rec =
                    classify_operating_point(s, sc, quad_budget.classify_cfg());
                const std::string stem = "quadrant_" + std::string(to_string(rec.quadrant));
                complex_to_pixel(mandel_spec, rec.parameter);
                ImageBuffer m = render(mandel_spec, RenderMode::mandelbrot(), quad_budget.render_cfg(), threads);
                write_ppm(overlay_marker(std::move(m), mandel_spec, rec.parameter), dir / (stem + "_mandelbrot.ppm"));
                write_ppm(render(julia_spec, RenderMode::julia(rec.parameter), quad_budget.render_cfg(), threads),
                          dir / (stem + "_julia.ppm"));
                records.push_back(rec);
                out << line_record(rec) << '\n';
            }
            write_report(dir / "report.csv", records);
            out << "wrote " << 2 * records.size() << " images and " << (dir / "report.csv").string()
                << '\n';
            return kExitOk;
        }

        if (*symmetry) {
            const PowerPhasor s = PowerPhasor::checked(sym_p, sym_q);
            const ComplexValue c = to_parameter(s, sym_scaling.resolve());
            SymmetryOptions opts;
            opts.sample_count = sym_samples;
            opts.seed = sym_seed;
            opts.cfg = sym_budget.render_cfg();
            opts.window = sym_window.resolve(GridSpec::julia_default());
            opts.workers = threads;
            bool clean = true;
            for (const SymmetryReport& r :
                 {check_negation_symmetry(c, opts), check_conjugation_relation(c, opts)}) {
                out << r.relation_name << ": c=" << complex_label(c) << " samples "
                    << r.samples_tested << " mismatches " << r.mismatches << '\n';
                if (r.first_mismatch) {
                    const auto& m = *r.first_mismatch;
                    out << "  first mismatch at sample " << m.sample_index << " z="
                        << complex_label(m.input) << '\n';
                }
                clean = clean && r.clean();
            }
            return clean ? kExitOk : kExitFailure;
        }
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace powerfractal::cli

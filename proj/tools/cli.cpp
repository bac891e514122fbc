#include "cli.hpp"

#include "lllshift/error.hpp"
#include "lllshift/io.hpp"
#include "lllshift/separated.hpp"
#include "lllshift/shift.hpp"
#include "lllshift/solve.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>

namespace lllshift::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err)
{
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("lll-shift", std::move(sink));
    logger->set_pattern("[%l] %v");
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("LLL_SHIFT_LOG"); env && *env)
        level = spdlog::level::from_str(env);
    logger->set_level(level);
    return logger;
}

std::string approx(const Rational& r)
{
    std::ostringstream s;
    s << std::setprecision(10) << to_double(r);
    return s.str();
}

std::string interval(const Enclosure& e)
{
    return "[" + approx(e.lower) + ", " + approx(e.upper) + "]";
}

fs::path output_dir(const std::string& dir)
{
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec || !fs::is_directory(p))
        throw InvalidArgument("cannot use output directory " + dir);
    return p;
}

struct Options {
    std::uint32_t k = 2;
    std::size_t d_size = 1;
    std::string config;
    std::string instance;
    std::string solution;
    std::string input;
    std::string out = ".";
    std::uint64_t seed = 0;
    std::uint64_t max_resamples = 1'000'000;
    std::string solver = "mt";
    std::string side = "left";
};

class Runner {
public:
    Runner(const Options& opts, std::ostream& out, spdlog::logger& log) : o_(opts), out_(out), log_(log) {}

    int ell0()
    {
        const auto ell0 = compute_ell0(o_.k, o_.d_size);
        const auto n = compute_n(o_.k, o_.d_size);
        out_ << "ell0=" << ell0 << " n=" << n << '\n';
        if (o_.k == 1) {
            out_ << "note: k = 1 leaves one symbol, so every event has probability 0 or 1\n";
            return exit_ok;
        }
        const auto first = ell0 > 3 ? ell0 - 3 : 1;
        for (auto ell = first; ell <= ell0 + 3; ++ell) {
            const auto f = endgame_value(o_.k, o_.d_size, ell);
            out_ << "  l=" << ell << " f=" << interval(f) << ' ' << (compare_below_one(f) == Verdict::correct ? "<1" : ">=1")
                 << '\n';
        }
        return exit_ok;
    }

    int demo()
    {
        const auto config = io::shift_config_from_json(io::read_json_file(o_.config));
        const auto dir = output_dir(o_.out);
        const auto built = build_instance(config);
        for (const auto& w : built.warnings)
            log_.warn("{}", w);

        const auto bounds = check_bounds(built, config);
        const auto& c = bounds.correctness;
        out_ << "group: " << config.group.describe() << '\n';
        out_ << "k=" << config.pattern.alphabet_size() << " |D|=" << bounds.d_size << " |F|=" << config.translates.size()
             << " |L|=" << bounds.l_size << " ell0=" << built.ell0 << " n=" << built.n << '\n';
        out_ << "events=" << built.instance.size() << " variables=" << built.universe.size() << '\n';
        out_ << "p=" << to_string(c.p) << " d=" << c.d << " e*p*(d+1) in " << interval(c.product) << ' '
             << to_string(c.verdict) << '\n';
        out_ << "degree " << bounds.measured_degree << " <= |D|^2|L|^2-1 = " << bounds.degree_bound.str() << '\n';
        out_ << "probability " << to_string(bounds.closed_form_probability) << " = (1-k^-|D|)^|L|\n";
        out_ << "endgame e(1-k^-|D|)^|L||D|^2|L|^2 in " << interval(bounds.endgame)
             << (bounds.endgame_holds ? " <1" : " not certified <1") << '\n';
        for (const auto& note : bounds.notes)
            out_ << "note: " << note << '\n';

        io::write_json_file(dir / "instance.json", io::instance_to_json(built.instance));
        const auto result =
            solve_moser_tardos(built.instance, {.seed = o_.seed, .max_resamples = o_.max_resamples});
        out_ << "solver: " << to_string(result.status) << " resamples=" << result.resamples << '\n';
        if (!result.solved())
            return exit_solver_failure;
        io::write_json_file(dir / "solution.json", io::assignment_to_json(built.instance.universe(), result.assignment));

        const auto trap = verify_trapping(built, config, result.assignment);
        io::write_json_file(dir / "trap_report.json", io::trap_report_to_json(*built.group, trap));
        out_ << "trapped " << trap.trapped << "/" << trap.verdicts.size() << '\n';
        if (!trap.all_trapped()) {
            log_.error("{} positions of the core window are not trapped by F", trap.untrapped);
            return exit_solver_failure;
        }
        return exit_ok;
    }

    int build()
    {
        const auto config = io::shift_config_from_json(io::read_json_file(o_.config));
        const auto dir = output_dir(o_.out);
        const auto built = build_instance(config);
        for (const auto& w : built.warnings)
            log_.warn("{}", w);
        const auto bounds = check_bounds(built, config);
        io::write_json_file(dir / "instance.json", io::instance_to_json(built.instance));
        io::write_json_file(dir / "bounds.json", io::bounds_report_to_json(bounds));
        out_ << "events=" << built.instance.size() << " p=" << to_string(bounds.correctness.p)
             << " d=" << bounds.correctness.d << " verdict=" << to_string(bounds.correctness.verdict) << '\n';
        return exit_ok;
    }

    int solve()
    {
        const auto inst = io::instance_from_json(io::read_json_file(o_.instance));
        const auto dir = output_dir(o_.out);
        const auto start = std::chrono::steady_clock::now();
        SolveResult result;
        if (o_.solver == "bt") {
            result = solve_backtracking(inst);
        } else {
            result = solve_moser_tardos(inst, {.seed = o_.seed, .max_resamples = o_.max_resamples});
        }
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        out_ << "status=" << to_string(result.status) << " resamples=" << result.resamples << " nodes=" << result.nodes
             << " time_ms=" << std::fixed << std::setprecision(3) << elapsed.count() << '\n';
        if (!result.solved())
            return exit_solver_failure;
        io::write_json_file(dir / "solution.json", io::assignment_to_json(inst.universe(), result.assignment));
        return exit_ok;
    }

    int verify()
    {
        const auto inst = io::instance_from_json(io::read_json_file(o_.instance));
        const auto x = io::assignment_from_json(inst.universe(), io::read_json_file(o_.solution));
        const auto violated = verify_solution(inst, x);
        out_ << "violated=" << json(violated).dump() << '\n';
        return violated.empty() ? exit_ok : exit_solver_failure;
    }

    int separate()
    {
        const auto j = io::read_json_file(o_.input);
        const auto [ctx, f, d] = [&] {
            try {
                auto g = io::group_from_json(j.at("group"));
                auto fs = io::set_from_json(g, j.at("F"));
                auto ds = io::set_from_json(g, j.at("D"));
                return std::tuple{std::move(g), std::move(fs), std::move(ds)};
            } catch (const json::exception& e) {
                throw InvalidArgument(std::string("separate input: ") + e.what());
            }
        }();
        const auto side = o_.side == "right" ? Side::right : Side::left;
        const auto l = side == Side::left ? left_separated_subset(ctx, f, d) : right_separated_subset(ctx, f, d);
        out_ << json{{"side", o_.side}, {"size", l.size()}, {"L", io::set_to_json(ctx, l)}}.dump() << '\n';
        return exit_ok;
    }

private:
    const Options& o_;
    std::ostream& out_;
    spdlog::logger& log_;
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    auto logger = make_logger(err);
    Options o;
    CLI::App app{"Lovasz local lemma tools for shift-invariant instances", "lll-shift"};
    app.require_subcommand(1);

    auto* ell0 = app.add_subcommand("ell0", "threshold l0 and n for alphabet k and pattern size |D|");
    ell0->add_option("--k", o.k, "alphabet size")->required()->check(CLI::Range(1U, 1U << 30));
    ell0->add_option("--dsize", o.d_size, "pattern support size |D|")->required()->check(CLI::Range(1U, 1U << 16));

    auto* demo = app.add_subcommand("demo", "build, check, solve and verify trapping for a shift config");
    demo->add_option("config", o.config, "shift config JSON")->required();
    demo->add_option("--seed", o.seed, "Moser-Tardos seed");
    demo->add_option("--max-resamples", o.max_resamples, "resample budget");
    demo->add_option("--out", o.out, "output directory");

    auto* build = app.add_subcommand("build", "write the instance and bounds report for a shift config");
    build->add_option("config", o.config, "shift config JSON")->required();
    build->add_option("--out", o.out, "output directory");

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("instance", o.instance, "instance JSON")->required();
    solve->add_option("--solver", o.solver, "mt or bt")->check(CLI::IsMember({"mt", "bt"}));
    solve->add_option("--seed", o.seed, "Moser-Tardos seed");
    solve->add_option("--max-resamples", o.max_resamples, "resample budget");
    solve->add_option("--out", o.out, "output directory");

    auto* verify = app.add_subcommand("verify", "list the events a solution violates");
    verify->add_option("instance", o.instance, "instance JSON")->required();
    verify->add_option("solution", o.solution, "solution JSON")->required();

    auto* separate = app.add_subcommand("separate", "separated subset of F for D");
    separate->add_option("input", o.input, "JSON with group, F and D")->required();
    separate->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    Runner runner(o, out, *logger);
    try {
        if (*ell0)
            return runner.ell0();
        if (*demo)
            return runner.demo();
        if (*build)
            return runner.build();
        if (*solve)
            return runner.solve();
        if (*verify)
            return runner.verify();
        if (*separate)
            return runner.separate();
    } catch (const BoundViolation& e) {
        logger->error("bound violation: {}", e.what());
        return exit_bound_violation;
    } catch (const ResourceLimit& e) {
        logger->error("{}", e.what());
        return exit_solver_failure;
    } catch (const Error& e) {
        logger->error("{}", e.what());
        return exit_usage;
    }
    return exit_usage;
}

} // namespace lllshift::cli

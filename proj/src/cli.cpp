#include "hadamard/cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "hadamard/algebra.hpp"
#include "hadamard/criteria.hpp"
#include "hadamard/json_io.hpp"
#include "hadamard/report.hpp"
#include "hadamard/roots.hpp"
#include "hadamard/thresholds.hpp"

namespace hadamard {

namespace {

struct Options {
    std::string poly, f, g, p, mode = "max", method = "exact", criterion, out = ".";
    bool witness = false, all_branches = false, szego = false;
    std::size_t grid_n = 1000;
    double tol = kDefaultTolerance;
    double from = 0.0, to = 0.0, step = 1.0;
    int example = 1;
};

Json verdict_json(const StabilityVerdict& v)
{
    return {{"stable", v.status == Stability::Stable},
            {"status", to_string(v.status)},
            {"max_modulus", round12(v.max_modulus)},
            {"margin", round12(v.margin)}};
}

void attach_alpha(Json& j, const LoadedPolynomial& lp)
{
    if (lp.alpha)
        j["alpha"] = lp.alpha->to_string();
}

Json cmd_analyze(const Options& o)
{
    const auto lp = load_polynomial_file(o.poly);
    const auto& f = lp.poly;
    const auto roots = find_roots(f);
    const auto verdict = classify(roots.max_modulus());
    const auto fujiwara = satisfies_stability_condition(f);

    Json j{{"polynomial", to_json(f)}};
    attach_alpha(j, lp);
    j.update(verdict_json(verdict));
    j["roots"] = to_json(roots);
    j["criteria"] = Json::array({to_json(fujiwara, o.witness), to_json(necessary_condition(f), o.witness)});
    if (fujiwara.witness)
        j["fujiwara_bound"] = round12(fujiwara_bound(f, *fujiwara.witness));

    if (!f.support().empty()) {
        const auto ks = kstar_test(f);
        j["kstar"] = {{"k", ks.kstar}, {"unstable_for", to_string(ks.unstable_for)}};
        for (auto mode : {Mode::Max, Mode::Min}) {
            try {
                const auto b = beta_star(f, mode);
                j[mode == Mode::Max ? "beta_star_max" : "beta_star_min"] = to_json(b);
            } catch (const NotApplicable&) {
            }
        }
    }
    return j;
}

Json cmd_power(const Options& o)
{
    const auto lp = load_polynomial_file(o.poly);
    const auto p = Rational::parse(o.p);
    auto set = hadamard_power(lp.poly, p);
    const auto total = set.members.size();
    if (!o.all_branches) {
        set.members.erase(set.members.begin() + 1, set.members.end());
        set.branch_index.erase(set.branch_index.begin() + 1, set.branch_index.end());
    }
    const auto overall = branch_set_stable(set);

    Json members = Json::array();
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        const auto v = is_schur_stable(set.members[i]);
        Json m{{"branch", set.branch_index[i]}, {"polynomial", to_json(set.members[i])}};
        m.update(verdict_json(v));
        members.push_back(std::move(m));
    }
    Json j{{"exponent", p.to_string()}, {"branch_count", total}};
    attach_alpha(j, lp);
    j.update(verdict_json(overall.verdict));
    j["members"] = std::move(members);
    return j;
}

Json cmd_product(const Options& o)
{
    const auto f = load_polynomial_file(o.f).poly;
    const auto g = load_polynomial_file(o.g).poly;
    const auto prod = o.szego ? szego_product(f, g) : hadamard_product(f, g);
    Json j{{"kind", o.szego ? "szego" : "hadamard"}, {"product", to_json(prod)}};
    j.update(verdict_json(is_schur_stable(prod)));
    j["fujiwara"] = to_json(satisfies_stability_condition(prod));
    if (!o.criterion.empty()) {
        const auto variant = o.criterion == "a" ? Thm3Variant::A : o.criterion == "b" ? Thm3Variant::B : Thm3Variant::C;
        j["criterion"] = to_json(theorem3_check(f, g, variant));
    }
    return j;
}

Json cmd_threshold(const Options& o)
{
    const auto lp = load_polynomial_file(o.poly);
    const auto& f = lp.poly;
    const Mode mode = o.mode == "max" ? Mode::Max : Mode::Min;
    ThresholdResult r{};
    if (o.method == "grid") {
        r = pstar_grid(f, mode, o.grid_n);
    } else if (o.method == "exact") {
        r = pstar_exact(f, mode, o.tol);
    } else {
        // Beyond the sufficient threshold every power is stable; the lowest-index
        // sign test makes p = 0 unstable.
        const auto bound = pstar_exact(f, mode, o.tol);
        if (std::isinf(bound.value))
            r = bound;
        else if (mode == Mode::Max)
            r = exact_onset(f, Direction::Increasing, 0.0, bound.value + 1.0, o.tol);
        else
            r = exact_onset(f, Direction::Decreasing, bound.value - 1.0, 0.0, o.tol);
    }
    Json j = to_json(r);
    attach_alpha(j, lp);
    return j;
}

Json cmd_sweep(const Options& o)
{
    const auto lp = load_polynomial_file(o.poly);
    const auto powers = power_range(o.from, o.to, o.step);
    const auto records = sweep(lp.poly, powers);
    const std::filesystem::path dir(o.out);
    std::filesystem::create_directories(dir);
    write_text_file(dir / "sweep.csv", sweep_csv(records, lp.poly.degree()));

    Json j{{"count", records.size()}, {"csv", (dir / "sweep.csv").string()}};
    if (!records.empty()) {
        write_text_file(dir / "sweep.svg", sweep_svg(records, "Hadamard power sweep"));
        j["svg"] = (dir / "sweep.svg").string();
        Json unstable = Json::array();
        for (const auto& r : records)
            if (r.stable != Stability::Stable)
                unstable.push_back(round12(r.p));
        j["unstable_powers"] = std::move(unstable);
    }
    attach_alpha(j, lp);
    return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Schur stability of Hadamard products and powers of polynomials"};
    app.require_subcommand(1);
    Options o;

    auto* analyze = app.add_subcommand("analyze", "roots, verdict and coefficient criteria of one polynomial");
    analyze->add_option("--poly", o.poly, "polynomial JSON file")->required();
    analyze->add_flag("--witness", o.witness, "include criterion witnesses");

    auto* power = app.add_subcommand("power", "Hadamard power f^[K/M] and its stability");
    power->add_option("--poly", o.poly, "polynomial JSON file")->required();
    power->add_option("--p", o.p, "exponent K/M or integer K")->required();
    power->add_flag("--all-branches", o.all_branches, "enumerate every branch of a rational power");

    auto* product = app.add_subcommand("product", "Hadamard or Szego product of two polynomials");
    product->add_option("--f", o.f, "first polynomial JSON file")->required();
    product->add_option("--g", o.g, "second polynomial JSON file")->required();
    product->add_flag("--szego", o.szego, "multiply by the Szego weight polynomial");
    product->add_option("--criterion", o.criterion, "product criterion a|b|c")->check(CLI::IsMember({"a", "b", "c"}));

    auto* threshold = app.add_subcommand("threshold", "stability power thresholds");
    threshold->add_option("--poly", o.poly, "polynomial JSON file")->required();
    threshold->add_option("--mode", o.mode, "max|min")->required()->check(CLI::IsMember({"max", "min"}));
    threshold->add_option("--method", o.method, "grid|exact|onset")->check(CLI::IsMember({"grid", "exact", "onset"}));
    threshold->add_option("--grid-n", o.grid_n, "grid resolution")->check(CLI::PositiveNumber);
    threshold->add_option("--tol", o.tol, "bisection tolerance")->check(CLI::PositiveNumber);

    auto* sweep_cmd = app.add_subcommand("sweep", "principal-branch powers over a range, CSV and SVG");
    sweep_cmd->add_option("--poly", o.poly, "polynomial JSON file")->required();
    sweep_cmd->add_option("--from", o.from, "first power")->required();
    sweep_cmd->add_option("--to", o.to, "last power")->required();
    sweep_cmd->add_option("--step", o.step, "power increment")->required();
    sweep_cmd->add_option("--out", o.out, "output directory");

    auto* reproduce = app.add_subcommand("reproduce", "recompute the numerical examples");
    reproduce->add_option("--example", o.example, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    reproduce->add_option("--out", o.out, "output directory");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        Json result;
        if (analyze->parsed())
            result = cmd_analyze(o);
        else if (power->parsed())
            result = cmd_power(o);
        else if (product->parsed())
            result = cmd_product(o);
        else if (threshold->parsed())
            result = cmd_threshold(o);
        else if (sweep_cmd->parsed())
            result = cmd_sweep(o);
        else
            result = reproduce_example(o.example, o.out);
        out << result.dump(2) << '\n';
        return kExitOk;
    } catch (const NotApplicable& e) {
        err << "not applicable: " << e.what() << '\n';
        return kExitNotApplicable;
    } catch (const InvalidInput& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const UnsupportedInput& e) {
        err << "unsupported input: " << e.what() << '\n';
        return kExitInputError;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace hadamard

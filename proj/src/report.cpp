#include "hadamard/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "hadamard/algebra.hpp"
#include "hadamard/thresholds.hpp"

namespace hadamard {

std::vector<double> power_range(double from, double to, double step)
{
    if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to))
        throw InvalidInput("sweep needs finite bounds and a positive step");
    std::vector<double> out;
    for (std::size_t i = 0;; ++i) {
        const double p = from + static_cast<double>(i) * step;
        if (p > to + 1e-9 * step)
            break;
        out.push_back(p);
        if (out.size() > 1000000)
            throw InvalidInput("sweep range holds more than 10^6 powers");
    }
    return out;
}

std::vector<SweepRecord> sweep(const MonicPolynomial& f, const std::vector<double>& powers)
{
    std::vector<SweepRecord> records(powers.size());
    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < powers.size(); i += workers) {
                auto roots = find_roots(principal_power(f, powers[i]));
                const auto v = classify(roots.max_modulus());
                records[i] = {powers[i], v.status, v.max_modulus, std::move(roots.roots)};
            }
        }));
    }
    for (auto& j : jobs)
        j.get();
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
    return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, std::size_t degree)
{
    std::ostringstream out;
    out << "p,stable,max_modulus";
    for (std::size_t i = 1; i <= degree; ++i)
        out << ",root_re_" << i << ",root_im_" << i;
    out << '\n';
    for (const auto& r : records) {
        out << format12(r.p) << ',' << (r.stable == Stability::Stable ? "true" : "false") << ','
            << format12(r.max_modulus);
        for (const auto& z : r.roots)
            out << ',' << format12(z.real()) << ',' << format12(z.imag());
        out << '\n';
    }
    return out.str();
}

std::string sweep_svg(const std::vector<SweepRecord>& records, const std::string& title)
{
    double extent = 1.2;
    for (const auto& r : records)
        for (const auto& z : r.roots)
            extent = std::max({extent, 1.1 * std::abs(z.real()), 1.1 * std::abs(z.imag())});

    constexpr double kSize = 600.0;
    const double scale = kSize / (2.0 * extent);
    auto px = [&](double x) { return format12(kSize / 2.0 + x * scale); };
    auto py = [&](double y) { return format12(kSize / 2.0 - y * scale); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << kSize << "\" y2=\"" << py(0)
        << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n"
        << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << kSize
        << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n"
        << "<circle class=\"unit-circle\" cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"" << format12(scale)
        << "\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"1\"/>\n";
    for (const auto& r : records) {
        const char* color = r.stable == Stability::Stable ? "#999999" : "#000000";
        for (const auto& z : r.roots)
            out << "<circle class=\"root\" cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag())
                << "\" r=\"2\" fill=\"" << color << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::optional<double> detected_onset(const std::vector<SweepRecord>& records, bool increasing)
{
    if (records.empty())
        return std::nullopt;
    auto unstable = [](const SweepRecord& r) { return r.stable != Stability::Stable; };
    if (increasing) {
        const auto it = std::find_if(records.rbegin(), records.rend(), unstable);
        if (it == records.rend())
            return records.front().p;
        if (it == records.rbegin())
            return std::nullopt;
        return std::prev(it)->p;
    }
    const auto it = std::find_if(records.begin(), records.end(), unstable);
    if (it == records.end())
        return records.back().p;
    if (it == records.begin())
        return std::nullopt;
    return std::prev(it)->p;
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot write '" + path.string() + "'");
    out << text;
}

namespace {

struct PublishedValue {
    std::string quantity;
    double published;
    double computed;
};

Json comparison_rows(const std::vector<PublishedValue>& rows, std::string& csv)
{
    Json table = Json::array();
    csv = "quantity,published,computed,abs_deviation\n";
    for (const auto& r : rows) {
        const double dev = std::abs(r.computed - r.published);
        table.push_back({{"quantity", r.quantity},
                         {"published", round12(r.published)},
                         {"computed", round12(r.computed)},
                         {"abs_deviation", round12(dev)}});
        csv += r.quantity + "," + format12(r.published) + "," + format12(r.computed) + "," + format12(dev) + "\n";
    }
    return table;
}

Json write_sweep(const MonicPolynomial& f, const std::vector<double>& powers, bool increasing,
                 const std::filesystem::path& dir, const std::string& stem, const std::string& title)
{
    const auto records = sweep(f, powers);
    write_text_file(dir / (stem + ".csv"), sweep_csv(records, f.degree()));
    write_text_file(dir / (stem + ".svg"), sweep_svg(records, title));
    Json unstable = Json::array();
    for (const auto& r : records)
        if (r.stable != Stability::Stable)
            unstable.push_back(round12(r.p));
    const auto onset = detected_onset(records, increasing);
    return {{"csv", stem + ".csv"},
            {"svg", stem + ".svg"},
            {"count", records.size()},
            {"unstable_powers", std::move(unstable)},
            {"detected_onset", onset ? Json(round12(*onset)) : Json(nullptr)}};
}

} // namespace

Json reproduce_example(int example, const std::filesystem::path& out_dir)
{
    if (example != 1 && example != 2)
        throw InvalidInput("example must be 1 or 2");
    std::filesystem::create_directories(out_dir);

    Json report{{"example", example}};
    std::vector<PublishedValue> rows;

    if (example == 1) {
        const auto f = MonicPolynomial({0.7, 0.2, 0.9, 0.0, 0.0});
        const auto g = MonicPolynomial({3.0, 2.0, 2.5, 0.0, 0.0});
        const auto f_grid = pstar_grid(f, Mode::Max, 1000);
        const auto f_exact = pstar_exact(f, Mode::Max);
        const auto f_onset = exact_onset(f, Direction::Increasing, 0.0, f_exact.value + 1.0);
        const auto g_grid = pstar_grid(g, Mode::Min, 1000);
        const auto g_exact = pstar_exact(g, Mode::Min);
        const auto g_onset = exact_onset(g, Direction::Decreasing, g_exact.value - 1.0, 0.0);

        report["f"] = {{"polynomial", to_json(f)},
                       {"pstar_max_grid", to_json(f_grid)},
                       {"pstar_max_exact", to_json(f_exact)},
                       {"onset", to_json(f_onset)},
                       {"beta_star_min", to_json(beta_star(f, Mode::Min))}};
        report["g"] = {{"polynomial", to_json(g)},
                       {"pstar_min_grid", to_json(g_grid)},
                       {"pstar_min_exact", to_json(g_exact)},
                       {"onset", to_json(g_onset)},
                       {"beta_star_max", to_json(beta_star(g, Mode::Max))}};
        rows = {{"f.pstar_max (grid)", 3.40372, f_grid.value},
                {"f.pstar_max (exact)", 3.40372, f_exact.value},
                {"f.onset", 3.35457, f_onset.value},
                {"g.pstar_min (grid)", -1.24121, g_grid.value},
                {"g.pstar_min (exact)", -1.24121, g_exact.value},
                {"g.onset", -1.01579, g_onset.value}};
        report["sweep_f"] = write_sweep(f, power_range(0.0, 5.0, 0.25), true, out_dir, "sweep_f", "f^[p], 0 <= p <= 5");
        report["sweep_g"] = write_sweep(g, power_range(-5.0, 0.0, 0.25), false, out_dir, "sweep_g", "g^[p], -5 <= p <= 0");
    } else {
        const auto f = MonicPolynomial({{0.0, -0.9}, 0.7, 0.0, {0.2, -0.4}});
        const auto g = MonicPolynomial({{1.0, -0.5}, 0.0, {2.0, -1.0}, -1.5});
        const auto f_grid = pstar_grid(f, Mode::Max, 1000);
        const auto f_exact = pstar_exact(f, Mode::Max);
        const auto f_onset = exact_onset(f, Direction::Increasing, 0.0, f_exact.value + 1.0);
        const auto g_grid = pstar_grid(g, Mode::Min, 1000);
        const auto g_exact = pstar_exact(g, Mode::Min);
        const auto g_onset = exact_onset(g, Direction::Decreasing, g_exact.value - 1.0, 0.0);

        report["f"] = {{"polynomial", to_json(f)},
                       {"pstar_max_grid", to_json(f_grid)},
                       {"pstar_max_exact", to_json(f_exact)},
                       {"onset", to_json(f_onset)}};
        report["g"] = {{"polynomial", to_json(g)},
                       {"pstar_min_grid", to_json(g_grid)},
                       {"pstar_min_exact", to_json(g_exact)},
                       {"onset", to_json(g_onset)}};
        rows = {{"f.pstar_max (grid)", 3.69323, f_grid.value},
                {"f.pstar_max (exact)", 3.69323, f_exact.value},
                {"g.pstar_min (grid)", -3.40696, g_grid.value},
                {"g.pstar_min (exact)", -3.40696, g_exact.value}};
        report["sweep_f"] = write_sweep(f, power_range(1.0, 100.0, 1.0), true, out_dir, "sweep_f",
                                        "f^[p], p = 1..100 (black: unstable, gray: stable)");
        report["sweep_g"] = write_sweep(g, power_range(-100.0, -1.0, 1.0), false, out_dir, "sweep_g",
                                        "g^[q], q = -100..-1 (black: unstable, gray: stable)");
    }

    std::string csv;
    report["comparison"] = comparison_rows(rows, csv);
    write_text_file(out_dir / "comparison.csv", csv);
    write_text_file(out_dir / "report.json", report.dump(2) + "\n");
    return report;
}

} // namespace hadamard

#include "osa/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "osa/dp.hpp"
#include "osa/errors.hpp"

namespace osa {

namespace {

// %.10g rendering used for every float column
std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Grid coordinates are normalized through the CSV float format so a written
// sweep parses back to bit-identical p01/p11 values.
double normalize10(double v) {
    return std::strtod(fmt10(v).c_str(), nullptr);
}

}  // namespace

int thread_budget() {
    if (const char* env = std::getenv("OSA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min<long>(v, 256));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<SweepRow> region_sweep(const SweepConfig& config) {
    if (!(config.grid_step > 0.0 && config.grid_step <= 0.25)) {
        throw std::invalid_argument("grid_step must be in (0, 0.25]");
    }
    if (config.finite && !(config.beta >= 0.0 && config.beta <= 1.0)) {
        throw std::invalid_argument("finite-horizon sweep needs beta in [0,1]");
    }
    if (config.k < 1 || config.k > config.n) throw std::invalid_argument("k must be in [1, n]");
    if (config.m < 1 || config.m > config.k) throw std::invalid_argument("m must be in [1, k]");

    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = static_cast<double>(i) * config.grid_step;
        if (v > 1.0 + 1e-12) break;
        grid.push_back(normalize10(std::min(v, 1.0)));
    }

    struct Cell { double p01, p11; };
    std::vector<Cell> cells;
    for (double p01 : grid) {
        for (double p11 : grid) {
            const bool pos = p11 >= p01;
            const bool want = config.regime == SweepConfig::RegimeSel::Both ||
                              (config.regime == SweepConfig::RegimeSel::Positive && pos) ||
                              (config.regime == SweepConfig::RegimeSel::Negative && !pos);
            if (want) cells.push_back({p01, p11});
        }
    }

    std::vector<SweepRow> rows(cells.size());
    auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const ChannelModel model(cells[i].p11, cells[i].p01);
            const ConditionReport rep =
                config.finite
                    ? finite_condition(model, config.n, config.k, config.m, config.beta)
                    : infinite_condition(model, config.n, config.k, config.m);
            rows[i] = SweepRow{cells[i].p01,  cells[i].p11,   rep.r_upper,
                               rep.r_lower,   rep.lhs,        rep.threshold,
                               rep.satisfied, rep.unconditional};
        }
    };
    const int workers = std::min<int>(thread_budget(),
                                      static_cast<int>((cells.size() + 63) / 64));
    if (workers <= 1) {
        eval_range(0, cells.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cells.size() + static_cast<std::size_t>(workers) - 1) /
                                  static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::size_t b = static_cast<std::size_t>(w) * chunk;
            const std::size_t e = std::min(cells.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back(eval_range, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "p01,p11,r_upper,r_lower,lhs,threshold,satisfied,unconditional\n";
    for (const auto& r : rows) {
        out += fmt10(r.p01);
        out += ',';
        out += fmt10(r.p11);
        out += ',';
        out += fmt10(r.r_upper);
        out += ',';
        out += fmt10(r.r_lower);
        out += ',';
        out += fmt10(r.lhs);
        out += ',';
        out += fmt10(r.threshold);
        out += ',';
        out += r.satisfied ? "true" : "false";
        out += ',';
        out += r.unconditional ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::vector<SweepRow> sweep_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) ||
        line != "p01,p11,r_upper,r_lower,lhs,threshold,satisfied,unconditional") {
        throw IoError("sweep CSV: missing or wrong header");
    }
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 8) throw IoError("sweep CSV: expected 8 fields per row");
        auto num = [&](int i) { return std::strtod(fields[static_cast<std::size_t>(i)].c_str(), nullptr); };
        auto boolean = [&](int i) -> bool {
            const auto& f = fields[static_cast<std::size_t>(i)];
            if (f == "true") return true;
            if (f == "false") return false;
            throw IoError("sweep CSV: bad boolean '" + f + "'");
        };
        rows.push_back(SweepRow{num(0), num(1), num(2), num(3), num(4), num(5),
                                boolean(6), boolean(7)});
    }
    return rows;
}

std::string sweep_to_svg(const std::vector<SweepRow>& rows, const SweepConfig& config) {
    // fixed 640x640 canvas, 60px margins, p01 on x and p11 on y (origin bottom-left)
    constexpr int kSize = 640;
    constexpr int kMargin = 60;
    constexpr int kSpan = kSize - 2 * kMargin;
    auto px = [&](double p01) { return static_cast<double>(kMargin) + p01 * kSpan; };
    auto py = [&](double p11) { return static_cast<double>(kSize - kMargin) - p11 * kSpan; };
    auto coord = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };
    const double radius = std::max(1.5, config.grid_step * kSpan * 0.35);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    svg += "<style>.sat{fill:#1a7f37;}.unsat{fill:#cf222e;}"
           ".axis{stroke:#333;stroke-width:1;}"
           ".diag{stroke:#999;stroke-width:1;stroke-dasharray:4 3;}"
           "text{font-family:monospace;font-size:12px;fill:#333;}</style>\n";
    svg += "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
    svg += "<line class=\"axis\" x1=\"" + coord(px(0)) + "\" y1=\"" + coord(py(0)) +
           "\" x2=\"" + coord(px(1)) + "\" y2=\"" + coord(py(0)) + "\"/>\n";
    svg += "<line class=\"axis\" x1=\"" + coord(px(0)) + "\" y1=\"" + coord(py(0)) +
           "\" x2=\"" + coord(px(0)) + "\" y2=\"" + coord(py(1)) + "\"/>\n";
    svg += "<line class=\"diag\" x1=\"" + coord(px(0)) + "\" y1=\"" + coord(py(0)) +
           "\" x2=\"" + coord(px(1)) + "\" y2=\"" + coord(py(1)) + "\"/>\n";
    for (int i = 0; i <= 10; ++i) {
        const double v = static_cast<double>(i) / 10.0;
        svg += "<line class=\"axis\" x1=\"" + coord(px(v)) + "\" y1=\"" + coord(py(0)) +
               "\" x2=\"" + coord(px(v)) + "\" y2=\"" + coord(py(0) + 5) + "\"/>\n";
        svg += "<text x=\"" + coord(px(v) - 9) + "\" y=\"" + coord(py(0) + 20) + "\">" +
               fmt10(v) + "</text>\n";
        svg += "<line class=\"axis\" x1=\"" + coord(px(0)) + "\" y1=\"" + coord(py(v)) +
               "\" x2=\"" + coord(px(0) - 5) + "\" y2=\"" + coord(py(v)) + "\"/>\n";
        svg += "<text x=\"" + coord(px(0) - 38) + "\" y=\"" + coord(py(v) + 4) + "\">" +
               fmt10(v) + "</text>\n";
    }
    svg += "<text x=\"" + coord(px(0.5) - 12) + "\" y=\"" + coord(py(0) + 40) +
           "\">p01</text>\n";
    svg += "<text x=\"" + coord(px(0) - 50) + "\" y=\"" + coord(py(0.5)) +
           "\">p11</text>\n";
    for (const auto& r : rows) {
        svg += "<circle class=\"";
        svg += r.satisfied ? "sat" : "unsat";
        svg += "\" cx=\"" + coord(px(r.p01)) + "\" cy=\"" + coord(py(r.p11)) +
               "\" r=\"" + coord(radius) + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

CounterexampleReport run_counterexample() {
    const ChannelModel model(0.9, 0.1);
    const BeliefState belief(std::vector<double>{0.99, 0.95, 0.9, 0.9, 0.9});
    const int k = 2, m = 1;
    const HorizonSpec horizon = HorizonSpec::finite_horizon(5, 0.8);
    CounterexampleReport rep;
    rep.w_myopic = evaluate_policy(model, belief, PolicySpec::myopic(k, m), horizon).value;
    rep.w_deviation =
        evaluate_policy(model, belief, PolicySpec::fixed_first({0, 2}, k, m), horizon).value;
    rep.gap = rep.w_deviation - rep.w_myopic;
    const ValueResult opt = optimal_value(model, belief, k, m, horizon);
    const Action greedy = myopic_action(belief, k);
    rep.myopic_optimal = false;
    for (const auto& a : opt.first_actions) {
        if (a.channels == greedy.channels) rep.myopic_optimal = true;
    }
    rep.optimal_first_actions = opt.first_actions;
    return rep;
}

}  // namespace osa

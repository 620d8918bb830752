#include "plbandits/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "plbandits/bounds.hpp"
#include "plbandits/environments.hpp"
#include "plbandits/oracle.hpp"
#include "plbandits/pac_best_item.hpp"
#include "plbandits/pac_wrapper.hpp"
#include "plbandits/uniform_allocation.hpp"

namespace plb {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct RepOutcome {
  long long plays = 0;
  bool success = false;
  std::vector<long long> item_plays;
};

}  // namespace

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "pac-wrapper") return Algorithm::PacWrapper;
  if (s == "uniform-allocation") return Algorithm::UniformAllocation;
  if (s == "pac-best-item") return Algorithm::PacBestItem;
  throw std::invalid_argument("unknown algorithm: " + s);
}

SweepAxis axis_from_string(const std::string& s) {
  if (s == "none") return SweepAxis::None;
  if (s == "eps") return SweepAxis::Eps;
  if (s == "m") return SweepAxis::M;
  if (s == "q") return SweepAxis::Q;
  throw std::invalid_argument("unknown sweep axis: " + s);
}

PLInstance spec_instance(const ExperimentSpec& spec) {
  if (!spec.env_name.empty()) return load_env(spec.env_name);
  return PLInstance(spec.theta);
}

static void validate(const ExperimentSpec& spec) {
  if (spec.replicates < 1)
    throw std::invalid_argument("replicates must be positive");
  if (spec.axis != SweepAxis::None && spec.grid.empty())
    throw std::invalid_argument("sweep requested with an empty grid");
  const bool budgeted = spec.algo == Algorithm::UniformAllocation;
  if (spec.axis == SweepAxis::Q && !budgeted)
    throw std::invalid_argument(
        "a Q sweep only applies to uniform-allocation");
  if (budgeted && (spec.axis == SweepAxis::Eps || spec.axis == SweepAxis::M))
    throw std::invalid_argument(
        "uniform-allocation has no eps/m accuracy knob to sweep");
  if (budgeted && spec.axis == SweepAxis::None && spec.Q <= 0)
    throw std::invalid_argument("uniform-allocation requires a budget Q");
}

static RepOutcome run_once(const PLInstance& inst, const ExperimentSpec& spec,
                           double axis_value, std::uint64_t seed) {
  const double eps = spec.axis == SweepAxis::Eps ? axis_value : spec.eps;
  const int m =
      spec.axis == SweepAxis::M ? (int)std::llround(axis_value) : spec.m;
  const long long Q =
      spec.axis == SweepAxis::Q ? (long long)std::llround(axis_value) : spec.Q;

  RepOutcome out;
  const double best_theta = inst.theta(inst.best_item());
  auto eps_ok = [&](int item) {
    return item >= 0 && best_theta - inst.theta(item) <= eps;
  };

  switch (spec.algo) {
    case Algorithm::PacWrapper: {
      WrapperConfig cfg;
      cfg.k = spec.k;
      cfg.m = m;
      cfg.eps = eps;
      cfg.delta = spec.delta;
      cfg.seed = seed;
      RunReport rep = pac_wrapper(inst, cfg);
      out.plays = rep.total_plays;
      out.success = eps_ok(rep.returned_item);
      out.item_plays = rep.item_plays;
      break;
    }
    case Algorithm::UniformAllocation: {
      BudgetConfig cfg;
      cfg.Q = Q;
      cfg.k = spec.k;
      cfg.m = m;
      cfg.seed = seed;
      RunReport rep = uniform_allocation(inst, cfg);
      out.plays = rep.total_plays;
      out.success = rep.returned_item == inst.best_item();
      out.item_plays = rep.item_plays;
      break;
    }
    case Algorithm::PacBestItem: {
      PlayOracle oracle(inst, seed);
      std::vector<int> A(inst.n());
      std::iota(A.begin(), A.end(), 0);
      PacBestItemConfig cfg;
      cfg.k = spec.k;
      cfg.m = m;
      cfg.eps = eps;
      cfg.delta = spec.delta;
      SubroutineReport rep = pac_best_item(oracle, A, A, cfg);
      out.plays = oracle.total_plays();
      out.success = eps_ok(rep.returned_item);
      out.item_plays = oracle.item_plays();
      break;
    }
  }
  return out;
}

SweepResult run_sweep(const ExperimentSpec& spec) {
  validate(spec);
  const PLInstance inst = spec_instance(spec);

  std::vector<double> grid = spec.grid;
  if (spec.axis == SweepAxis::None) {
    grid = {spec.algo == Algorithm::UniformAllocation ? (double)spec.Q
                                                      : spec.eps};
  }

  const int reps = spec.replicates;
  const int points = (int)grid.size();
  std::vector<std::vector<RepOutcome>> outcomes(
      points, std::vector<RepOutcome>((size_t)reps));

  const int total_tasks = points * reps;
  int nthreads = spec.threads > 0
                     ? spec.threads
                     : (int)std::thread::hardware_concurrency();
  nthreads = std::clamp(nthreads, 1, total_tasks);

  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&]() {
    for (;;) {
      int task = next.fetch_add(1);
      if (task >= total_tasks) return;
      int gi = task / reps;
      int rep = task % reps;
      try {
        outcomes[(size_t)gi][(size_t)rep] = run_once(
            inst, spec, grid[(size_t)gi], spec.base_seed + (std::uint64_t)rep);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SweepResult result;
  for (int gi = 0; gi < points; ++gi) {
    SweepResult::Row row;
    row.axis_value = grid[(size_t)gi];
    double sum = 0.0, sumsq = 0.0;
    int wins = 0;
    row.mean_item_plays.assign((size_t)inst.n(), 0.0);
    for (const RepOutcome& o : outcomes[(size_t)gi]) {
      sum += (double)o.plays;
      sumsq += (double)o.plays * (double)o.plays;
      wins += o.success ? 1 : 0;
      for (int i = 0; i < inst.n(); ++i)
        row.mean_item_plays[(size_t)i] += (double)o.item_plays[(size_t)i];
    }
    row.mean_plays = sum / reps;
    double var = reps > 1
                     ? std::max(0.0, (sumsq - sum * sum / reps) / (reps - 1))
                     : 0.0;
    row.std_plays = std::sqrt(var);
    row.success_rate = (double)wins / reps;
    for (double& v : row.mean_item_plays) v /= reps;

    const double eps =
        spec.axis == SweepAxis::Eps ? row.axis_value : spec.eps;
    const int m = spec.axis == SweepAxis::M ? (int)std::llround(row.axis_value)
                                            : spec.m;
    if (spec.algo == Algorithm::UniformAllocation) {
      const long long Q = spec.axis == SweepAxis::Q
                              ? (long long)std::llround(row.axis_value)
                              : spec.Q;
      row.theory_ub = 1.0 - budget_error_bound(inst, Q, m);
      row.theory_lb = ua_success_bound(inst, inst.n(), spec.k, m, Q);
    } else {
      row.theory_ub = pac_upper_bound(inst, spec.k, m, eps, spec.delta);
      row.theory_lb = topm_lower_bound(inst, spec.k, m, spec.delta);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "axis_value,mean_plays,std_plays,success_rate,theory_ub,theory_lb\n";
  for (const auto& r : result.rows) {
    out << fmt17(r.axis_value) << ',' << fmt17(r.mean_plays) << ','
        << fmt17(r.std_plays) << ',' << fmt17(r.success_rate) << ','
        << fmt17(r.theory_ub) << ',' << fmt17(r.theory_lb) << '\n';
  }
}

SweepResult parse_sweep_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line !=
          "axis_value,mean_plays,std_plays,success_rate,theory_ub,theory_lb")
    throw std::runtime_error("unexpected sweep csv header in " + path);
  SweepResult result;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() != 6)
      throw std::runtime_error("malformed sweep csv row: " + line);
    SweepResult::Row r;
    r.axis_value = vals[0];
    r.mean_plays = vals[1];
    r.std_plays = vals[2];
    r.success_rate = vals[3];
    r.theory_ub = vals[4];
    r.theory_lb = vals[5];
    result.rows.push_back(std::move(r));
  }
  return result;
}

void emit_survival_csv(const SweepResult& result, const std::string& path) {
  if (result.rows.empty())
    throw std::invalid_argument("empty sweep result");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "item,mean_plays\n";
  const auto& plays = result.rows.front().mean_item_plays;
  for (size_t i = 0; i < plays.size(); ++i)
    out << i << ',' << fmt17(plays[i]) << '\n';
}

namespace {

// Minimal SVG plotting surface with optional log axes.
struct Svg {
  static constexpr double W = 720, H = 480;
  static constexpr double L = 80, R = 24, T = 36, B = 56;
  std::ostringstream body;
  double xmin, xmax, ymin, ymax;
  bool logx, logy;

  Svg(double x0, double x1, double y0, double y1, bool lx, bool ly)
      : xmin(x0), xmax(x1), ymin(y0), ymax(y1), logx(lx), logy(ly) {
    if (logx) { xmin = std::log10(xmin); xmax = std::log10(xmax); }
    if (logy) { ymin = std::log10(ymin); ymax = std::log10(ymax); }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
  }
  double px(double x) const {
    if (logx) x = std::log10(x);
    return L + (x - xmin) / (xmax - xmin) * (W - L - R);
  }
  double py(double y) const {
    if (logy) y = std::log10(y);
    return H - B - (y - ymin) / (ymax - ymin) * (H - T - B);
  }
  void polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                const std::string& stroke, bool dashed, bool markers) {
    body << "<polyline fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"1.5\"";
    if (dashed) body << " stroke-dasharray=\"6 4\"";
    body << " points=\"";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (logy && ys[i] <= 0.0) continue;
      body << px(xs[i]) << ',' << py(ys[i]) << ' ';
    }
    body << "\"/>\n";
    if (markers)
      for (size_t i = 0; i < xs.size(); ++i) {
        if (logy && ys[i] <= 0.0) continue;
        body << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i])
             << "\" r=\"3\" fill=\"" << stroke << "\"/>\n";
      }
  }
  void bar(double x0, double x1, double y, const std::string& fill) {
    double top = py(y);
    body << "<rect x=\"" << px(x0) << "\" y=\"" << top << "\" width=\""
         << (px(x1) - px(x0)) << "\" height=\"" << (H - B - top)
         << "\" fill=\"" << fill << "\"/>\n";
  }
  void text(double x, double y, const std::string& s,
            const std::string& anchor = "middle") {
    body << "<text x=\"" << x << "\" y=\"" << y
         << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\""
         << anchor << "\">" << s << "</text>\n";
  }
  std::string finish(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H
        << "\">\n<rect width=\"" << W << "\" height=\"" << H
        << "\" fill=\"white\"/>\n"
        << "<line x1=\"" << L << "\" y1=\"" << (H - B) << "\" x2=\"" << (W - R)
        << "\" y2=\"" << (H - B) << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L
        << "\" y2=\"" << (H - B) << "\" stroke=\"black\"/>\n";
    out << body.str();
    out << "<text x=\"" << (W / 2) << "\" y=\"20\" font-family=\"sans-serif\""
        << " font-size=\"14\" text-anchor=\"middle\">" << title << "</text>\n";
    out << "<text x=\"" << (W / 2) << "\" y=\"" << (H - 14)
        << "\" font-family=\"sans-serif\" font-size=\"12\""
        << " text-anchor=\"middle\">" << xlabel << "</text>\n";
    out << "<text x=\"18\" y=\"" << (H / 2)
        << "\" font-family=\"sans-serif\" font-size=\"12\""
        << " text-anchor=\"middle\" transform=\"rotate(-90 18 " << (H / 2)
        << ")\">" << ylabel << "</text>\n";
    out << "</svg>\n";
    return out.str();
  }
};

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

void emit_plot(const SweepResult& result, const ExperimentSpec& spec,
               const std::string& path) {
  if (result.rows.empty())
    throw std::invalid_argument("empty sweep result");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);

  std::vector<double> xs, mean, ub, lb, succ;
  for (const auto& r : result.rows) {
    xs.push_back(r.axis_value);
    mean.push_back(r.mean_plays);
    ub.push_back(r.theory_ub);
    lb.push_back(r.theory_lb);
    succ.push_back(r.success_rate);
  }

  if (spec.axis == SweepAxis::Q) {
    Svg svg(xs.front(), xs.back(), 0.0, 1.0, true, false);
    svg.polyline(xs, succ, "#1f6fb2", false, true);
    svg.polyline(xs, lb, "#777777", true, false);
    svg.polyline(xs, ub, "#bbbbbb", true, false);
    svg.text(Svg::L, Svg::H - Svg::B + 16, fmt_tick(xs.front()), "start");
    svg.text(Svg::W - Svg::R, Svg::H - Svg::B + 16, fmt_tick(xs.back()),
             "end");
    svg.text(Svg::L - 6, Svg::H - Svg::B, "0", "end");
    svg.text(Svg::L - 6, Svg::T + 10, "1", "end");
    out << svg.finish("success rate vs budget", "budget Q (log)",
                      "success rate");
    return;
  }

  if (spec.axis == SweepAxis::Eps || spec.axis == SweepAxis::M) {
    double ylo = 1e300, yhi = 0.0;
    for (double v : mean) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
    for (double v : ub)
      if (v > 0) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
    for (double v : lb)
      if (v > 0) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
    ylo = std::max(ylo / 2.0, 1e-3);
    yhi = yhi * 2.0;
    const bool logx = spec.axis == SweepAxis::Eps;
    double x0 = *std::min_element(xs.begin(), xs.end());
    double x1 = *std::max_element(xs.begin(), xs.end());
    Svg svg(x0, x1, ylo, yhi, logx, true);
    svg.polyline(xs, mean, "#1f6fb2", false, true);
    svg.polyline(xs, ub, "#b22222", true, false);
    svg.polyline(xs, lb, "#777777", true, false);
    svg.text(Svg::L, Svg::H - Svg::B + 16, fmt_tick(x0), "start");
    svg.text(Svg::W - Svg::R, Svg::H - Svg::B + 16, fmt_tick(x1), "end");
    svg.text(Svg::L - 6, Svg::H - Svg::B, fmt_tick(ylo), "end");
    svg.text(Svg::L - 6, Svg::T + 10, fmt_tick(yhi), "end");
    const char* xlabel =
        spec.axis == SweepAxis::Eps ? "eps (log)" : "ranking depth m";
    out << svg.finish("sample complexity (log scale)", xlabel,
                      "subset plays (log)");
    return;
  }

  // axis None: per-item play counts as a bar chart
  const auto& plays = result.rows.front().mean_item_plays;
  double ymax = 1.0;
  for (double v : plays) ymax = std::max(ymax, v);
  Svg svg(0.0, (double)plays.size(), 0.0, ymax * 1.05, false, false);
  for (size_t i = 0; i < plays.size(); ++i)
    svg.bar((double)i + 0.15, (double)i + 0.85, plays[i], "#1f6fb2");
  svg.text(Svg::L, Svg::H - Svg::B + 16, "0", "start");
  svg.text(Svg::W - Svg::R, Svg::H - Svg::B + 16,
           fmt_tick((double)plays.size() - 1), "end");
  svg.text(Svg::L - 6, Svg::H - Svg::B, "0", "end");
  svg.text(Svg::L - 6, Svg::T + 10, fmt_tick(ymax), "end");
  out << svg.finish("mean plays per item", "item", "mean subset plays");
}

}  // namespace plb

#include "bdg/sim.hpp"

#include "bdg/rng.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace bdg {

IntegrandSpec IntegrandSpec::constant(double c) {
  IntegrandSpec s;
  s.kind = Kind::constant;
  s.c = c;
  return s;
}

IntegrandSpec IntegrandSpec::power_of_time(double p) {
  IntegrandSpec s;
  s.kind = Kind::power_of_time;
  s.p = p;
  return s;
}

IntegrandSpec IntegrandSpec::indicator_positive_driver() {
  IntegrandSpec s;
  s.kind = Kind::indicator_positive_driver;
  return s;
}

IntegrandSpec IntegrandSpec::sign_of_driver() {
  IntegrandSpec s;
  s.kind = Kind::sign_of_driver;
  return s;
}

std::string IntegrandSpec::label() const {
  char buf[64];
  switch (kind) {
    case Kind::constant:
      std::snprintf(buf, sizeof buf, "constant(%g)", c);
      return buf;
    case Kind::power_of_time:
      std::snprintf(buf, sizeof buf, "power_of_time(%g)", p);
      return buf;
    case Kind::indicator_positive_driver:
      return "indicator_positive_driver";
    case Kind::sign_of_driver:
      return "sign_of_driver";
  }
  return "?";
}

DriverSpec DriverSpec::wiener() { return DriverSpec{}; }

DriverSpec DriverSpec::time_changed_wiener(double q) {
  DriverSpec d;
  d.kind = Kind::time_changed_wiener;
  d.q = q;
  return d;
}

DriverSpec DriverSpec::compensated_poisson(double lambda) {
  DriverSpec d;
  d.kind = Kind::compensated_poisson;
  d.lambda = lambda;
  return d;
}

std::string DriverSpec::label() const {
  char buf[64];
  switch (kind) {
    case Kind::wiener:
      return "wiener";
    case Kind::time_changed_wiener:
      std::snprintf(buf, sizeof buf, "time_changed_wiener(q=%g)", q);
      return buf;
    case Kind::compensated_poisson:
      std::snprintf(buf, sizeof buf, "compensated_poisson(lambda=%g)", lambda);
      return buf;
  }
  return "?";
}

void SimConfig::validate() {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("SimConfig.t must be positive and finite");
  if (steps < 2) throw std::invalid_argument("SimConfig.steps must be at least 2");
  if (paths < 2) throw std::invalid_argument("SimConfig.paths must be at least 2");
  if (n < 1) throw std::invalid_argument("SimConfig.n must be at least 1");
  if (n > kMaxHermiteN) throw std::invalid_argument("SimConfig.n exceeds the supported range");

  switch (integrand.kind) {
    case IntegrandSpec::Kind::constant:
      if (!std::isfinite(integrand.c)) throw std::invalid_argument("SimConfig.integrand.c must be finite");
      integrand.bound = std::fabs(integrand.c);
      break;
    case IntegrandSpec::Kind::power_of_time:
      if (!(integrand.p >= 0.0) || !std::isfinite(integrand.p))
        throw std::invalid_argument("SimConfig.integrand.p must be nonnegative and finite");
      integrand.bound = std::pow(t, integrand.p);
      break;
    case IntegrandSpec::Kind::indicator_positive_driver:
    case IntegrandSpec::Kind::sign_of_driver:
      integrand.bound = 1.0;
      break;
  }
  if (!std::isfinite(integrand.bound))
    throw std::invalid_argument("SimConfig.integrand is unbounded on [0, t]");

  switch (driver.kind) {
    case DriverSpec::Kind::wiener:
      break;
    case DriverSpec::Kind::time_changed_wiener:
      if (!(driver.q >= 1.0) || !std::isfinite(driver.q))
        throw std::invalid_argument("SimConfig.driver.q must be at least 1 and finite");
      break;
    case DriverSpec::Kind::compensated_poisson:
      if (!(driver.lambda > 0.0) || !std::isfinite(driver.lambda))
        throw std::invalid_argument("SimConfig.driver.lambda must be positive and finite");
      break;
  }
}

namespace {

/// Neumaier-compensated accumulator; summation order is always fixed, this
/// only shrinks the rounding error of the fixed-order sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

PathSample simulate_path(const SimConfig& cfg, long path) {
  PathRng rng(cfg.seed, static_cast<std::uint64_t>(path));
  const double dt = cfg.t / static_cast<double>(cfg.steps);
  CompensatedSum si, qv;
  double driver_value = 0.0;

  for (long i = 0; i < cfg.steps; ++i) {
    const double ti = static_cast<double>(i) * dt;

    double b = 0.0;
    switch (cfg.integrand.kind) {
      case IntegrandSpec::Kind::constant:
        b = cfg.integrand.c;
        break;
      case IntegrandSpec::Kind::power_of_time:
        b = std::pow(ti, cfg.integrand.p);
        break;
      case IntegrandSpec::Kind::indicator_positive_driver:
        b = driver_value > 0.0 ? 1.0 : 0.0;
        break;
      case IntegrandSpec::Kind::sign_of_driver:
        b = driver_value > 0.0 ? 1.0 : (driver_value < 0.0 ? -1.0 : 0.0);
        break;
    }

    double dm = 0.0;
    double dqv = 0.0;
    switch (cfg.driver.kind) {
      case DriverSpec::Kind::wiener:
        dqv = dt;
        dm = std::sqrt(dt) * rng.normal();
        break;
      case DriverSpec::Kind::time_changed_wiener: {
        const double tnext = static_cast<double>(i + 1) * dt;
        dqv = std::pow(tnext, cfg.driver.q) - std::pow(ti, cfg.driver.q);
        dm = std::sqrt(dqv) * rng.normal();
        break;
      }
      case DriverSpec::Kind::compensated_poisson: {
        const double mean = cfg.driver.lambda * dt;
        dqv = mean;
        dm = static_cast<double>(rng.poisson(mean)) - mean;
        break;
      }
    }

    si.add(b * dm);
    qv.add(b * b * dqv);
    driver_value += dm;
  }
  return {si.value(), qv.value()};
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

MomentEstimate estimate_from(const std::vector<PathSample>& batch, double (*f)(const PathSample&, int, int),
                             int n, int k) {
  const long count = static_cast<long>(batch.size());
  CompensatedSum sum;
  for (const auto& s : batch) sum.add(f(s, n, k));
  const double mean = sum.value() / static_cast<double>(count);
  CompensatedSum sq;
  for (const auto& s : batch) {
    const double d = f(s, n, k) - mean;
    sq.add(d * d);
  }
  MomentEstimate e;
  e.value = mean;
  e.count = count;
  const double variance = count > 1 ? sq.value() / static_cast<double>(count - 1) : 0.0;
  e.std_error = std::sqrt(variance / static_cast<double>(count));
  return e;
}

double f_m2n(const PathSample& s, int n, int) { return ipow(s.si, 2 * n); }
double f_qn(const PathSample& s, int n, int) { return ipow(s.qv, n); }
double f_cross(const PathSample& s, int n, int k) { return ipow(s.si, 2 * n - 2 * k) * ipow(s.qv, k); }

}  // namespace

std::vector<PathSample> simulate_batch(SimConfig cfg, int workers) {
  cfg.validate();
  const long paths = cfg.paths;
  std::vector<PathSample> out(static_cast<std::size_t>(paths));
  const int w = static_cast<int>(std::min<long>(resolve_workers(workers), paths));

  if (w <= 1) {
    for (long p = 0; p < paths; ++p) out[static_cast<std::size_t>(p)] = simulate_path(cfg, p);
    return out;
  }

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int worker = 0; worker < w; ++worker) {
    pool.emplace_back([&, worker] {
      for (long p = worker; p < paths; p += w)
        out[static_cast<std::size_t>(p)] = simulate_path(cfg, p);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

MomentSet moment_estimates(const std::vector<PathSample>& batch, int n) {
  if (batch.empty()) throw std::invalid_argument("moment_estimates: empty batch");
  if (n < 1) throw std::invalid_argument("moment_estimates: n must be at least 1");
  MomentSet m;
  m.m2n = estimate_from(batch, f_m2n, n, 0);
  m.qn = estimate_from(batch, f_qn, n, 0);
  m.cross.reserve(static_cast<std::size_t>(n > 1 ? n - 1 : 0));
  for (int k = 1; k <= n - 1; ++k) m.cross.push_back(estimate_from(batch, f_cross, n, k));
  return m;
}

double z_ratio(const MomentEstimate& m2n, const MomentEstimate& qn, int n) {
  if (n < 1) throw std::invalid_argument("z_ratio: n must be at least 1");
  if (!(qn.value > 0.0))
    throw std::domain_error("z_ratio: degenerate denominator (quadratic-variation moment is zero)");
  return std::pow(m2n.value, 1.0 / n) / std::pow(qn.value, 1.0 / n);
}

BdgVerdict check_bdg(const MomentEstimate& m2n, const MomentEstimate& qn,
                     const BoundsResult& bounds, int n) {
  if (bounds.n != n) throw std::invalid_argument("check_bdg: bounds record is for a different n");
  if (!(qn.value > 0.0))
    throw std::domain_error("check_bdg: degenerate denominator (quadratic-variation moment is zero)");

  BdgVerdict v;
  v.n = n;
  v.z_pow_n = m2n.value / qn.value;
  // delta-method propagation of both standard errors to the ratio
  const double se_ratio = std::sqrt(ipow(m2n.std_error / qn.value, 2) +
                                    ipow(v.z_pow_n * qn.std_error / qn.value, 2));
  v.margin = 4.0 * se_ratio;
  v.c1_sharp = bounds.c1_sharp;
  v.c2_sharp = bounds.c2_sharp;
  v.c1_proved = bounds.c1_proved;
  v.c2_proved = bounds.c2_proved;
  v.pass_sharp = v.z_pow_n >= v.c1_sharp - v.margin && v.z_pow_n <= v.c2_sharp + v.margin;
  v.pass_proved = v.z_pow_n >= v.c1_proved - v.margin && v.z_pow_n <= v.c2_proved + v.margin;
  return v;
}

MomentEstimate martingale_identity_check(const std::vector<PathSample>& batch, int n) {
  if (batch.empty()) throw std::invalid_argument("martingale_identity_check: empty batch");
  HermiteCoeffs h = hermite_coeffs(n);
  const long count = static_cast<long>(batch.size());
  CompensatedSum sum;
  for (const auto& s : batch) sum.add(rho_sample(h, s.qv, s.si));
  const double mean = sum.value() / static_cast<double>(count);
  CompensatedSum sq;
  for (const auto& s : batch) {
    const double d = rho_sample(h, s.qv, s.si) - mean;
    sq.add(d * d);
  }
  MomentEstimate e;
  e.value = mean;
  e.count = count;
  const double variance = count > 1 ? sq.value() / static_cast<double>(count - 1) : 0.0;
  e.std_error = std::sqrt(variance / static_cast<double>(count));
  return e;
}

HolderCheck holder_check(const std::vector<PathSample>& batch, int n, int k) {
  if (batch.empty()) throw std::invalid_argument("holder_check: empty batch");
  if (k < 1 || k > n) throw std::invalid_argument("holder_check: requires 1 <= k <= n");

  const double count = static_cast<double>(batch.size());
  CompensatedSum lhs_sum, m_sum, q_sum;
  for (const auto& s : batch) {
    const double abs_si = std::fabs(s.si);
    lhs_sum.add(ipow(abs_si, 2 * n - 2 * k) * ipow(s.qv, k));
    m_sum.add(ipow(abs_si, 2 * n));
    q_sum.add(ipow(s.qv, n));
  }
  HolderCheck h;
  h.lhs = lhs_sum.value() / count;
  h.rhs = std::pow(m_sum.value() / count, static_cast<double>(n - k) / n) *
          std::pow(q_sum.value() / count, static_cast<double>(k) / n);
  h.holds = h.lhs <= h.rhs * (1.0 + 1e-12);
  return h;
}

}  // namespace bdg

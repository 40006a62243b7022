#include "braidmod/monodromy.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace braidmod {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kMaxDepth = 24;
constexpr double kRelativeFloor = 1e-9;

double max_coeff_magnitude(const std::vector<LoopSample>& samples) {
  double c = 0.0;
  for (const auto& s : samples)
    for (const auto& a : s.coeffs) c = std::max(c, std::abs(a));
  return c;
}

}  // namespace

PolynomialLoop::PolynomialLoop(int degree, std::vector<LoopSample> samples,
                               double closure_tolerance)
    : degree_(degree), samples_(std::move(samples)), closure_tolerance_(closure_tolerance) {
  if (degree_ < 2) throw std::invalid_argument("PolynomialLoop: degree must be >= 2");
  if (!(closure_tolerance_ > 0.0))
    throw std::invalid_argument("PolynomialLoop: closure tolerance must be positive");
  for (const auto& s : samples_)
    if (static_cast<int>(s.coeffs.size()) != degree_)
      throw std::invalid_argument("PolynomialLoop: coefficient tuple size != degree");
  if (samples_.empty()) throw std::invalid_argument("PolynomialLoop: no samples");

  // an explicit closing sample at theta_0 + 2pi may be supplied; it must
  // agree with the first sample and is dropped
  if (samples_.size() >= 2 &&
      samples_.back().theta >= samples_.front().theta + kTwoPi - closure_tolerance_) {
    double scale = std::max(1.0, max_coeff_magnitude(samples_));
    for (int i = 0; i < degree_; ++i)
      if (std::abs(samples_.back().coeffs[i] - samples_.front().coeffs[i]) >
          closure_tolerance_ * scale)
        throw std::invalid_argument("PolynomialLoop: closing sample does not match the first");
    samples_.pop_back();
  }

  if (samples_.size() < 8)
    throw std::invalid_argument("PolynomialLoop: need at least 8 samples");
  for (std::size_t j = 0; j < samples_.size(); ++j) {
    if (samples_[j].theta < 0.0 || samples_[j].theta >= kTwoPi)
      throw std::invalid_argument("PolynomialLoop: sample angle outside [0, 2pi)");
    if (j > 0 && !(samples_[j].theta > samples_[j - 1].theta))
      throw std::invalid_argument("PolynomialLoop: sample angles must be strictly increasing");
  }

  double c = max_coeff_magnitude(samples_);
  floor_ = kRelativeFloor * std::pow(std::max(1.0, c), degree_ * (degree_ - 1));
}

std::vector<cplx> PolynomialLoop::coeffs_at(double theta) const {
  const double t0 = samples_.front().theta;
  double t = std::fmod(theta - t0, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  t += t0;  // t in [t0, t0 + 2pi)

  // segment: largest j with theta_j <= t, wrapping to the first sample
  std::size_t j = samples_.size() - 1;
  for (std::size_t k = 1; k < samples_.size(); ++k) {
    if (samples_[k].theta > t) {
      j = k - 1;
      break;
    }
  }
  const auto& a = samples_[j];
  double ta = a.theta;
  double tb;
  const std::vector<cplx>* cb;
  if (j + 1 < samples_.size()) {
    tb = samples_[j + 1].theta;
    cb = &samples_[j + 1].coeffs;
  } else {
    tb = t0 + kTwoPi;
    cb = &samples_.front().coeffs;
  }
  double u = (t - ta) / (tb - ta);
  std::vector<cplx> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = (1.0 - u) * a.coeffs[i] + u * (*cb)[i];
  return out;
}

double PolynomialLoop::separability_floor() const { return floor_; }

cplx discriminant(int n, const std::vector<cplx>& coeffs) {
  if (n < 2 || static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("discriminant: need n >= 2 coefficients a_0..a_{n-1}");

  // descending coefficients of p and p'
  std::vector<cplx> p(n + 1), dp(n);
  p[0] = 1.0;
  for (int i = 0; i < n; ++i) p[n - i] = coeffs[i];
  for (int i = 0; i <= n - 1; ++i) dp[i] = static_cast<double>(n - i) * p[i];

  const int m = 2 * n - 1;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(m, m);
  for (int r = 0; r < n - 1; ++r)
    for (int c = 0; c <= n; ++c) s(r, r + c) = p[c];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= n - 1; ++c) s(n - 1 + r, r + c) = dp[c];

  cplx res = s.determinant();
  int sign = ((static_cast<long long>(n) * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  return static_cast<double>(sign) * res;
}

double validate_separable(const PolynomialLoop& loop) {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& s : loop.samples())
    lo = std::min(lo, std::abs(discriminant(loop.degree(), s.coeffs)));
  if (lo < loop.separability_floor())
    throw SeparabilityViolation("loop leaves the separable set: min |D| = " +
                                std::to_string(lo) + " below floor " +
                                std::to_string(loop.separability_floor()));
  return lo;
}

namespace {

cplx disc_at(const PolynomialLoop& loop, double theta, bool interpolated) {
  cplx d = discriminant(loop.degree(), loop.coeffs_at(theta));
  if (std::abs(d) < loop.separability_floor()) {
    if (interpolated)
      throw SeparabilityViolation(
          "interpolated coefficient chord leaves the separable set near theta=" +
          std::to_string(theta) + "; supply denser samples");
    throw SeparabilityViolation("sample discriminant below floor at theta=" +
                                std::to_string(theta));
  }
  return d;
}

double arg_increment(const PolynomialLoop& loop, double ta, cplx da, double tb, cplx db,
                     int depth) {
  double inc = std::arg(db / da);
  if (std::abs(inc) <= 1.5707963267948966) return inc;
  if (depth >= kMaxDepth)
    throw RefinementExhausted("discriminant_index: argument step bound not met after " +
                              std::to_string(kMaxDepth) + " bisections");
  double tm = 0.5 * (ta + tb);
  cplx dm = disc_at(loop, tm, true);
  return arg_increment(loop, ta, da, tm, dm, depth + 1) +
         arg_increment(loop, tm, dm, tb, db, depth + 1);
}

}  // namespace

long long discriminant_index(const PolynomialLoop& loop) {
  validate_separable(loop);
  const auto& samples = loop.samples();
  double total = 0.0;
  cplx da = disc_at(loop, samples.front().theta, false);
  cplx d0 = da;
  double ta = samples.front().theta;
  for (std::size_t j = 1; j <= samples.size(); ++j) {
    double tb;
    cplx db;
    if (j < samples.size()) {
      tb = samples[j].theta;
      db = disc_at(loop, tb, false);
    } else {
      tb = samples.front().theta + kTwoPi;
      db = d0;
    }
    total += arg_increment(loop, ta, da, tb, db, 0);
    ta = tb;
    da = db;
  }
  double w = total / kTwoPi;
  long long k = std::llround(w);
  if (std::abs(w - static_cast<double>(k)) >= 0.25)
    throw RefinementExhausted("discriminant_index: winding residue too large");
  return k;
}

namespace {

std::vector<cplx> polynomial_roots(int n, const std::vector<cplx>& coeffs) {
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);

  std::vector<cplx> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];

  // one Newton polish per root
  for (cplx& z : roots) {
    cplx p = 1.0, dp = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + coeffs[i];
    }
    if (std::abs(dp) > 0.0) z -= p / dp;
  }
  return roots;
}

double min_pairwise_gap(const std::vector<cplx>& zs) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      g = std::min(g, std::abs(zs[i] - zs[j]));
  return g;
}

// Nearest-neighbor matching of the new configuration onto the current one;
// certified when every displacement stays below half the minimal gap of the
// current configuration and the assignment is a bijection.
bool try_match(const std::vector<cplx>& from, const std::vector<cplx>& to,
               std::vector<cplx>& matched) {
  const std::size_t n = from.size();
  double half_gap = 0.5 * min_pairwise_gap(from);
  std::vector<int> pick(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    int bj = -1;
    for (std::size_t j = 0; j < n; ++j) {
      double d = std::abs(from[i] - to[j]);
      if (d < best) {
        best = d;
        bj = static_cast<int>(j);
      }
    }
    if (best >= half_gap || used[bj]) return false;
    used[bj] = true;
    pick[i] = bj;
  }
  matched.resize(n);
  for (std::size_t i = 0; i < n; ++i) matched[i] = to[pick[i]];
  return true;
}

}  // namespace

RootTrack track_roots(const PolynomialLoop& loop) {
  validate_separable(loop);
  const int n = loop.degree();
  const auto& samples = loop.samples();

  RootTrack track;
  track.degree = n;

  auto roots_at = [&](double theta, bool interpolated) {
    disc_at(loop, theta, interpolated);  // separability along the chord
    return polynomial_roots(n, loop.coeffs_at(theta));
  };

  std::vector<cplx> start = roots_at(samples.front().theta, false);
  std::sort(start.begin(), start.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  track.thetas.push_back(samples.front().theta);
  track.positions.push_back(start);

  std::vector<cplx> cur = start;
  double cur_theta = samples.front().theta;

  // advance to the target angle, bisecting uncertified steps
  std::function<void(double, bool, int)> advance = [&](double target, bool interp,
                                                       int depth) {
    std::vector<cplx> to = roots_at(target, interp);
    std::vector<cplx> matched;
    if (try_match(cur, to, matched)) {
      cur = std::move(matched);
      cur_theta = target;
      track.thetas.push_back(target);
      track.positions.push_back(cur);
      return;
    }
    if (depth >= kMaxDepth)
      throw RefinementExhausted("track_roots: step certification failed after " +
                                std::to_string(kMaxDepth) + " bisections near theta=" +
                                std::to_string(target));
    ++track.refinement_steps;
    double mid = 0.5 * (cur_theta + target);
    advance(mid, true, depth + 1);
    advance(target, interp, depth + 1);
  };

  for (std::size_t j = 1; j < samples.size(); ++j) advance(samples[j].theta, false, 0);
  advance(samples.front().theta + kTwoPi, false, 0);

  // closure: match the final configuration back onto the starting roots
  double half_gap = 0.5 * min_pairwise_gap(start);
  track.closure.assign(n, -1);
  std::vector<bool> used(n, false);
  for (int s = 0; s < n; ++s) {
    double best = std::numeric_limits<double>::infinity();
    int bj = -1;
    for (int j = 0; j < n; ++j) {
      double d = std::abs(cur[s] - start[j]);
      if (d < best) {
        best = d;
        bj = j;
      }
    }
    if (bj < 0 || best >= half_gap || used[bj])
      throw CrossCheckFailed("track_roots: endpoint configuration does not close up");
    used[bj] = true;
    track.closure[s] = bj;
  }
  return track;
}

namespace {

struct Crossing {
  double u;
  int a, b;  // strand ids
};

// One extraction attempt with the projection direction rotated by eps.
// Returns false on a tie or tangled event (caller retries with another eps).
bool extract_with_rotation(const RootTrack& track, double eps, std::vector<int>& letters,
                           std::vector<int>& init_pos_of, std::vector<int>& final_pos_of) {
  const int n = track.degree;
  const std::size_t T = track.thetas.size();
  const cplx rot = std::polar(1.0, -eps);

  double diam = 0.0;
  for (const auto& zs : track.positions)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) diam = std::max(diam, std::abs(zs[i] - zs[j]));
  const double tie_tol = 1e-12 * diam;

  std::vector<std::vector<cplx>> pos(T);
  for (std::size_t t = 0; t < T; ++t) {
    pos[t].resize(n);
    for (int s = 0; s < n; ++s) pos[t][s] = track.positions[t][s] * rot;
  }

  // any two strands with nearly equal projection at a grid time is a tie
  for (std::size_t t = 0; t < T; ++t)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(pos[t][i].real() - pos[t][j].real()) < tie_tol) return false;

  std::vector<int> order(n);  // position -> strand id
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pos[0][a].real() < pos[0][b].real(); });
  std::vector<int> pos_of(n);  // strand id -> position
  for (int p = 0; p < n; ++p) pos_of[order[p]] = p;
  init_pos_of = pos_of;

  letters.clear();
  for (std::size_t t = 0; t + 1 < T; ++t) {
    // linear strand motion within the step: collect crossing events
    std::vector<Crossing> events;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double d0 = pos[t][i].real() - pos[t][j].real();
        double d1 = pos[t + 1][i].real() - pos[t + 1][j].real();
        if ((d0 > 0.0) != (d1 > 0.0)) events.push_back({d0 / (d0 - d1), i, j});
      }
    }
    std::sort(events.begin(), events.end(),
              [](const Crossing& x, const Crossing& y) { return x.u < y.u; });
    for (std::size_t e = 0; e + 1 < events.size(); ++e) {
      if (events[e + 1].u - events[e].u < 1e-12 &&
          (events[e].a == events[e + 1].a || events[e].a == events[e + 1].b ||
           events[e].b == events[e + 1].a || events[e].b == events[e + 1].b))
        return false;  // simultaneous events sharing a strand
    }
    for (const auto& ev : events) {
      int pa = pos_of[ev.a], pb = pos_of[ev.b];
      if (std::abs(pa - pb) != 1) return false;  // tangled: not adjacent when crossing
      int i = std::min(pa, pb);
      int left = order[i], right = order[i + 1];
      double im_left = (1.0 - ev.u) * pos[t][left].imag() + ev.u * pos[t + 1][left].imag();
      double im_right =
          (1.0 - ev.u) * pos[t][right].imag() + ev.u * pos[t + 1][right].imag();
      // the left strand passes to larger real part; + when it is the lower one
      int sign = (im_left < im_right) ? 1 : -1;
      letters.push_back(sign * (i + 1));
      std::swap(order[i], order[i + 1]);
      pos_of[order[i]] = i;
      pos_of[order[i + 1]] = i + 1;
    }
  }
  final_pos_of = pos_of;
  return true;
}

}  // namespace

MonodromyResult extract_braid(const RootTrack& track, long long discriminant_index) {
  static const double kProbes[] = {0.0, 1e-3, 2e-3, 3e-3};
  const int n = track.degree;

  std::vector<int> letters, init_pos_of, final_pos_of;
  bool ok = false;
  for (double eps : kProbes) {
    if (extract_with_rotation(track, eps, letters, init_pos_of, final_pos_of)) {
      ok = true;
      break;
    }
  }
  if (!ok)
    throw ProjectionDegenerate(
        "extract_braid: no probe direction gave a tie-free extraction");

  BraidWord braid(n, letters);
  Permutation perm = underlying_permutation(braid);

  // the word's permutation must agree with the track's closure matching:
  // strand s ends at the position occupied by its closing root, and the
  // crossing word realizes exactly that position change
  for (int s = 0; s < n; ++s) {
    if (final_pos_of[s] != init_pos_of[track.closure[s]] ||
        perm.apply(init_pos_of[s]) != final_pos_of[s])
      throw CrossCheckFailed("extract_braid: strand permutation disagrees with closure");
  }

  if (exponent_sum(braid) != discriminant_index)
    throw CrossCheckFailed("extract_braid: exponent sum " +
                           std::to_string(exponent_sum(braid)) +
                           " != discriminant index " + std::to_string(discriminant_index));
  return MonodromyResult{std::move(braid), std::move(perm), discriminant_index};
}

MonodromyResult braid_monodromy(const PolynomialLoop& loop) {
  validate_separable(loop);
  long long index = discriminant_index(loop);
  RootTrack track = track_roots(loop);
  return extract_braid(track, index);
}

bool is_irreducible_class(const MonodromyResult& result) {
  return result.permutation.is_n_cycle();
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

ZjuzinVerdict zjuzin_reducibility(int n, const ModuleValue& annulus_mod, long long index) {
  if (!is_prime(n))
    throw std::invalid_argument("zjuzin_reducibility: degree must be prime");
  const double r0 = kTwoPi / std::log(2.0);  // 2pi / log 2
  ModuleValue threshold = ModuleValue::finite(n * r0);
  if (annulus_mod > threshold && index % n == 0) return ZjuzinVerdict::GuaranteedReducible;
  return ZjuzinVerdict::Inconclusive;
}

Lemma2Verdict lemma2_solvability(const ModuleValue& annulus_mod) {
  const double h3 = std::log((3.0 + std::sqrt(5.0)) / 2.0);
  ModuleValue threshold = ModuleValue::finite(std::acos(-1.0) / (2.0 * h3));
  if (annulus_mod > threshold) return Lemma2Verdict::SolvableOverA;
  return Lemma2Verdict::Inconclusive;
}

std::string to_string(ZjuzinVerdict v) {
  return v == ZjuzinVerdict::GuaranteedReducible ? "GuaranteedReducible" : "Inconclusive";
}
std::string to_string(Lemma2Verdict v) {
  return v == Lemma2Verdict::SolvableOverA ? "SolvableOverA" : "Inconclusive";
}
std::string to_string(Lemma1Verdict v) {
  return v == Lemma1Verdict::AlgebroidExcluded ? "AlgebroidExcluded" : "NotExcluded";
}

}  // namespace braidmod

#pragma once

#include <complex>

#include "braidmod/conformal.hpp"
#include "braidmod/garside.hpp"

namespace braidmod {

using cplx = std::complex<double>;

struct SeparabilityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RefinementExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ProjectionDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CrossCheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoopSample {
  double theta;              // in [0, 2pi), strictly increasing across samples
  std::vector<cplx> coeffs;  // a_0 ... a_{n-1}; leading coefficient is 1
};

// A closed loop in the space of monic degree-n polynomials, sampled on the
// circle with linear coefficient interpolation between samples (and from the
// last sample back around to the first).
class PolynomialLoop {
public:
  PolynomialLoop(int degree, std::vector<LoopSample> samples,
                 double closure_tolerance = 1e-9);

  int degree() const { return degree_; }
  const std::vector<LoopSample>& samples() const { return samples_; }
  double closure_tolerance() const { return closure_tolerance_; }

  // piecewise-linear coefficients at any angle (theta taken mod 2pi)
  std::vector<cplx> coeffs_at(double theta) const;

  // relative separability floor: 1e-9 * max(1, C)^{n(n-1)}, C = largest
  // coefficient magnitude over the samples
  double separability_floor() const;

private:
  int degree_;
  std::vector<LoopSample> samples_;
  double closure_tolerance_;
  double floor_;
};

// Discriminant of the monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0,
// as (-1)^{n(n-1)/2} Res(p, p') via the Sylvester determinant.
cplx discriminant(int n, const std::vector<cplx>& coeffs);

// Returns the certified minimum of |D_n| over the samples; throws
// SeparabilityViolation when it falls below the loop's floor.
double validate_separable(const PolynomialLoop& loop);

// Winding number of theta -> D_n(p(theta)) around 0, by adaptive argument
// accumulation with step bound pi/2.
long long discriminant_index(const PolynomialLoop& loop);

// n continuous strand paths over the (refined) angle grid. Strand s keeps
// index s at every time; the last time is theta_0 + 2pi, where the
// configuration returns to the starting one as a set.
struct RootTrack {
  int degree = 0;
  std::vector<double> thetas;
  std::vector<std::vector<cplx>> positions;  // positions[t][s]
  int refinement_steps = 0;                  // bisections performed

  // strand s ends on the starting root of index closure[s]
  std::vector<int> closure;
};

RootTrack track_roots(const PolynomialLoop& loop);

struct MonodromyResult {
  BraidWord braid;
  Permutation permutation;
  long long discriminant_index;
};

// Reads the braid word off the real-axis projection of the track. The index
// is cross-checked against the word's exponent sum.
MonodromyResult extract_braid(const RootTrack& track, long long discriminant_index);

// validate + index + track + extract in one call
MonodromyResult braid_monodromy(const PolynomialLoop& loop);

// Necessary condition for irreducibility over the annulus: the strand
// permutation is a single n-cycle.
bool is_irreducible_class(const MonodromyResult& result);

enum class ZjuzinVerdict { GuaranteedReducible, Inconclusive };

// Degree must be prime. GuaranteedReducible iff m(A) > n * 2pi/log 2 and the
// discriminant index is divisible by n. One-directional.
ZjuzinVerdict zjuzin_reducibility(int n, const ModuleValue& annulus_mod,
                                  long long index);

enum class Lemma2Verdict { SolvableOverA, Inconclusive };

// Degree-3 solvability criterion, conditional on the geometric hypotheses
// (annulus sharing the boundary circle of a positive-genus surface with a
// geometric disc removed): solvable iff m(A) strictly exceeds
// pi / (2 log((3+sqrt 5)/2)).
Lemma2Verdict lemma2_solvability(const ModuleValue& annulus_mod);

std::string to_string(ZjuzinVerdict v);
std::string to_string(Lemma2Verdict v);
std::string to_string(Lemma1Verdict v);

}  // namespace braidmod

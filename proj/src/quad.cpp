#include "klb/quad.hpp"

#include <cmath>
#include <vector>

namespace klb {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK QK15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
  double integral;  // Kronrod value
  double error;     // |Kronrod - Gauss|
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double result_g = fc * kWg[3];
  double result_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    result_k += kWgk[j] * fsum;
    if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
  }
  return {result_k * h, std::abs((result_k - result_g) * h)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b, double tol,
                     double rel_tol, int depth, int max_depth) {
  const PanelResult r = gk15(f, a, b);
  if (r.error <= tol || r.error <= rel_tol * std::abs(r.integral)) return r.integral;
  if (depth >= max_depth) {
    throw ConvergenceError("integrate_adaptive: tolerance not reached at maximum depth");
  }
  const double c = 0.5 * (a + b);
  return integrate_rec(f, a, c, 0.5 * tol, rel_tol, depth + 1, max_depth) +
         integrate_rec(f, c, b, 0.5 * tol, rel_tol, depth + 1, max_depth);
}

// 15-point Gauss-Legendre nodes/weights on [-1,1] (positive half).
constexpr double kXg15[8] = {
    0.000000000000000000000000000000000,
    0.201194093997434522300628303394596,
    0.394151347077563369897207370981045,
    0.570972172608538847537226737253911,
    0.724417731360170047416186054613938,
    0.848206583410427216200648320774217,
    0.937273392400705904307758947710209,
    0.987992518020485428489565718586613,
};
constexpr double kWg15[8] = {
    0.202578241925561272880620199967519,
    0.198431485327111576456118326443839,
    0.186161000015562211026800561866423,
    0.166269205816993933553200860481209,
    0.139570677926154314447804794511028,
    0.107159220467171935011869546685869,
    0.070366047488108124709267416450667,
    0.030753241996117268354628393577204,
};

}  // namespace

double gauss15_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double acc = kWg15[0] * f(c);
  for (int j = 1; j < 8; ++j) {
    const double x = h * kXg15[j];
    acc += kWg15[j] * (f(c - x) + f(c + x));
  }
  return acc * h;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureControls& ctl) {
  if (a == b) return 0.0;
  return integrate_rec(f, a, b, ctl.abs_tol, ctl.rel_tol, 0, ctl.max_depth);
}

double accelerate_alternating(const std::vector<double>& partial, double tol) {
  if (partial.empty()) throw SizeError("accelerate_alternating: empty sequence");
  std::vector<double> row = partial;
  double best = row.back();
  double prev = best;
  // iterated averaging: each pass halves the alternating envelope
  for (std::size_t pass = 0; row.size() > 1; ++pass) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
    best = row.back();
    if (pass > 0 && std::abs(best - prev) <= tol) return best;
    prev = best;
  }
  if (partial.size() == 1) return partial[0];
  throw ConvergenceError("accelerate_alternating: averaging triangle did not stabilize");
}

}  // namespace klb

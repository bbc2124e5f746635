#include "dkpo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "dkpo/errors.hpp"

namespace dkpo {

namespace {

// 15-point Kronrod extension of 7-point Gauss, nodes on [-1,1].
constexpr double kx[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kw[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

// Gauss weights attach to the odd Kronrod nodes (indices 1,3,...,13).
constexpr double gw[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Segment {
  double a, b, value, err;
  long long seq;  // insertion order, ties broken deterministically
  bool operator<(const Segment& other) const {
    if (err != other.err) return err < other.err;
    return seq > other.seq;
  }
};

Segment eval_segment(const std::function<double(double)>& f, double a, double b,
                     long long seq) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k15 = 0.0, g7 = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(c + h * kx[i]);
    k15 += kw[i] * fx;
    if (i % 2 == 1) g7 += gw[i / 2] * fx;
  }
  k15 *= h;
  g7 *= h;
  // QUADPACK-style sharpened error estimate.
  const double diff = std::abs(k15 - g7);
  const double err = diff > 0.0 ? diff * std::min(1.0, std::pow(200.0 * diff, 1.5)) : 0.0;
  return Segment{a, b, k15, std::max(err, diff * 1e-6), seq};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opt) {
  std::priority_queue<Segment> heap;
  std::vector<Segment> finished;  // intervals at double-precision resolution
  long long seq = 0;
  heap.push(eval_segment(f, a, b, seq++));
  double total = heap.top().value;
  double heap_err = heap.top().err;
  double stuck_err = 0.0;
  int n = 1;

  auto tol = [&](double t) { return std::max(opt.abs_tol, opt.rel_tol * std::abs(t)); };

  while (!heap.empty() && heap_err + stuck_err > tol(total) && n < opt.max_intervals) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap_err -= worst.err;
      stuck_err += worst.err;
      finished.push_back(worst);
      continue;
    }
    Segment left = eval_segment(f, worst.a, mid, seq++);
    Segment right = eval_segment(f, mid, worst.b, seq++);
    total += left.value + right.value - worst.value;
    heap_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++n;
  }

  // Re-accumulate left-to-right for a deterministic, well-ordered sum.
  std::vector<Segment> segs = std::move(finished);
  segs.reserve(segs.size() + heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  double value = 0.0, err = 0.0;
  for (const auto& s : segs) {
    value += s.value;
    err += s.err;
  }
  return QuadResult{value, err, n, err <= tol(value)};
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const QuadOptions& opt) {
  const QuadResult r = integrate(f, a, b, opt);
  if (!r.converged)
    throw numerical_error("quadrature failed to reach tolerance", r.error_estimate);
  return r.value;
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadOptions& opt, int decades) {
  auto mapped = [&f](double t) -> double {
    const double u = 1.0 - t;
    if (u <= 0.0) return 0.0;
    const double x = t / u;
    if (!std::isfinite(x)) return 0.0;
    const double fx = f(x);
    return fx / (u * u);
  };
  // Break points at x = 10^j keep far-out mass visible to the estimator.
  std::vector<double> ts = {0.0, 0.5};  // x = 0, 1
  double x = 10.0;
  for (int j = 1; j <= decades; ++j, x *= 10.0) ts.push_back(x / (1.0 + x));
  ts.push_back(1.0);

  QuadResult total;
  QuadOptions per = opt;
  per.abs_tol = opt.abs_tol / static_cast<double>(ts.size());
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    QuadResult r = integrate(mapped, ts[i], ts[i + 1], per);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.intervals += r.intervals;
  }
  total.converged = total.error_estimate <=
                    std::max(opt.abs_tol, opt.rel_tol * std::abs(total.value));
  return total;
}

}  // namespace dkpo

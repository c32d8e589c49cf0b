#include "kframe/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kframe/errors.hpp"
#include "kframe/linalg.hpp"

namespace kframe {

namespace {

void require_sorted_positive(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw InvalidDimension(std::string(what) + ": empty list");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) throw InvalidDimension(std::string(what) + ": entries must be positive");
    if (i > 0 && v[i] > v[i - 1])
      throw InvalidDimension(std::string(what) + ": entries must be sorted descending");
  }
}

}  // namespace

SpectrumSpec make_spectrum(std::vector<double> eigenvalues) {
  require_sorted_positive(eigenvalues, "SpectrumSpec");
  return SpectrumSpec{std::move(eigenvalues)};
}

NormSpec make_norms(std::vector<double> norms) {
  require_sorted_positive(norms, "NormSpec");
  return NormSpec{std::move(norms)};
}

MajorizationReport check_majorization(const SpectrumSpec& spectrum, const NormSpec& norms) {
  const auto& lam = spectrum.eigenvalues;
  const auto& a = norms.norms;
  MajorizationReport rep;
  rep.trace_rhs = std::accumulate(lam.begin(), lam.end(), 0.0);
  for (double an : a) rep.trace_lhs += an * an;
  const double scale = std::max({rep.trace_lhs, rep.trace_rhs, 1.0});

  double sa = 0.0, sl = 0.0;
  rep.partial_ok.resize(lam.size(), true);
  for (std::size_t j = 0; j < lam.size(); ++j) {
    sl += lam[j];
    if (j < a.size()) sa += a[j] * a[j];
    rep.partial_ok[j] = sa <= sl + 1e-12 * scale;
  }
  rep.trace_balanced = std::abs(rep.trace_lhs - rep.trace_rhs) <= 1e-10 * scale;
  rep.totals_dominated = rep.trace_lhs <= rep.trace_rhs + 1e-12 * scale;
  rep.feasible = rep.trace_balanced &&
                 std::all_of(rep.partial_ok.begin(), rep.partial_ok.end(),
                             [](bool b) { return b; });
  return rep;
}

Matrix schur_horn_hermitian(const std::vector<double>& mu, const std::vector<double>& d) {
  const std::size_t k = mu.size();
  if (d.size() != k) throw DimensionMismatch("schur_horn: spectrum/diagonal length mismatch");
  if (k == 0) return Matrix();
  for (std::size_t i = 1; i < k; ++i)
    if (mu[i] > mu[i - 1]) throw InvalidDimension("schur_horn: spectrum must be descending");

  // majorization gate on the sorted diagonal
  std::vector<double> ds = d;
  std::sort(ds.begin(), ds.end(), std::greater<double>());
  const double total_mu = std::accumulate(mu.begin(), mu.end(), 0.0);
  const double total_d = std::accumulate(d.begin(), d.end(), 0.0);
  const double scale = std::max({std::abs(total_mu), std::abs(total_d), 1.0});
  double pm = 0.0, pd = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    pm += mu[j];
    pd += ds[j];
    if (pd > pm + 1e-10 * scale)
      throw NotMajorized("schur_horn: diagonal partial sums exceed spectrum partial sums");
  }
  if (std::abs(total_mu - total_d) > 1e-10 * scale)
    throw NotMajorized("schur_horn: totals differ");

  // Givens chain on the working matrix, largest target first. At each step the
  // unpinned principal block is diagonal; rotating the two values that bracket
  // the target pins one diagonal entry exactly and keeps majorization intact.
  Matrix g = Matrix::diagonal(mu);
  std::vector<double> w = mu;                   // current unpinned diagonal values
  std::vector<bool> pinned(k, false);
  std::vector<std::size_t> slot_of_target(k);   // matrix index holding target t

  std::vector<std::size_t> torder(k);
  std::iota(torder.begin(), torder.end(), std::size_t{0});
  std::sort(torder.begin(), torder.end(),
            [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });

  for (std::size_t step = 0; step < k; ++step) {
    const double t = d[torder[step]];
    // rotate the two unpinned values bracketing t; this keeps the remaining
    // values majorizing the remaining targets
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < k; ++i)
      if (!pinned[i]) live.push_back(i);
    std::sort(live.begin(), live.end(),
              [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
    std::size_t pos = 0;  // last live position with w >= t, clamped to the ends
    while (pos + 1 < live.size() && w[live[pos + 1]] >= t) ++pos;
    if (pos + 1 == live.size() && pos > 0) --pos;
    const std::size_t hi = live[pos];
    const std::size_t lo = live.size() > 1 ? live[pos + 1] : hi;
    if (hi == lo) {  // last unpinned entry; totals force w[hi] == t
      slot_of_target[torder[step]] = hi;
      g(hi, hi) = t;
      pinned[hi] = true;
      continue;
    }
    const double whi = w[hi], wlo = w[lo];
    std::size_t pin = hi;
    if (std::abs(whi - wlo) <= 1e-15 * std::max(1.0, std::abs(whi))) {
      // equal pair, no rotation needed
      g(pin, pin) = t;
    } else {
      double c2 = (t - wlo) / (whi - wlo);
      c2 = std::clamp(c2, 0.0, 1.0);
      const double c = std::sqrt(c2);
      const double s = std::sqrt(1.0 - c2);
      // plane rotation R = [[c, -s],[s, c]] on (hi, lo): G <- R^T G R
      for (std::size_t i = 0; i < k; ++i) {
        const complex ghi = g(i, hi), glo = g(i, lo);
        g(i, hi) = c * ghi + s * glo;
        g(i, lo) = -s * ghi + c * glo;
      }
      for (std::size_t j = 0; j < k; ++j) {
        const complex ghj = g(hi, j), glj = g(lo, j);
        g(hi, j) = c * ghj + s * glj;
        g(lo, j) = -s * ghj + c * glj;
      }
      g(pin, pin) = t;  // analytically exact, pin it bit-exactly
      w[lo] = whi + wlo - t;
      g(lo, lo) = w[lo];
    }
    slot_of_target[torder[step]] = pin;
    pinned[pin] = true;
  }

  // permute so that position p carries d[p]
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out(i, j) = g(slot_of_target[i], slot_of_target[j]);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = d[i];
  return out;
}

VectorFamily construct_frame(const PontryaginSpace& space, const Matrix& s0,
                             const NormSpec& norms, FrameFlavor flavor) {
  const std::size_t n = space.dim();
  if (s0.rows() != n || s0.cols() != n)
    throw DimensionMismatch("construct_frame: operator does not match the space");
  const std::size_t k = norms.norms.size();
  if (k < n) throw InvalidDimension("construct_frame: need at least dim vectors");

  auto eig = hermitian_eig(s0);  // throws NotHermitian on bad input
  if (eig.values.back() <= 1e-12 * std::max(eig.values.front(), 0.0) ||
      eig.values.back() <= 0.0)
    throw NotPositiveDefinite("construct_frame: operator is not positive definite");

  std::vector<double> a2(k);
  for (std::size_t i = 0; i < k; ++i) a2[i] = norms.norms[i] * norms.norms[i];
  auto report = check_majorization(make_spectrum(eig.values), norms);
  if (!report.feasible)
    throw NotMajorized("construct_frame: norms are not majorized by the spectrum");

  std::vector<double> mu = eig.values;
  mu.resize(k, 0.0);
  const Matrix g = schur_horn_hermitian(mu, a2);
  auto geig = hermitian_eig(g);

  // X = U diag(sqrt(lambda)) (first n rows of W^H): X X^H = S0, diag(X^H X) = a^2
  Matrix core(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    const double root = std::sqrt(eig.values[i]);
    for (std::size_t j = 0; j < k; ++j) core(i, j) = root * std::conj(geig.vectors(j, i));
  }
  Matrix x = eig.vectors * core;

  if (flavor == FrameFlavor::JFamilyPontryagin || flavor == FrameFlavor::JFamilyHilbert)
    x = space.apply_symmetry(x);
  return VectorFamily{space, x};
}

}  // namespace kframe

#include "skyrm/exact.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include "skyrm/hamiltonian.hpp"

namespace skyrm {

void LanczosConfig::validate() const {
  if (max_krylov < 2) throw std::invalid_argument("max_krylov must be >= 2");
  if (!(residual_tol > 0.0)) throw std::invalid_argument("residual_tol must be > 0");
  if (max_restarts < 0) throw std::invalid_argument("max_restarts must be >= 0");
  if (keep_on_restart < 1 || keep_on_restart >= max_krylov)
    throw std::invalid_argument("keep_on_restart must be in [1, max_krylov)");
}

namespace {

using Vec = std::vector<cplx>;

cplx dot(const Vec& a, const Vec& b) {
  cplx s{0.0, 0.0};
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

double nrm(const Vec& a) {
  double s = 0.0;
  for (const cplx& v : a) s += std::norm(v);
  return std::sqrt(s);
}

void axpy(Vec& y, cplx alpha, const Vec& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += alpha * x[k];
}

void scale(Vec& y, double s) {
  for (cplx& v : y) v *= s;
}

Vec random_start(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  for (cplx& a : v) a = cplx{gauss(rng), gauss(rng)};
  scale(v, 1.0 / nrm(v));
  return v;
}

// Two classical Gram-Schmidt passes against the whole stored basis.
void full_reorthogonalize(Vec& w, const std::vector<Vec>& basis, int count) {
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < count; ++i) axpy(w, -dot(basis[i], w), basis[i]);
}

}  // namespace

GroundState lanczos_ground(const PauliSum& hamiltonian, const LanczosConfig& config) {
  config.validate();
  if (hamiltonian.n_qubits < 1 || hamiltonian.n_qubits > kDefaultMaxSites)
    throw std::invalid_argument("lanczos_ground: qubit count outside resource cap");
  const std::size_t dim = std::size_t{1} << hamiltonian.n_qubits;
  const int m = config.max_krylov;

  std::vector<Vec> basis;
  basis.reserve(m + 1);
  basis.push_back(random_start(dim, config.rng_seed));

  // Projected matrix; tridiagonal while running plainly, arrowhead block after
  // a thick restart. Only the leading (j+1)x(j+1) block is meaningful.
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(m, m);

  GroundState best;
  best.converged = false;
  best.residual = std::numeric_limits<double>::infinity();

  std::mt19937_64 breakdown_rng(config.rng_seed ^ 0x9e3779b97f4a7c15ull);

  Vec w(dim);
  int j = 0;              // index of the next column to produce
  int locked = 0;         // number of restart-carried Ritz vectors (arrowhead size)
  int restarts = 0;
  int mv = 0;

  std::vector<double> trace;

  while (true) {
    // w = H q_j minus the known projections
    matvec(hamiltonian, std::span<const cplx>(basis[j]), std::span<cplx>(w));
    ++mv;
    const double alpha = dot(basis[j], w).real();
    proj(j, j) = alpha;
    if (j == locked && locked > 0) {
      // first step after a thick restart: subtract the arrowhead couplings
      for (int i = 0; i < locked; ++i) axpy(w, cplx{-proj(i, j), 0.0}, basis[i]);
      axpy(w, cplx{-alpha, 0.0}, basis[j]);
    } else {
      axpy(w, cplx{-alpha, 0.0}, basis[j]);
      if (j > 0) axpy(w, cplx{-proj(j - 1, j), 0.0}, basis[j - 1]);
    }
    if (config.reorthogonalize) full_reorthogonalize(w, basis, j + 1);

    const int k = j + 1;  // current subspace size

    // Ritz extraction from the leading k x k block (stored symmetrically).
    const Eigen::MatrixXd proj_block = proj.topLeftCorner(k, k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(proj_block);
    const Eigen::VectorXd& theta = es.eigenvalues();
    trace.push_back(theta(0));

    double beta = nrm(w);
    const double res_est = beta * std::abs(es.eigenvectors()(k - 1, 0));
    const double tol = config.residual_tol * std::max(1.0, std::abs(theta(0)));

    if (res_est <= tol || k == static_cast<int>(dim)) {
      // Assemble the Ritz vector and check the residual explicitly.
      Vec v(dim, cplx{0.0, 0.0});
      for (int i = 0; i < k; ++i) axpy(v, cplx{es.eigenvectors()(i, 0), 0.0}, basis[i]);
      scale(v, 1.0 / nrm(v));
      Vec hv(dim);
      matvec(hamiltonian, std::span<const cplx>(v), std::span<cplx>(hv));
      ++mv;
      const double energy = dot(v, hv).real();
      axpy(hv, cplx{-energy, 0.0}, v);
      const double res = nrm(hv);

      GroundState gs;
      gs.energy = energy;
      gs.vector.n_qubits = hamiltonian.n_qubits;
      gs.vector.amp = std::move(v);
      gs.residual = res;
      gs.gap_estimate = (k > 1) ? std::max(0.0, theta(1) - theta(0)) : 0.0;
      gs.near_degenerate = (k > 1) && gs.gap_estimate < 1e-6;
      gs.matvec_count = mv;
      gs.ritz_trace = trace;
      if (config.collect_basis) gs.debug_basis = basis;
      if (res <= config.residual_tol * std::max(1.0, std::abs(energy))) {
        gs.converged = true;
        return gs;
      }
      if (res < best.residual) best = gs;
      // Estimate was optimistic; fall through and keep iterating.
    }

    double coupling = beta;
    if (beta <= 1e-12 * std::max(1.0, std::abs(theta(0)))) {
      // Invariant subspace without convergence: inject a fresh random
      // direction. H maps the exhausted span into itself, so the new column
      // carries no coupling to it.
      w = random_start(dim, breakdown_rng());
      full_reorthogonalize(w, basis, k);
      beta = nrm(w);
      if (beta < 1e-12) break;  // space exhausted
      coupling = 0.0;
    }

    if (k == m) {
      // Thick restart: keep the lowest Ritz pairs plus the residual direction.
      if (restarts >= config.max_restarts) break;
      ++restarts;
      const int keep = std::min(config.keep_on_restart, m - 1);
      std::vector<Vec> kept;
      kept.reserve(keep + 1);
      for (int r = 0; r < keep; ++r) {
        Vec y(dim, cplx{0.0, 0.0});
        for (int i = 0; i < m; ++i) axpy(y, cplx{es.eigenvectors()(i, r), 0.0}, basis[i]);
        scale(y, 1.0 / nrm(y));
        kept.push_back(std::move(y));
      }
      scale(w, 1.0 / beta);
      kept.push_back(std::move(w));
      w = Vec(dim);

      proj.setZero();
      for (int r = 0; r < keep; ++r) {
        proj(r, r) = theta(r);
        // residual coupling: A y_r = theta_r y_r + beta * s_last * q_next
        const double arrow = coupling * es.eigenvectors()(m - 1, r);
        proj(r, keep) = arrow;
        proj(keep, r) = arrow;
      }
      basis = std::move(kept);
      locked = keep;
      j = keep;
      continue;
    }

    scale(w, 1.0 / beta);
    proj(j, k) = coupling;
    proj(k, j) = coupling;
    basis.push_back(w);
    w = Vec(dim);
    j = k;
  }

  best.matvec_count = mv;
  best.ritz_trace = trace;
  return best;  // converged == false, best residual reached
}

GroundState dense_ground(const PauliSum& hamiltonian) {
  const Eigen::MatrixXcd mat = dense_matrix(hamiltonian);  // enforces the N <= 12 cap
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat);
  const std::size_t dim = mat.rows();

  GroundState gs;
  gs.energy = es.eigenvalues()(0);
  gs.vector.n_qubits = hamiltonian.n_qubits;
  gs.vector.amp.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) gs.vector.amp[k] = es.eigenvectors()(k, 0);

  Eigen::VectorXcd v = es.eigenvectors().col(0);
  gs.residual = (mat * v - gs.energy * v).norm();
  gs.gap_estimate = (dim > 1) ? std::max(0.0, es.eigenvalues()(1) - gs.energy) : 0.0;
  gs.near_degenerate = (dim > 1) && gs.gap_estimate < 1e-6;
  gs.converged = true;
  return gs;
}

}  // namespace skyrm

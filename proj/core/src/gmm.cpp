#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "cvikit/clustering.hpp"
#include "cvikit/error.hpp"
#include "random.hpp"

namespace cvikit {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Component {
  double weight = 0.0;
  VectorXd mean;
  MatrixXd cov;
};

class GaussianMixture {
 public:
  GaussianMixture(const PointMatrix& points, std::size_t k, double reg)
      : x_(Eigen::Map<const RowMatrix>(points.values().data(), static_cast<Eigen::Index>(points.rows()),
                                       static_cast<Eigen::Index>(points.cols()))),
        k_(k),
        reg_(reg),
        resp_(x_.rows(), static_cast<Eigen::Index>(k)),
        components_(k) {}

  void init_from_labels(const Labeling& labels) {
    resp_.setZero();
    for (Eigen::Index i = 0; i < x_.rows(); ++i) resp_(i, static_cast<Eigen::Index>(labels[static_cast<std::size_t>(i)])) = 1.0;
    m_step();
  }

  void m_step() {
    const double n = static_cast<double>(x_.rows());
    for (std::size_t c = 0; c < k_; ++c) {
      const auto col = resp_.col(static_cast<Eigen::Index>(c));
      const double nk = col.sum();
      if (!(nk > 1e-10 * n)) throw Error(ErrorKind::NumericalFailure, "mixture component collapsed");
      Component& comp = components_[c];
      comp.weight = nk / n;
      comp.mean = (x_.transpose() * col) / nk;
      const MatrixXd centred = x_.rowwise() - comp.mean.transpose();
      comp.cov = (centred.transpose() * col.asDiagonal() * centred) / nk;
      comp.cov.diagonal().array() += reg_;
    }
  }

  // Fills responsibilities; returns mean log-likelihood per point.
  double e_step() {
    const Eigen::Index n = x_.rows();
    const double d = static_cast<double>(x_.cols());
    MatrixXd log_prob(n, static_cast<Eigen::Index>(k_));
    for (std::size_t c = 0; c < k_; ++c) {
      const Component& comp = components_[c];
      Eigen::LLT<MatrixXd> llt(comp.cov);
      if (llt.info() != Eigen::Success) {
        throw Error(ErrorKind::NumericalFailure, "covariance is not positive definite");
      }
      const MatrixXd centred = (x_.rowwise() - comp.mean.transpose()).transpose();
      const MatrixXd solved = llt.matrixL().solve(centred);
      const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
      const double constant = std::log(comp.weight) - 0.5 * (d * std::log(2.0 * std::numbers::pi) + log_det);
      log_prob.col(static_cast<Eigen::Index>(c)) = constant - 0.5 * solved.colwise().squaredNorm().transpose().array();
    }
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double peak = log_prob.row(i).maxCoeff();
      const double lse = peak + std::log((log_prob.row(i).array() - peak).exp().sum());
      resp_.row(i) = (log_prob.row(i).array() - lse).exp();
      total += lse;
    }
    if (!std::isfinite(total)) throw Error(ErrorKind::NumericalFailure, "log-likelihood is not finite");
    return total / static_cast<double>(n);
  }

  std::vector<std::size_t> hard_labels() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(x_.rows()));
    for (Eigen::Index i = 0; i < x_.rows(); ++i) {
      Eigen::Index arg = 0;
      resp_.row(i).maxCoeff(&arg);
      out[static_cast<std::size_t>(i)] = static_cast<std::size_t>(arg);
    }
    return out;
  }

 private:
  Eigen::Map<const RowMatrix> x_;
  std::size_t k_;
  double reg_;
  MatrixXd resp_;
  std::vector<Component> components_;
};

double mean_variance(const PointMatrix& points) {
  const std::size_t n = points.rows();
  double total = 0.0;
  for (std::size_t j = 0; j < points.cols(); ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += points(i, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) var += (points(i, j) - mean) * (points(i, j) - mean);
    total += var / static_cast<double>(n);
  }
  return total / static_cast<double>(points.cols());
}

}  // namespace

GmmResult gmm_em(const PointMatrix& points, const ClusteringConfig& cfg) {
  cfg.validate();
  if (points.rows() < cfg.k) {
    throw Error(ErrorKind::InvalidK, "k=" + std::to_string(cfg.k) + " exceeds the " +
                                         std::to_string(points.rows()) + " available points");
  }
  if (points.cols() < 1) throw Error(ErrorKind::InvalidInput, "points need at least one feature");
  const double variance = mean_variance(points);
  const double reg = 1e-6 * (variance > 0.0 ? variance : 1.0);

  std::optional<GmmResult> best;
  std::optional<Error> last_error;
  for (std::size_t restart = 0; restart < cfg.n_init; ++restart) {
    ClusteringConfig init = ClusteringConfig::defaults(Algorithm::KMeans, cfg.k,
                                                       detail::derive_seed(cfg.seed, restart));
    init.n_init = 1;
    try {
      GaussianMixture model(points, cfg.k, reg);
      model.init_from_labels(kmeans(points, init).labels);
      GmmResult result;
      double previous = -std::numeric_limits<double>::infinity();
      for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        const double ll = model.e_step();
        result.log_likelihood_trace.push_back(ll);
        result.iterations = iter + 1;
        if (ll - previous < cfg.tol || iter + 1 == cfg.max_iter) break;
        previous = ll;
        model.m_step();
      }
      result.log_likelihood = result.log_likelihood_trace.back();
      const auto hard = model.hard_labels();
      result.labels = Labeling::from_raw(std::span<const std::size_t>(hard));
      if (!best || result.log_likelihood > best->log_likelihood) best = std::move(result);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NumericalFailure) throw;
      last_error = e;
    }
  }
  if (!best) throw *last_error;
  return std::move(*best);
}

}  // namespace cvikit

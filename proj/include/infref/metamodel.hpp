#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infref/io.hpp"
#include "infref/model.hpp"
#include "infref/refinement.hpp"

namespace infref {

struct TrainingPoint {
  double ev_i = 0.0;
  double h = 0.0;
  double ev_star = 0.0;
  std::string diagram_id;
  std::size_t step = 0;
};

/// Polynomial surface EV_I* ~ f(EV_I, H). Coefficients follow the monomial
/// order 1, x, y, x^2, xy, y^2, x^3, x^2y, xy^2, y^3 with x = EV_I, y = H.
struct MetaModel {
  int degree = 1;
  std::vector<double> coefficients;
  double sse = 0.0;
  std::size_t n_points = 0;
  std::string provenance;

  bool operator==(const MetaModel&) const = default;
};

std::size_t monomial_count(int degree);
std::vector<std::string> monomial_names(int degree);
std::vector<double> monomials(double x, double y, int degree);

/// Point from profile row `step` with the profile's EV_I* as target.
TrainingPoint extract_training_point(const RefinementProfile& profile, std::size_t step = 10);

/// Ordinary least squares via column-pivoted Householder QR. Requires at
/// least as many points as monomials and a full-rank design.
MetaModel fit_polynomial(std::span<const TrainingPoint> points, int degree);

/// Model built from given coefficients.
MetaModel make_model(std::vector<double> coefficients);

/// Unclamped by default; `clamp` limits the result to [0, 1].
double predict_ev_star(const MetaModel& model, double ev_i, double h, bool clamp = false);

struct LatentValue {
  double lvr = 0.0;
  bool converged = false;
};

/// (estimate - EV_I) / n; n = 0 gives 0 with the converged flag.
LatentValue latent_value(double ev_star_estimate, double ev_i, std::size_t n_refinable);

/// Cumulative computation cost as a function of the refinement step:
/// zero, linear c(t) = rate * t, or exponential c(t) = a * (r^t - 1).
class CostModel {
 public:
  enum class Kind { zero, linear, exponential };

  static CostModel zero() { return CostModel(Kind::zero, 0.0, 0.0); }
  static CostModel linear(double rate);
  static CostModel exponential(double a, double r);
  /// "zero", "linear:RATE" or "exp:A,R".
  static CostModel parse(const std::string& text);

  Kind kind() const { return kind_; }
  double cumulative(std::size_t t) const;
  std::string to_string() const;

 private:
  CostModel(Kind kind, double p1, double p2) : kind_(kind), p1_(p1), p2_(p2) {}
  Kind kind_;
  double p1_;
  double p2_;
};

struct StepCost {
  double cumulative = 0.0;
  double incremental = 0.0;
};

/// (c(t), c(t) - c(t-1)); the incremental part is 0 at t = 0.
StepCost step_cost(const CostModel& cost, std::size_t t);

/// One controller row: the state after `step` refinements and the
/// prospective value of performing the next one.
struct ControllerRow {
  std::size_t step = 0;
  double ev_i = 0.0;
  double h = 0.0;
  double ev_star_hat = 0.0;
  std::size_t n_refinable = 0;
  double lvr = 0.0;
  /// c(step + 1) - c(step): cost of the next refinement.
  double inc_cost = 0.0;
  double diff_value = 0.0;
  double cum_cost = 0.0;
  double ev_ii = 0.0;
};

struct ControllerTrace {
  std::string diagram_id;
  std::vector<ControllerRow> rows;
  std::size_t stop_step = 0;
  /// "negative_differential", "converged" or "budget".
  std::string stop_reason;
  /// Earliest step maximizing EV_II among the executed rows.
  std::size_t best_ev_ii_step = 0;
  Policy final_policy;
};

struct ControllerOptions {
  std::size_t max_steps = 100;
  bool clamp = false;
};

/// Myopic controller: before each step, stop if LVR - incremental cost <= 0,
/// if nothing is refinable, or at the step budget; otherwise refine the
/// maximum-H context.
ControllerTrace run_controller(const InfluenceDiagram& diagram, const MetaModel& model, const CostModel& cost,
                               const ControllerOptions& options = {});

struct ComprehensiveProfile {
  std::vector<double> ev_ii;
  std::size_t argmax = 0;
};

/// EV_II(t) = EV_I(t) - c(t) per recorded step; argmax is the earliest maximum.
ComprehensiveProfile comprehensive_profile(const RefinementProfile& profile, const CostModel& cost);
ComprehensiveProfile comprehensive_values(std::span<const double> ev_i, const CostModel& cost);

Json model_to_json(const MetaModel& model);
MetaModel model_from_json(const Json& doc);

}  // namespace infref

#pragma once

#include "berkp/density.hpp"
#include "berkp/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace berkp {

/// f = num / den over Q_p with rational coefficients.
class RationalMap {
 public:
  /// DegenerateMap if the homogeneous resultant vanishes.
  RationalMap(std::int64_t p, Poly num, Poly den);

  std::int64_t prime() const noexcept { return p_; }
  int degree() const noexcept { return d_; }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  /// Coefficients of the degree-d forms scaled so the largest has absolute value 1.
  const Poly& lift_num() const noexcept { return lift_num_; }
  const Poly& lift_den() const noexcept { return lift_den_; }
  /// log_p |Res| of the normalized lift.
  const Rational& res_log() const noexcept { return res_log_; }

 private:
  std::int64_t p_;
  Poly num_, den_, lift_num_, lift_den_;
  int d_ = 0;
  Rational res_log_;
};

/// Resultant of two degree-d forms given by coefficient lists.
Rational homogeneous_resultant(const Poly& f, const Poly& g, int d);

Rational resultant_logmag(const RationalMap& f);

/// f o g.
RationalMap compose(const RationalMap& f, const RationalMap& g);

/// Image of a point of type I or II.
BerkPoint image_point(const RationalMap& f, const BerkPoint& s);

struct ReducedMap {
  std::int64_t p = 0;
  /// Dehomogenized reduction after cancelling common factors.
  FpPoly num, den;
  int degree = 0;
};

/// Reduction of M_T^-1 o f o M_S with M_S(z) = a + p^-k z sending S_g to S.
ReducedMap reduce_conjugate(const RationalMap& f, const BerkPoint& source, const BerkPoint& target);

/// Reduction at a fixed point S; NotFixed or NonIntegralRadius otherwise.
ReducedMap reduction_at(const RationalMap& f, const BerkPoint& s);

bool good_reduction_at(const RationalMap& f, const BerkPoint& s);

struct GoodReductionSweep {
  std::optional<BerkPoint> found;
  int checked = 0;
  int skipped_non_integral = 0;
};

/// Semi-decision over the candidates; `found` empty means no candidate was found.
GoodReductionSweep good_reduction_sweep(const RationalMap& f, const std::vector<BerkPoint>& candidates);

/// {zeta(a, p^k) : a in centers, k in [k_lo, k_hi]}.
std::vector<BerkPoint> default_candidates(const std::vector<Scalar>& centers, int k_lo = -6, int k_hi = 6);

/// Local degree of f at S in the direction of `toward`.
int directional_degree(const RationalMap& f, const BerkPoint& s, const BerkPoint& toward);

struct Cylinder {
  std::string code;
  Scalar center;
  BerkPoint top;
};

/**
 * Backward-orbit cylinders of f = z^2 + c with v(c) = -2m < 0.
 *
 * The cylinder s_1..s_k is the disk around g_{s_1} o ... o g_{s_k}(w0) of
 * radius p^(m(1-k)), with g_0 the conventional square root branch and w0 the
 * conventional repelling fixed point. Dropping the last letter gives the
 * enclosing cylinder; dropping the first gives the image under f.
 */
struct CylinderTree {
  RationalMap map;
  int m = 0;
  int depth = 0;
  Scalar w0;
  std::map<std::string, Cylinder> cylinders;

  std::vector<Cylinder> level(int k) const;
};

CylinderTree quad_backward_cylinders(const Rational& c, int depth, const PadicConfig& cfg);

/// Every ceil(n / cap)-th element when n exceeds cap.
std::vector<BerkPoint> subsample(const std::vector<BerkPoint>& pts, std::size_t cap = 1024);

struct ExperimentRow {
  int n = 0;
  std::size_t points = 0;
  std::optional<Rational> c_e_log;
  std::optional<Rational> best_c_log;
};

std::vector<ExperimentRow> uniform_perfectness_experiment(const Rational& c, int n_max, const PadicConfig& cfg);

}  // namespace berkp

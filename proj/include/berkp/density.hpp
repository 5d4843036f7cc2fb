#pragma once

#include "berkp/potential.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace berkp {

struct LcdWitness {
  BerkPoint s;
  /// The radius (approached from below) realizing the worst ratio at s.
  Rational r_log;
  Rational cap_log;
};

struct DensityReport {
  Rational best_c_log;
  /// One worst case per point of E that admits a radius.
  std::vector<LcdWitness> witnesses;
  std::optional<Rational> c_e_log;
  /// best_c_log + 2 c_E; nonnegative by the forward direction of the theorem.
  std::optional<Rational> margin;
};

/// Largest c with Cap_inf(E n B(S,r)) >= c r for S in E and diam S < r < diam_inf E.
DensityReport lcd_constant(const std::vector<BerkPoint>& e);

struct PommerenkeNet {
  BerkPoint base;
  Rational r_log;
  Rational s_log;
  Rational c_e_log;
  int depth = 0;
  /// a_sigma for binary strings sigma of length 1..depth.
  std::map<std::string, BerkPoint> points;

  /// Distinct points a_sigma with |sigma| = j.
  std::vector<BerkPoint> level(int j) const;
};

/// [S]_j: S itself when diam S is large, else a point of E in the shell around S.
BerkPoint net_selection(const std::vector<BerkPoint>& e, const Rational& c_e_log, const BerkPoint& s,
                        int j, const Rational& r_log, const Rational& s_log);

PommerenkeNet pommerenke_net(const std::vector<BerkPoint>& e, const BerkPoint& base, const Rational& r_log,
                             const Rational& s_log, int depth);

/// Length of the common prefix of two strings of equal length.
int common_prefix(const std::string& a, const std::string& b);

/// Every pair of distinct strings at level j satisfies |S - S'|_inf > s^(m+1) r.
bool net_separated(const PommerenkeNet& net, int j);

/// sum_{m<j} (m+1) 2^-(m+1).
Rational net_exponent_sum(int j);

struct NetCapacityCheck {
  Rational log_capacity;
  /// s_log * net_exponent_sum(j) + r_log.
  Rational bound;
  /// The bound including the diagonal term of the discrete energy.
  Rational corrected_bound;
};

NetCapacityCheck net_capacity(const PommerenkeNet& net, int j);

struct HolderExponent {
  Rational ell;
  Rational c0_log;
  /// ell * (R_log - r_log).
  Rational choquet_lower;
  /// True when a pole at infinity was replaced by a disk point above E and S_g.
  bool lifted_pole = false;
};

HolderExponent holder_exponent(const std::vector<BerkPoint>& e, const BerkPoint& base, const Rational& big_r_log,
                               const Rational& small_r_log);

struct HolderSample {
  BerkPoint a;
  LogMag delta;
  Rational g;
};

struct HolderCertificate {
  Rational alpha;
  std::optional<LogMag> delta0;
  /// max G exp(-alpha log_p delta) over the samples.
  double constant = 0.0;
  std::vector<HolderSample> samples;
  /// Balls skipped because they contain the pole.
  int excluded = 0;
};

std::vector<LogMag> default_delta_grid(std::int64_t p);

HolderCertificate holder_certify(const std::vector<BerkPoint>& e, const BerkPoint& base, const Rational& alpha,
                                 const std::vector<BerkPoint>& boundary, const std::vector<LogMag>& delta_grid);

}  // namespace berkp

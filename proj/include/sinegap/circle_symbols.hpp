#pragma once

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sinegap/errors.hpp"

namespace sinegap {

using cplx = std::complex<double>;

enum class SymbolKind {
  arc_indicator,     // 1 outside the arc |arg t| < a, 0 on it
  u_jump,            // u_{beta,tau}
  eta,               // (1 - t/tau)^beta
  xi,                // (1 - tau/t)^beta
  sign_chi,          // i on the upper half circle, -i on the lower
  psi_full,          // psi_{alpha,n}
  psi_singular,      // psi^{(+-1)}_{alpha,n}
  h_exp,             // h_alpha
  h_rational,        // h_{alpha,n}
  rational_even_r,   // [(1-rt)(1-r/t) / ((1+rt)(1+r/t))]^gamma
  jump_approximant,  // f_r^{+-}, smooth stand-ins for u_{-1/2,1} and u_{1/2,-1}
  smooth_user,       // Laurent polynomial from a coefficient list
  wiener_hopf_psi,   // a_+(1/t)/a_+(t), optionally times sign_chi
};

inline std::string_view to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::arc_indicator: return "arc_indicator";
    case SymbolKind::u_jump: return "u_jump";
    case SymbolKind::eta: return "eta";
    case SymbolKind::xi: return "xi";
    case SymbolKind::sign_chi: return "sign_chi";
    case SymbolKind::psi_full: return "psi_full";
    case SymbolKind::psi_singular: return "psi_singular";
    case SymbolKind::h_exp: return "h_exp";
    case SymbolKind::h_rational: return "h_rational";
    case SymbolKind::rational_even_r: return "rational_even_r";
    case SymbolKind::jump_approximant: return "jump_approximant";
    case SymbolKind::smooth_user: return "smooth_user";
    case SymbolKind::wiener_hopf_psi: return "wiener_hopf_psi";
  }
  return "?";
}

enum class SingularityType { jump, algebraic, essential_boundary };

struct Singularity {
  cplx point;
  SingularityType type;
  cplx jump{0.0, 0.0};  // value just after minus value just before, counterclockwise
};

enum class MoebiusDirection { forward, inverse };

// forward:  t -> tau (t + mu) / (1 + mu t)
// inverse:  t -> (t/tau - mu) / (1 - mu t/tau)
struct MoebiusMap {
  double mu = 0.0;
  int tau = 1;
  MoebiusDirection direction = MoebiusDirection::forward;

  cplx operator()(cplx t) const {
    if (direction == MoebiusDirection::forward) return double(tau) * (t + mu) / (1.0 + mu * t);
    const cplx s = t * double(tau);  // tau^{-1} = tau for tau = +-1
    return (s - mu) / (1.0 - mu * s);
  }
  MoebiusMap inverted() const {
    return {mu, tau, direction == MoebiusDirection::forward ? MoebiusDirection::inverse
                                                            : MoebiusDirection::forward};
  }
};

struct MuRho {
  double rho;
  double mu;
};

// rho = cos(alpha/2n), mu = (1 - sqrt(1 - rho^2))/rho = tan(pi/4 - alpha/4n).
// The tangent form avoids the cancellation in 1 - sqrt(1 - rho^2) when rho ~ 1.
inline MuRho mu_rho_params(double alpha, int n) {
  using boost::math::constants::half_pi;
  using boost::math::constants::pi;
  if (!(alpha > 0) || n < 1) throw UsageError("mu_rho_params needs alpha > 0 and n >= 1");
  const double x = alpha / (2.0 * n);
  if (x >= half_pi<double>())
    throw DomainError("alpha/(2n) >= pi/2: the arc degenerates (alpha=" + std::to_string(alpha) +
                      ", n=" + std::to_string(n) + ")");
  return {std::cos(x), std::tan(pi<double>() / 4 - x / 2)};
}

namespace detail {

inline constexpr double kPi = boost::math::constants::pi<double>();
inline constexpr double kTwoPi = 2 * boost::math::constants::pi<double>();

// angle of theta measured from theta0, in [0, 2pi); 0 marks the point itself
inline double angle_from(double theta, double theta0) {
  double phi = std::fmod(theta - theta0, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0;
  return phi;
}

inline double wrap_pi(double theta) { return std::remainder(theta, kTwoPi); }

inline double tau_angle(int tau) { return tau == 1 ? 0.0 : kPi; }

// generalized binomial coefficients binom(beta, k), k = 0..K
inline std::vector<double> binomial_series(double beta, long K) {
  std::vector<double> c(static_cast<size_t>(K + 1));
  c[0] = 1;
  for (long k = 1; k <= K; ++k) c[k] = c[k - 1] * (beta - (k - 1)) / k;
  return c;
}

inline cplx laurent_eval(const std::vector<cplx>& c, long k_min, cplx t) {
  // Horner separately on the nonnegative and the negative powers
  const long k_max = k_min + static_cast<long>(c.size()) - 1;
  auto coef = [&](long k) { return (k < k_min || k > k_max) ? cplx(0) : c[k - k_min]; };
  cplx pos = 0;
  for (long k = k_max; k >= 0 && k >= k_min; --k) pos = pos * t + coef(k);
  if (k_max >= 0 && k_min > 0) pos *= std::pow(t, static_cast<int>(k_min));
  cplx neg = 0;
  if (k_min < 0) {
    const cplx u = 1.0 / t;
    for (long k = k_min; k <= -1; ++k) neg = neg * u + coef(k);
    neg *= u;
  }
  return pos + neg;
}

}  // namespace detail

struct SymbolParams {
  double alpha = 0;     // h_exp, h_rational, psi_* (informational when built from mu)
  int n = 0;            // h_rational, psi_*
  double beta = 0;      // u_jump, eta, xi
  int tau = 1;          // u_jump, eta, xi; pole for psi_singular and jump_approximant
  double mu = 0;        // psi_full, psi_singular, h_rational
  double r = 0;         // rational_even_r, jump_approximant
  double exponent = 0;  // rational_even_r
  double arc = 0;       // arc_indicator
  bool with_chi = false;  // wiener_hopf_psi
};

class CircleSymbol {
 public:
  // ---- catalog constructors -------------------------------------------------

  static CircleSymbol arc_indicator(double arc) {
    if (!(arc >= 0 && arc <= detail::kPi)) throw UsageError("arc_indicator needs 0 <= arc <= pi");
    CircleSymbol s(SymbolKind::arc_indicator);
    s.p_.arc = arc;
    s.even_ = true;
    if (arc > 0 && arc < detail::kPi) {
      s.sing_.push_back({std::polar(1.0, arc), SingularityType::jump, 1.0});
      s.sing_.push_back({std::polar(1.0, -arc), SingularityType::jump, -1.0});
    }
    return s;
  }

  static CircleSymbol u_jump(double beta, int tau) {
    check_tau(tau);
    if (!std::isfinite(beta)) throw UsageError("u_jump needs a finite real beta");
    CircleSymbol s(SymbolKind::u_jump);
    s.p_.beta = beta;
    s.p_.tau = tau;
    s.sing_.push_back({double(tau), SingularityType::jump, cplx(0, -2 * std::sin(beta * detail::kPi))});
    return s;
  }

  static CircleSymbol eta(double beta, int tau) {
    check_tau(tau);
    if (!std::isfinite(beta)) throw UsageError("eta needs a finite real beta");
    CircleSymbol s(SymbolKind::eta);
    s.p_.beta = beta;
    s.p_.tau = tau;
    if (beta != 0) s.sing_.push_back({double(tau), SingularityType::algebraic, 0.0});
    s.bounded_ = beta >= 0;
    return s;
  }

  static CircleSymbol xi(double beta, int tau) {
    CircleSymbol s = eta(beta, tau);
    s.kind_ = SymbolKind::xi;
    return s;
  }

  static CircleSymbol sign_chi() {
    CircleSymbol s(SymbolKind::sign_chi);
    s.sing_.push_back({1.0, SingularityType::jump, cplx(0, 2)});
    s.sing_.push_back({-1.0, SingularityType::jump, cplx(0, -2)});
    return s;
  }

  static CircleSymbol psi_full(double alpha, int n) {
    CircleSymbol s = psi_full_mu(mu_rho_params(alpha, n).mu);
    s.p_.alpha = alpha;
    s.p_.n = n;
    return s;
  }

  static CircleSymbol psi_full_mu(double mu) {
    check_unit(mu, "mu");
    CircleSymbol s(SymbolKind::psi_full);
    s.p_.mu = mu;
    s.sing_.push_back({1.0, SingularityType::jump, cplx(0, 2)});
    s.sing_.push_back({-1.0, SingularityType::jump, cplx(0, -2)});
    return s;
  }

  static CircleSymbol psi_singular(double alpha, int n, int pole) {
    CircleSymbol s = psi_singular_mu(mu_rho_params(alpha, n).mu, pole);
    s.p_.alpha = alpha;
    s.p_.n = n;
    return s;
  }

  // pole = +1: u_{-1/2,1} composed with the inverse map G^{-1}_{mu,1}, minus 1 (jump at 1)
  // pole = -1: u_{1/2,1} composed with G^{-1}_{mu,-1}, minus 1 (jump at -1)
  static CircleSymbol psi_singular_mu(double mu, int pole) {
    check_tau(pole);
    check_unit(mu, "mu");
    CircleSymbol s(SymbolKind::psi_singular);
    s.p_.mu = mu;
    s.p_.tau = pole;
    s.sing_.push_back({double(pole), SingularityType::jump, cplx(0, 2.0 * pole)});
    return s;
  }

  static CircleSymbol h_exp(double alpha) {
    if (!(alpha >= 0) || !std::isfinite(alpha)) throw UsageError("h_exp needs alpha >= 0");
    CircleSymbol s(SymbolKind::h_exp);
    s.p_.alpha = alpha;
    if (alpha > 0) s.sing_.push_back({-1.0, SingularityType::essential_boundary, 0.0});
    return s;
  }

  static CircleSymbol h_rational(double alpha, int n) {
    const MuRho mr = mu_rho_params(alpha, n);
    CircleSymbol s(SymbolKind::h_rational);
    s.p_.alpha = alpha;
    s.p_.n = n;
    s.p_.mu = mr.mu;
    return s;
  }

  static CircleSymbol rational_even_r(double r, double exponent) {
    check_unit(r, "r");
    CircleSymbol s(SymbolKind::rational_even_r);
    s.p_.r = r;
    s.p_.exponent = exponent;
    s.even_ = true;
    return s;
  }

  static CircleSymbol jump_approximant(double r, int pole) {
    check_unit(r, "r");
    check_tau(pole);
    CircleSymbol s(SymbolKind::jump_approximant);
    s.p_.r = r;
    s.p_.tau = pole;
    return s;
  }

  // sum_k c[k - k_min] t^k
  static CircleSymbol smooth_user(std::vector<cplx> coeffs, long k_min = 0) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    for (const cplx& c : coeffs)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw UsageError("smooth_user coefficients must be finite");
    CircleSymbol s(SymbolKind::smooth_user);
    s.k_min_ = k_min;
    const long k_max = k_min + static_cast<long>(coeffs.size()) - 1;
    bool even = true;
    for (long k = k_min; k <= k_max; ++k) {
      const cplx c = coeffs[k - k_min];
      const cplx m = (-k >= k_min && -k <= k_max) ? coeffs[-k - k_min] : cplx(0);
      if (c != m) even = false;
    }
    s.even_ = even;
    s.coeffs_ = std::make_shared<const std::vector<cplx>>(std::move(coeffs));
    return s;
  }

  static CircleSymbol constant(cplx c) { return smooth_user({c}, 0); }

  // a_+(1/t) / a_+(t) for a_+ = sum_{k>=0} c_k t^k, optionally times sign_chi
  static CircleSymbol wiener_hopf_psi(std::vector<cplx> a_plus, bool with_chi) {
    if (a_plus.empty()) throw UsageError("wiener_hopf_psi needs a_plus coefficients");
    CircleSymbol s(SymbolKind::wiener_hopf_psi);
    s.p_.with_chi = with_chi;
    s.coeffs_ = std::make_shared<const std::vector<cplx>>(std::move(a_plus));
    if (with_chi) {
      s.sing_.push_back({1.0, SingularityType::jump, cplx(0, 2)});
      s.sing_.push_back({-1.0, SingularityType::jump, cplx(0, -2)});
    }
    return s;
  }

  // ---- metadata ---------------------------------------------------------------

  SymbolKind kind() const { return kind_; }
  const SymbolParams& params() const { return p_; }
  bool is_even() const { return even_; }
  bool is_bounded() const { return bounded_; }
  bool is_transformed() const { return !maps_.empty(); }
  const std::vector<Singularity>& singularities() const { return sing_; }
  const std::vector<MoebiusMap>& maps() const { return maps_; }
  const std::vector<cplx>& coefficient_list() const {
    static const std::vector<cplx> none;
    return coeffs_ ? *coeffs_ : none;
  }
  long coefficient_offset() const { return k_min_; }

  bool has_jumps() const {
    for (const auto& s : sing_)
      if (s.type == SingularityType::jump) return true;
    return false;
  }

  // ---- evaluation ------------------------------------------------------------

  // Value at a point of the unit circle. At a jump the mean of the one-sided
  // limits is returned.
  cplx operator()(cplx t) const {
    if (maps_.empty()) return eval_base(std::arg(t), t);
    for (const auto& m : maps_) t = m(t);
    t /= std::abs(t);
    return eval_base(std::arg(t), t);
  }

  cplx at_angle(double theta) const {
    if (maps_.empty()) return eval_base(theta, std::polar(1.0, theta));
    return (*this)(std::polar(1.0, theta));
  }

  // ---- coefficient structure used by the Fourier engine ------------------------

  bool has_closed_form_coefficients() const {
    if (!maps_.empty()) return false;
    switch (kind_) {
      case SymbolKind::arc_indicator:
      case SymbolKind::u_jump:
      case SymbolKind::eta:
      case SymbolKind::xi:
      case SymbolKind::sign_chi:
      case SymbolKind::h_exp:
      case SymbolKind::smooth_user:
        return true;
      default:
        return false;
    }
  }

  // Coefficients for k in [k_min, k_max]; only valid when has_closed_form_coefficients().
  std::vector<cplx> closed_form_coefficients(long k_min, long k_max) const;

  // Symbols of the form J(t) S(t) + offset with J a closed-form jump symbol (or
  // absent) and S analytic in an annulus around the circle.
  bool is_factored() const {
    if (!maps_.empty()) return false;
    switch (kind_) {
      case SymbolKind::psi_full:
      case SymbolKind::psi_singular:
      case SymbolKind::h_rational:
      case SymbolKind::rational_even_r:
      case SymbolKind::jump_approximant:
      case SymbolKind::wiener_hopf_psi:
        return true;
      default:
        return false;
    }
  }

  // The closed-form jump factor J; nullptr-like empty optional encoded as has_jump_factor().
  bool has_jump_factor() const {
    return kind_ == SymbolKind::psi_full || kind_ == SymbolKind::psi_singular ||
           (kind_ == SymbolKind::wiener_hopf_psi && p_.with_chi);
  }
  CircleSymbol jump_factor() const {
    if (kind_ == SymbolKind::psi_singular)
      return p_.tau == 1 ? u_jump(-0.5, 1) : u_jump(0.5, -1);
    return sign_chi();
  }
  cplx smooth_factor(cplx t) const;
  cplx offset() const { return kind_ == SymbolKind::psi_singular ? cplx(-1.0) : cplx(0.0); }

  // b(t) = a(map(t)); the map is applied before any maps already attached.
  CircleSymbol composed_with(const MoebiusMap& m) const {
    if (!(m.mu >= 0 && m.mu < 1)) throw UsageError("moebius map needs mu in [0,1)");
    check_tau(m.tau);
    CircleSymbol s = *this;
    if (m.mu == 0 && m.tau == 1) return s;
    s.maps_.insert(s.maps_.begin(), m);
    const MoebiusMap back = m.inverted();
    for (auto& sg : s.sing_) {
      sg.point = back(sg.point);
      sg.point /= std::abs(sg.point);
    }
    s.even_ = false;
    return s;
  }

 private:
  explicit CircleSymbol(SymbolKind k) : kind_(k) {}

  static void check_tau(int tau) {
    if (tau != 1 && tau != -1) throw UsageError("tau must be +1 or -1");
  }
  static void check_unit(double x, const char* name) {
    if (!(x >= 0 && x < 1)) throw UsageError(std::string(name) + " must lie in [0,1)");
  }

  cplx eval_base(double theta, cplx t) const;

  SymbolKind kind_;
  SymbolParams p_;
  bool even_ = false;
  bool bounded_ = true;
  std::vector<Singularity> sing_;
  std::vector<MoebiusMap> maps_;
  std::shared_ptr<const std::vector<cplx>> coeffs_;
  long k_min_ = 0;
};

inline cplx CircleSymbol::smooth_factor(cplx t) const {
  const double mu = p_.mu;
  switch (kind_) {
    case SymbolKind::psi_full:
      return std::exp(0.5 * (std::log(1.0 - mu * t) - std::log(1.0 + mu * t) +
                             std::log(1.0 + mu / t) - std::log(1.0 - mu / t)));
    case SymbolKind::psi_singular:
      if (p_.tau == 1) return std::exp(0.5 * (std::log(1.0 - mu * t) - std::log(1.0 - mu / t)));
      return std::exp(0.5 * (std::log(1.0 + mu / t) - std::log(1.0 + mu * t)));
    case SymbolKind::h_rational: {
      const cplx z = (t + mu) / (1.0 + mu * t);
      return std::polar(std::pow(std::abs(z), p_.n), p_.n * std::arg(z));
    }
    case SymbolKind::rational_even_r: {
      const double r = p_.r;
      return std::exp(p_.exponent * (std::log(1.0 - r * t) + std::log(1.0 - r / t) -
                                     std::log(1.0 + r * t) - std::log(1.0 + r / t)));
    }
    case SymbolKind::jump_approximant: {
      const double r = p_.r;
      if (p_.tau == 1) return std::exp(-0.5 * (std::log(1.0 - r * t) - std::log(1.0 - r / t)));
      return std::exp(0.5 * (std::log(1.0 + r * t) - std::log(1.0 + r / t)));
    }
    case SymbolKind::wiener_hopf_psi: {
      const auto& c = *coeffs_;
      return detail::laurent_eval(c, 0, 1.0 / t) / detail::laurent_eval(c, 0, t);
    }
    default:
      throw UsageError("symbol has no smooth factor");
  }
}

inline cplx CircleSymbol::eval_base(double theta, cplx t) const {
  using detail::kPi;
  switch (kind_) {
    case SymbolKind::arc_indicator: {
      const double d = std::abs(detail::wrap_pi(theta));
      if (d < p_.arc) return 0.0;
      if (d > p_.arc) return 1.0;
      return 0.5;
    }
    case SymbolKind::u_jump: {
      const double phi = detail::angle_from(theta, detail::tau_angle(p_.tau));
      if (phi == 0) return std::cos(p_.beta * kPi);
      return std::polar(1.0, p_.beta * (phi - kPi));
    }
    case SymbolKind::eta:
    case SymbolKind::xi: {
      const double phi = detail::angle_from(theta, detail::tau_angle(p_.tau));
      if (phi == 0 || p_.beta == 0) {
        if (p_.beta == 0) return 1.0;
        return p_.beta > 0 ? cplx(0.0) : cplx(HUGE_VAL, 0.0);
      }
      const cplx base = kind_ == SymbolKind::eta ? 1.0 - t * double(p_.tau) : 1.0 - double(p_.tau) / t;
      return std::exp(p_.beta * std::log(base));
    }
    case SymbolKind::sign_chi: {
      const double w = detail::wrap_pi(theta);
      if (w == 0 || std::abs(w) == kPi) return 0.0;
      return w > 0 ? cplx(0, 1) : cplx(0, -1);
    }
    case SymbolKind::h_exp: {
      const double w = detail::wrap_pi(theta);
      if (std::abs(w) == kPi) return 0.0;
      return std::polar(1.0, 0.5 * p_.alpha * std::tan(0.5 * w));
    }
    case SymbolKind::smooth_user:
      return detail::laurent_eval(*coeffs_, k_min_, t);
    default:
      break;
  }
  // factored kinds
  const cplx s = smooth_factor(t);
  if (!has_jump_factor()) return s;
  return jump_factor().eval_base(theta, t) * s + offset();
}

inline std::vector<cplx> CircleSymbol::closed_form_coefficients(long k_min, long k_max) const {
  using detail::kPi;
  std::vector<cplx> out(static_cast<size_t>(k_max - k_min + 1), 0.0);
  auto put = [&](long k, cplx v) { out[static_cast<size_t>(k - k_min)] = v; };
  switch (kind_) {
    case SymbolKind::arc_indicator: {
      const double a = p_.arc;
      for (long k = k_min; k <= k_max; ++k)
        put(k, k == 0 ? 1.0 - a / kPi : -std::sin(k * a) / (kPi * k));
      break;
    }
    case SymbolKind::u_jump: {
      // a_k = tau^{-k} (-1)^k sin((beta-k) pi)/((beta-k) pi)
      const double b = p_.beta;
      for (long k = k_min; k <= k_max; ++k) {
        const double x = (b - k) * kPi;
        // sin((b-k)pi) = (-1)^k sin(b pi); keeps the value exact for integer k offsets
        const double sgn_k = (k % 2 == 0) ? 1.0 : -1.0;
        const double sinc = (x == 0) ? 1.0 : sgn_k * std::sin(b * kPi) / x;
        const double tk = (p_.tau == 1 || k % 2 == 0) ? 1.0 : -1.0;
        put(k, tk * sgn_k * sinc);
      }
      break;
    }
    case SymbolKind::eta:
    case SymbolKind::xi: {
      if (p_.beta <= -1) throw DomainError("eta/xi with beta <= -1 are not integrable");
      const bool is_eta = kind_ == SymbolKind::eta;
      const long lo = is_eta ? std::max(0L, k_min) : std::max(0L, -k_max);
      const long hi = is_eta ? k_max : -k_min;
      if (hi < lo) break;
      const auto bin = detail::binomial_series(p_.beta, hi);
      for (long j = lo; j <= hi; ++j) {
        // eta: binom(beta,j) (-1/tau)^j t^j ; xi: binom(beta,j) (-tau)^j t^{-j}
        const double sgn = ((j % 2 == 0) ? 1.0 : -1.0) * ((p_.tau == 1 || j % 2 == 0) ? 1.0 : -1.0);
        put(is_eta ? j : -j, sgn * bin[j]);
      }
      break;
    }
    case SymbolKind::sign_chi:
      for (long k = k_min; k <= k_max; ++k)
        if (k % 2 != 0) put(k, 2.0 / (kPi * k));
      break;
    case SymbolKind::h_exp: {
      // h_k = e^{-alpha/2} (-1)^k L_k^{(-1)}(alpha) for k >= 0, zero for k < 0
      if (k_max < 0) break;
      const double x = p_.alpha;
      const double scale = std::exp(-0.5 * x);
      double l_prev = 1.0, l_cur = -x;  // L_0, L_1
      for (long k = 0; k <= k_max; ++k) {
        double lk;
        if (k == 0) {
          lk = 1.0;
        } else if (k == 1) {
          lk = -x;
        } else {
          const double l_next = ((2.0 * (k - 1) - x) * l_cur - (k - 2.0) * l_prev) / k;
          l_prev = l_cur;
          l_cur = l_next;
          lk = l_cur;
        }
        if (k >= k_min) put(k, scale * ((k % 2 == 0) ? lk : -lk));
      }
      break;
    }
    case SymbolKind::smooth_user: {
      const long own_max = k_min_ + static_cast<long>(coeffs_->size()) - 1;
      for (long k = std::max(k_min, k_min_); k <= std::min(k_max, own_max); ++k)
        put(k, (*coeffs_)[k - k_min_]);
      break;
    }
    default:
      throw UsageError("symbol has no closed-form coefficients");
  }
  return out;
}

// ---- generic construction --------------------------------------------------

struct SymbolSpec {
  SymbolKind kind = SymbolKind::smooth_user;
  SymbolParams params;
  std::vector<cplx> coefficients;  // smooth_user, wiener_hopf_psi
  long k_min = 0;
};

inline CircleSymbol make_symbol(const SymbolSpec& spec) {
  const SymbolParams& p = spec.params;
  switch (spec.kind) {
    case SymbolKind::arc_indicator: return CircleSymbol::arc_indicator(p.arc);
    case SymbolKind::u_jump: return CircleSymbol::u_jump(p.beta, p.tau);
    case SymbolKind::eta: return CircleSymbol::eta(p.beta, p.tau);
    case SymbolKind::xi: return CircleSymbol::xi(p.beta, p.tau);
    case SymbolKind::sign_chi: return CircleSymbol::sign_chi();
    case SymbolKind::psi_full:
      return p.n > 0 ? CircleSymbol::psi_full(p.alpha, p.n) : CircleSymbol::psi_full_mu(p.mu);
    case SymbolKind::psi_singular:
      return p.n > 0 ? CircleSymbol::psi_singular(p.alpha, p.n, p.tau)
                     : CircleSymbol::psi_singular_mu(p.mu, p.tau);
    case SymbolKind::h_exp: return CircleSymbol::h_exp(p.alpha);
    case SymbolKind::h_rational: return CircleSymbol::h_rational(p.alpha, p.n);
    case SymbolKind::rational_even_r: return CircleSymbol::rational_even_r(p.r, p.exponent);
    case SymbolKind::jump_approximant: return CircleSymbol::jump_approximant(p.r, p.tau);
    case SymbolKind::smooth_user: return CircleSymbol::smooth_user(spec.coefficients, spec.k_min);
    case SymbolKind::wiener_hopf_psi:
      return CircleSymbol::wiener_hopf_psi(spec.coefficients, p.with_chi);
  }
  throw UsageError("unknown symbol kind");
}

inline CircleSymbol moebius_transform(const CircleSymbol& a, double mu, int tau,
                                      MoebiusDirection direction) {
  return a.composed_with(MoebiusMap{mu, tau, direction});
}

}  // namespace sinegap

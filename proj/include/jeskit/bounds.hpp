#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jeskit/numerics/integer.hpp"
#include "jeskit/numerics/interval.hpp"
#include "jeskit/search.hpp"
#include "jeskit/triples.hpp"

namespace jeskit {

// ---- exponent bounds and orderings -------------------------------------

struct YUpperBound {
  RInterval via_n;  // ln n / ln 3
  RInterval via_m;  // ln(2(m-1)) / ((alpha+1) ln 2)
  RInterval bound;  // min of the two
  /// ceil(bound.hi): Y is strictly below this.
  unsigned long exclusive_cap = 0;
};

YUpperBound y_upper_bound(const PrimPair& p, Precision prec = kDefaultPrecision);

struct OrderingReport {
  bool skipped = false;  // (2,2,2) or not all even
  std::string skip_reason;
  bool z_lt_2x = true;
  bool z_lt_2y = true;
  bool gap_ge_4 = true;        // |x - z| >= 4
  bool ratio_gives_x_lt_z = true;  // m > 1.22 n implies x < z
  bool z_lt_y = true;
  bool c_pow_lt_2b_pow = true;     // c^z < 2 b^y
  std::vector<std::string> failures;

  bool excluded() const { return !skipped && !failures.empty(); }
};

/// Exact integer checks; any failure rules the candidate out.
OrderingReport ordering_predicates(const PrimPair& p, const ExponentTriple& t);

/// ln m / ln n, a lower bound for z - x. Throws InvalidArgument when n < 2.
RInterval delta_lower(const PrimPair& p, Precision prec = kDefaultPrecision);

/// (m^2+n^2)^z == (m^2+n^2)^x (mod (2mn)^2).
bool congruence_origin_holds(const PrimPair& p, unsigned long x, unsigned long z);

/// a^x == c^x (mod b^2).
bool power_congruence_holds(const PrimPair& p, unsigned long x);

// ---- Laurent's two-logarithm theorem ------------------------------------

/// Decreasing majorant of eps(N), valid for N >= 3.
RInterval epsilon_N(unsigned long N, Precision prec = kDefaultPrecision);
/// eps(N) = 2 ln(N! N^(1-N) (e^N + (e-1)^N)) / N evaluated directly.
RInterval epsilon_exact(unsigned long N, Precision prec = kDefaultPrecision);

struct LaurentInstance {
  unsigned long K = 2, L = 1, R1 = 1, R2 = 1, S1 = 1, S2 = 1;
  unsigned long D = 1;
  RInterval rho;
  RInterval mu;
  BigInt b1 = 1, b2 = 1;
  RInterval a1;
  RInterval a2;

  unsigned long R() const { return R1 + R2 - 1; }
  unsigned long S() const { return S1 + S2 - 1; }
  unsigned long N() const { return K * L; }
  RInterval g() const;
  RInterval sigma() const;
  /// ln b, with b = ((R-1) b2 + (S-1) b1)/2 * (prod_{k<K} k!)^(-2/(K^2-K)).
  RInterval ln_b() const;
};

inline constexpr const char* kKappa = "0.04927";

/// rho = e^3.1, mu = 2/3 and the parameter choice K = 1 + [kappa L a1 a2],
/// R1 = 2, S1 = [(L+1)/2], R2 = 1 + [sqrt((K-1) L a2/a1)],
/// S2 = 1 + [sqrt((K-1) L a1/a2)], with a1 = rho pi.
LaurentInstance lemma_instance(const RInterval& a2, const BigInt& b1, const BigInt& b2,
                               unsigned long L, Precision prec = kDefaultPrecision);

struct LaurentResult {
  bool ok = false;
  RInterval margin;     // left side minus eps(N)
  RInterval epsilon;    // eps(N)
  RInterval bound;      // rho^(-mu K L)
  RInterval log_bound;  // -mu K L ln rho
  // Published shortcuts, rechecked on the instance.
  bool gL_shortcut_holds = false;    // gL(Ra1+Sa2) < K(31/20 L + 0.0612)
  bool ln_b_shortcut_holds = false;  // ln b <= ln b' + 2.3264
  bool max_factor_shortcut_holds = false;  // LR < L(2 + sqrt(kappa) a2 L)
};

/// Checks the numeric hypothesis of the theorem. The two cardinality
/// hypotheses are the caller's responsibility.
LaurentResult laurent_check(const LaurentInstance& inst);

struct CorBound {
  RInterval log_lambda_lower;
  unsigned long L = 0;
  unsigned long L_formula = 0;  // before the floor at 3
  bool floor_activated = false;
  bool L_ambiguous = false;  // floor undecided at this precision; larger L used
};

/// a1 = e^3.1 pi.
RInterval lemma_a1(Precision prec = kDefaultPrecision);

/// ln|Lambda| > -3.741 (ln b' + 6.87)^2 a2 - 31L/15 - ln L - ln(2 + 0.222 L a2).
/// Requires a2 >= 1000 + a1 and b' > 0.056.
CorBound cor_lower_bound(const RInterval& a2, const RInterval& bprime,
                         Precision prec = kDefaultPrecision);

struct LemmaConstants {
  RInterval coefficient;  // mu ln(rho) kappa a1 (45/62)^2, published as 3.741
  RInterval sqrt_kappa;   // published as 0.222
  RInterval epsilon_33091;
};

LemmaConstants lemma_constants(Precision prec = kDefaultPrecision);

struct KNValues {
  unsigned long K = 0;
  unsigned long N = 0;
};

/// K = 1 + [kappa L a1 a2] and N = K L.
KNValues lemma_k_n(unsigned long L, const RInterval& a2, Precision prec = kDefaultPrecision);

/// Upper bound for z - x from ln c and z: 2(-ln|Lambda| + ln pi)/ln c with
/// a2 = ln c + e^3.1 pi and b' = z (1/69.73 + 1/a2). Throws Inapplicable when
/// ln c < 1000.
RInterval delta_upper(const RInterval& ln_c, unsigned long z, Precision prec = kDefaultPrecision);
RInterval delta_upper(const PrimPair& p, unsigned long z, Precision prec = kDefaultPrecision);

struct DeltaBounds {
  RInterval lower;
  RInterval upper;
  bool consistent = false;  // lower < upper; false rules the pair out
};

DeltaBounds delta_bounds(const PrimPair& p, unsigned long z, Precision prec = kDefaultPrecision);

// ---- thresholds ---------------------------------------------------------

enum class ThresholdForm { ThreeFifths, TwoThirds };

std::string to_string(ThresholdForm form);
RInterval exponent_of(ThresholdForm form, Precision prec = kDefaultPrecision);

/// Right-hand side of the final inequality in t = ln m. The corrected form
/// uses ln ln 2m inside the leading square; the literal one uses ln 2m.
/// Throws InvalidArgument for t <= 1000.
RInterval rhs_final(const RInterval& t, bool with_correction = true);
/// d/dt of the corrected right-hand side.
RInterval rhs_final_derivative(const RInterval& t);

struct ThresholdCert {
  ThresholdForm form = ThresholdForm::ThreeFifths;
  RInterval t0;
  RInterval lhs_at_t0;
  RInterval rhs_at_t0;
  std::vector<RInterval> checked_at;  // subintervals where f' > 0 was certified
  RInterval monotone_from;
  RInterval tail_from;
  bool verdict = false;
  std::optional<std::string> failure;  // first failing point when verdict is false
};

/// Certifies t^q > rhs_final(t) for every t >= t0: strictly at t0, f' > 0 on
/// [t0, 16 t0] by subdivision, and an explicit tail estimate beyond.
ThresholdCert certify_threshold(ThresholdForm form, const RInterval& t0,
                                Precision prec = kCertificationPrecision);

struct Crossover {
  RInterval t;       // brackets t* with t*^q = rhs_final(t*)
  RInterval log10m;  // t / ln 10
};

Crossover crossover(ThresholdForm form, Precision prec = kCertificationPrecision);

/// ln(10^k) = k ln 10.
RInterval ln_power_of_ten(const BigInt& k, Precision prec = kDefaultPrecision);

}  // namespace jeskit

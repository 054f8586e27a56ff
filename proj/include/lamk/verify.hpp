#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamk/filtration.hpp"
#include "lamk/scheme.hpp"

namespace lamk {

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

/// A membership claim that did not hold: `element` (in the model's expression
/// grammar) was expected in `expected_level` ("top:3", "gamma:2", "zero").
struct Witness {
  std::string element;
  std::string expected_level;
  bool actual_member = false;
};

struct CheckReport {
  std::string check_id;
  std::string model;
  std::string params;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;
  double millis = 0;
  /// Free-form context: the operands behind a witness, or recorded choices.
  std::string detail;
};

struct CheckBounds {
  int max_n = 4;
  int max_q = -1;       // -1: model dimension
  int truncation = -1;  // universal check; -1: q + d + 2
  std::uint64_t seed = 1;
  int samples = 4;      // random 3-term sums per filtration level
  // parameters of universal_congruence inside a suite
  int universal_d = 1;
  int universal_q = 1;
  int universal_n = 2;
};

/// Both filtrations of a scheme, computed once and shared by the checks.
struct SchemeContext {
  explicit SchemeContext(SchemeModel scheme);
  SchemeModel scheme;
  GammaFiltration gamma;
  TopFiltration top;
  int max_q(const CheckBounds& b) const { return b.max_q < 0 ? scheme.dimension : b.max_q; }
};

/// Basis rows of `level` followed by `samples` seeded sums of up to three basis
/// rows with coefficients in {-2, -1, 1, 2}.
std::vector<RingElement> level_elements(const RingHandle& ring, const IntegerLattice& level, int samples,
                                        std::uint64_t seed);

/// (d-1)! (d-2)! ... (q-1)!; 1 when q > d.
Integer torsion_factor(int d, int q);

CheckReport check_gamma_ring_axioms(const SchemeContext& ctx, const CheckBounds& bounds);
CheckReport check_top_multiplicativity(const SchemeContext& ctx, const CheckBounds& bounds);
CheckReport check_adams_congruence(const SchemeContext& ctx, const CheckBounds& bounds);
CheckReport check_adams_nlambda(const SchemeContext& ctx, const CheckBounds& bounds);
CheckReport check_gamma_eigenvalue(const SchemeContext& ctx, const CheckBounds& bounds);
CheckReport check_torsion_bound(const SchemeContext& ctx, const CheckBounds& bounds);
CheckReport check_gr_rank_iso(const SchemeContext& ctx, const CheckBounds& bounds);
CheckReport check_lambda_ideal(const SchemeContext& ctx, const CheckBounds& bounds);
/// Fil_gamma inside Fil_top, Fil^p_gamma Fil^q_top inside Fil^{p+q}_top, Fil^{d+1}_gamma = 0.
CheckReport check_gamma_top_module(const SchemeContext& ctx, const CheckBounds& bounds);

/// lambda^n(N, x) + (-1)^n n^{q+d-1} x in Fil^{q+1}_gamma of the free lambda-ring on
/// N (rank d) and x, graded by gamma-weight and truncated above `truncation`.
/// Inconclusive when the truncation does not reach weight q + 1.
/// `exponent` replaces q + d - 1 when given, to probe neighbouring statements.
CheckReport check_universal_congruence(int d, int q, int n, int truncation, std::optional<int> exponent = std::nullopt);

/// lambda^n(i_* y) = i_* lambda^n(N, y) and psi_n(i_* y) = i_* psi_n(N, y) for n <= max_n,
/// each psi denominator variant tried; passes when the lambda identity holds and
/// exactly one variant does.
CheckReport check_jouanolou(const ClosedEmbedding& embedding, const CheckBounds& bounds);

/// Embeddings the Jouanolou check runs on: the model's own, plus the hyperplane
/// embedding into a builtin projective space.
std::vector<ClosedEmbedding> jouanolou_embeddings(const SchemeModel& scheme);

const std::vector<std::string>& check_ids();

/// Runs the named checks ("all" expands to every id applicable to the model),
/// sorted by check id. Unknown ids throw InputError.
std::vector<CheckReport> run_suite(const SchemeModel& scheme, const std::vector<std::string>& ids,
                                   const CheckBounds& bounds);

bool any_failed(const std::vector<CheckReport>& reports);

}  // namespace lamk

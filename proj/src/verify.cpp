#include "lamk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "lamk/errors.hpp"
#include "lamk/expression.hpp"

namespace lamk {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

SchemeContext::SchemeContext(SchemeModel s)
    : scheme(std::move(s)), gamma(gamma_filtration(scheme)), top(top_filtration(scheme)) {}

std::vector<RingElement> level_elements(const RingHandle& ring, const IntegerLattice& level, int samples,
                                        std::uint64_t seed) {
  std::vector<RingElement> out;
  for (const auto& row : level.basis()) out.push_back(from_vector(ring, row));
  if (level.is_zero()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, level.rank() - 1);
  std::uniform_int_distribution<int> coeff(0, 3);
  static constexpr int kCoeffs[] = {-2, -1, 1, 2};
  for (int s = 0; s < samples; ++s) {
    RingElement x(ring);
    for (int t = 0; t < 3; ++t) x += out[pick(rng)] * Integer(kCoeffs[coeff(rng)]);
    out.push_back(x);
  }
  return out;
}

Integer torsion_factor(int d, int q) {
  Integer f = 1;
  for (int k = std::max(q, 1) - 1; k <= d - 1; ++k) f *= factorial(static_cast<unsigned long>(k));
  return f;
}

namespace {

using Clock = std::chrono::steady_clock;

Integer int_pow(long base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), static_cast<unsigned long>(e));
  return (base < 0 && e % 2 == 1) ? Integer(-r) : r;
}

// Collects the outcome of one check; the first failed claim becomes the witness.
class Recorder {
 public:
  Recorder(std::string id, std::string model, std::string params) : start_(Clock::now()) {
    report_.check_id = std::move(id);
    report_.model = std::move(model);
    report_.params = std::move(params);
  }

  bool failed() const { return report_.status == CheckStatus::Fail; }

  bool fail(const std::string& element, const std::string& expected, const std::string& detail) {
    if (!failed()) {
      report_.status = CheckStatus::Fail;
      report_.witness = Witness{element, expected, false};
      report_.detail = detail;
    }
    return false;
  }

  /// Records a failure unless x lies in `level`.
  bool expect(const RingElement& x, const IntegerLattice& level, const std::string& level_name,
              const std::string& detail) {
    if (filtration_member(x, level)) return true;
    return fail(x.to_string(), level_name, detail);
  }

  bool expect_zero(const RingElement& x, const std::string& detail) {
    if (x.is_zero()) return true;
    return fail(x.to_string(), "zero", detail);
  }

  void inconclusive(const std::string& detail) {
    report_.status = CheckStatus::Inconclusive;
    report_.detail = detail;
  }
  void note(const std::string& detail) {
    if (report_.detail.empty()) report_.detail = detail;
  }

  CheckReport finish() {
    report_.millis = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return report_;
  }

 private:
  CheckReport report_;
  Clock::time_point start_;
};

std::string bounds_params(const SchemeContext& ctx, const CheckBounds& b, bool with_n = true) {
  std::string s = "q<=" + std::to_string(ctx.max_q(b));
  if (with_n) s = "n<=" + std::to_string(b.max_n) + "," + s;
  return s;
}

std::string level_name(const Filtration& f, int q) { return f.level_name(q); }

// Runs body and turns truncation limits into an inconclusive report.
CheckReport guarded(Recorder rec, const std::function<void(Recorder&)>& body) {
  try {
    body(rec);
  } catch (const TruncationError& e) {
    rec.inconclusive(e.what());
  }
  return rec.finish();
}

std::uint64_t level_seed(const CheckBounds& b, int q) { return b.seed * 1000003ULL + static_cast<std::uint64_t>(q); }

}  // namespace

CheckReport check_gamma_ring_axioms(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("gamma_ring_axioms", ctx.scheme.name, bounds_params(ctx, bounds, false)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const auto& g = ctx.gamma;
    const int Q = ctx.max_q(bounds);
    for (int p = 0; p <= Q && !rec.failed(); ++p) {
      if (!g.level(p).contains(g.level(p + 1)))
        rec.fail("", level_name(g, p), "level " + std::to_string(p + 1) + " is not contained in level " + std::to_string(p));
      const auto lp = level_elements(ring, g.level(p), 0, 0);
      for (const auto& x : lp) {
        for (const auto& m : ring->basis())
          if (!rec.expect(x * RingElement(ring, Polynomial::term(m, 1)), g.level(p), level_name(g, p),
                          "ideal property: x = " + x.to_string()))
            return;
        for (int q = 0; q <= Q; ++q)
          for (const auto& y : level_elements(ring, g.level(q), 0, 0))
            if (!rec.expect(x * y, g.level(p + q), level_name(g, p + q),
                            "x = " + x.to_string() + " in " + level_name(g, p) + ", y = " + y.to_string() + " in " +
                                level_name(g, q)))
              return;
      }
    }
  });
}

CheckReport check_top_multiplicativity(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("top_multiplicativity", ctx.scheme.name, bounds_params(ctx, bounds, false)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const auto& t = ctx.top;
    for (const auto& a : ctx.scheme.cycles)
      for (const auto& b : ctx.scheme.cycles)
        if (!rec.expect(a.cls * b.cls, t.level(a.codim + b.codim), level_name(t, a.codim + b.codim),
                        "cycles '" + a.label + "' and '" + b.label + "'"))
          return;
    // Fil^1 * Fil^p in Fil^{p+1}, on basis elements and sampled sums.
    const auto ones = level_elements(ring, t.level(1), bounds.samples, level_seed(bounds, 1));
    for (int p = 0; p <= ctx.max_q(bounds); ++p)
      for (const auto& y : level_elements(ring, t.level(p), bounds.samples, level_seed(bounds, 100 + p)))
        for (const auto& x : ones)
          if (!rec.expect(x * y, t.level(p + 1), level_name(t, p + 1),
                          "x = " + x.to_string() + " in top:1, y = " + y.to_string() + " in " + level_name(t, p)))
            return;
  });
}

CheckReport check_adams_congruence(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("adams_congruence", ctx.scheme.name, bounds_params(ctx, bounds)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const auto& t = ctx.top;
    for (int q = 1; q <= ctx.max_q(bounds); ++q)
      for (const auto& x : level_elements(ring, t.level(q), bounds.samples, level_seed(bounds, q))) {
        const auto psi = adams_ops(x, bounds.max_n, ctx.scheme.model);
        for (int n = 1; n <= bounds.max_n; ++n)
          if (!rec.expect(psi[static_cast<std::size_t>(n)] - x * int_pow(n, q), t.level(q + 1), level_name(t, q + 1),
                          "psi_" + std::to_string(n) + "(x) - " + std::to_string(n) + "^" + std::to_string(q) +
                              " x with x = " + x.to_string()))
            return;
      }
  });
}

CheckReport check_adams_nlambda(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("adams_nlambda", ctx.scheme.name, bounds_params(ctx, bounds)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const auto& t = ctx.top;
    for (int q = 1; q <= ctx.max_q(bounds); ++q)
      for (const auto& x : level_elements(ring, t.level(q), bounds.samples, level_seed(bounds, q))) {
        const auto psi = adams_ops(x, bounds.max_n, ctx.scheme.model);
        const auto lambda = lambda_series(x, ctx.scheme.model, bounds.max_n);
        for (int n = 1; n <= bounds.max_n; ++n) {
          const RingElement c = psi[static_cast<std::size_t>(n)] + lambda[n] * Integer(n % 2 == 0 ? n : -n);
          if (!rec.expect(c, t.level(q + 1), level_name(t, q + 1),
                          "psi_" + std::to_string(n) + "(x) + (-1)^" + std::to_string(n) + " " + std::to_string(n) +
                              " lambda^" + std::to_string(n) + "(x) with x = " + x.to_string()))
            return;
        }
      }
  });
}

CheckReport check_gamma_eigenvalue(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("gamma_eigenvalue", ctx.scheme.name, bounds_params(ctx, bounds, false)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const auto& t = ctx.top;
    for (int q = 1; q <= ctx.max_q(bounds); ++q) {
      Integer c = factorial(static_cast<unsigned long>(q - 1));
      if (q % 2 == 0) c = -c;
      for (const auto& x : level_elements(ring, t.level(q), bounds.samples, level_seed(bounds, q)))
        if (!rec.expect(gamma_op(x, q, ctx.scheme.model) - x * c, t.level(q + 1), level_name(t, q + 1),
                        "gamma^" + std::to_string(q) + "(x) - (-1)^" + std::to_string(q - 1) + " " +
                            std::to_string(q - 1) + "! x with x = " + x.to_string()))
          return;
    }
  });
}

CheckReport check_torsion_bound(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("torsion_bound", ctx.scheme.name, bounds_params(ctx, bounds, false)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const int d = ctx.scheme.dimension;
    bool equal = true;
    for (int q = 1; q <= ctx.max_q(bounds); ++q) {
      const Integer f = torsion_factor(d, q);
      for (const auto& x : level_elements(ring, ctx.top.level(q), 0, 0))
        if (!rec.expect(x * f, ctx.gamma.level(q), level_name(ctx.gamma, q),
                        "factor " + f.get_str() + " times x = " + x.to_string() + " in top:" + std::to_string(q)))
          return;
      equal = equal && ctx.top.level(q) == ctx.gamma.level(q);
    }
    rec.note(equal ? "gamma and top levels are equal" : "gamma and top levels differ");
  });
}

CheckReport check_gr_rank_iso(const SchemeContext& ctx, const CheckBounds& bounds) {
  const int Q = std::max(ctx.max_q(bounds), ctx.scheme.dimension + 1);
  return guarded(Recorder("gr_rank_iso", ctx.scheme.name, "q<=" + std::to_string(Q)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    std::ostringstream gr, tr;
    for (int q = 0; q <= Q; ++q) {
      const auto gp = graded_piece(ctx.gamma, q);
      const auto tp = graded_piece(ctx.top, q);
      gr << (q ? "," : "") << gp.rational_rank;
      tr << (q ? "," : "") << tp.rational_rank;
      if (gp.rational_rank != tp.rational_rank) {
        rec.fail("", level_name(ctx.top, q),
                 "rank of Gr^" + std::to_string(q) + ": gamma " + std::to_string(gp.rational_rank) + ", top " +
                     std::to_string(tp.rational_rank));
        return;
      }
      // the map Gr_gamma -> Gr_top exists and is onto after scaling
      for (const auto& x : level_elements(ring, ctx.gamma.level(q), 0, 0))
        if (!rec.expect(x, ctx.top.level(q), level_name(ctx.top, q), "gamma level not inside top level"))
          return;
      const auto target = ctx.gamma.level(q) + ctx.top.level(q + 1);
      const Integer f = torsion_factor(ctx.scheme.dimension, q);
      for (const auto& x : level_elements(ring, ctx.top.level(q), 0, 0))
        if (!rec.expect(x * f, target, level_name(ctx.gamma, q) + "+" + level_name(ctx.top, q + 1),
                        "scaled top class not reached by the graded map"))
          return;
    }
    rec.note("Gr ranks gamma " + gr.str() + "; top " + tr.str());
  });
}

CheckReport check_lambda_ideal(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("lambda_ideal", ctx.scheme.name, bounds_params(ctx, bounds)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const auto& t = ctx.top;
    const auto& model = ctx.scheme.model;
    for (int q = 1; q <= ctx.max_q(bounds); ++q)
      for (const auto& x : level_elements(ring, t.level(q), bounds.samples, level_seed(bounds, q))) {
        const auto lambda = lambda_series(x, model, bounds.max_n);
        const auto gamma = series_substitute_gamma(lambda);
        for (int n = 1; n <= bounds.max_n; ++n) {
          const std::string tag = "(x) with x = " + x.to_string();
          if (!rec.expect(lambda[n], t.level(q), level_name(t, q), "lambda^" + std::to_string(n) + tag)) return;
          const int want = n > q ? q + 1 : q;
          if (!rec.expect(gamma[n], t.level(want), level_name(t, want), "gamma^" + std::to_string(n) + tag)) return;
        }
      }
  });
}

CheckReport check_gamma_top_module(const SchemeContext& ctx, const CheckBounds& bounds) {
  return guarded(Recorder("gamma_top_module", ctx.scheme.name, bounds_params(ctx, bounds, false)), [&](Recorder& rec) {
    const auto& ring = ctx.scheme.ring();
    const int Q = ctx.max_q(bounds);
    for (int p = 0; p <= Q + 1; ++p)
      for (const auto& x : level_elements(ring, ctx.gamma.level(p), 0, 0)) {
        if (!rec.expect(x, ctx.top.level(p), level_name(ctx.top, p), "gamma class x = " + x.to_string())) return;
        for (int q = 0; q <= Q; ++q)
          for (const auto& y : level_elements(ring, ctx.top.level(q), 0, 0))
            if (!rec.expect(x * y, ctx.top.level(p + q), level_name(ctx.top, p + q),
                            "x = " + x.to_string() + " in " + level_name(ctx.gamma, p) + ", y = " + y.to_string() +
                                " in " + level_name(ctx.top, q)))
              return;
      }
    const int d = ctx.scheme.dimension;
    for (const auto& x : level_elements(ring, ctx.gamma.level(d + 1), 0, 0))
      if (!rec.expect_zero(x, "gamma level " + std::to_string(d + 1) + " above the dimension")) return;
  });
}

// ---------------------------------------------------------------------------
// universal ring

CheckReport check_universal_congruence(int d, int q, int n, int truncation, std::optional<int> exponent) {
  if (d < 1) throw InputError("universal congruence needs d >= 1");
  if (q < 0) throw InputError("universal congruence needs q >= 0");
  if (n < 1) throw InputError("universal congruence needs n >= 1 (the statement fails for n = 0)");
  const std::string params = "d=" + std::to_string(d) + ",q=" + std::to_string(q) + ",n=" + std::to_string(n) +
                             ",truncation=" + std::to_string(truncation) +
                             (exponent ? ",exponent=" + std::to_string(*exponent) : "");
  Recorder rec("universal_congruence", "universal", params);
  if (truncation < q + 1) {
    rec.inconclusive("truncation " + std::to_string(truncation) + " does not reach gamma-weight " +
                     std::to_string(q + 1));
    return rec.finish();
  }

  // x and y have epsilon 0; rank n(q+1) keeps every lambda^k(x) with k <= nq free.
  const int r = n * (q + 1);
  const auto model = LambdaRingModel::free({{"N", d, d}, {"x", r, 0}, {"y", r, 0}});
  const auto& lring = model.ring();
  const std::size_t nv = lring->nvars();

  // gamma-coordinates: variable v stands for gamma^k(g - epsilon(g)) where lambda^k(g) is variable v.
  std::vector<std::string> gnames;
  std::vector<int> gweights;
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& role = model.role(v);
    gnames.push_back("g" + model.generators()[role.generator].name + std::to_string(role.lambda_index));
    gweights.push_back(role.lambda_index);
  }
  const auto gring = QuotientRing::create(gnames, {},
                                          QuotientRing::Options{gweights, static_cast<std::uint64_t>(truncation)});
  // lambda^k(g) = sum_m C(epsilon - m, k - m) gamma^m(g - epsilon)
  std::vector<RingElement> images;
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& role = model.role(v);
    const auto& gen = model.generators()[role.generator];
    const int k = role.lambda_index;
    RingElement img = RingElement::from_integer(gring, binomial(gen.augmentation, static_cast<unsigned long>(k)));
    for (int m = 1; m <= std::min(k, gen.rank_bound); ++m)
      img += RingElement::variable(gring, gen.symbols[static_cast<std::size_t>(m - 1)]) *
             binomial(gen.augmentation - m, static_cast<unsigned long>(k - m));
    images.push_back(img);
  }
  const auto gone = RingElement::from_integer(gring, 1);
  const auto scale = [](const RingElement& e, const Integer& c) { return e * c; };
  const auto to_gamma = [&](const RingElement& e) { return evaluate<RingElement>(e.polynomial(), images, gone, scale); };

  // candidate x0 in Fil^q: gamma-monomials of weight q and a few combinations
  const RingElement x = model.element("x"), y = model.element("y");
  std::vector<RingElement> candidates;
  if (q == 0) {
    candidates = {model.one(), x, model.one() + x};
  } else {
    const auto gx = series_substitute_gamma(lambda_series(x, model, q));
    const auto gy = series_substitute_gamma(lambda_series(y, model, q));
    // partitions of q into parts, largest first
    std::function<void(int, int, RingElement)> parts = [&](int left, int max_part, RingElement acc) {
      if (left == 0) {
        candidates.push_back(acc);
        return;
      }
      for (int p = std::min(left, max_part); p >= 1; --p) parts(left - p, p, acc * gx[p]);
    };
    parts(q, q, model.one());
    candidates.push_back(gx[q] + gy[q]);
    if (q >= 2) candidates.push_back(gx[1].pow(static_cast<unsigned>(q - 1)) * gy[1]);
    candidates.push_back(gx[q] * y);
  }

  const DividedContext dctx(model, model.element("N"), d);
  if (exponent && *exponent < 0) throw InputError("exponent must be non-negative");
  Integer coeff = int_pow(n, exponent.value_or(q + d - 1));
  if (n % 2 == 1) coeff = -coeff;
  for (const auto& x0 : candidates) {
    const RingElement combo = divided_lambda(dctx, x0, n) + x0 * coeff;
    const RingElement g = to_gamma(combo);
    for (const auto& [m, c] : g.polynomial())
      if (m.weighted_degree(gweights) < static_cast<std::uint64_t>(q + 1)) {
        rec.fail(format_polynomial(g.polynomial(), gnames), "gamma:" + std::to_string(q + 1),
                 "x = " + x0.to_string() + " (lambda-symbols); witness in gamma-coordinates");
        return rec.finish();
      }
  }
  rec.note(std::to_string(candidates.size()) + " elements of Fil^" + std::to_string(q) + " checked");
  return rec.finish();
}

// ---------------------------------------------------------------------------
// Jouanolou

std::vector<ClosedEmbedding> jouanolou_embeddings(const SchemeModel& scheme) {
  std::vector<ClosedEmbedding> out = scheme.embeddings;
  static const std::regex projective("P(\\d+)");
  std::smatch m;
  if (std::regex_match(scheme.name, m, projective)) {
    const int n = std::stoi(m[1]);
    if (n >= 1 && scheme.ring()->nvars() == 1) out.push_back(hyperplane_embedding(n));
  }
  return out;
}

CheckReport check_jouanolou(const ClosedEmbedding& e, const CheckBounds& bounds) {
  const std::string params = "embedding=" + e.source_name + "->" + e.target->name + ",n<=" + std::to_string(bounds.max_n);
  return guarded(Recorder("jouanolou", e.target->name, params), [&](Recorder& rec) {
    const auto& sring = e.source.ring();
    const auto& tmodel = e.target->model;
    const auto ctx = e.conormal_context();

    std::vector<RingElement> ys;
    for (const auto& m : sring->basis()) ys.emplace_back(sring, Polynomial::term(m, 1));
    const std::size_t nb = ys.size();
    for (std::size_t i = 0; i + 1 < nb; ++i) ys.push_back(ys[i] + ys[i + 1]);
    if (nb >= 1) ys.push_back(ys[0] * Integer(2) - ys[nb - 1]);

    const AdamsDenominator variants[] = {AdamsDenominator::Printed, AdamsDenominator::Divided, AdamsDenominator::Lifted};
    std::map<AdamsDenominator, std::string> broken;
    std::optional<Witness> lifted_witness;
    std::string lifted_detail;
    for (const auto& y : ys) {
      const RingElement iy = e.pushforward(y);
      const auto lambda = lambda_series(iy, tmodel, bounds.max_n);
      const auto psi = adams_ops(iy, bounds.max_n, tmodel);
      for (int n = 1; n <= bounds.max_n; ++n) {
        const std::string tag = "n = " + std::to_string(n) + ", y = " + y.to_string();
        if (!rec.expect_zero(lambda[n] - e.pushforward(divided_lambda(ctx, y, n)),
                             "lambda^n(i_* y) - i_* lambda^n(N, y) with " + tag))
          return;
        for (auto v : variants) {
          if (broken.count(v)) continue;
          const RingElement diff = psi[static_cast<std::size_t>(n)] - e.pushforward(divided_adams(ctx, y, n, v));
          if (diff.is_zero()) continue;
          broken[v] = tag;
          if (v == AdamsDenominator::Lifted) {
            lifted_witness = Witness{diff.to_string(), "zero", false};
            lifted_detail = "psi_n(i_* y) - i_* psi_n(N, y) with " + tag;
          }
        }
      }
    }
    std::string holding, failing;
    for (auto v : variants) {
      if (broken.count(v))
        failing += (failing.empty() ? "" : "; ") + to_string(v) + " fails at " + broken[v];
      else
        holding += (holding.empty() ? "" : ", ") + to_string(v);
    }
    const std::string summary = "psi denominator holding: " + (holding.empty() ? std::string("none") : holding) +
                                (failing.empty() ? "" : " | " + failing);
    if (lifted_witness) {
      rec.fail(lifted_witness->element, "zero", lifted_detail + " | " + summary);
      return;
    }
    rec.note(summary);
  });
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "adams_congruence", "adams_nlambda",   "gamma_eigenvalue", "gamma_ring_axioms",    "gamma_top_module", "gr_rank_iso",
      "jouanolou",        "lambda_ideal",    "top_multiplicativity", "torsion_bound", "universal_congruence"};
  return ids;
}

std::vector<CheckReport> run_suite(const SchemeModel& scheme, const std::vector<std::string>& ids,
                                   const CheckBounds& bounds) {
  if (bounds.max_n < 1) throw InputError("max-n must be at least 1");
  if (bounds.samples < 0) throw InputError("sample count must be non-negative");
  std::vector<std::string> wanted;
  bool all = false;
  for (const auto& id : ids) {
    if (id == "all") {
      all = true;
      wanted.insert(wanted.end(), check_ids().begin(), check_ids().end());
    } else if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw InputError("unknown check id '" + id + "'");
    } else {
      wanted.push_back(id);
    }
  }
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  const SchemeContext ctx(scheme);
  using Check = CheckReport (*)(const SchemeContext&, const CheckBounds&);
  static const std::map<std::string, Check> scheme_checks{
      {"adams_congruence", check_adams_congruence},   {"adams_nlambda", check_adams_nlambda},
      {"gamma_eigenvalue", check_gamma_eigenvalue},   {"gamma_ring_axioms", check_gamma_ring_axioms},
      {"gamma_top_module", check_gamma_top_module},   {"gr_rank_iso", check_gr_rank_iso},
      {"lambda_ideal", check_lambda_ideal},           {"top_multiplicativity", check_top_multiplicativity},
      {"torsion_bound", check_torsion_bound}};

  std::vector<CheckReport> reports;
  for (const auto& id : wanted) {
    if (auto it = scheme_checks.find(id); it != scheme_checks.end()) {
      reports.push_back(it->second(ctx, bounds));
    } else if (id == "universal_congruence") {
      const int d = bounds.universal_d, q = bounds.universal_q;
      const int w = bounds.truncation >= 0 ? bounds.truncation : q + d + 2;
      reports.push_back(check_universal_congruence(d, q, bounds.universal_n, w));
    } else if (id == "jouanolou") {
      const auto embeddings = jouanolou_embeddings(scheme);
      for (const auto& e : embeddings) reports.push_back(check_jouanolou(e, bounds));
      if (embeddings.empty() && !all) {
        Recorder rec("jouanolou", scheme.name, "");
        rec.inconclusive("model has no catalogued closed embedding");
        reports.push_back(rec.finish());
      }
    }
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return reports;
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::Fail; });
}

}  // namespace lamk

#include "qcgl/cgl_check.hpp"

#include "qcgl/error.hpp"

#include <numeric>

namespace qcgl {

bool LevelReport::passed() const {
  return sigma_delta_commutation.ok && delta_nilpotent.ok && level_q_not_root.ok &&
         h_matches_lambda.ok && h_eigenvalue_not_root.ok && lambda_nonzero.ok &&
         relations_respected.ok && torus_compatible.ok;
}

bool CglReport::passed() const {
  if (!structural.empty()) return false;
  for (const auto& l : levels) {
    if (!l.passed()) return false;
  }
  return true;
}

namespace {

void check_relations(const OreAlgebraSpec& spec, GenIndex j, LevelReport& r,
                     const RewriteOptions& opts) {
  // For each relation x_b x_a - lambda(b,a) x_a x_b - delta(b,a) = 0 of
  // A_{j-1} (a < b < j), its image under s_j and under d_j must vanish.
  for (GenIndex b = 1; b < j; ++b) {
    for (GenIndex a = 0; a < b; ++a) {
      const NcPoly xa = NcPoly::generator(a);
      const NcPoly xb = NcPoly::generator(b);
      const NcPoly sa = apply_sigma(spec, j, xa);
      const NcPoly sb = apply_sigma(spec, j, xb);
      NcPoly sigma_image = multiply(spec, sb, sa, opts) -
                           spec.lambda(b, a) * multiply(spec, sa, sb, opts) -
                           apply_sigma(spec, j, spec.delta(b, a));
      if (!sigma_image.is_zero()) {
        r.relations_respected.fail("sigma does not preserve the relation between " +
                                   spec.names[b] + " and " + spec.names[a]);
      }
      // The words x_b x_a and x_a x_b go through the twisted Leibniz rule
      // letter by letter, so compute d_j on them without normalising first.
      const NcPoly da = apply_delta(spec, j, xa, opts);
      const NcPoly db = apply_delta(spec, j, xb, opts);
      NcPoly d_ba = multiply(spec, sb, da, opts) + multiply(spec, db, xa, opts);
      NcPoly d_ab = multiply(spec, sa, db, opts) + multiply(spec, da, xb, opts);
      NcPoly delta_image = d_ba - spec.lambda(b, a) * d_ab -
                           apply_delta(spec, j, spec.delta(b, a), opts);
      if (!delta_image.is_zero()) {
        r.relations_respected.fail("delta is not a sigma-derivation on the relation between " +
                                   spec.names[b] + " and " + spec.names[a]);
      }
    }
  }
}

}  // namespace

CglReport check_cgl_axioms(const OreAlgebraSpec& spec, int nilpotence_bound,
                           const RewriteOptions& opts) {
  CglReport report;
  report.structural = structural_errors(spec);
  if (!report.structural.empty()) return report;

  for (std::size_t jj = 0; jj < spec.size(); ++jj) {
    const auto j = static_cast<GenIndex>(jj);
    LevelReport r;
    r.level = j;
    r.generator = spec.names[j];
    r.level_q = spec.level_q[j];

    for (GenIndex i = 0; i < j; ++i) {
      if (spec.lambda(j, i).is_zero()) {
        r.lambda_nonzero.fail("lambda(" + spec.names[j] + ", " + spec.names[i] + ") = 0");
      }
    }
    if (!r.lambda_nonzero.ok) {
      // sigma_j is not invertible; the remaining checks would divide by zero.
      r.sigma_delta_commutation.fail("skipped: sigma is not an automorphism");
      report.levels.push_back(std::move(r));
      continue;
    }

    if (spec.level_q[j].is_zero() || is_root_of_unity(spec.level_q[j])) {
      r.level_q_not_root.fail("q_j = " + spec.level_q[j].to_string() + " is a root of unity");
    }

    for (GenIndex i = 0; i < j; ++i) {
      const NcPoly xi = NcPoly::generator(i);
      const NcPoly lhs = apply_sigma(spec, j, apply_delta(spec, j, xi, opts));
      const NcPoly rhs = spec.level_q[j] * apply_delta(spec, j, apply_sigma(spec, j, xi), opts);
      if (!(lhs == rhs)) {
        r.sigma_delta_commutation.fail("sigma delta != q_j delta sigma on " + spec.names[i]);
      }
      try {
        nilpotency_index(spec, j, xi, nilpotence_bound, opts);
      } catch (const NilpotenceBoundExceeded&) {
        r.delta_nilpotent.fail("delta not nilpotent on " + spec.names[i] + " within " +
                               std::to_string(nilpotence_bound));
      }
      const RatFunc eig = torus_eigenvalue(spec.h[j], spec.weights[i]);
      if (!(eig == spec.lambda(j, i))) {
        r.h_matches_lambda.fail("h acts on " + spec.names[i] + " by " + eig.to_string() +
                                ", lambda is " + spec.lambda(j, i).to_string());
      }
      const NcPoly& d = spec.delta(j, i);
      if (!d.is_zero()) {
        auto wd = torus_weight(spec, d);
        Weight expected = spec.weights[i];
        for (std::size_t t = 0; t < spec.torus_rank; ++t) expected[t] += spec.weights[j][t];
        if (!wd || *wd != expected) {
          r.torus_compatible.fail("delta on " + spec.names[i] + " is not an eigenvector of weight w(" +
                                  spec.names[i] + ") + w(" + spec.names[j] + ")");
        }
      }
    }
    const RatFunc self = torus_eigenvalue(spec.h[j], spec.weights[j]);
    if (is_root_of_unity(self)) {
      r.h_eigenvalue_not_root.fail("h-eigenvalue of " + spec.names[j] + " is " + self.to_string());
    }
    check_relations(spec, j, r, opts);
    report.levels.push_back(std::move(r));
  }
  return report;
}

Torsionfree is_torsionfree(const OreAlgebraSpec& spec) {
  // Each +-q^k maps to (k, sign) in Z x Z/2. The generated subgroup has
  // torsion iff it contains (0, 1), i.e. iff the sign is not a homomorphic
  // function of the exponent on the generators.
  std::vector<std::pair<long, int>> gens;
  bool undecided = false;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto sp = spec.lambda_table[j][i].as_signed_q_power();
      if (!sp) {
        undecided = true;
        continue;
      }
      gens.emplace_back(sp->second, sp->first < 0 ? 1 : 0);
    }
  }
  long d = 0;
  for (const auto& g : gens) d = std::gcd(d, g.first);
  bool consistent = false;
  for (int t = 0; t < 2 && !consistent; ++t) {
    consistent = true;
    for (const auto& [k, s] : gens) {
      const long multiple = d == 0 ? 0 : k / d;
      if (((multiple % 2 + 2) % 2 * t) % 2 != s) {
        consistent = false;
        break;
      }
    }
  }
  if (!consistent) return Torsionfree::kNo;
  return undecided ? Torsionfree::kUndecided : Torsionfree::kYes;
}

std::string to_string(Torsionfree verdict) {
  switch (verdict) {
    case Torsionfree::kYes:
      return "true";
    case Torsionfree::kNo:
      return "false";
    case Torsionfree::kUndecided:
      return "undecided";
  }
  return "undecided";
}

}  // namespace qcgl

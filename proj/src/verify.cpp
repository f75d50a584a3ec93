#include "qcgl/verify.hpp"

#include "qcgl/cauchon.hpp"
#include "qcgl/cgl_check.hpp"
#include "qcgl/delderiv.hpp"
#include "qcgl/grassmann.hpp"
#include "qcgl/presets.hpp"
#include "qcgl/printing.hpp"
#include "qcgl/qmat.hpp"
#include "qcgl/random_elements.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

namespace qcgl {

namespace {

using Shape = std::pair<int, int>;

std::string shape_name(const Shape& s) {
  return "O_q(M_{" + std::to_string(s.first) + "," + std::to_string(s.second) + "})";
}

std::vector<Shape> shapes_or(const SuiteOptions& opts, std::vector<Shape> defaults) {
  if (opts.size) return {*opts.size};
  return defaults;
}

// Runs `body`, catching library errors as failures and timing the run.
CriterionResult run_criterion(int id, std::string title, double limit,
                              const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.limit_seconds = limit;
  r.passed = true;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > limit) {
    r.passed = false;
    r.details.push_back("exceeded the time limit");
  }
  return r;
}

void expect(CriterionResult& r, bool condition, const std::string& what) {
  if (condition) return;
  r.passed = false;
  r.details.push_back(what);
}

// Seeded pairs of base-algebra elements (below the top generator).
std::vector<std::pair<NcPoly, NcPoly>> theta_samples(const OreAlgebraSpec& spec, std::uint64_t seed, int count) {
  Rng rng(seed);
  const auto base = static_cast<GenIndex>(spec.size() - 1);
  std::vector<std::pair<NcPoly, NcPoly>> out;
  for (int k = 0; k < count; ++k) {
    NcPoly a = random_element(rng, base);
    NcPoly b = random_element(rng, base);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace

CriterionResult check_height_one_normality(const SuiteOptions& opts) {
  return run_criterion(1, "height-one H-prime generators are normal H-eigenvectors", 10, [&](CriterionResult& r) {
    for (auto [m, n] : shapes_or(opts, {{2, 2}, {2, 3}, {3, 3}})) {
      const QuantumMatrix qm(std::min(m, n), std::max(m, n));
      const QuantumMatrix target(m, n);
      std::vector<NcPoly> gens = height_one_hprime_generators(qm);
      if (m > n) {
        for (auto& g : gens) g = transpose(qm, g);
      }
      const std::string where = shape_name({m, n});
      expect(r, static_cast<int>(gens.size()) == m + n - 1, where + ": expected m+n-1 generators");
      for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
          expect(r, !(gens[a] == gens[b]), where + ": generators " + std::to_string(a + 1) + " and " +
                                               std::to_string(b + 1) + " coincide");
        }
        expect(r, is_normal(target.spec(), gens[a], opts.rewrite).normal,
               where + ": generator " + std::to_string(a + 1) + " is not normal");
        expect(r, torus_weight(target.spec(), gens[a]).has_value(),
               where + ": generator " + std::to_string(a + 1) + " is not an H-eigenvector");
      }
      expect(r, c_minor(qm, qm.rows()) == b_minor(qm, qm.cols()), where + ": c_m != b_n");
      r.details.push_back(where + ": " + std::to_string(gens.size()) + " generators checked");
    }
  });
}

CriterionResult check_determinant_centrality(const SuiteOptions& opts) {
  return run_criterion(2, "det_q is central", 5, [&](CriterionResult& r) {
    std::vector<int> sizes{2, 3};
    if (opts.size) {
      if (opts.size->first != opts.size->second) {
        r.skipped = true;
        r.details.push_back("not a square algebra");
        return;
      }
      sizes = {opts.size->first};
    }
    for (int n : sizes) {
      const QuantumMatrix qm(n, n);
      const NcPoly det = quantum_determinant(qm);
      for (std::size_t g = 0; g < qm.spec().size(); ++g) {
        auto s = qcommute_exponent(qm.spec(), det, NcPoly::generator(static_cast<GenIndex>(g)), opts.rewrite);
        expect(r, s && *s == 0, shape_name({n, n}) + ": det_q does not commute with " + qm.spec().names[g]);
      }
      r.details.push_back(shape_name({n, n}) + ": exponent 0 against all " + std::to_string(qm.spec().size()) +
                          " generators");
    }
  });
}

CriterionResult check_cauchon_counts(const SuiteOptions& opts) {
  return run_criterion(3, "Cauchon diagram counts match brute force", 10, [&](CriterionResult& r) {
    for (auto [m, n] : shapes_or(opts, {{2, 2}, {2, 3}, {3, 3}})) {
      const std::string where = std::to_string(m) + "x" + std::to_string(n);
      std::set<std::uint64_t> brute;
      const std::uint64_t total = std::uint64_t{1} << static_cast<unsigned>(m * n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (CauchonDiagram(m, n, mask).valid()) brute.insert(mask);
      }
      std::set<std::uint64_t> enumerated;
      std::size_t visits = 0;
      enumerate(m, n, [&](const CauchonDiagram& d) {
        enumerated.insert(d.mask());
        ++visits;
      });
      expect(r, visits == enumerated.size(), where + ": enumeration repeats a diagram");
      expect(r, enumerated == brute, where + ": enumeration differs from brute force");
      if (m == 2 && n == 2) expect(r, brute.size() == 14, "2x2: expected 14 diagrams");
      const auto hist = count_by_black(m, n);
      const auto ones = hist.count(1) ? hist.at(1) : 0;
      expect(r, ones == static_cast<std::uint64_t>(m + n - 1), where + ": histogram at 1 is not m+n-1");
      r.details.push_back(where + ": " + std::to_string(brute.size()) + " diagrams, " + std::to_string(ones) +
                          " with one black box");
    }
  });
}

CriterionResult check_theta_homomorphism(const SuiteOptions& opts) {
  return run_criterion(4, "theta is an algebra homomorphism", 60, [&](CriterionResult& r) {
    for (auto shape : shapes_or(opts, {{2, 2}, {2, 3}})) {
      const QuantumMatrix qm(shape.first, shape.second);
      const auto& spec = qm.spec();
      const std::string where = shape_name(shape);
      if (spec.size() < 2) {
        r.skipped = true;
        r.details.push_back(where + ": no base algebra below the top generator");
        continue;
      }
      const LaurentRing ring(spec, opts.nilpotence_bound, opts.rewrite);
      int failures = 0;
      for (const auto& [a, b] : theta_samples(spec, opts.seed, opts.theta_pairs)) {
        const LaurentElem ta = theta(ring, a);
        const LaurentElem tb = theta(ring, b);
        if (!(theta(ring, multiply(spec, a, b, opts.rewrite)) == ring.multiply(ta, tb))) ++failures;
        if (!(theta(ring, a + b) == ta + tb)) ++failures;
        if (ta.is_zero()) ++failures;
      }
      expect(r, failures == 0, where + ": " + std::to_string(failures) + " sampled identities failed");
      expect(r, theta(ring, NcPoly::constant(1)) == LaurentElem(NcPoly::constant(1)), where + ": theta(1) != 1");
      r.details.push_back(where + ": " + std::to_string(opts.theta_pairs) + " pairs");
    }
    if (!opts.size || *opts.size == Shape{2, 2}) {
      const QuantumMatrix qm(2, 2);
      LaurentElem expected(qm.x(1, 1));
      expected.add_term(-1, NcPoly::monomial({qm.index(1, 2), qm.index(2, 1)}, -RatFunc::q()));
      expect(r, theta(qm.spec(), qm.x(1, 1)) == expected, "theta(x[1,1]) != x[1,1] - q*x[1,2]*x[2,1]*X^-1");
    }
  });
}

CriterionResult check_theta_expansions(const SuiteOptions& opts) {
  return run_criterion(5, "theta and its q^{n^2} expansion agree", 60, [&](CriterionResult& r) {
    for (auto shape : shapes_or(opts, {{2, 2}, {2, 3}})) {
      const QuantumMatrix qm(shape.first, shape.second);
      const auto& spec = qm.spec();
      if (spec.size() < 2) {
        r.skipped = true;
        continue;
      }
      const LaurentRing ring(spec, opts.nilpotence_bound, opts.rewrite);
      int failures = 0;
      for (const auto& [a, b] : theta_samples(spec, opts.seed, opts.theta_pairs)) {
        if (!(theta(ring, a) == theta_alt(ring, a))) ++failures;
        if (!(theta(ring, b) == theta_alt(ring, b))) ++failures;
      }
      expect(r, failures == 0, shape_name(shape) + ": " + std::to_string(failures) + " samples disagree");
      r.details.push_back(shape_name(shape) + ": " + std::to_string(2 * opts.theta_pairs) + " samples");
    }
  });
}

CriterionResult check_cgl_checker(const SuiteOptions& opts) {
  return run_criterion(6, "CGL axiom checker accepts presets and rejects mutations", 30, [&](CriterionResult& r) {
    std::vector<OreAlgebraSpec> good;
    for (auto [m, n] : shapes_or(opts, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}})) good.push_back(oqm(m, n));
    good.push_back(quantum_affine_plane());
    for (const auto& spec : good) {
      expect(r, check_cgl_axioms(spec, opts.nilpotence_bound, opts.rewrite).passed(), spec.name + " rejected");
    }

    Rng rng(opts.seed);
    auto pick = [&rng](std::size_t count) {
      return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
    };
    // Mutations need derivation data; O_q(M_{3,3}) unless the chosen size has
    // a level with two nonzero derivation values.
    OreAlgebraSpec base = oqm(3, 3);
    if (opts.size) {
      OreAlgebraSpec sized = oqm(opts.size->first, opts.size->second);
      for (std::size_t j = 0; j < sized.size(); ++j) {
        std::size_t nonzero = 0;
        for (const auto& d : sized.delta_table[j]) nonzero += d.is_zero() ? 0 : 1;
        if (nonzero >= 2) {
          base = sized;
          break;
        }
      }
    }
    std::vector<std::size_t> multi_delta_levels;
    std::vector<std::size_t> delta_levels;
    for (std::size_t j = 0; j < base.size(); ++j) {
      std::size_t nonzero = 0;
      for (const auto& d : base.delta_table[j]) nonzero += d.is_zero() ? 0 : 1;
      if (nonzero >= 1) delta_levels.push_back(j);
      if (nonzero >= 2) multi_delta_levels.push_back(j);
    }

    {
      OreAlgebraSpec mutated = base;
      const std::size_t j = multi_delta_levels[pick(multi_delta_levels.size())];
      std::vector<std::size_t> entries;
      for (std::size_t i = 0; i < j; ++i) {
        if (!mutated.delta_table[j][i].is_zero()) entries.push_back(i);
      }
      const std::size_t i = entries[pick(entries.size())];
      mutated.delta_table[j][i] = -mutated.delta_table[j][i];
      expect(r, !check_cgl_axioms(mutated, opts.nilpotence_bound, opts.rewrite).passed(),
             "flipped delta sign at " + base.names[j] + " on " + base.names[i] + " accepted");
      r.details.push_back("mutation: delta sign flipped at level " + base.names[j] + " on " + base.names[i]);
    }
    {
      OreAlgebraSpec mutated = base;
      const std::size_t j = delta_levels[pick(delta_levels.size())];
      mutated.level_q[j] *= RatFunc::q();
      expect(r, !check_cgl_axioms(mutated, opts.nilpotence_bound, opts.rewrite).passed(),
             "wrong q_j at level " + base.names[j] + " accepted");
      r.details.push_back("mutation: q_j scaled by q at level " + base.names[j]);
    }
    {
      OreAlgebraSpec mutated = base;
      const std::size_t j = 1 + pick(base.size() - 1);
      const std::size_t i = pick(j);
      mutated.lambda_table[j][i] = RatFunc();
      expect(r, !check_cgl_axioms(mutated, opts.nilpotence_bound, opts.rewrite).passed(),
             "zero lambda at " + base.names[j] + " on " + base.names[i] + " accepted");
      r.details.push_back("mutation: lambda zeroed at level " + base.names[j] + " on " + base.names[i]);
    }

    // The generator-level identity extends to whole subalgebras.
    int failures = 0;
    for (const auto& spec : good) {
      for (std::size_t j = 1; j < spec.size(); ++j) {
        const auto level = static_cast<GenIndex>(j);
        for (int k = 0; k < opts.identity_samples; ++k) {
          const NcPoly a = random_element(rng, level);
          const NcPoly lhs = apply_sigma(spec, level, apply_delta(spec, level, a, opts.rewrite));
          const NcPoly rhs = spec.level_q[j] * apply_delta(spec, level, apply_sigma(spec, level, a), opts.rewrite);
          if (!(lhs == rhs)) ++failures;
        }
      }
    }
    expect(r, failures == 0, std::to_string(failures) + " sampled sigma-delta identities failed");
  });
}

CriterionResult check_rewriting_soundness(const SuiteOptions& opts) {
  return run_criterion(7, "rewriting is associative and strategy independent", 60, [&](CriterionResult& r) {
    const Shape shape = opts.size.value_or(Shape{2, 3});
    const OreAlgebraSpec spec = oqm(shape.first, shape.second);
    const auto gens = static_cast<GenIndex>(spec.size());
    Rng rng(opts.seed);
    int assoc_failures = 0;
    for (int k = 0; k < opts.rewriting_samples; ++k) {
      const NcPoly a = random_element(rng, gens, 3, 2);
      const NcPoly b = random_element(rng, gens, 3, 2);
      const NcPoly c = random_element(rng, gens, 3, 2);
      const NcPoly left = multiply(spec, multiply(spec, a, b, opts.rewrite), c, opts.rewrite);
      const NcPoly right = multiply(spec, a, multiply(spec, b, c, opts.rewrite), opts.rewrite);
      if (!(left == right)) ++assoc_failures;
    }
    int strategy_failures = 0;
    RewriteOptions leftmost = opts.rewrite;
    leftmost.strategy = Strategy::kLeftmost;
    RewriteOptions rightmost = opts.rewrite;
    rightmost.strategy = Strategy::kRightmost;
    std::uniform_int_distribution<unsigned> length(2, 7);
    for (int k = 0; k < opts.rewriting_samples; ++k) {
      const Word w = random_word(rng, gens, length(rng));
      if (!(reduce_word(spec, w, leftmost) == reduce_word(spec, w, rightmost))) ++strategy_failures;
    }
    expect(r, assoc_failures == 0, std::to_string(assoc_failures) + " triples not associative");
    expect(r, strategy_failures == 0, std::to_string(strategy_failures) + " words depend on the strategy");
    r.details.push_back(shape_name(shape) + ": " + std::to_string(opts.rewriting_samples) + " triples, " +
                        std::to_string(opts.rewriting_samples) + " words");
  });
}

CriterionResult check_grassmannian(const SuiteOptions& opts) {
  return run_criterion(8, "extremal maximal minors are normal; phi scales minors", 30, [&](CriterionResult& r) {
    std::vector<Shape> extremal{{2, 3}, {2, 4}};
    std::vector<Shape> scaling{{2, 2}};
    if (opts.size) {
      extremal.clear();
      if (opts.size->first <= opts.size->second) extremal.push_back(*opts.size);
      scaling = {*opts.size};
    }
    for (auto shape : extremal) {
      const QuantumMatrix qm(shape.first, shape.second);
      const auto report = extremal_normality_report(qm);
      expect(r, report.success(), shape_name(shape) + ": an extremal minor fails to q-commute");
      r.details.push_back(shape_name(shape) + ": " + std::to_string(report.entries.size()) + " exponents");
    }
    for (auto shape : scaling) {
      const QuantumMatrix qm(shape.first, shape.second);
      const auto report = phi_scaling_check(qm);
      expect(r, report.success(), shape_name(shape) + ": phi does not scale every minor by q^-t");
      r.details.push_back(shape_name(shape) + ": " + std::to_string(report.entries.size()) + " minors scaled");
    }
  });
}

CriterionResult check_torsionfree(const SuiteOptions& opts) {
  return run_criterion(9, "quantum matrix presets are torsionfree", 1, [&](CriterionResult& r) {
    std::vector<Shape> shapes;
    if (opts.size) {
      shapes.push_back(*opts.size);
    } else {
      for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) shapes.emplace_back(m, n);
      }
    }
    for (auto [m, n] : shapes) {
      expect(r, is_torsionfree(oqm(m, n)) == Torsionfree::kYes, shape_name({m, n}) + " not torsionfree");
    }
    r.details.push_back(std::to_string(shapes.size()) + " algebras");
  });
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts) {
  return {
      check_height_one_normality(opts), check_determinant_centrality(opts), check_cauchon_counts(opts),
      check_theta_homomorphism(opts),   check_theta_expansions(opts),       check_cgl_checker(opts),
      check_rewriting_soundness(opts),  check_grassmannian(opts),           check_torsionfree(opts),
  };
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s / %.0f s)", r.seconds, r.limit_seconds);
  std::string line = std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " " +
                     timing;
  if (r.skipped) line += " [not applicable at this size]";
  return line;
}

}  // namespace qcgl

#include "qcgl/algebra_ops.hpp"

#include "qcgl/error.hpp"

namespace qcgl {

namespace {

void require_below(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a) {
  if (j >= spec.size()) throw LevelError("level " + std::to_string(j + 1) + " out of range");
  auto top = a.max_generator();
  if (top && *top >= j) {
    throw LevelError("element uses " + spec.names[*top] + ", not in the domain of level " +
                     spec.names[j]);
  }
}

RatFunc sigma_scale(const OreAlgebraSpec& spec, GenIndex j, const Word& w) {
  RatFunc s(1);
  for (GenIndex g : w) s *= spec.lambda(j, g);
  return s;
}

}  // namespace

NcPoly apply_sigma(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a) {
  require_below(spec, j, a);
  return a.map_words([&](const Word& w) -> std::optional<std::pair<Word, RatFunc>> {
    return std::pair{w, sigma_scale(spec, j, w)};
  });
}

NcPoly apply_sigma_inv(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a) {
  require_below(spec, j, a);
  return a.map_words([&](const Word& w) -> std::optional<std::pair<Word, RatFunc>> {
    return std::pair{w, sigma_scale(spec, j, w).inverse()};
  });
}

NcPoly apply_sigma_pow(const OreAlgebraSpec& spec, GenIndex j, int k, const NcPoly& a) {
  require_below(spec, j, a);
  return a.map_words([&](const Word& w) -> std::optional<std::pair<Word, RatFunc>> {
    return std::pair{w, sigma_scale(spec, j, w).pow(k)};
  });
}

NcPoly apply_delta(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a,
                   const RewriteOptions& opts) {
  require_below(spec, j, a);
  NcPoly out;
  for (const auto& [w, c] : a.terms()) {
    RatFunc prefix_scale = c;
    for (std::size_t p = 0; p < w.size(); ++p) {
      const NcPoly& d = spec.delta(j, w[p]);
      if (!d.is_zero()) {
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(p + 1), w.end());
        NcPoly left = multiply(spec, NcPoly::monomial(prefix, prefix_scale), d, opts);
        out += multiply(spec, left, NcPoly::monomial(suffix), opts);
      }
      prefix_scale *= spec.lambda(j, w[p]);
    }
  }
  return out;
}

int nilpotency_index(const OreAlgebraSpec& spec, GenIndex j, const NcPoly& a, int bound,
                     const RewriteOptions& opts) {
  if (a.is_zero()) throw std::invalid_argument("nilpotency_index: zero element");
  NcPoly current = a;
  for (int d = 0; d <= bound; ++d) {
    NcPoly next = apply_delta(spec, j, current, opts);
    if (next.is_zero()) return d;
    current = std::move(next);
  }
  throw NilpotenceBoundExceeded("delta at level " + spec.names[j] + " not nilpotent within " +
                                std::to_string(bound) + " steps");
}

Weight word_weight(const OreAlgebraSpec& spec, const Word& w) {
  Weight total(spec.torus_rank, 0);
  for (GenIndex g : w) {
    for (std::size_t t = 0; t < spec.torus_rank; ++t) total[t] += spec.weights[g][t];
  }
  return total;
}

std::optional<Weight> torus_weight(const OreAlgebraSpec& spec, const NcPoly& a) {
  std::optional<Weight> common;
  for (const auto& [w, c] : a.terms()) {
    Weight wt = word_weight(spec, w);
    if (!common) {
      common = std::move(wt);
    } else if (*common != wt) {
      return std::nullopt;
    }
  }
  if (!common) common = Weight(spec.torus_rank, 0);
  return common;
}

NcPoly torus_act(const OreAlgebraSpec& spec, const std::vector<RatFunc>& h, const NcPoly& a) {
  return a.map_words([&](const Word& w) -> std::optional<std::pair<Word, RatFunc>> {
    return std::pair{w, torus_eigenvalue(h, word_weight(spec, w))};
  });
}

std::optional<int> qcommute_exponent(const OreAlgebraSpec& spec, const NcPoly& a,
                                     const NcPoly& b, const RewriteOptions& opts) {
  const NcPoly ab = multiply(spec, a, b, opts);
  const NcPoly ba = multiply(spec, b, a, opts);
  if (ab.size() != ba.size() || ab.is_zero()) return std::nullopt;
  std::optional<RatFunc> ratio;
  auto it = ba.terms().begin();
  for (const auto& [w, c] : ab.terms()) {
    if (it->first != w) return std::nullopt;
    RatFunc r = c / it->second;
    if (!ratio) {
      if (!r.as_q_power()) return std::nullopt;
      ratio = std::move(r);
    } else if (!(r == *ratio)) {
      return std::nullopt;
    }
    ++it;
  }
  return ratio->as_q_power();
}

NormalityReport is_normal(const OreAlgebraSpec& spec, const NcPoly& a, const RewriteOptions& opts) {
  NormalityReport report;
  report.normal = true;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    auto s = qcommute_exponent(spec, a, NcPoly::generator(static_cast<GenIndex>(i)), opts);
    if (!s) report.normal = false;
    report.exponents.push_back(s);
  }
  return report;
}

}  // namespace qcgl

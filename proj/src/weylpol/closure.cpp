#include "invtheory/weylpol/closure.hpp"

namespace invtheory {

namespace {

std::vector<Polynomial<PrimeField>> as_polynomials(const PrimeField& f, const LayoutPtr& layout,
                                                   const std::vector<Monomial>& ms) {
  std::vector<Polynomial<PrimeField>> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(Polynomial<PrimeField>::monomial(f, layout, m));
  return out;
}

}  // namespace

Verdict weyl_theorem_check(std::size_t l, std::uint32_t p, std::size_t m, std::size_t n, std::uint32_t d,
                           std::size_t cap) {
  if (!(n >= m && m >= l && l >= 1)) fail(ErrorKind::invalid_argument, "need n >= m >= l >= 1");
  PrimeField f(p);
  auto layout = make_layout(VariableLayout::copies_of(l, n));
  auto seeds = as_polynomials(f, layout, monomials_on_copies(*layout, d, 0, m, cap));
  ClosureOptions opts;
  opts.cap = cap;
  PolarizationClosure<PrimeField> closure(f, layout, d, seeds, opts);
  const auto& r = closure.report();
  const bool in_range = d <= static_cast<std::uint64_t>(p - 1) * m;
  Verdict v;
  v.theorem = "thm5.1";
  v.instance = weyl_instance_name(l, p, m, n, d);
  v.lhs = r.final_dim;
  v.rhs = r.ambient_dim;
  v.holds = r.equals_full;
  v.asserted = in_range;
  v.details = r.to_json();
  v.details["in_range"] = in_range;
  if (auto w = closure.first_missing()) {
    v.details["witness_missing"] = render(Polynomial<PrimeField>::monomial(f, layout, *w));
  }
  return v;
}

Monomial sharpness_witness(std::size_t l, std::uint32_t p) {
  auto layout = VariableLayout::copies_of(l, l + 1);
  std::vector<std::uint32_t> e(layout.num_vars(), 0);
  e[layout.index(0, 0, 0)] = 1;
  for (std::size_t j = 1; j <= l; ++j) e[layout.index(0, 0, j)] = p - 1;
  return Monomial::from_exponents(e);
}

Verdict sharpness_check(std::size_t l, std::uint32_t p, std::size_t cap) {
  if (l < 1) fail(ErrorKind::invalid_argument, "need l >= 1");
  PrimeField f(p);
  auto layout = make_layout(VariableLayout::copies_of(l, l + 1));
  const auto d = static_cast<std::uint32_t>(1 + (p - 1) * l);
  auto seeds = as_polynomials(f, layout, monomials_on_copies(*layout, d, 0, l, cap));
  ClosureOptions opts;
  opts.cap = cap;
  PolarizationClosure<PrimeField> closure(f, layout, d, seeds, opts);
  auto w = sharpness_witness(l, p);
  Verdict v;
  v.theorem = "remark5.2-sharpness";
  v.instance = "l=" + std::to_string(l) + ",p=" + std::to_string(p);
  v.lhs = render(Polynomial<PrimeField>::monomial(f, layout, w));
  v.rhs = "outside closure from " + std::to_string(l) + " copies";
  v.holds = !closure.contains(w);
  v.details = closure.report().to_json();
  v.details["degree"] = d;
  return v;
}

}  // namespace invtheory
